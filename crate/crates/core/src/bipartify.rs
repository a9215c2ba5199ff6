//! The explicit bipartification `F_k = U1_k ∪ U2_k` of `And_k`, the 2-colouring
//! `A_k / B_k` it leaves behind, the 5-cycle witnesses that make each edge of
//! `F_k` indispensable, and a general minimality checker.
//!
//! Index ranges follow the closed forms directly; a range whose upper end is
//! below its lower end is empty (e.g. `U2_2`).

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::andrasfai::{self, adjacent, require_k};
use crate::bipartite::{find_odd_cycle_through_edge, is_bipartite, Bipartiteness};
use crate::error::{invalid, Error, Result};
use crate::graph::{Bipartition, CycleWitness, Edge, EdgeSet, Graph, Removal};
use crate::report::{Counterexample, VerificationReport};

/// Exact rationals for the counting bounds.
pub type Rational = Ratio<i64>;

/// `U1_k`: edges `{v(3k-4-3i), v(3k-5-3j)}` for `0 <= i <= j < floor(k/2)`.
pub fn u1(k: usize) -> Result<EdgeSet> {
    require_k(k, 2)?;
    let h = k / 2;
    Ok((0..h)
        .flat_map(|i| (i..h).map(move |j| Edge::ordered(3 * k - 4 - 3 * i, 3 * k - 5 - 3 * j)))
        .collect())
}

/// `U2_k`: edges `{v(3i), v(3i+1+3j)}` for `i, j >= 0`, `i + j < floor((k-1)/2)`.
pub fn u2(k: usize) -> Result<EdgeSet> {
    require_k(k, 2)?;
    let h = (k - 1) / 2;
    Ok((0..h)
        .flat_map(|i| (0..h - i).map(move |j| Edge::ordered(3 * i, 3 * i + 1 + 3 * j)))
        .collect())
}

/// `F_k = U1_k ∪ U2_k`.
pub fn f(k: usize) -> Result<EdgeSet> {
    Ok(u1(k)?.union(&u2(k)?))
}

/// `floor(k^2 / 4)`.
pub fn f_size(k: usize) -> usize {
    k * k / 4
}

/// `A_k = {3i : i < k} ∪ {3i+1 : i < floor((k-1)/2)}`,
/// `B_k = {3i+2 : i <= k-2} ∪ {3i+1 : floor((k-1)/2) <= i <= k-1}`.
pub fn partition_ab(k: usize) -> Result<Bipartition> {
    require_k(k, 2)?;
    let h = (k - 1) / 2;
    let a = (0..k).map(|i| 3 * i).chain((0..h).map(|i| 3 * i + 1));
    let b = (0..k - 1).map(|i| 3 * i + 2).chain((h..k).map(|i| 3 * i + 1));
    Bipartition::new(a, b)
}

fn checked_cycle(k: usize, vertices: Vec<usize>) -> Result<CycleWitness> {
    let cycle = CycleWitness::new(vertices)?;
    let n = andrasfai::vertex_count(k);
    for e in cycle.edges() {
        if e.v() >= n || !adjacent(e.u(), e.v()) {
            return Err(Error::InvalidCycle(format!("{e} is not an edge of And_{k}")));
        }
    }
    Ok(cycle)
}

/// `C_k^(j) = v(3k-4) v(3k-5-3j) v(3 floor((k-1)/2)) v(3k-2) v(3k-3)`,
/// for `k >= 3` and `0 <= j < floor(k/2)`.
pub fn witness_c(k: usize, j: usize) -> Result<CycleWitness> {
    require_k(k, 3)?;
    if j >= k / 2 {
        return Err(invalid("j", j as i64, format!("range is 0..={} for k={k}", k / 2 - 1)));
    }
    checked_cycle(
        k,
        vec![3 * k - 4, 3 * k - 5 - 3 * j, 3 * ((k - 1) / 2), 3 * k - 2, 3 * k - 3],
    )
}

/// `D_k^(i) = v(3i) v(3 floor((k-1)/2) - 2) v(3k-4) v(3k-3) v(3k-2)`,
/// for odd `k >= 3` and `0 <= i < floor((k-1)/2)`.
///
/// The top index `i = floor((k-1)/2)` is not accepted: no edge of `F_k` needs
/// a witness there.
pub fn witness_d(k: usize, i: usize) -> Result<CycleWitness> {
    require_k(k, 3)?;
    if k.is_multiple_of(2) {
        return Err(invalid("k", k as i64, "D-type witnesses need odd k"));
    }
    let h = (k - 1) / 2;
    if i >= h {
        return Err(invalid("i", i as i64, format!("range is 0..={} for k={k}", h - 1)));
    }
    checked_cycle(k, vec![3 * i, 3 * h - 2, 3 * k - 4, 3 * k - 3, 3 * k - 2])
}

/// Closed form of `F_k \ F_(k-1)` for `k >= 3`: the C-type edges
/// `{v(3k-4), v(3k-5-3j)}`, plus for odd `k` the D-type edges
/// `{v(3i), v(3 floor((k-1)/2) - 2)}`.
pub fn delta_f(k: usize) -> Result<EdgeSet> {
    require_k(k, 3)?;
    let mut out: EdgeSet = (0..k / 2)
        .map(|j| Edge::ordered(3 * k - 4, 3 * k - 5 - 3 * j))
        .collect();
    if k % 2 == 1 {
        let h = (k - 1) / 2;
        out.extend((0..h).map(|i| Edge::ordered(3 * i, 3 * h - 2)));
    }
    Ok(out)
}

/// `F_k \ F_(k-1)` by literal set difference.
pub fn delta_f_by_difference(k: usize) -> Result<EdgeSet> {
    require_k(k, 3)?;
    Ok(f(k)?.difference(&f(k - 1)?))
}

/// Unordered pair of residues mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ResiduePair(u8, u8);

impl ResiduePair {
    pub fn new(a: u8, b: u8) -> Self {
        ResiduePair(a.min(b), a.max(b))
    }

    pub fn of_edge(e: &Edge) -> Self {
        ResiduePair::new((e.u() % 3) as u8, (e.v() % 3) as u8)
    }
}

impl fmt::Display for ResiduePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Residue pairs of the cycle's edges, in traversal order.
pub fn signature(g: &Graph, cycle: &CycleWitness) -> Result<Vec<ResiduePair>> {
    cycle.validate(g)?;
    Ok(cycle.edges().map(|e| ResiduePair::of_edge(&e)).collect())
}

/// Checks that `fset` is a minimal bipartification of `g`: removing it leaves
/// a bipartite graph and restoring any single edge creates an odd cycle.
/// With `strong`, the shortest odd cycle through each restored edge must have
/// length exactly 5.
pub fn verify_minimal_bipartification(
    g: &Graph,
    fset: &EdgeSet,
    strong: bool,
) -> Result<VerificationReport> {
    let rest = g.remove_edges(fset, Removal::Strict)?;
    let mut report = VerificationReport::new();

    report.check(
        "remainder is bipartite",
        match is_bipartite(&rest) {
            Bipartiteness::Bipartite(_) => Ok(()),
            Bipartiteness::OddCycle(c) => Err(Counterexample::Cycle(c)),
        },
    );

    let mut restore_fail = None;
    let mut five_fail = None;
    for e in fset {
        let with_e = rest.with_edge(e)?;
        if is_bipartite(&with_e).is_bipartite() {
            restore_fail.get_or_insert(Counterexample::Edge(*e));
        }
        if strong && five_fail.is_none() {
            match find_odd_cycle_through_edge(&with_e, e)? {
                Some(c) if c.len() == 5 => {}
                Some(c) if c.len() == 3 => {
                    five_fail = Some(Counterexample::Note(format!(
                        "triangle {c} through {e}: graph is not triangle-free"
                    )))
                }
                Some(c) => five_fail = Some(Counterexample::Cycle(c)),
                None => five_fail = Some(Counterexample::Edge(*e)),
            }
        }
    }
    report.check(
        "restoring any edge creates an odd cycle",
        restore_fail.map_or(Ok(()), Err),
    );
    if strong {
        report.check(
            "shortest odd cycle through each restored edge has length 5",
            five_fail.map_or(Ok(()), Err),
        );
    }
    Ok(report)
}

/// All edges of `And_k` between `{v(2+3i) : i <= k-2}` and `{v(3i) : i <= k-1}`.
pub fn alternative_bipartification(k: usize) -> Result<EdgeSet> {
    require_k(k, 2)?;
    let mut out = EdgeSet::new();
    for i in 0..k - 1 {
        for l in 0..k {
            let (a, b) = (2 + 3 * i, 3 * l);
            if adjacent(a, b) {
                out.insert(Edge::ordered(a, b));
            }
        }
    }
    Ok(out)
}

/// Counting facts about `F_k`, the alternative bipartification and the
/// `n^2 / 25` bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cardinality {
    pub k: usize,
    pub n: usize,
    /// `floor(k^2 / 4)`.
    pub count_f: usize,
    /// `floor((n+1)^2 / 36)`; equal to `count_f`.
    pub count_f_by_order: usize,
    /// `k(k-1)/2`.
    pub count_alt: usize,
    /// `n^2 / 25`.
    pub erdos_bound: Rational,
    pub within_bound: bool,
    pub strict: bool,
    /// `count_f / count_alt`.
    pub alt_ratio: Rational,
    /// `1/2 + (k+1) / ((k-1) k)`.
    pub alt_ratio_bound: Rational,
}

pub fn cardinality(k: usize) -> Result<Cardinality> {
    require_k(k, 2)?;
    let n = andrasfai::vertex_count(k);
    let count_f = f_size(k);
    let count_alt = k * (k - 1) / 2;
    let erdos_bound = Rational::new((n * n) as i64, 25);
    let cf = Rational::from_integer(count_f as i64);
    let ki = k as i64;
    Ok(Cardinality {
        k,
        n,
        count_f,
        count_f_by_order: (n + 1) * (n + 1) / 36,
        count_alt,
        erdos_bound,
        within_bound: cf <= erdos_bound,
        strict: cf < erdos_bound,
        alt_ratio: Rational::new(count_f as i64, count_alt as i64),
        alt_ratio_bound: Rational::new(1, 2) + Rational::new(ki + 1, (ki - 1) * ki),
    })
}
