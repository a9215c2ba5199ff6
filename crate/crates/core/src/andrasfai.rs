//! Andrásfai graphs: vertices `0..3k-1`, `i ~ j` iff `|i - j| ≡ 1 (mod 3)`.
//!
//! The k = 2 member is the 5-cycle `v0 v1 v2 v3 v4 v0`. Some write-ups list
//! six vertex symbols for it (`… v4 v5 v0`); there is no `v5` in this graph.

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::report::{Counterexample, VerificationReport};

/// Default upper end for exhaustive sweeps over k.
pub const DEFAULT_K_MAX: usize = 64;

pub fn vertex_count(k: usize) -> usize {
    3 * k - 1
}

pub fn edge_count(k: usize) -> usize {
    k * (3 * k - 1) / 2
}

#[inline]
pub fn adjacent(i: usize, j: usize) -> bool {
    i.abs_diff(j) % 3 == 1
}

pub(crate) fn require_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        Err(invalid("k", k as i64, format!("must be at least {min}")))
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndrasfaiInstance {
    pub k: usize,
    pub graph: Graph,
}

/// Builds `And_k` for `k >= 2`.
pub fn andrasfai(k: usize) -> Result<AndrasfaiInstance> {
    require_k(k, 2)?;
    let n = vertex_count(k);
    let mut graph = Graph::new(n);
    for i in 0..n {
        // j = i + 1, i + 4, i + 7, ...
        for j in (i + 1..n).step_by(3) {
            graph.add_edge(i, j)?;
        }
    }
    Ok(AndrasfaiInstance { k, graph })
}

/// Convenience: the graph alone.
pub fn andrasfai_graph(k: usize) -> Result<Graph> {
    andrasfai(k).map(|inst| inst.graph)
}

/// Checks order, size, k-regularity, triangle-freeness and diameter 2.
pub fn check_structure(inst: &AndrasfaiInstance) -> VerificationReport {
    let (k, g) = (inst.k, &inst.graph);
    let n = g.n();
    let mut report = VerificationReport::new();

    report.check(
        "vertex count is 3k-1",
        if n == vertex_count(k) {
            Ok(())
        } else {
            Err(Counterexample::Note(format!("n = {n}")))
        },
    );
    report.check(
        "edge count is k(3k-1)/2",
        if g.edge_count() == edge_count(k) {
            Ok(())
        } else {
            Err(Counterexample::Note(format!("|E| = {}", g.edge_count())))
        },
    );
    report.check(
        "k-regular",
        match (0..n).find(|&v| g.degree(v) != k) {
            None => Ok(()),
            Some(v) => Err(Counterexample::Vertex(v)),
        },
    );
    report.check(
        "triangle-free",
        match g
            .edges()
            .find(|e| g.first_common_neighbor(e.u(), e.v()).is_some())
        {
            None => Ok(()),
            Some(e) => Err(Counterexample::Edge(e)),
        },
    );
    let far_pair = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| !g.has_edge(a, b) && g.first_common_neighbor(a, b).is_none());
    report.check(
        "diameter 2",
        match far_pair {
            None if n >= 2 && g.edge_count() < n * (n - 1) / 2 => Ok(()),
            None => Err(Counterexample::Note("graph is complete".into())),
            Some((a, b)) => Err(Counterexample::VertexPair(a, b)),
        },
    );
    report
}

/// Deleting `v(3k-4), v(3k-3), v(3k-2)` from `And_k` must leave exactly
/// `And_(k-1)` with unchanged labels.
pub fn inductive_reduction(k: usize) -> Result<VerificationReport> {
    require_k(k, 3)?;
    let big = andrasfai_graph(k)?;
    let n = vertex_count(k);
    let reduced = big.delete_vertices(&[n - 3, n - 2, n - 1])?;
    let small = andrasfai_graph(k - 1)?;

    let mut report = VerificationReport::new();
    report.check(
        "vertex sets agree",
        if reduced.n() == small.n() {
            Ok(())
        } else {
            Err(Counterexample::Note(format!(
                "{} vs {} vertices",
                reduced.n(),
                small.n()
            )))
        },
    );
    let (got, want) = (reduced.edge_set(), small.edge_set());
    report.check(
        "edge sets agree",
        if got == want {
            Ok(())
        } else {
            let diff = got.difference(&want).union(&want.difference(&got));
            Err(Counterexample::Edges(diff))
        },
    );
    Ok(report)
}
