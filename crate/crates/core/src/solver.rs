//! Exact minimum edge bipartization through maximum cut.
//!
//! The minimum number of edges whose removal leaves a bipartite graph is
//! `|E| - maxcut`. The maximum cut is found by branch and bound over vertex
//! 2-colourings:
//!
//! * vertex 0 is fixed to class A, which removes the colour-swap symmetry;
//! * the remaining vertices are branched in descending-degree order, ties by
//!   index, class A before class B;
//! * a node is pruned when `cut + undecided edges` cannot beat the incumbent;
//! * the tree is split at a fixed depth into independent subtrees, each
//!   searched against the same starting incumbent, so the node count does
//!   not depend on how many workers run them.
//!
//! The reported witness is the lexicographically smallest optimal colouring
//! (A < B, read by vertex index), found by a second index-ordered pass.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::andrasfai::{self, require_k};
use crate::bipartify::f_size;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeSet, Graph};

pub const DEFAULT_VERTEX_CAP: usize = 32;
/// Colourings are packed into one `u64`.
pub const MAX_VERTICES: usize = 64;
pub const DEFAULT_SPLIT_DEPTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub vertex_cap: usize,
    /// Node limit. Setting one also lifts `vertex_cap` (up to [`MAX_VERTICES`]).
    pub budget: Option<u64>,
    pub split_depth: usize,
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            vertex_cap: DEFAULT_VERTEX_CAP,
            budget: None,
            split_depth: DEFAULT_SPLIT_DEPTH,
            parallel: true,
        }
    }
}

impl SolverConfig {
    pub fn admits(&self, n: usize) -> bool {
        n <= MAX_VERTICES && (n <= self.vertex_cap || self.budget.is_some())
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.admits(n) {
            Ok(())
        } else {
            let cap = if self.budget.is_some() {
                MAX_VERTICES
            } else {
                self.vertex_cap.min(MAX_VERTICES)
            };
            Err(Error::OverCap { n, cap })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverResult {
    /// Minimum number of edges to delete for bipartiteness.
    pub optimum: usize,
    pub cut_value: usize,
    pub witness_partition: Bipartition,
    /// Monochromatic edges of `witness_partition`.
    pub witness_deletion: EdgeSet,
    pub nodes_explored: u64,
}

/// Bitmask view of a graph for the search.
struct CutInstance {
    n: usize,
    m: usize,
    adj: Vec<u64>,
}

impl CutInstance {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.row(v).first().copied().unwrap_or(0))
            .collect();
        CutInstance {
            n: g.n(),
            m: g.edge_count(),
            adj,
        }
    }

    fn cut_of(&self, b_mask: u64) -> usize {
        (0..self.n)
            .map(|v| {
                let other = if b_mask >> v & 1 == 1 { !b_mask } else { b_mask };
                (self.adj[v] & other).count_ones() as usize
            })
            .sum::<usize>()
            / 2
    }

    fn branch_order(&self) -> Vec<usize> {
        let mut rest: Vec<usize> = (1..self.n).collect();
        rest.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].count_ones()), v));
        let mut order = Vec::with_capacity(self.n);
        if self.n > 0 {
            order.push(0);
        }
        order.extend(rest);
        order
    }

    /// Greedy colouring along `order` followed by single-vertex flips until
    /// no flip gains. Deterministic.
    fn incumbent(&self, order: &[usize]) -> u64 {
        let mut b_mask = 0u64;
        let mut assigned = 0u64;
        for &v in order {
            let to_a = (self.adj[v] & assigned & !b_mask).count_ones();
            let to_b = (self.adj[v] & assigned & b_mask).count_ones();
            // Joining B cuts the edges to A.
            if to_a > to_b {
                b_mask |= 1 << v;
            }
            assigned |= 1 << v;
        }
        loop {
            let mut improved = false;
            for v in 0..self.n {
                let bit = 1u64 << v;
                let same = if b_mask & bit != 0 { b_mask } else { !b_mask };
                let other = !same;
                let same_cnt = (self.adj[v] & same & !bit).count_ones();
                let other_cnt = (self.adj[v] & other).count_ones();
                if same_cnt > other_cnt {
                    b_mask ^= bit;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        if b_mask & 1 == 1 {
            b_mask = !b_mask & full_mask(self.n);
        }
        b_mask
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Copy)]
struct Node {
    depth: usize,
    assigned: u64,
    b_mask: u64,
    cut: usize,
    decided: usize,
}

impl Node {
    fn root() -> Self {
        Node {
            depth: 0,
            assigned: 0,
            b_mask: 0,
            cut: 0,
            decided: 0,
        }
    }

    fn child(&self, inst: &CutInstance, v: usize, to_b: bool) -> Node {
        let bit = 1u64 << v;
        let nb = inst.adj[v] & self.assigned;
        let opposite = if to_b { !self.b_mask } else { self.b_mask };
        Node {
            depth: self.depth + 1,
            assigned: self.assigned | bit,
            b_mask: if to_b { self.b_mask | bit } else { self.b_mask },
            cut: self.cut + (nb & opposite).count_ones() as usize,
            decided: self.decided + nb.count_ones() as usize,
        }
    }

    fn bound(&self, m: usize) -> usize {
        self.cut + (m - self.decided)
    }
}

struct Budget<'a> {
    limit: Option<u64>,
    used: &'a AtomicU64,
}

impl Budget<'_> {
    fn tick(&self) -> bool {
        match self.limit {
            None => true,
            Some(l) => self.used.fetch_add(1, Ordering::Relaxed) < l,
        }
    }
}

struct Exhausted;

/// Searches for a colouring with cut strictly above `best`. Returns the best
/// cut found and its colouring, or `best` unchanged.
fn improve(
    inst: &CutInstance,
    order: &[usize],
    node: Node,
    best: &mut (usize, Option<u64>),
    nodes: &mut u64,
    budget: &Budget<'_>,
) -> std::result::Result<(), Exhausted> {
    *nodes += 1;
    if !budget.tick() {
        return Err(Exhausted);
    }
    if node.bound(inst.m) <= best.0 {
        return Ok(());
    }
    if node.depth == inst.n {
        *best = (node.cut, Some(node.b_mask));
        return Ok(());
    }
    let v = order[node.depth];
    improve(inst, order, node.child(inst, v, false), best, nodes, budget)?;
    improve(inst, order, node.child(inst, v, true), best, nodes, budget)
}

/// First colouring in index order (A before B) whose cut equals `target`.
fn first_with_cut(
    inst: &CutInstance,
    node: Node,
    target: usize,
    nodes: &mut u64,
) -> Option<u64> {
    *nodes += 1;
    if node.bound(inst.m) < target {
        return None;
    }
    if node.depth == inst.n {
        return (node.cut == target).then_some(node.b_mask);
    }
    let v = node.depth;
    if v == 0 {
        return first_with_cut(inst, node.child(inst, 0, false), target, nodes);
    }
    first_with_cut(inst, node.child(inst, v, false), target, nodes)
        .or_else(|| first_with_cut(inst, node.child(inst, v, true), target, nodes))
}

/// Exact maximum cut of `g`.
pub fn max_cut(g: &Graph, config: &SolverConfig) -> Result<SolverResult> {
    config.check(g.n())?;
    let inst = CutInstance::new(g);
    let n = inst.n;
    if n == 0 {
        return Ok(SolverResult {
            optimum: 0,
            cut_value: 0,
            witness_partition: Bipartition::from_colors(&[]),
            witness_deletion: EdgeSet::new(),
            nodes_explored: 0,
        });
    }
    let order = inst.branch_order();
    let start = inst.incumbent(&order);
    let start_cut = inst.cut_of(start);

    let used = AtomicU64::new(0);
    let budget = Budget {
        limit: config.budget,
        used: &used,
    };
    let exhausted = |best: usize| Error::BudgetExhausted {
        budget: config.budget.unwrap_or(0),
        best_cut: best,
    };

    // Frontier: vertex 0 in A, then every colouring of the next few vertices.
    let depth = config.split_depth.min(n - 1);
    let mut frontier = vec![Node::root().child(&inst, 0, false)];
    let mut nodes = 1u64;
    for &v in &order[1..=depth] {
        frontier = frontier
            .iter()
            .flat_map(|nd| [nd.child(&inst, v, false), nd.child(&inst, v, true)])
            .collect();
        nodes += frontier.len() as u64;
    }

    let search = |node: &Node| {
        let mut best = (start_cut, None);
        let mut count = 0u64;
        let status = improve(&inst, &order, *node, &mut best, &mut count, &budget);
        (best, count, status.is_ok())
    };
    let outcomes: Vec<_> = if config.parallel {
        frontier.par_iter().map(search).collect()
    } else {
        frontier.iter().map(search).collect()
    };

    let mut best_cut = start_cut;
    let mut complete = true;
    for ((cut, _), count, ok) in &outcomes {
        best_cut = best_cut.max(*cut);
        nodes += count;
        complete &= ok;
    }
    if !complete {
        return Err(exhausted(best_cut));
    }

    let witness = first_with_cut(&inst, Node::root(), best_cut, &mut nodes)
        .expect("the optimum is attained by some colouring");
    let colors: Vec<bool> = (0..n).map(|v| witness >> v & 1 == 1).collect();
    let partition = Bipartition::from_colors(&colors);
    let deletion = partition.monochromatic_edges(g);
    Ok(SolverResult {
        optimum: inst.m - best_cut,
        cut_value: best_cut,
        witness_partition: partition,
        witness_deletion: deletion,
        nodes_explored: nodes,
    })
}

/// Minimum edge bipartization; the deletion set is the set of monochromatic
/// edges of the maximum-cut colouring.
pub fn min_bipartization(g: &Graph, config: &SolverConfig) -> Result<SolverResult> {
    max_cut(g, config)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub optimum: usize,
    /// Distinct minimum deletion sets in lexicographic order.
    pub sets: Vec<EdgeSet>,
    /// More than `cap` distinct sets exist; `sets` holds the first `cap`.
    pub truncated: bool,
}

impl Enumeration {
    /// Some pair of listed sets shares no edge.
    pub fn has_disjoint_pair(&self) -> bool {
        self.sets
            .iter()
            .enumerate()
            .any(|(i, a)| self.sets[i + 1..].iter().any(|b| a.is_disjoint(b)))
    }
}

/// All minimum deletion sets, deduplicated by the set itself (so colour swaps
/// of components collapse), up to `cap` of them.
pub fn enumerate_minimum_deletions(g: &Graph, cap: usize, config: &SolverConfig) -> Result<Enumeration> {
    if cap == 0 {
        return Err(crate::error::invalid("cap", 0, "must be at least 1"));
    }
    let solved = max_cut(g, config)?;
    let inst = CutInstance::new(g);
    let mut found = BTreeSet::new();
    let mut truncated = false;
    if inst.n > 0 {
        collect_optimal(
            &inst,
            g,
            Node::root(),
            solved.cut_value,
            cap,
            &mut found,
            &mut truncated,
        );
    }
    Ok(Enumeration {
        optimum: solved.optimum,
        sets: found.into_iter().collect(),
        truncated,
    })
}

fn collect_optimal(
    inst: &CutInstance,
    g: &Graph,
    node: Node,
    target: usize,
    cap: usize,
    found: &mut BTreeSet<EdgeSet>,
    truncated: &mut bool,
) {
    if node.bound(inst.m) < target {
        return;
    }
    if node.depth == inst.n {
        let colors: Vec<bool> = (0..inst.n).map(|v| node.b_mask >> v & 1 == 1).collect();
        found.insert(Bipartition::from_colors(&colors).monochromatic_edges(g));
        if found.len() > cap {
            found.pop_last();
            *truncated = true;
        }
        return;
    }
    let v = node.depth;
    collect_optimal(inst, g, node.child(inst, v, false), target, cap, found, truncated);
    if v > 0 {
        collect_optimal(inst, g, node.child(inst, v, true), target, cap, found, truncated);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Exact optimum equals `floor(k^2/4)`.
    Confirmed,
    /// Exact optimum is strictly smaller.
    Refuted,
    SkippedTooLarge,
    /// Exact optimum exceeds `|F_k|`, which a valid bipartification rules out.
    Inconsistent,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::SkippedTooLarge => "skipped-too-large",
            Verdict::Inconsistent => "inconsistent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub constructed_size: usize,
    pub solved_optimum: Option<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<SolverResult>,
}

/// Compares the exact optimum of `And_k` with `|F_k| = floor(k^2/4)`.
pub fn check_conjecture(k: usize, config: &SolverConfig) -> Result<ConjectureReport> {
    require_k(k, 2)?;
    let constructed_size = f_size(k);
    if !config.admits(andrasfai::vertex_count(k)) {
        return Ok(ConjectureReport {
            k,
            constructed_size,
            solved_optimum: None,
            verdict: Verdict::SkippedTooLarge,
            result: None,
        });
    }
    let result = min_bipartization(&andrasfai::andrasfai_graph(k)?, config)?;
    let verdict = match result.optimum.cmp(&constructed_size) {
        std::cmp::Ordering::Equal => Verdict::Confirmed,
        std::cmp::Ordering::Less => Verdict::Refuted,
        std::cmp::Ordering::Greater => Verdict::Inconsistent,
    };
    Ok(ConjectureReport {
        k,
        constructed_size,
        solved_optimum: Some(result.optimum),
        verdict,
        result: Some(result),
    })
}
