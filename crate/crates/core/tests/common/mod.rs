//! Independent brute-force oracles. Nothing here calls the solver or the
//! odd-cycle search under test.

#![allow(dead_code)]

use andrasfai_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Maximum cut by trying all `2^(n-1)` colourings with vertex 0 fixed.
pub fn exhaustive_max_cut(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let edges = edge_list(g);
    (0u64..1 << (n - 1))
        .map(|m| {
            let colors = m << 1;
            edges
                .iter()
                .filter(|&&(u, v)| (colors >> u ^ colors >> v) & 1 == 1)
                .count()
        })
        .max()
        .unwrap()
}

pub fn exhaustive_min_bipartization(g: &Graph) -> usize {
    edge_list(g).len() - exhaustive_max_cut(g)
}

/// All minimum deletion sets, as sorted edge lists, by full enumeration.
pub fn exhaustive_minimum_sets(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let edges = edge_list(g);
    let best = exhaustive_max_cut(g);
    let mut sets: Vec<Vec<(usize, usize)>> = (0u64..1 << (n - 1))
        .filter_map(|m| {
            let colors = m << 1;
            let mono: Vec<_> = edges
                .iter()
                .copied()
                .filter(|&(u, v)| (colors >> u ^ colors >> v) & 1 == 0)
                .collect();
            (edges.len() - mono.len() == best).then_some(mono)
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

/// 2-colourability by trying every colouring.
pub fn brute_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let edges = edge_list(g);
    (0u64..1 << (n - 1)).any(|m| {
        let colors = m << 1;
        edges.iter().all(|&(u, v)| (colors >> u ^ colors >> v) & 1 == 1)
    })
}

/// Whether some subset of `size` edges leaves a bipartite graph.
pub fn some_deletion_of_size(g: &Graph, size: usize) -> bool {
    let edges = edge_list(g);
    let mut chosen = Vec::with_capacity(size);
    fn rec(
        g: &Graph,
        edges: &[(usize, usize)],
        start: usize,
        size: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == size {
            let mut h = Graph::new(g.n());
            for (i, &(u, v)) in edges.iter().enumerate() {
                if !chosen.contains(&i) {
                    h.add_edge(u, v).unwrap();
                }
            }
            return brute_bipartite(&h);
        }
        for i in start..edges.len() {
            chosen.push(i);
            if rec(g, edges, i + 1, size, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(g, &edges, 0, size, &mut chosen)
}

/// Length of a shortest simple odd cycle through `{a, b}`, by enumerating
/// every simple path from `a` to `b` that avoids the edge itself.
pub fn brute_shortest_odd_cycle_through(g: &Graph, a: usize, b: usize) -> Option<usize> {
    fn rec(g: &Graph, x: usize, b: usize, a: usize, seen: &mut Vec<bool>, len: usize, best: &mut Option<usize>) {
        for y in 0..g.n() {
            if !g.has_edge(x, y) || seen[y] {
                continue;
            }
            if x == a && y == b {
                continue;
            }
            if y == b {
                // path length len + 1, cycle length len + 2
                let cyc = len + 2;
                if cyc % 2 == 1 && best.is_none_or(|c| cyc < c) {
                    *best = Some(cyc);
                }
                continue;
            }
            seen[y] = true;
            rec(g, y, b, a, seen, len + 1, best);
            seen[y] = false;
        }
    }
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    let mut best = None;
    rec(g, a, b, a, &mut seen, 0, &mut best);
    best
}

/// Erdős–Rényi graph from a fixed seed.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Seeded batch of random graphs with `4 <= n <= max_n`.
pub fn random_batch(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(4..=max_n);
            let p = rng.random_range(0.15..0.7);
            random_graph(seed.wrapping_mul(31).wrapping_add(i as u64), n, p)
        })
        .collect()
}
