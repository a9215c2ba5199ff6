//! Bipartiteness testing and odd-cycle extraction.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, CycleWitness, Edge, Graph};

/// Outcome of a bipartiteness test: a proper 2-colouring or an odd cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    OddCycle(CycleWitness),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }

    pub fn partition(&self) -> Option<&Bipartition> {
        match self {
            Bipartiteness::Bipartite(p) => Some(p),
            Bipartiteness::OddCycle(_) => None,
        }
    }

    pub fn odd_cycle(&self) -> Option<&CycleWitness> {
        match self {
            Bipartiteness::OddCycle(c) => Some(c),
            Bipartiteness::Bipartite(_) => None,
        }
    }
}

/// BFS 2-colouring. Components are started from their lowest vertex, which
/// goes to class A, and neighbours are scanned in increasing order, so the
/// result is fully determined by the graph.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are coloured");
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Bipartiteness::OddCycle(tree_cycle(&parent, u, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let colors: Vec<bool> = color.into_iter().map(|c| c.unwrap_or(false)).collect();
    Bipartiteness::Bipartite(Bipartition::from_colors(&colors))
}

// `u` and `w` are adjacent, equally coloured, and hence at the same BFS depth.
fn tree_cycle(parent: &[usize], u: usize, w: usize) -> CycleWitness {
    let mut up = vec![u];
    let mut wp = vec![w];
    let (mut x, mut y) = (u, w);
    while parent[x] != parent[y] {
        x = parent[x];
        y = parent[y];
        up.push(x);
        wp.push(y);
    }
    up.push(parent[x]);
    up.reverse();
    up.extend(wp);
    CycleWitness::new(up).expect("BFS tree paths are disjoint below their meeting point")
}

/// A shortest odd cycle through `e`, if any. The cycle starts at `e.u()`,
/// ends at `e.v()` and is the lexicographically smallest such sequence among
/// the shortest ones.
pub fn find_odd_cycle_through_edge(g: &Graph, e: &Edge) -> Result<Option<CycleWitness>> {
    if !g.contains_edge(e) {
        return Err(Error::MissingEdge(*e));
    }
    let (a, b) = e.endpoints();

    // Every simple a-b path in g - e stays inside the block of e.
    let block = block_of_edge(g, a, b);
    let mut in_block = vec![false; g.n()];
    for &x in &block {
        in_block[x] = true;
    }
    let adj: Vec<Vec<usize>> = (0..g.n())
        .map(|x| {
            if !in_block[x] {
                return Vec::new();
            }
            g.neighbors(x)
                .filter(|&y| in_block[y] && Edge::ordered(x, y) != *e)
                .collect()
        })
        .collect();

    // Shortest walk lengths to b, by parity; a lower bound for simple paths.
    let to_b = parity_distances(&adj, b);
    let Some(shortest_even) = to_b[a][0] else {
        return Ok(None);
    };

    let mut on_path = vec![false; g.n()];
    let mut path = vec![a];
    on_path[a] = true;
    let mut length = shortest_even;
    while length < block.len() {
        if extend_path(&adj, &to_b, b, length, &mut path, &mut on_path) {
            return CycleWitness::new(path).map(Some);
        }
        length += 2;
    }
    unreachable!("a non-bipartite block carries an odd cycle through each of its edges")
}

fn extend_path(
    adj: &[Vec<usize>],
    to_b: &[[Option<usize>; 2]],
    b: usize,
    length: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let x = *path.last().expect("path starts non-empty");
    let remaining = length + 1 - path.len();
    if remaining == 0 {
        return x == b;
    }
    for &y in &adj[x] {
        if on_path[y] || (y == b && remaining != 1) {
            continue;
        }
        let need = remaining - 1;
        match to_b[y][need % 2] {
            Some(d) if d <= need => {}
            _ => continue,
        }
        path.push(y);
        on_path[y] = true;
        if extend_path(adj, to_b, b, length, path, on_path) {
            return true;
        }
        on_path[y] = false;
        path.pop();
    }
    false
}

/// `dist[x][p]` is the length of a shortest walk from `x` to `target` whose
/// length has parity `p`.
fn parity_distances(adj: &[Vec<usize>], target: usize) -> Vec<[Option<usize>; 2]> {
    let mut dist = vec![[None, None]; adj.len()];
    let mut queue = VecDeque::new();
    dist[target][0] = Some(0);
    queue.push_back((target, 0usize));
    while let Some((x, p)) = queue.pop_front() {
        let d = dist[x][p].expect("queued states are reached");
        for &y in &adj[x] {
            let q = 1 - p;
            if dist[y][q].is_none() {
                dist[y][q] = Some(d + 1);
                queue.push_back((y, q));
            }
        }
    }
    dist
}

/// Vertices of the biconnected block containing the edge `{a, b}`
/// (iterative Hopcroft-Tarjan with an edge stack, rooted at `a`).
fn block_of_edge(g: &Graph, a: usize, b: usize) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|x| g.neighbors(x).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut next_child = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut stack = vec![a];
    let mut time = 0;
    disc[a] = 0;
    low[a] = 0;
    let target = Edge::ordered(a, b);

    while let Some(&u) = stack.last() {
        if next_child[u] < adj[u].len() {
            let v = adj[u][next_child[u]];
            next_child[u] += 1;
            if disc[v] == usize::MAX {
                time += 1;
                disc[v] = time;
                low[v] = time;
                parent[v] = u;
                edges.push((u, v));
                stack.push(v);
            } else if v != parent[u] && disc[v] < disc[u] {
                low[u] = low[u].min(disc[v]);
                edges.push((u, v));
            }
            continue;
        }
        stack.pop();
        let p = parent[u];
        if p == usize::MAX {
            break;
        }
        low[p] = low[p].min(low[u]);
        if low[u] >= disc[p] {
            let mut block = Vec::new();
            let mut found = false;
            while let Some((x, y)) = edges.pop() {
                block.push(x);
                block.push(y);
                found |= Edge::ordered(x, y) == target;
                if (x, y) == (p, u) {
                    break;
                }
            }
            if found {
                block.sort_unstable();
                block.dedup();
                return block;
            }
        }
    }
    vec![a, b]
}
