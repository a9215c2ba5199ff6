//! Undirected simple graphs on `0..n` backed by per-vertex bitsets, plus the
//! edge, edge-set, bipartition and cycle types shared by the rest of the crate.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// An unordered vertex pair, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the pair. Fails on `a == b`.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Self::ordered(a, b))
    }

    /// Caller guarantees `a != b`.
    pub(crate) fn ordered(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The `"u-v"` key used in JSON documents.
    pub fn key(&self) -> String {
        format!("{}-{}", self.u, self.v)
    }

    /// Parses a `"u-v"` key.
    pub fn parse_key(s: &str) -> Option<Self> {
        let (a, b) = s.trim().split_once('-')?;
        Edge::new(a.trim().parse().ok()?, b.trim().parse().ok()?).ok()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{v{},v{}}}", self.u, self.v)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(p: [usize; 2]) -> Result<Self> {
        Edge::new(p[0], p[1])
    }
}

/// A finite set of edges, iterated in lexicographic `(u, v)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from raw pairs, rejecting self-loops.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        pairs
            .into_iter()
            .map(|(a, b)| Edge::new(a, b))
            .collect::<Result<BTreeSet<_>>>()
            .map(EdgeSet)
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Edge> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::collections::btree_set::IntoIter<Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// What `remove_edges` does with edges that are not in the graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Removal {
    /// Reject the first missing edge.
    #[default]
    Strict,
    /// Skip missing edges.
    Lenient,
}

/// Undirected simple graph on vertices `0..n`.
///
/// Row `v` is a bitset of the neighbours of `v`; adjacency tests are a single
/// word lookup and the rows can be combined word-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            edge_count: 0,
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn from_edge_set(n: usize, edges: &EdgeSet) -> Result<Self> {
        Graph::from_edges(n, edges.iter().map(Edge::endpoints))
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Validates an edge against this graph's vertex range.
    pub fn edge(&self, a: usize, b: usize) -> Result<Edge> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Edge::new(a, b)
    }

    #[inline]
    fn bit(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / WORD] >> (b % WORD) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, a: usize, b: usize, on: bool) {
        let w = &mut self.rows[a * self.words + b / WORD];
        let mask = 1u64 << (b % WORD);
        if on {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    /// Adds `{a, b}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        let e = self.edge(a, b)?;
        if self.bit(e.u, e.v) {
            return Ok(false);
        }
        self.set_bit(e.u, e.v, true);
        self.set_bit(e.v, e.u, true);
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes `{a, b}`. Returns `false` if it was absent.
    pub fn remove_edge(&mut self, e: &Edge) -> Result<bool> {
        self.check_vertex(e.v)?;
        if !self.bit(e.u, e.v) {
            return Ok(false);
        }
        self.set_bit(e.u, e.v, false);
        self.set_bit(e.v, e.u, false);
        self.edge_count -= 1;
        Ok(true)
    }

    /// Adjacency test; out-of-range vertices are simply not adjacent.
    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.bit(a, b)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// The neighbour bitset of `v`, `ceil(n / 64)` words long.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors::new(self.row(v))
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .skip_while(move |&v| v < u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Number of common neighbours of `a` and `b`.
    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    /// Smallest common neighbour of `a` and `b`, if any.
    pub fn first_common_neighbor(&self, a: usize, b: usize) -> Option<usize> {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .enumerate()
            .find_map(|(i, (x, y))| {
                let w = x & y;
                (w != 0).then(|| i * WORD + w.trailing_zeros() as usize)
            })
    }

    /// Returns `E(self) \ f` on the same vertex set.
    pub fn remove_edges(&self, f: &EdgeSet, mode: Removal) -> Result<Graph> {
        let mut g = self.clone();
        for e in f {
            let removed = g.remove_edge(e)?;
            if !removed && mode == Removal::Strict {
                return Err(Error::MissingEdge(*e));
            }
        }
        Ok(g)
    }

    /// Copy of the graph with `e` added.
    pub fn with_edge(&self, e: &Edge) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(e.u, e.v)?;
        Ok(g)
    }

    /// Deletes the given vertices with their incident edges and renumbers the
    /// survivors `0..n'` preserving their relative order.
    pub fn delete_vertices(&self, gone: &[usize]) -> Result<Graph> {
        let mut keep = vec![true; self.n];
        for &x in gone {
            self.check_vertex(x)?;
            keep[x] = false;
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                label[v] = next;
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for e in self.edges() {
            if keep[e.u] && keep[e.v] {
                g.add_edge(label[e.u], label[e.v])?;
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_set().to_vec())
            .finish()
    }
}

/// Iterator over the set bits of a bitset row.
pub struct Neighbors<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Neighbors<'a> {
    fn new(words: &'a [u64]) -> Self {
        Neighbors {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Two disjoint vertex classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    #[serde(rename = "A")]
    class_a: BTreeSet<usize>,
    #[serde(rename = "B")]
    class_b: BTreeSet<usize>,
}

impl Bipartition {
    pub fn new<A, B>(class_a: A, class_b: B) -> Result<Self>
    where
        A: IntoIterator<Item = usize>,
        B: IntoIterator<Item = usize>,
    {
        let class_a: BTreeSet<usize> = class_a.into_iter().collect();
        let class_b: BTreeSet<usize> = class_b.into_iter().collect();
        if let Some(x) = class_a.intersection(&class_b).next() {
            return Err(Error::InvalidBipartition(format!(
                "v{x} lies in both classes"
            )));
        }
        Ok(Bipartition { class_a, class_b })
    }

    /// Builds the classes from a colour vector (`false` = A, `true` = B).
    pub fn from_colors(colors: &[bool]) -> Self {
        let mut class_a = BTreeSet::new();
        let mut class_b = BTreeSet::new();
        for (v, &c) in colors.iter().enumerate() {
            if c {
                class_b.insert(v);
            } else {
                class_a.insert(v);
            }
        }
        Bipartition { class_a, class_b }
    }

    pub fn class_a(&self) -> &BTreeSet<usize> {
        &self.class_a
    }

    pub fn class_b(&self) -> &BTreeSet<usize> {
        &self.class_b
    }

    pub fn len(&self) -> usize {
        self.class_a.len() + self.class_b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when the classes together are exactly `0..n`.
    pub fn covers(&self, n: usize) -> bool {
        self.len() == n && self.class_a.iter().chain(&self.class_b).all(|&x| x < n)
    }

    /// Which side `v` is on: `Some(false)` for A, `Some(true)` for B.
    pub fn side(&self, v: usize) -> Option<bool> {
        if self.class_a.contains(&v) {
            Some(false)
        } else if self.class_b.contains(&v) {
            Some(true)
        } else {
            None
        }
    }

    /// Edges of `g` with both ends in the same class.
    pub fn monochromatic_edges(&self, g: &Graph) -> EdgeSet {
        g.edges()
            .filter(|e| matches!((self.side(e.u), self.side(e.v)), (Some(a), Some(b)) if a == b))
            .collect()
    }

    /// First edge of `g` that is not properly 2-coloured, or an uncovered vertex.
    pub fn check_proper(&self, g: &Graph) -> std::result::Result<(), ColoringDefect> {
        if let Some(v) = (0..g.n()).find(|&v| self.side(v).is_none()) {
            return Err(ColoringDefect::Uncovered(v));
        }
        if let Some(x) = self.class_a.iter().chain(&self.class_b).find(|&&x| x >= g.n()) {
            return Err(ColoringDefect::Uncovered(*x));
        }
        match self.monochromatic_edges(g).iter().next() {
            Some(e) => Err(ColoringDefect::Monochromatic(*e)),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringDefect {
    Uncovered(usize),
    Monochromatic(Edge),
}

/// A closed walk `v0 v1 … v(L-1) v0` given by its distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness(Vec<usize>);

impl CycleWitness {
    /// Checks shape only (length, distinctness); see [`CycleWitness::validate`].
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "length {} is below 3",
                vertices.len()
            )));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        Ok(CycleWitness(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    /// Cycle edges in traversal order, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let l = self.0.len();
        (0..l).map(move |i| Edge::ordered(self.0[i], self.0[(i + 1) % l]))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Every consecutive pair, including the closing one, must be adjacent in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for e in self.edges() {
            if !g.contains_edge(&e) {
                return Err(Error::InvalidCycle(format!("{e} is not an edge")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "v{v} ")?;
        }
        write!(f, "v{}", self.0[0])
    }
}
