//! Simple undirected graphs on dense vertex ids `0..n`.

use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite simple undirected graph.
///
/// Neighbor lists are kept sorted. The degree sequence is cached in
/// non-decreasing order so that `degree_sequence()[i]` is `d_{i+1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
    degree_sequence: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    /// Caller guarantees sorted, symmetric, loop-free neighbor lists.
    fn from_sorted_adjacency(adjacency: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sequence: Vec<usize> = adjacency.iter().map(Vec::len).collect();
        let m = degree_sequence.iter().sum::<usize>() / 2;
        degree_sequence.sort_unstable();
        Graph {
            adjacency,
            m,
            degree_sequence,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Self::from_sorted_adjacency(adjacency)
    }

    /// Path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are simple")
    }

    /// Cycle `0-1-…-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).expect("cycle edges are simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are simple")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i-(i+5)`,
    /// inner pentagram `5+i - 5+(i+2)%5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("petersen edges are simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Degrees sorted non-decreasing.
    pub fn degree_sequence(&self) -> &[usize] {
        &self.degree_sequence
    }

    /// `δ(G)`; `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.degree_sequence.first().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degree_sequence.last().copied()
    }

    /// `Some(r)` if every vertex has degree `r` (and `n >= 1`).
    pub fn regular_degree(&self) -> Option<usize> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|u| self.neighbors(u).iter().filter(|&&v| u < v && set.contains(v)).count())
            .sum()
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_within(&self, v: Vertex, set: &VertexSet) -> usize {
        self.neighbors(v).iter().filter(|&&w| set.contains(w)).count()
    }

    /// `G[S]` together with the relabeling between the two vertex sets.
    ///
    /// The induced subgraph numbers the members of `S` in increasing order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        self.check_set(set)?;
        let to_parent: Vec<Vertex> = set.iter().collect();
        let mut to_child = vec![None; self.n()];
        for (child, &parent) in to_parent.iter().enumerate() {
            to_child[parent] = Some(child);
        }
        let adjacency = to_parent
            .iter()
            .map(|&u| self.neighbors(u).iter().filter_map(|&v| to_child[v]).collect())
            .collect();
        Ok(InducedSubgraph {
            graph: Self::from_sorted_adjacency(adjacency),
            to_parent,
            to_child,
        })
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: set.universe(),
            });
        }
        Ok(())
    }

    /// Canonical edge-list serialization, readable by [`crate::io::parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `G[S]` plus the id mapping back to the parent graph.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    to_parent: Vec<Vertex>,
    to_child: Vec<Option<Vertex>>,
}

impl InducedSubgraph {
    pub fn parent_of(&self, child: Vertex) -> Vertex {
        self.to_parent[child]
    }

    pub fn child_of(&self, parent: Vertex) -> Option<Vertex> {
        self.to_child[parent]
    }

    /// Parent ids indexed by child id.
    pub fn parents(&self) -> &[Vertex] {
        &self.to_parent
    }

    /// Lifts a set of child ids to a parent-graph vertex set.
    pub fn lift(&self, child_set: &VertexSet) -> VertexSet {
        VertexSet::from_iter_unchecked(self.to_child.len(), child_set.iter().map(|c| self.to_parent[c]))
    }
}

/// A subset of `0..universe`, stored as a membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            mask: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            mask: vec![true; universe],
            len: universe,
        }
    }

    /// Rejects ids outside `0..universe`; duplicates are merged.
    pub fn from_ids<I: IntoIterator<Item = Vertex>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub(crate) fn from_iter_unchecked<I: IntoIterator<Item = Vertex>>(universe: usize, ids: I) -> Self {
        let mut set = Self::empty(universe);
        for v in ids {
            set.insert(v);
        }
        set
    }

    /// Members of the low `universe` bits of `bits`.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        Self::from_iter_unchecked(universe, (0..universe).filter(|&v| bits >> v & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    /// Returns whether `v` was newly inserted. Panics if `v` is out of range.
    pub fn insert(&mut self, v: Vertex) -> bool {
        let fresh = !self.mask[v];
        if fresh {
            self.mask[v] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let present = self.contains(v);
        if present {
            self.mask[v] = false;
            self.len -= 1;
        }
        present
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(v, &inside)| inside.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            mask: self.mask.iter().map(|&b| !b).collect(),
            len: self.universe() - self.len,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
