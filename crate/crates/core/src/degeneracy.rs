//! Deciding κ-degeneracy by peeling.
//!
//! A graph is κ-degenerate when its vertices can be ordered `v1, …, vn` so
//! that each `vi` has at most `κ(vi)` neighbors among `v1, …, vi`. Peeling
//! repeatedly deletes a vertex whose current degree is at most its κ value;
//! the deletions read backwards form such an ordering, and whatever cannot be
//! deleted is a set in which every vertex has more than κ neighbors, which no
//! ordering can get past.

use std::collections::BTreeSet;

use crate::assignment::{Assignment, Role};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A sequence `v1, …, vh` that should satisfy the prefix-degree condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering(Vec<Vertex>);

impl EliminationOrdering {
    pub fn new(order: Vec<Vertex>) -> Self {
        EliminationOrdering(order)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegeneracyVerdict {
    /// The graph is κ-degenerate, witnessed by an elimination ordering.
    Yes(EliminationOrdering),
    /// It is not; every vertex of the certificate has more than κ(v)
    /// neighbors inside the certificate.
    No(VertexSet),
}

impl DegeneracyVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, DegeneracyVerdict::Yes(_))
    }

    pub fn ordering(&self) -> Option<&EliminationOrdering> {
        match self {
            DegeneracyVerdict::Yes(o) => Some(o),
            DegeneracyVerdict::No(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&VertexSet> {
        match self {
            DegeneracyVerdict::Yes(_) => None,
            DegeneracyVerdict::No(c) => Some(c),
        }
    }
}

/// Result of [`peel`]: the deletion order and the vertices that survived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peeling {
    pub removed: Vec<Vertex>,
    pub remainder: VertexSet,
}

/// Peels `within`, deleting any vertex whose degree among the surviving
/// members of `within` is at most `bound[v]`. Among deletable vertices the
/// one with the smallest `(priority, id)` goes first.
pub(crate) fn peel_within(graph: &Graph, bound: &[i64], within: &VertexSet, priority: Option<&[usize]>) -> Peeling {
    let key = |v: Vertex| (priority.map_or(v, |p| p[v]), v);
    let mut alive = within.clone();
    // slack = bound - current degree; deletable iff slack >= 0
    let mut slack: Vec<i64> = (0..graph.n())
        .map(|v| {
            if alive.contains(v) {
                bound[v] - graph.degree_within(v, &alive) as i64
            } else {
                i64::MIN
            }
        })
        .collect();
    let mut ready: BTreeSet<(usize, Vertex)> = alive.iter().filter(|&v| slack[v] >= 0).map(key).collect();

    let mut removed = Vec::with_capacity(alive.len());
    while let Some((_, v)) = ready.pop_first() {
        alive.remove(v);
        removed.push(v);
        for &w in graph.neighbors(v) {
            if alive.contains(w) {
                slack[w] += 1;
                if slack[w] == 0 {
                    ready.insert(key(w));
                }
            }
        }
    }
    Peeling {
        removed,
        remainder: alive,
    }
}

/// Peels the whole graph with smallest-id tie-breaking.
pub fn peel(graph: &Graph, kappa: &Assignment) -> Result<Peeling> {
    kappa.expect_role(Role::Kappa)?;
    Ok(peel_within(graph, kappa.values(), &VertexSet::full(graph.n()), None))
}

/// Peels with ties broken by `priority[v]` (smaller first).
pub fn peel_with_priority(graph: &Graph, kappa: &Assignment, priority: &[usize]) -> Result<Peeling> {
    kappa.expect_role(Role::Kappa)?;
    if priority.len() != graph.n() {
        return Err(Error::SizeMismatch {
            expected: graph.n(),
            found: priority.len(),
        });
    }
    Ok(peel_within(
        graph,
        kappa.values(),
        &VertexSet::full(graph.n()),
        Some(priority),
    ))
}

/// Decides whether `graph` is κ-degenerate.
///
/// On YES the ordering is the peel order reversed: a vertex's degree among
/// the not-yet-deleted vertices at deletion time is exactly its degree
/// among its predecessors in the reversed order.
pub fn is_kappa_degenerate(graph: &Graph, kappa: &Assignment) -> Result<DegeneracyVerdict> {
    let Peeling { removed, remainder } = peel(graph, kappa)?;
    if !remainder.is_empty() {
        return Ok(DegeneracyVerdict::No(remainder));
    }
    let mut order = removed;
    order.reverse();
    let ordering = EliminationOrdering(order);
    debug_assert!(verify_ordering(graph, kappa, ordering.as_slice())?.is_valid());
    Ok(DegeneracyVerdict::Yes(ordering))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingCheck {
    Valid,
    /// First failing position (0-based) of the ordering.
    Violation {
        position: usize,
        vertex: Vertex,
        prefix_degree: usize,
        bound: i64,
    },
}

impl OrderingCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, OrderingCheck::Valid)
    }
}

/// Checks the prefix-degree condition on an ordering of all of `V(G)`.
pub fn verify_ordering(graph: &Graph, kappa: &Assignment, order: &[Vertex]) -> Result<OrderingCheck> {
    kappa.expect_role(Role::Kappa)?;
    if order.len() != graph.n() {
        return Err(Error::NotAPermutation);
    }
    let mut placed = VertexSet::empty(graph.n());
    for (position, &v) in order.iter().enumerate() {
        if v >= graph.n() || placed.contains(v) {
            return Err(Error::NotAPermutation);
        }
        placed.insert(v);
        let prefix_degree = graph.degree_within(v, &placed);
        if prefix_degree as i64 > kappa.get(v) {
            return Ok(OrderingCheck::Violation {
                position,
                vertex: v,
                prefix_degree,
                bound: kappa.get(v),
            });
        }
    }
    Ok(OrderingCheck::Valid)
}

/// Why the removal loop of [`decide_paper_variant`] stopped early.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stuck {
    /// More edges than the κ budget.
    EdgeExcess { edges: usize, kappa_sum: i64 },
    /// Budget met but no vertex satisfies `0 <= κ(v) - deg(v) <= Σκ - |E|`.
    NoCandidate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PaperVerdict {
    Yes(EliminationOrdering),
    No { remaining: VertexSet, reason: Stuck },
}

impl PaperVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, PaperVerdict::Yes(_))
    }
}

/// The removal rule with the budget condition: while `|E| <= Σκ`, delete a
/// vertex with `0 <= κ(v) - deg(v) <= Σκ - |E|` (smallest id first). When
/// `|E| = Σκ` this forces `deg(v) = κ(v)`.
///
/// Kept as an independent cross-check of [`is_kappa_degenerate`]; quadratic.
pub fn decide_paper_variant(graph: &Graph, kappa: &Assignment) -> Result<PaperVerdict> {
    kappa.expect_role(Role::Kappa)?;
    let n = graph.n();
    let mut alive = VertexSet::full(n);
    let mut degree: Vec<i64> = (0..n).map(|v| graph.degree(v) as i64).collect();
    let mut edges = graph.m() as i64;
    let mut budget = kappa.sum();
    let mut removed = Vec::with_capacity(n);

    while !alive.is_empty() {
        if edges > budget {
            return Ok(PaperVerdict::No {
                remaining: alive,
                reason: Stuck::EdgeExcess {
                    edges: edges as usize,
                    kappa_sum: budget,
                },
            });
        }
        let surplus = budget - edges;
        let candidate = alive.iter().find(|&v| {
            let gap = kappa.get(v) - degree[v];
            (0..=surplus).contains(&gap)
        });
        let Some(v) = candidate else {
            return Ok(PaperVerdict::No {
                remaining: alive,
                reason: Stuck::NoCandidate,
            });
        };
        alive.remove(v);
        removed.push(v);
        edges -= degree[v];
        budget -= kappa.get(v);
        for &w in graph.neighbors(v) {
            if alive.contains(w) {
                degree[w] -= 1;
            }
        }
    }
    removed.reverse();
    Ok(PaperVerdict::Yes(EliminationOrdering(removed)))
}

/// The least `k` for which the graph is k-degenerate, by min-degree peeling.
pub fn classic_degeneracy(graph: &Graph) -> Result<usize> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut degree: Vec<usize> = (0..graph.n()).map(|v| graph.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = degree.iter().copied().zip(0..).collect();
    let mut removed = vec![false; graph.n()];
    let mut k = 0;
    while let Some((d, v)) = queue.pop_first() {
        k = k.max(d);
        removed[v] = true;
        for &w in graph.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    Ok(k)
}
