//! Brute-force baselines for small graphs.
//!
//! These work on adjacency bitmasks and share no code with the peeling or
//! cascade implementations, so they can be used to check them.

use crate::assignment::{Assignment, Role};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Size cap for the subset searches.
pub const EXACT_LIMIT: usize = 20;
/// Size cap for the permutation search.
pub const ORDERING_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum: usize,
    pub witness: VertexSet,
    /// Candidate sets that were fully evaluated.
    pub explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip subsets with more edges than their κ budget.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true }
    }
}

fn check_limit(graph: &Graph, limit: usize) -> Result<()> {
    if graph.n() > limit {
        return Err(Error::OracleLimit { n: graph.n(), limit });
    }
    Ok(())
}

fn masks(graph: &Graph) -> Vec<u32> {
    (0..graph.n())
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Calls `visit` on every `size`-subset of `pool` in lexicographic order
/// until it returns `true`.
fn for_each_combination(pool: &[usize], size: usize, mut visit: impl FnMut(u32) -> bool) -> bool {
    if size > pool.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let mask = idx.iter().fold(0u32, |m, &i| m | 1 << pool[i]);
        if visit(mask) {
            return true;
        }
        // advance to the next combination
        let Some(pos) = (0..size).rev().find(|&p| idx[p] < pool.len() - size + p) else {
            return false;
        };
        idx[pos] += 1;
        for p in pos + 1..size {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

fn mask_degenerate(adj: &[u32], kappa: &[i64], mut rest: u32) -> bool {
    'outer: while rest != 0 {
        let mut scan = rest;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if (adj[v] & rest).count_ones() as i64 <= kappa[v] {
                rest &= !(1 << v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mask_edges(adj: &[u32], set: u32) -> i64 {
    let mut scan = set;
    let mut twice = 0;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        twice += (adj[v] & set).count_ones() as i64;
    }
    twice / 2
}

fn mask_sum(values: &[i64], set: u32) -> i64 {
    (0..values.len())
        .filter(|&v| set >> v & 1 == 1)
        .map(|v| values[v])
        .sum()
}

/// Largest vertex set inducing a κ-degenerate subgraph; ties go to the
/// lexicographically smallest set.
pub fn exact_max_kappa_subgraph(graph: &Graph, kappa: &Assignment, options: SearchOptions) -> Result<ExactResult> {
    kappa.expect_role(Role::Kappa)?;
    check_limit(graph, EXACT_LIMIT)?;
    let n = graph.n();
    let adj = masks(graph);
    let pool: Vec<usize> = (0..n).collect();
    let mut explored = 0u64;
    for size in (0..=n).rev() {
        let mut found = None;
        for_each_combination(&pool, size, |set| {
            if options.prune && mask_edges(&adj, set) > mask_sum(kappa.values(), set) {
                return false;
            }
            explored += 1;
            if mask_degenerate(&adj, kappa.values(), set) {
                found = Some(set);
                true
            } else {
                false
            }
        });
        if let Some(set) = found {
            return Ok(ExactResult {
                optimum: size,
                witness: VertexSet::from_bits(n, set as u64),
                explored,
            });
        }
    }
    unreachable!("the empty set is always κ-degenerate")
}

fn mask_cascade(adj: &[u32], tau: &[i64], seed: u32) -> u32 {
    let full = if adj.len() == 32 {
        u32::MAX
    } else {
        (1u32 << adj.len()) - 1
    };
    let mut active = seed;
    loop {
        let mut fresh = 0u32;
        let mut scan = full & !active;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if (adj[v] & active).count_ones() as i64 >= tau[v] {
                fresh |= 1 << v;
            }
        }
        if fresh == 0 {
            return active;
        }
        active |= fresh;
    }
}

/// Smallest dynamo, counting only seeds with positive threshold. Seeds are
/// drawn from the positive-threshold vertices only, since the others
/// activate on their own.
pub fn exact_min_dynamo(graph: &Graph, tau: &Assignment) -> Result<ExactResult> {
    tau.expect_role(Role::Tau)?;
    check_limit(graph, EXACT_LIMIT)?;
    let n = graph.n();
    let adj = masks(graph);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let pool: Vec<usize> = (0..n).filter(|&v| tau.get(v) > 0).collect();
    let mut explored = 0u64;
    for size in 0..=pool.len() {
        let mut found = None;
        for_each_combination(&pool, size, |seed| {
            explored += 1;
            if mask_cascade(&adj, tau.values(), seed) == full {
                found = Some(seed);
                true
            } else {
                false
            }
        });
        if let Some(seed) = found {
            return Ok(ExactResult {
                optimum: size,
                witness: VertexSet::from_bits(n, seed as u64),
                explored,
            });
        }
    }
    unreachable!("seeding every positive-threshold vertex activates everything")
}

/// Whether some permutation of `V(G)` meets the prefix-degree condition,
/// by depth-first search over orderings (a branch is cut as soon as its
/// last vertex fails).
pub fn exhaustive_ordering_check(graph: &Graph, kappa: &Assignment) -> Result<bool> {
    kappa.expect_role(Role::Kappa)?;
    check_limit(graph, ORDERING_LIMIT)?;
    let adj = masks(graph);
    let n = graph.n();

    fn extend(adj: &[u32], kappa: &[i64], placed: u32, depth: usize) -> bool {
        if depth == adj.len() {
            return true;
        }
        (0..adj.len()).any(|v| {
            placed >> v & 1 == 0
                && (adj[v] & placed).count_ones() as i64 <= kappa[v]
                && extend(adj, kappa, placed | 1 << v, depth + 1)
        })
    }
    Ok(n == 0 || extend(&adj, kappa.values(), 0, 0))
}
