//! Threshold cascades, dynamic monopolies and resistant subgraphs.
//!
//! A vertex activates once at least `τ(v)` of its neighbors are active, so a
//! vertex with `τ(v) <= 0` activates unconditionally. A seed set is a dynamic
//! monopoly (dynamo) when the cascade it starts reaches every vertex. Its size
//! ignores seeds with `τ(v) <= 0`.
//!
//! With `κ(v) = deg(v) - τ(v)`, a set `D` is a τ-dynamo exactly when
//! `G - D` is κ-degenerate, and the vertices the cascade never reaches always
//! contain a resistant subgraph: a nonempty `K` with
//! `deg_K(v) >= deg(v) - τ(v) + 1` for all `v` in `K`.

use std::collections::BTreeSet;

use crate::assignment::{Assignment, Role};
use crate::bounds;
use crate::degeneracy::peel_within;
use crate::error::{Error, Inapplicable, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The complementary assignment `b(v) = deg(v) - a(v)` with the role flipped.
pub fn tau_kappa_dual(graph: &Graph, a: &Assignment) -> Assignment {
    let values = (0..graph.n()).map(|v| graph.degree(v) as i64 - a.get(v)).collect();
    Assignment::from_raw(values, a.role().flipped())
}

/// Synchronous activation rounds `D0, D1, …, Dk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationSchedule {
    rounds: Vec<Vec<Vertex>>,
    round_of: Vec<Option<usize>>,
}

impl ActivationSchedule {
    /// Round 0 is the seed set; each later round is nonempty and sorted.
    pub fn rounds(&self) -> &[Vec<Vertex>] {
        &self.rounds
    }

    pub fn round_of(&self, v: Vertex) -> Option<usize> {
        self.round_of[v]
    }

    pub fn activated(&self) -> VertexSet {
        VertexSet::from_iter_unchecked(
            self.round_of.len(),
            self.round_of.iter().enumerate().filter_map(|(v, r)| r.map(|_| v)),
        )
    }

    pub fn activated_count(&self) -> usize {
        self.round_of.iter().flatten().count()
    }

    pub fn all_active(&self) -> bool {
        self.round_of.iter().all(Option::is_some)
    }

    /// Activated vertices, latest round first.
    pub fn reverse_activation_order(&self) -> Vec<Vertex> {
        self.rounds.iter().rev().flatten().copied().collect()
    }
}

/// Runs the cascade from `seed` until no vertex changes state.
pub fn simulate_activation(graph: &Graph, tau: &Assignment, seed: &VertexSet) -> Result<ActivationSchedule> {
    tau.expect_role(Role::Tau)?;
    graph.check_set(seed)?;
    let n = graph.n();
    let mut round_of: Vec<Option<usize>> = vec![None; n];
    let mut active_neighbors = vec![0i64; n];
    let mut rounds = vec![seed.to_vec()];
    for v in seed.iter() {
        round_of[v] = Some(0);
        for &w in graph.neighbors(v) {
            active_neighbors[w] += 1;
        }
    }

    // Round 1 scans everything (τ <= 0 vertices fire with no help); later
    // rounds only revisit neighbors of the previous round.
    let mut candidates: BTreeSet<Vertex> = (0..n).collect();
    let mut round = 1;
    loop {
        let fired: Vec<Vertex> = candidates
            .iter()
            .copied()
            .filter(|&v| round_of[v].is_none() && active_neighbors[v] >= tau.get(v))
            .collect();
        if fired.is_empty() {
            break;
        }
        candidates.clear();
        for &v in &fired {
            round_of[v] = Some(round);
        }
        for &v in &fired {
            for &w in graph.neighbors(v) {
                active_neighbors[w] += 1;
                if round_of[w].is_none() {
                    candidates.insert(w);
                }
            }
        }
        rounds.push(fired);
        round += 1;
    }
    debug_assert!(rounds.len() <= n + 1);
    Ok(ActivationSchedule { rounds, round_of })
}

/// Outcome of checking a seed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamoResult {
    pub seed: VertexSet,
    pub is_dynamo: bool,
    /// Seeds with a positive threshold.
    pub size: usize,
    pub schedule: ActivationSchedule,
    /// Maximal resistant subgraph among the never-activated vertices.
    pub certificate: Option<VertexSet>,
}

pub fn dynamo_size(tau: &Assignment, seed: &VertexSet) -> usize {
    seed.iter().filter(|&v| tau.get(v) > 0).count()
}

pub fn is_dynamo(graph: &Graph, tau: &Assignment, seed: &VertexSet) -> Result<DynamoResult> {
    let schedule = simulate_activation(graph, tau, seed)?;
    let is_dynamo = schedule.all_active();
    let certificate = if is_dynamo {
        None
    } else {
        let inactive = schedule.activated().complement();
        let resistant = maximal_resistant(graph, tau, &inactive)?;
        debug_assert!(!resistant.is_empty());
        Some(resistant)
    };
    Ok(DynamoResult {
        seed: seed.clone(),
        is_dynamo,
        size: dynamo_size(tau, seed),
        schedule,
        certificate,
    })
}

/// The largest resistant subgraph inside `within` (empty if there is none).
///
/// Resistant sets are closed under union, so peeling `within` with
/// `κ = deg - τ` leaves exactly the maximal one.
pub fn maximal_resistant(graph: &Graph, tau: &Assignment, within: &VertexSet) -> Result<VertexSet> {
    tau.expect_role(Role::Tau)?;
    graph.check_set(within)?;
    let kappa = tau_kappa_dual(graph, tau);
    Ok(peel_within(graph, kappa.values(), within, None).remainder)
}

/// Direct check of the resistant-subgraph inequality on every member of `k`.
pub fn check_resistant(graph: &Graph, tau: &Assignment, k: &VertexSet) -> Result<bool> {
    tau.expect_role(Role::Tau)?;
    graph.check_set(k)?;
    if k.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(k.iter()
        .all(|v| graph.degree_within(v, k) as i64 > graph.degree(v) as i64 - tau.get(v)))
}

/// Seed selection rule for [`greedy_dynamo`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GreedyRule {
    /// Largest residual threshold, then larger residual degree, then smaller id.
    #[default]
    MaxThreshold,
    /// Largest residual degree, then larger residual threshold, then smaller id.
    MaxDegree,
}

impl GreedyRule {
    pub const ALL: [GreedyRule; 2] = [GreedyRule::MaxThreshold, GreedyRule::MaxDegree];

    pub fn name(self) -> &'static str {
        match self {
            GreedyRule::MaxThreshold => "max-threshold",
            GreedyRule::MaxDegree => "max-degree",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyDynamo {
    pub rule: GreedyRule,
    pub result: DynamoResult,
    /// The cardinality guarantee for this instance, for comparison.
    pub bound: Result<usize, Inapplicable>,
}

impl GreedyDynamo {
    pub fn within_bound(&self) -> Option<bool> {
        self.bound.as_ref().ok().map(|&b| self.result.size <= b)
    }
}

/// Builds a dynamo on a shrinking residual graph.
///
/// Vertices whose residual threshold has dropped to zero or below are
/// deleted for free (they will activate once the seeds do); otherwise a seed
/// is picked by `rule`. Each deletion lowers the residual threshold of the
/// remaining neighbors by one.
pub fn greedy_dynamo(graph: &Graph, tau: &Assignment, rule: GreedyRule) -> Result<GreedyDynamo> {
    tau.expect_role(Role::Tau)?;
    let n = graph.n();
    let mut threshold: Vec<i64> = tau.values().to_vec();
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut alive = VertexSet::full(n);
    let mut seed = VertexSet::empty(n);

    let mut free: Vec<Vertex> = (0..n).filter(|&v| threshold[v] <= 0).rev().collect();
    loop {
        while let Some(v) = free.pop() {
            if alive.contains(v) {
                delete(graph, v, &mut alive, &mut threshold, &mut degree, &mut free);
            }
        }
        let pick = alive.iter().max_by(|&a, &b| {
            let key = |v: Vertex| match rule {
                GreedyRule::MaxThreshold => (threshold[v], degree[v] as i64),
                GreedyRule::MaxDegree => (degree[v] as i64, threshold[v]),
            };
            key(a).cmp(&key(b)).then(b.cmp(&a))
        });
        let Some(v) = pick else { break };
        seed.insert(v);
        delete(graph, v, &mut alive, &mut threshold, &mut degree, &mut free);
    }

    let result = is_dynamo(graph, tau, &seed)?;
    debug_assert!(result.is_dynamo);
    Ok(GreedyDynamo {
        rule,
        result,
        bound: bounds::dynamo_size_bound(graph, tau),
    })
}

fn delete(
    graph: &Graph,
    v: Vertex,
    alive: &mut VertexSet,
    threshold: &mut [i64],
    degree: &mut [usize],
    free: &mut Vec<Vertex>,
) {
    alive.remove(v);
    for &w in graph.neighbors(v) {
        if alive.contains(w) {
            degree[w] -= 1;
            threshold[w] -= 1;
            if threshold[w] == 0 {
                free.push(w);
            }
        }
    }
}

/// Both sides of the threshold-sum inequality for a dynamo `D` with
/// non-seed part `H`:
/// `Σ_{v∈H} τ(v) <= |E(G)| - |E(G[D])| - δ(G) + max_{v∈H} τ(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdSumCheck {
    Evaluated {
        lhs: i64,
        rhs: i64,
    },
    /// `D = V(G)`, so the maximum over `H` does not exist.
    NotApplicable,
}

impl ThresholdSumCheck {
    pub fn holds(&self) -> Option<bool> {
        match *self {
            ThresholdSumCheck::Evaluated { lhs, rhs } => Some(lhs <= rhs),
            ThresholdSumCheck::NotApplicable => None,
        }
    }
}

pub fn threshold_sum_inequality(graph: &Graph, tau: &Assignment, seed: &VertexSet) -> Result<ThresholdSumCheck> {
    if !is_dynamo(graph, tau, seed)?.is_dynamo {
        return Err(Error::NotADynamo);
    }
    let rest = seed.complement();
    let Some(tau_max) = rest.iter().map(|v| tau.get(v)).max() else {
        return Ok(ThresholdSumCheck::NotApplicable);
    };
    let lhs = rest.iter().map(|v| tau.get(v)).sum();
    let min_degree = graph.min_degree().unwrap_or(0) as i64;
    let rhs = graph.m() as i64 - graph.edges_within(seed) as i64 - min_degree + tau_max;
    Ok(ThresholdSumCheck::Evaluated { lhs, rhs })
}
