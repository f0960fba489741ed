//! Size bounds for κ-degenerate induced subgraphs and dynamos, plus the
//! constructive extraction of a large κ-degenerate induced subgraph.
//!
//! All arithmetic is exact; rational bounds use [`BigRational`].

use num::{BigInt, BigRational, ToPrimitive};

use crate::assignment::{Assignment, Role};
use crate::degeneracy::{is_kappa_degenerate, DegeneracyVerdict, EliminationOrdering};
use crate::error::{Inapplicable, Result};
use crate::graph::{Graph, VertexSet};
use crate::monopoly::{greedy_dynamo, tau_kappa_dual, GreedyDynamo, GreedyRule};

fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `Σ_v min{1, (k+1)/(deg(v)+1)}`: some k-degenerate induced subgraph has at
/// least the ceiling of this many vertices.
pub fn alon_lower_bound(graph: &Graph, k: u64) -> BigRational {
    (0..graph.n())
        .map(|v| {
            let d = graph.degree(v) as i64;
            if k as i64 >= d {
                ratio(1, 1)
            } else {
                ratio(k as i64 + 1, d + 1)
            }
        })
        .fold(ratio(0, 1), |acc, term| acc + term)
}

/// Largest `j` in `0..=n` with `Σ_{i<=j} (d_i + 1) <= Σ τ`, degrees sorted
/// non-decreasing. Some dynamo has at most this size when every threshold
/// is non-negative; with negative thresholds it can fail (K3 with
/// `τ = (2, 2, -2)` gives 0, but one seed is needed).
pub fn dynamo_size_bound(graph: &Graph, tau: &Assignment) -> Result<usize, Inapplicable> {
    let budget = tau.sum();
    if budget < 0 {
        return Err(Inapplicable::NegativeThresholdSum { sum: budget });
    }
    let mut spent = 0i64;
    let mut j = 0;
    for &d in graph.degree_sequence() {
        spent += d as i64 + 1;
        if spent > budget {
            break;
        }
        j += 1;
    }
    Ok(j)
}

fn positive_kappa(kappa: &Assignment) -> Result<(), Inapplicable> {
    match kappa.values().iter().position(|&k| k <= 0) {
        Some(vertex) => Err(Inapplicable::NonPositiveKappa { vertex }),
        None => Ok(()),
    }
}

/// `n - max{j : j + Σκ <= Σ_{i>j} d_i}` for positive κ. This is a
/// guaranteed lower bound only when `κ(v) <= deg(v)` throughout.
///
/// Inapplicable when even `j = 0` fails, i.e. `Σκ > 2m`.
pub fn degenerate_subgraph_lower_bound(graph: &Graph, kappa: &Assignment) -> Result<usize, Inapplicable> {
    positive_kappa(kappa)?;
    let n = graph.n();
    let degrees = graph.degree_sequence();
    let kappa_sum = kappa.sum();
    // tail[j] = d_{j+1} + … + d_n
    let mut tail = 2 * graph.m() as i64;
    if kappa_sum > tail {
        return Err(Inapplicable::KappaSumExceedsDegreeSum {
            sum_kappa: kappa_sum,
            degree_sum: 2 * graph.m(),
        });
    }
    let mut best = 0;
    for j in 1..=n {
        tail -= degrees[j - 1] as i64;
        if j as i64 + kappa_sum <= tail {
            best = j;
        } else {
            break;
        }
    }
    Ok(n - best)
}

/// `max_v (deg(v) - κ(v))` and `min_v (deg(v) - κ(v))`.
pub fn alpha_beta(graph: &Graph, kappa: &Assignment) -> Option<(i64, i64)> {
    let gaps = (0..graph.n()).map(|v| graph.degree(v) as i64 - kappa.get(v));
    let alpha = gaps.clone().max()?;
    let beta = gaps.min()?;
    Some((alpha, beta))
}

/// `⌊(m - δ + α) / β⌋`, an upper bound on every κ-degenerate induced
/// subgraph when κ is positive and `β > 0`.
pub fn degenerate_subgraph_upper_bound(graph: &Graph, kappa: &Assignment) -> Result<usize, Inapplicable> {
    positive_kappa(kappa)?;
    let (alpha, beta) = alpha_beta(graph, kappa).ok_or(Inapplicable::EmptyGraph)?;
    if beta <= 0 {
        return Err(Inapplicable::NonPositiveBeta { beta });
    }
    let delta = graph.min_degree().unwrap_or(0) as i64;
    let numer = graph.m() as i64 - delta + alpha;
    Ok(numer.div_euclid(beta).max(0) as usize)
}

/// `((k+1)n/(r+1), (rn-2k)/(2r-2k))` for an r-regular graph on n vertices.
pub fn regular_bounds(n: u64, r: u64, k: u64) -> Result<(BigRational, BigRational), Inapplicable> {
    if k >= r {
        return Err(Inapplicable::KNotBelowDegree {
            k: k as i64,
            r: r as usize,
        });
    }
    if n == 0 {
        return Err(Inapplicable::EmptyGraph);
    }
    let (n, r, k) = (n as i64, r as i64, k as i64);
    Ok((ratio((k + 1) * n, r + 1), ratio(r * n - 2 * k, 2 * r - 2 * k)))
}

/// Integer rounding of [`regular_bounds`]: `(⌈lo⌉, ⌊hi⌋)`.
pub fn regular_integer_bounds(n: u64, r: u64, k: u64) -> Result<(u64, u64), Inapplicable> {
    let (lo, hi) = regular_bounds(n, r, k)?;
    let lo = lo.ceil().to_integer().to_u64().unwrap_or(0);
    let hi = hi.floor().to_integer().to_u64().unwrap_or(0);
    Ok((lo, hi))
}

/// A κ-degenerate induced subgraph built from a greedy dynamo of the dual
/// thresholds.
#[derive(Debug, Clone)]
pub struct KappaSubgraph {
    pub set: VertexSet,
    /// Elimination ordering of `set` in parent-graph ids.
    pub ordering: EliminationOrdering,
    pub dynamo: GreedyDynamo,
    pub lower_bound: Result<usize, Inapplicable>,
}

pub fn find_kappa_subgraph(graph: &Graph, kappa: &Assignment, rule: GreedyRule) -> Result<KappaSubgraph> {
    kappa.expect_role(Role::Kappa)?;
    let tau = tau_kappa_dual(graph, kappa);
    let dynamo = greedy_dynamo(graph, &tau, rule)?;
    let set = dynamo.result.seed.complement();
    let sub = graph.induced_subgraph(&set)?;
    let restricted = kappa.restrict(&sub)?;
    let ordering = match is_kappa_degenerate(&sub.graph, &restricted)? {
        DegeneracyVerdict::Yes(order) => {
            EliminationOrdering::new(order.as_slice().iter().map(|&c| sub.parent_of(c)).collect())
        }
        DegeneracyVerdict::No(_) => unreachable!("complement of a dynamo is always κ-degenerate"),
    };
    Ok(KappaSubgraph {
        set,
        ordering,
        dynamo,
        lower_bound: degenerate_subgraph_lower_bound(graph, kappa),
    })
}

/// How the κ side of a bounds query was given.
#[derive(Debug, Clone, Copy)]
pub enum KappaSpec<'a> {
    Constant(u64),
    Assignment(&'a Assignment),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: Option<usize>,
    pub sum_kappa: i64,
    pub alpha: Option<i64>,
    pub beta: Option<i64>,
    /// Only in constant-k mode.
    pub alon: Option<BigRational>,
    /// Dynamo bound for the dual thresholds `τ = deg - κ`.
    pub dynamo_bound: Result<usize, Inapplicable>,
    pub lower: Result<usize, Inapplicable>,
    pub upper: Result<usize, Inapplicable>,
    /// Only for a regular graph in constant-k mode.
    pub regular: Option<Result<(BigRational, BigRational), Inapplicable>>,
}

pub fn bounds_report(graph: &Graph, spec: KappaSpec<'_>) -> Result<BoundsReport> {
    let owned;
    let kappa = match spec {
        KappaSpec::Constant(k) => {
            owned = Assignment::constant(graph, Role::Kappa, k as i64)?;
            &owned
        }
        KappaSpec::Assignment(a) => {
            a.expect_role(Role::Kappa)?;
            a
        }
    };
    let tau = tau_kappa_dual(graph, kappa);
    let ab = alpha_beta(graph, kappa);
    let (alon, regular) = match spec {
        KappaSpec::Constant(k) => (
            Some(alon_lower_bound(graph, k)),
            graph
                .regular_degree()
                .map(|r| regular_bounds(graph.n() as u64, r as u64, k)),
        ),
        KappaSpec::Assignment(_) => (None, None),
    };
    Ok(BoundsReport {
        n: graph.n(),
        m: graph.m(),
        min_degree: graph.min_degree(),
        sum_kappa: kappa.sum(),
        alpha: ab.map(|p| p.0),
        beta: ab.map(|p| p.1),
        alon,
        dynamo_bound: dynamo_size_bound(graph, &tau),
        lower: degenerate_subgraph_lower_bound(graph, kappa),
        upper: degenerate_subgraph_upper_bound(graph, kappa),
        regular,
    })
}
