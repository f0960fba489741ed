//! Generalized degeneracy and dynamic monopolies.
//!
//! A graph is *κ-degenerate* for a non-negative vertex map κ when its
//! vertices can be ordered so that each has at most κ(v) earlier neighbors.
//! Under integral thresholds τ (possibly non-positive), a seed set `D` is a
//! dynamic monopoly exactly when `G - D` is κ-degenerate for
//! `κ = deg - τ`. This crate decides both properties, produces witnesses
//! and certificates, evaluates the associated size bounds, and ships
//! brute-force oracles for small graphs.

pub mod assignment;
pub mod bounds;
pub mod cli;
pub mod degeneracy;
pub mod error;
pub mod graph;
pub mod io;
pub mod monopoly;
pub mod oracle;

pub use assignment::{Assignment, Role};
pub use degeneracy::{
    classic_degeneracy, decide_paper_variant, is_kappa_degenerate, peel, verify_ordering, DegeneracyVerdict,
    EliminationOrdering,
};
pub use error::{Error, Result};
pub use graph::{Graph, InducedSubgraph, Vertex, VertexSet};
pub use monopoly::{
    greedy_dynamo, is_dynamo, maximal_resistant, simulate_activation, tau_kappa_dual, ActivationSchedule, DynamoResult,
    GreedyRule,
};
