//! Integer vertex assignments in the two roles used throughout the crate:
//! degeneracy bounds `κ` and activation thresholds `τ`.

use std::fmt;

use crate::error::{AssignmentError, Error, Result};
use crate::graph::{Graph, InducedSubgraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Non-negative per-vertex degeneracy bound.
    Kappa,
    /// Activation threshold, any integer not above the vertex degree.
    Tau,
}

impl Role {
    pub fn flipped(self) -> Role {
        match self {
            Role::Kappa => Role::Tau,
            Role::Tau => Role::Kappa,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Role::Kappa => "kappa",
            Role::Tau => "tau",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A total map from the vertices of one graph to integers, validated
/// against that graph for its role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<i64>,
    role: Role,
}

impl Assignment {
    pub fn new(graph: &Graph, role: Role, values: Vec<i64>) -> Result<Self, AssignmentError> {
        if values.len() != graph.n() {
            return Err(AssignmentError::WrongLength {
                expected: graph.n(),
                found: values.len(),
            });
        }
        for (vertex, &value) in values.iter().enumerate() {
            check_value(graph, role, vertex, value)?;
        }
        Ok(Assignment { values, role })
    }

    pub fn kappa(graph: &Graph, values: Vec<i64>) -> Result<Self, AssignmentError> {
        Self::new(graph, Role::Kappa, values)
    }

    pub fn tau(graph: &Graph, values: Vec<i64>) -> Result<Self, AssignmentError> {
        Self::new(graph, Role::Tau, values)
    }

    pub fn constant(graph: &Graph, role: Role, value: i64) -> Result<Self, AssignmentError> {
        Self::new(graph, role, vec![value; graph.n()])
    }

    pub(crate) fn from_raw(values: Vec<i64>, role: Role) -> Self {
        Assignment { values, role }
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> i64 {
        self.values[v]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn max(&self) -> Option<i64> {
        self.values.iter().copied().max()
    }

    /// Restriction to the vertices of an induced subgraph, re-validated
    /// against the subgraph (a `τ` can exceed the smaller degree there).
    pub fn restrict(&self, sub: &InducedSubgraph) -> Result<Self, AssignmentError> {
        let values = sub.parents().iter().map(|&p| self.values[p]).collect();
        Self::new(&sub.graph, self.role, values)
    }

    pub(crate) fn expect_role(&self, role: Role) -> Result<()> {
        if self.role == role {
            Ok(())
        } else {
            Err(Error::WrongRole { expected: role.name() })
        }
    }
}

pub(crate) fn check_value(graph: &Graph, role: Role, vertex: Vertex, value: i64) -> Result<(), AssignmentError> {
    match role {
        Role::Kappa if value < 0 => Err(AssignmentError::NegativeKappa { vertex, value }),
        Role::Tau if value > graph.degree(vertex) as i64 => Err(AssignmentError::TauAboveDegree {
            vertex,
            value,
            degree: graph.degree(vertex),
        }),
        _ => Ok(()),
    }
}
