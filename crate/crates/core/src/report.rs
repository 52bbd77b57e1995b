use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Exact non-negative count. All arithmetic on counts is checked.
pub type Count = u64;

pub(crate) fn checked_add(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_mul(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn to_count(n: usize, what: &'static str) -> Result<Count> {
    Count::try_from(n).map_err(|_| Error::Overflow(what))
}

/// γ, τ and the per-vertex domination values of one graph.
///
/// `dv[v - 1]` is the number of minimum dominating sets containing vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    pub gamma: Count,
    pub tau: Count,
    pub dv: Vec<Count>,
    /// All minimum dominating sets, only when explicitly requested from the oracle.
    pub sets: Option<Vec<VertexSet>>,
}

impl DominationReport {
    pub fn new(gamma: Count, tau: Count, dv: Vec<Count>) -> Self {
        DominationReport {
            gamma,
            tau,
            dv,
            sets: None,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.dv.len()
    }

    /// Domination value of vertex `v` (1-based).
    pub fn dv_of(&self, v: usize) -> Option<Count> {
        v.checked_sub(1).and_then(|i| self.dv.get(i)).copied()
    }

    /// `Σ DV(v)`, or `None` on overflow.
    pub fn dv_sum(&self) -> Option<Count> {
        self.dv.iter().try_fold(0u64, |acc, &d| acc.checked_add(d))
    }

    /// `τ · γ`, or `None` on overflow.
    pub fn tau_gamma(&self) -> Option<Count> {
        self.tau.checked_mul(self.gamma)
    }

    /// Same γ, τ and DV, ignoring any retained sets.
    pub fn same_values(&self, other: &DominationReport) -> bool {
        self.gamma == other.gamma && self.tau == other.tau && self.dv == other.dv
    }

    pub fn without_sets(mut self) -> Self {
        self.sets = None;
        self
    }
}
