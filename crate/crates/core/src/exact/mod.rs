//! Exhaustive searches for small Ramsey, van der Waerden and extremal
//! numbers, and checkers for the counting facts built on them.

pub mod extremal;
pub mod facts;
pub mod fbounds;
pub mod ramsey;
pub mod vdw;

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::colouring::Colouring;

pub use extremal::{extremal_ex, Extremal};
pub use facts::{fact7_premise, fact_vdw_check, Fact7, FactBranch, FactReport};
pub use fbounds::{f_bound_report, moore_lower_bound, FBoundsReport, Parity};
pub use ramsey::{ramsey_decide, ramsey_number, RamseyKind};
pub use vdw::{vdw_decide, vdw_number};

/// A colouring that avoids the pattern at size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepWitness {
    pub n: u64,
    pub colouring: Colouring,
}

/// Result of an ascending sweep for the least arrowing size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Sweep {
    /// The least size that arrows, with avoiding colourings for every
    /// smaller size in the sweep.
    Exact { value: u64, witnesses: Vec<SweepWitness>, nodes: u64 },
    /// The budget ran out while deciding `lower_bound`; every smaller size
    /// in the sweep is proven not to arrow.
    LowerBoundOnly { lower_bound: u64, witnesses: Vec<SweepWitness>, nodes: u64 },
}

impl Sweep {
    pub fn value(&self) -> Option<u64> {
        match self {
            Sweep::Exact { value, .. } => Some(*value),
            Sweep::LowerBoundOnly { .. } => None,
        }
    }

    pub fn witnesses(&self) -> &[SweepWitness] {
        match self {
            Sweep::Exact { witnesses, .. } | Sweep::LowerBoundOnly { witnesses, .. } => witnesses,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            Sweep::Exact { nodes, .. } | Sweep::LowerBoundOnly { nodes, .. } => *nodes,
        }
    }
}
