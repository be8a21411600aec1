//! Small Ramsey numbers of cliques and cycles.

use alloc::vec::Vec;
use alloc::format;

use serde::{Deserialize, Serialize};

use super::{Sweep, SweepWitness};
use crate::budget::{Meter, SearchBudget};
use crate::colouring::{arrows_in, ArrowOutcome};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::hypergraph::{system_of_copies, CopyBase, CopyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RamseyKind {
    Clique,
    Cycle,
}

impl RamseyKind {
    fn copy_kind(self) -> CopyKind {
        match self {
            RamseyKind::Clique => CopyKind::Clique,
            RamseyKind::Cycle => CopyKind::Cycle,
        }
    }

    fn min_k(self) -> usize {
        match self {
            RamseyKind::Clique => 2,
            RamseyKind::Cycle => 3,
        }
    }
}

fn decide_metered(kind: RamseyKind, k: usize, r: u32, n: usize, meter: &mut Meter) -> Result<ArrowOutcome> {
    if k < kind.min_k() {
        return Err(invalid(format!("k must be at least {} for {kind:?}", kind.min_k())));
    }
    if n < k {
        return Err(invalid("n must be at least k"));
    }
    let base = Graph::complete(n);
    let system = system_of_copies(kind.copy_kind(), CopyBase::Graph(&base), k)?;
    arrows_in(&system, r, meter)
}

/// Decides `K_n -> (F)_r` for `F = K_k` or `C_k`.
pub fn ramsey_decide(kind: RamseyKind, k: usize, r: u32, n: usize, budget: &SearchBudget) -> Result<ArrowOutcome> {
    decide_metered(kind, k, r, n, &mut budget.meter())
}

/// Least `n >= k` with `K_n -> (F)_r`, sweeping upwards under one shared
/// budget.
pub fn ramsey_number(kind: RamseyKind, k: usize, r: u32, budget: &SearchBudget) -> Result<Sweep> {
    let mut meter = budget.meter();
    let mut witnesses = Vec::new();
    let mut n = k;
    loop {
        match decide_metered(kind, k, r, n, &mut meter)? {
            ArrowOutcome::Arrows => {
                return Ok(Sweep::Exact { value: n as u64, witnesses, nodes: meter.nodes() });
            }
            ArrowOutcome::NotArrows { witness } => witnesses.push(SweepWitness { n: n as u64, colouring: witness }),
            ArrowOutcome::BudgetExceeded => {
                return Ok(Sweep::LowerBoundOnly { lower_bound: n as u64, witnesses, nodes: meter.nodes() });
            }
        }
        n += 1;
    }
}
