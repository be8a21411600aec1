//! Small van der Waerden numbers.

use alloc::vec::Vec;

use super::{Sweep, SweepWitness};
use crate::budget::{Meter, SearchBudget};
use crate::colouring::{arrows_in, ArrowOutcome};
use crate::error::{invalid, Result};
use crate::hypergraph::ap_system;

fn decide_metered(n: usize, k: usize, r: u32, meter: &mut Meter) -> Result<ArrowOutcome> {
    if n == 0 {
        return Err(invalid("N must be at least 1"));
    }
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    arrows_in(&ap_system(n, k)?, r, meter)
}

/// Decides `[N] -> (AP_k)_r`.
pub fn vdw_decide(n: usize, k: usize, r: u32, budget: &SearchBudget) -> Result<ArrowOutcome> {
    decide_metered(n, k, r, &mut budget.meter())
}

/// Least `N >= k` with `[N] -> (AP_k)_r`, sweeping upwards under one shared
/// budget.
pub fn vdw_number(k: usize, r: u32, budget: &SearchBudget) -> Result<Sweep> {
    let mut meter = budget.meter();
    let mut witnesses = Vec::new();
    let mut n = k.max(1);
    loop {
        match decide_metered(n, k, r, &mut meter)? {
            ArrowOutcome::Arrows => return Ok(Sweep::Exact { value: n as u64, witnesses, nodes: meter.nodes() }),
            ArrowOutcome::NotArrows { witness } => witnesses.push(SweepWitness { n: n as u64, colouring: witness }),
            ArrowOutcome::BudgetExceeded => {
                return Ok(Sweep::LowerBoundOnly { lower_bound: n as u64, witnesses, nodes: meter.nodes() })
            }
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_colouring;

    #[test]
    fn nine_and_eight() {
        assert_eq!(vdw_decide(9, 3, 2, &SearchBudget::UNLIMITED).unwrap(), ArrowOutcome::Arrows);
        match vdw_decide(8, 3, 2, &SearchBudget::UNLIMITED).unwrap() {
            ArrowOutcome::NotArrows { witness } => {
                assert!(verify_colouring(&ap_system(8, 3).unwrap(), &witness).unwrap())
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(vdw_decide(5, 5, 1, &SearchBudget::UNLIMITED).unwrap(), ArrowOutcome::Arrows);
        assert!(matches!(vdw_decide(4, 5, 3, &SearchBudget::UNLIMITED).unwrap(), ArrowOutcome::NotArrows { .. }));
        for k in 2..7 {
            assert_eq!(vdw_number(k, 1, &SearchBudget::UNLIMITED).unwrap().value(), Some(k as u64));
        }
    }

    #[test]
    fn w32() {
        let s = vdw_number(3, 2, &SearchBudget::UNLIMITED).unwrap();
        assert_eq!(s.value(), Some(9));
        assert_eq!(s.witnesses().len(), 6);
    }
}
