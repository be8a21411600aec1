//! Checkers for two counting facts: the progression dichotomy of
//! `(r+1)`-colourings of `[n]`, and the extremal-number premise bounding
//! `f_r(2k)`.

use alloc::format;
use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::vdw::vdw_decide;
use crate::budget::SearchBudget;
use crate::colouring::{ArrowOutcome, Colouring};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::ap_count_formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactBranch {
    /// More than `|AP_k([n])| / W^3` monochromatic progressions in colours `1..=r`.
    First,
    /// More than `n / (4W)` elements in colour `r + 1`.
    Second,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactReport {
    pub branch: FactBranch,
    pub mono_count: u64,
    pub ap_count: u64,
    pub last_class: u64,
    pub w_verified: bool,
}

/// Counts both sides of the dichotomy for a colouring of `[n]` (vertex `i`
/// is the integer `i + 1`) with colours `1..=r+1`.
///
/// `W` is checked to satisfy `[W] -> (AP_k)_r` unless `trust_w` is set.
/// When neither branch holds, the colouring is a counterexample only if
/// `[n]` has at least `n^2 / (2W)` progressions of length `W` (the count the
/// counting argument needs); otherwise the check is refused.
pub fn fact_vdw_check(
    c: &Colouring,
    k: usize,
    r: u32,
    w: u64,
    trust_w: bool,
    budget: &SearchBudget,
) -> Result<FactReport> {
    if c.num_colours != r + 1 {
        return Err(invalid(format!("colouring must use r + 1 = {} colours", r + 1)));
    }
    if k < 2 || w == 0 {
        return Err(invalid("need k >= 2 and W >= 1"));
    }
    for (v, &col) in c.colours.iter().enumerate() {
        if col == 0 || col > r + 1 {
            return Err(Error::ColourOutOfRange { vertex: v, colour: col, max: r + 1 });
        }
    }
    if !trust_w {
        match vdw_decide(w as usize, k, r, budget)? {
            ArrowOutcome::Arrows => {}
            ArrowOutcome::NotArrows { .. } => {
                return Err(invalid(format!("[{w}] does not arrow AP_{k} with {r} colours")));
            }
            ArrowOutcome::BudgetExceeded => return Err(invalid("could not verify W within the budget")),
        }
    }
    let n = c.len();
    let mut mono = 0u64;
    for a in 0..n {
        let col = c.colours[a];
        if col > r {
            continue;
        }
        let mut d = 1;
        while a + (k - 1) * d < n {
            if (1..k).all(|i| c.colours[a + i * d] == col) {
                mono += 1;
            }
            d += 1;
        }
    }
    let ap_count = ap_count_formula(n as u64, k as u64);
    let last_class = c.colours.iter().filter(|&&x| x == r + 1).count() as u64;
    let w3 = (w as u128).pow(3);
    let first = mono as u128 * w3 > ap_count as u128;
    let second = last_class as u128 * 4 * w as u128 > n as u128;
    let branch = match (first, second) {
        (true, true) => FactBranch::Both,
        (true, false) => FactBranch::First,
        (false, true) => FactBranch::Second,
        (false, false) => {
            let ap_w = ap_count_formula(n as u64, w) as u128;
            let detail: String = format!(
                "{mono} monochromatic AP_{k} (need > {ap_count}/{w}^3) and {last_class} in the last colour (need > {n}/{})",
                4 * w
            );
            return Err(if ap_w * 2 * w as u128 >= (n as u128) * (n as u128) {
                Error::FactViolation(detail)
            } else {
                invalid(format!(
                    "n = {n} is below the range of the counting argument ({ap_w} AP_{w}'s < n^2/(2W)); {detail}"
                ))
            });
        }
    };
    Ok(FactReport { branch, mono_count: mono, ap_count, last_class, w_verified: !trust_w })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact7 {
    pub holds: bool,
    /// When the premise holds: `f_r(2k) <= n`.
    pub implied_bound: Option<u64>,
}

/// `ex(n; C_3..C_{2k-1}) > r * ex(n; C_3..C_{2k})` implies `f_r(2k) <= n`.
pub fn fact7_premise(n: u64, r: u64, ex_low: u64, ex_high: u64) -> Fact7 {
    let holds = ex_low as u128 > r as u128 * ex_high as u128;
    Fact7 { holds, implied_bound: holds.then_some(n) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn all_last_colour() {
        let c = Colouring::constant(100, 3, 3);
        let rep = fact_vdw_check(&c, 3, 2, 9, true, &SearchBudget::UNLIMITED).unwrap();
        assert_eq!(rep.branch, FactBranch::Second);
        assert_eq!(rep.mono_count, 0);
    }

    #[test]
    fn constant_first_colour() {
        let c = Colouring::constant(100, 1, 3);
        let rep = fact_vdw_check(&c, 3, 2, 9, false, &SearchBudget::UNLIMITED).unwrap();
        assert_eq!(rep.branch, FactBranch::First);
        assert_eq!(rep.mono_count, rep.ap_count);
        assert!(rep.w_verified);
    }

    #[test]
    fn residues_mod_three() {
        let c = Colouring::new(3, (0..2000u32).map(|i| i % 3 + 1).collect()).unwrap();
        let rep = fact_vdw_check(&c, 3, 2, 9, false, &SearchBudget::UNLIMITED).unwrap();
        // Class sizes 667/667/666; each residue class holds many AP_3's.
        assert_eq!(rep.branch, FactBranch::Both);
    }

    #[test]
    fn wrong_w_rejected() {
        let c = Colouring::constant(50, 1, 3);
        assert!(fact_vdw_check(&c, 3, 2, 8, false, &SearchBudget::UNLIMITED).is_err());
    }

    #[test]
    fn below_threshold_is_refused() {
        // Alternating colours 1, 2 on [8]: no monochromatic AP_3 and no last colour.
        let cols: Vec<u32> = [1, 1, 2, 2, 1, 1, 2, 2].to_vec();
        let c = Colouring::new(3, cols).unwrap();
        match fact_vdw_check(&c, 3, 2, 9, true, &SearchBudget::UNLIMITED) {
            Err(Error::InvalidParameter(msg)) => assert!(msg.contains("below")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fact7_boundary() {
        assert!(!fact7_premise(5, 2, 10, 5).holds);
        let f = fact7_premise(5, 1, 6, 5);
        assert!(f.holds);
        assert_eq!(f.implied_bound, Some(5));
        assert!(fact7_premise(5, 1, 3, 7).implied_bound.is_none());
    }
}
