//! Concrete bounds on `f_r(k)`, the least order of a graph of girth `k`
//! arrowing `C_k` with `r` colours.

use alloc::string::String;
use alloc::format;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::lognum::LogNum;
use crate::combin::factorial;
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Moore-type vertex counts.
///
/// `Even`: `2 * sum_{i<k} (r-1)^i`, the least order of a graph with girth
/// `2k` and minimum degree `r`. `Odd`: `1 + 2^r * sum_{i=1}^{k-1} (2^r-1)^i`,
/// the count for girth `2k+1` and minimum degree `2^r`.
pub fn moore_lower_bound(parity: Parity, r: u64, k: u64) -> Result<BigUint> {
    if r < 1 || k < 1 {
        return Err(invalid("need r >= 1 and k >= 1"));
    }
    if r > 4096 || k > 4096 {
        return Err(invalid("parameters too large"));
    }
    Ok(match parity {
        Parity::Even => {
            let base = BigUint::from(r - 1);
            let mut sum = BigUint::zero();
            let mut term = BigUint::one();
            for _ in 0..k {
                sum += &term;
                term *= &base;
            }
            sum * 2u8
        }
        Parity::Odd => {
            let two_r = BigUint::one() << r as usize;
            let base = &two_r - 1u8;
            let mut sum = BigUint::zero();
            let mut term = base.clone();
            for _ in 1..k {
                sum += &term;
                term *= &base;
            }
            BigUint::one() + two_r * sum
        }
    })
}

/// Report on `f_r(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FBoundsReport {
    pub k: u64,
    pub r: u64,
    pub parity: Parity,
    #[serde(serialize_with = "ser_uint")]
    pub lower_bound: BigUint,
    /// `R(C_k; r)` used for the upper bound, if supplied.
    pub ramsey: Option<u64>,
    /// `k^(15k^3) R^(10k^2)`.
    pub upper_bound: Option<LogNum>,
    /// Known bounds on `R(C_k; r)` that feed the upper bound.
    pub ramsey_bounds: String,
    /// Asymptotic order of `f_r(k)` in `r` for `k` in {6, 8, 12}
    /// (no explicit constant).
    pub special_order: Option<String>,
}

fn ser_uint<S: serde::Serializer>(v: &BigUint, ser: S) -> core::result::Result<S::Ok, S::Error> {
    use alloc::string::ToString;
    ser.serialize_str(&v.to_string())
}

/// Assembles the lower bound (minimum degree argument), the upper bound from
/// `R = R(C_k; r)` when known, and the special-case orders.
///
/// For even `k = 2k'` an edge-minimal arrowing subgraph has minimum degree
/// above `r`, giving `moore(even, r+1, k')`; for odd `k = 2k'+1` the
/// chromatic number exceeds `2^r`, giving `moore(odd, r, k')`.
pub fn f_bound_report(k: u64, r: u64, ramsey: Option<u64>, prec: u32) -> Result<FBoundsReport> {
    if k < 3 {
        return Err(invalid("k must be at least 3"));
    }
    if r < 1 {
        return Err(invalid("r must be at least 1"));
    }
    let half = k / 2;
    let (parity, lower_bound, ramsey_bounds) = if k.is_multiple_of(2) {
        (
            Parity::Even,
            moore_lower_bound(Parity::Even, r + 1, half)?,
            format!("R(C_{k}; {r}) <= c * {r}^({half}/{}) for an unspecified constant c", half - 1),
        )
    } else {
        let lo = (BigUint::one() << r as usize) * half;
        let hi = factorial(r + 2) * k;
        (
            Parity::Odd,
            moore_lower_bound(Parity::Odd, r, half)?,
            format!("{lo} <= R(C_{k}; {r}) <= {hi}"),
        )
    };
    let upper_bound = match ramsey {
        Some(big_r) => {
            let kl = LogNum::from_u64(k, prec);
            let rl = LogNum::from_u64(big_r, prec);
            Some(kl.powi((15 * k * k * k) as i64)?.mul(&rl.powi((10 * k * k) as i64)?))
        }
        None => None,
    };
    let special_order = match k {
        6 => Some("O(r^6)".into()),
        8 => Some("O(r^12)".into()),
        12 => Some("O(r^30)".into()),
        _ => None,
    };
    Ok(FBoundsReport { k, r, parity, lower_bound, ramsey, upper_bound, ramsey_bounds, special_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::real::Real;

    #[test]
    fn moore_values() {
        assert_eq!(moore_lower_bound(Parity::Even, 3, 2).unwrap(), BigUint::from(6u8));
        assert_eq!(moore_lower_bound(Parity::Odd, 2, 2).unwrap(), BigUint::from(13u8));
        assert_eq!(moore_lower_bound(Parity::Even, 2, 1).unwrap(), BigUint::from(2u8));
        assert_eq!(moore_lower_bound(Parity::Odd, 1, 3).unwrap(), BigUint::from(5u8));
    }

    #[test]
    fn report_four_two() {
        let rep = f_bound_report(4, 2, Some(6), 128).unwrap();
        assert_eq!(rep.lower_bound, BigUint::from(6u8));
        let ub = rep.upper_bound.unwrap();
        let expect = Real::from_int(15 * 64 * 2, 128).add(&Real::log2_uint(&BigUint::from(6u8).pow(160), 128).unwrap());
        assert!(ub.log2().unwrap().sub(&expect).abs() < Real::from_raw(1.into(), 100));
    }

    #[test]
    fn report_odd_and_special() {
        let rep = f_bound_report(5, 2, None, 128).unwrap();
        assert_eq!(rep.parity, Parity::Odd);
        assert_eq!(rep.lower_bound, BigUint::from(13u8));
        assert_eq!(rep.ramsey_bounds, "8 <= R(C_5; 2) <= 120");
        assert_eq!(f_bound_report(6, 3, None, 128).unwrap().special_order.as_deref(), Some("O(r^6)"));
        assert!(f_bound_report(2, 2, None, 128).is_err());
    }
}
