//! The degree hypothesis of the hypergraph container lemma.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::lognum::LogNum;
use super::params::{derive_params, ParamInput, ParamSet, Theorem};
use crate::combin::factorial;
use crate::error::{invalid, Error, Result};
use crate::hypergraph::DegreeStats;

/// Average degrees `d_1..d_h` (exact averages or analytic bounds).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub h: usize,
    /// `d[j-1]` is `d_j`.
    pub d: Vec<LogNum>,
}

impl DegreeProfile {
    pub fn from_stats(stats: &DegreeStats, prec: u32) -> DegreeProfile {
        DegreeProfile { h: stats.h, d: stats.avg.iter().map(|q| LogNum::from_ratio(q, prec)).collect() }
    }

    /// The bounds used for the full systems at the chain's `n`: a lower bound
    /// on `d_1` and upper bounds on `d_j` for `j >= 2`.
    pub fn analytic(ps: &ParamSet) -> Result<DegreeProfile> {
        let k = ps.input.k;
        let prec = ps.input.precision;
        let n = &ps.n.log;
        let kk = LogNum::from_uint(&BigUint::from(k).pow(k as u32), prec);
        let d = match ps.input.theorem {
            Theorem::Cycles => {
                // d_1 >= (k!/k^k) n^(k-2), d_j <= n^(k-j-1), d_k = 1
                let mut d = Vec::with_capacity(k as usize);
                d.push(LogNum::from_uint(&factorial(k), prec).div(&kk)?.mul(&n.powi(k as i64 - 2)?));
                for j in 2..k {
                    d.push(n.powi((k - j - 1) as i64)?);
                }
                d.push(LogNum::one(prec));
                d
            }
            Theorem::Ap => {
                // d_1 >= n/2, d_j <= C(k,2)
                let mut d = Vec::with_capacity(k as usize);
                d.push(n.div(&LogNum::from_u64(2, prec))?);
                for _ in 2..=k {
                    d.push(LogNum::from_u64(k * (k - 1) / 2, prec));
                }
                d
            }
            Theorem::Cliques => {
                // d_1 >= n^(k-2)/k^k, d_j <= n^(k - k_j) with k_j the least
                // integer such that j <= C(k_j, 2)
                let h = k * (k - 1) / 2;
                let mut d = Vec::with_capacity(h as usize);
                d.push(n.powi(k as i64 - 2)?.div(&kk)?);
                let mut kj = 2u64;
                for j in 2..=h {
                    while kj * (kj - 1) / 2 < j {
                        kj += 1;
                    }
                    d.push(n.powi((k - kj) as i64)?);
                }
                d
            }
        };
        Ok(DegreeProfile { h: d.len(), d })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainerVerdict {
    pub satisfied: bool,
    pub lhs: LogNum,
    /// `eps / lhs`; at least one iff satisfied.
    pub margin: LogNum,
    pub precision: u32,
}

fn in_open_half(x: &LogNum) -> bool {
    x.is_positive() && *x < LogNum::pow2(-1, x.precision())
}

/// Evaluates `(6 h! 2^C(h,2) / d_1) * sum_{j=2..h} d_j / (2^C(j-1,2) tau^(j-1))`
/// and compares it with `eps`.
pub fn container_condition(profile: &DegreeProfile, tau: &LogNum, eps: &LogNum) -> Result<ContainerVerdict> {
    if !in_open_half(tau) || !in_open_half(eps) {
        return Err(invalid("tau and eps must lie in (0, 1/2)"));
    }
    let h = profile.h as u64;
    if profile.d.len() != profile.h || h < 1 {
        return Err(invalid("degree profile must list d_1..d_h"));
    }
    let prec = tau.precision().max(eps.precision());
    let d1 = &profile.d[0];
    if d1.is_zero() {
        return Err(Error::NoEdges);
    }
    let mut sum = LogNum::zero(prec);
    for j in 2..=h {
        let dj = &profile.d[j as usize - 1];
        let c = (j - 1) * (j - 2) / 2;
        let denom = LogNum::pow2(c, prec).mul(&tau.powi(j as i64 - 1)?);
        sum = sum.add(&dj.div(&denom)?);
    }
    let front = LogNum::from_uint(&(BigUint::from(6u8) * factorial(h)), prec)
        .mul(&LogNum::pow2(h * h.saturating_sub(1) / 2, prec))
        .div(d1)?;
    let lhs = front.mul(&sum);
    let satisfied = lhs <= *eps;
    let margin = if lhs.is_zero() { LogNum::pow2(1i64 << 40, prec) } else { eps.div(&lhs)? };
    Ok(ContainerVerdict { satisfied, lhs, margin, precision: prec })
}

/// A verdict that agreed at two consecutive precisions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableVerdict {
    pub verdict: ContainerVerdict,
    pub precisions: Vec<u32>,
}

/// Doubles the precision until two consecutive verdicts agree.
pub fn stable_verdict(
    start: u32,
    mut eval: impl FnMut(u32) -> Result<ContainerVerdict>,
) -> Result<StableVerdict> {
    let mut prec = start.max(64);
    let mut prev = eval(prec)?;
    let mut precisions = alloc::vec![prec];
    loop {
        prec = prec.checked_mul(2).filter(|&p| p <= 8192).ok_or_else(|| invalid("verdict unstable up to 8192 bits"))?;
        let next = eval(prec)?;
        precisions.push(prec);
        if next.satisfied == prev.satisfied {
            return Ok(StableVerdict { verdict: next, precisions });
        }
        prev = next;
    }
}

/// Analytic check at the chain's constants, with `eps` divided by
/// `eps_divisor`.
pub fn analytic_container_check(input: ParamInput, eps_divisor: &BigUint) -> Result<StableVerdict> {
    if eps_divisor.is_zero() {
        return Err(invalid("eps divisor must be positive"));
    }
    stable_verdict(input.precision, |prec| {
        let ps = derive_params(ParamInput { precision: prec, ..input })?;
        let profile = DegreeProfile::analytic(&ps)?;
        let eps = ps.eps.log.div(&LogNum::from_uint(eps_divisor, prec))?;
        container_condition(&profile, &ps.tau.log, &eps)
    })
}

/// Check on measured degree statistics with exact `tau` and `eps`.
pub fn empirical_container_check(
    stats: &DegreeStats,
    tau: &BigRational,
    eps: &BigRational,
    start_prec: u32,
) -> Result<StableVerdict> {
    stable_verdict(start_prec, |prec| {
        let profile = DegreeProfile::from_stats(stats, prec);
        container_condition(&profile, &LogNum::from_ratio(tau, prec), &LogNum::from_ratio(eps, prec))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::hypergraph::{ap_system, degree_stats};

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn cycles_input() -> ParamInput {
        ParamInput { theorem: Theorem::Cycles, k: 4, r: 2, g: 0, size: 6, precision: 96 }
    }

    #[test]
    fn analytic_cycles_satisfied_and_flips() {
        let ok = analytic_container_check(cycles_input(), &BigUint::one()).unwrap();
        assert!(ok.verdict.satisfied);
        assert!(ok.verdict.margin > LogNum::one(192));
        let bad = analytic_container_check(cycles_input(), &BigUint::from(1_000_000u32)).unwrap();
        assert!(!bad.verdict.satisfied);
    }

    #[test]
    fn rejects_out_of_range() {
        let p = DegreeProfile { h: 2, d: alloc::vec![LogNum::one(96), LogNum::one(96)] };
        let half = LogNum::pow2(-1, 96);
        assert!(container_condition(&p, &half, &LogNum::pow2(-3, 96)).is_err());
        let zero = DegreeProfile { h: 2, d: alloc::vec![LogNum::zero(96), LogNum::one(96)] };
        let t = LogNum::pow2(-2, 96);
        assert_eq!(container_condition(&zero, &t, &t), Err(Error::NoEdges));
    }

    #[test]
    fn empirical_matches_float_oracle() {
        let hg = ap_system(100, 3).unwrap();
        let stats = degree_stats(&hg).unwrap();
        let tau = q(49, 100);
        let eps = q(49, 100);
        let v = empirical_container_check(&stats, &tau, &eps, 96).unwrap();
        // f64 oracle for the same expression
        let d: Vec<f64> = stats.avg.iter().map(|x| {
            use num_traits::ToPrimitive;
            x.to_f64().unwrap()
        }).collect();
        let h = 3.0f64;
        let mut s = 0.0;
        for j in 2..=3 {
            let c = ((j - 1) * (j - 2) / 2) as i32;
            s += d[j - 1] / (2f64.powi(c) * 0.49f64.powi(j as i32 - 1));
        }
        let lhs = 6.0 * 6.0 * 2f64.powf(h * (h - 1.0) / 2.0) / d[0] * s;
        assert!((v.verdict.lhs.to_f64() - lhs).abs() < 1e-9 * lhs);
        assert_eq!(v.verdict.satisfied, lhs <= 0.49);
    }
}
