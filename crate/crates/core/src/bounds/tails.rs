//! Probability bounds: the FKG girth bound, the container union bound and
//! the Chernoff lower tail.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::expectation::cycles_in_complete;
use super::lognum::{LogNum, Sign};
use super::real::{Real, GUARD};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FkgBound {
    /// `prod_{j=3}^{k-1} (1 - p^j)^(((j-1)!/2) C(n,j))`.
    pub product: LogNum,
    /// `exp(-E[X_{k-1}] / (1 - p^3))`, never larger than `product`.
    pub closed_form: LogNum,
    /// `E[X_{k-1}] = sum_{j=3}^{k-1} ((j-1)!/2) C(n,j) p^j`.
    pub expected_short_cycles: LogNum,
}

/// `log2(e) * x` as a log-space exponent: `e^x = 2^(x / ln 2)`.
fn exp_of(x: &Real, prec: u32) -> Result<LogNum> {
    let w = prec + GUARD;
    let log2 = x.with_prec(w).div(&Real::ln2(w))?.with_prec(prec);
    Ok(LogNum::from_log2(Sign::Positive, log2))
}

/// Lower bound on `P(girth(G(n,p)) >= k)` by positive correlation.
pub fn fkg_girth_bound(n: u64, p: &BigRational, k: u64, prec: u32) -> Result<FkgBound> {
    if *p < BigRational::zero() || *p > BigRational::one() {
        return Err(invalid("p must lie in [0, 1]"));
    }
    if k < 3 {
        return Err(invalid("k must be at least 3"));
    }
    let mut expected = BigRational::zero();
    for j in 3..k {
        expected += BigRational::from_integer(cycles_in_complete(n, j).into()) * num_traits::pow(p.clone(), j as usize);
    }
    let e_log = LogNum::from_ratio(&expected, prec);
    let has_cycles = (3..k).any(|j| !cycles_in_complete(n, j).is_zero());
    if p.is_zero() || !has_cycles {
        let one = LogNum::one(prec);
        return Ok(FkgBound { product: one.clone(), closed_form: one, expected_short_cycles: e_log });
    }
    if p.is_one() {
        let zero = LogNum::zero(prec);
        return Ok(FkgBound { product: zero.clone(), closed_form: zero, expected_short_cycles: e_log });
    }
    let w = prec + GUARD;
    let mut log2 = Real::zero(w);
    for j in 3..k {
        let c = cycles_in_complete(n, j);
        if c.is_zero() {
            continue;
        }
        let factor = BigRational::one() - num_traits::pow(p.clone(), j as usize);
        log2 = log2.add(&Real::log2_ratio(&factor, w)?.mul_int(&BigInt::from(c)));
    }
    let product = LogNum::from_log2(Sign::Positive, log2.with_prec(prec));
    let one_minus_p3 = BigRational::one() - num_traits::pow(p.clone(), 3);
    let exponent = Real::from_ratio(&(-expected / one_minus_p3), w);
    let closed_form = exp_of(&exponent, prec)?;
    Ok(FkgBound { product, closed_form, expected_short_cycles: e_log })
}

/// `(M+1) * (e N 2^(rs) p / M)^M` with `M = r s tauK N`, the bound on the sum
/// over container fingerprints. Errors when `M > 2^(rs) p N`, where the
/// unimodality step would not apply.
pub fn union_bound_sum(n: &LogNum, r: u64, s: &BigUint, tau_k: &LogNum, p: &LogNum) -> Result<LogNum> {
    let prec = n.precision().max(tau_k.precision()).max(p.precision());
    if !n.is_positive() || p.sign() == Sign::Negative || tau_k.sign() == Sign::Negative {
        return Err(invalid("N must be positive, p and tau*K non-negative"));
    }
    let rs = BigUint::from(r) * s;
    let two_rs = LogNum::pow2(BigInt::from(rs.clone()), prec);
    let m = LogNum::from_uint(&rs, prec).mul(tau_k).mul(n);
    let cap = two_rs.mul(p).mul(n);
    if m > cap {
        return Err(Error::DominanceViolated);
    }
    if m.is_zero() {
        return Ok(LogNum::one(prec));
    }
    let one = LogNum::one(prec);
    let e = LogNum::exp(&one)?;
    let base = e.mul(&cap).div(&m)?;
    let m_real = m.to_real()?;
    let base_log2 = base.log2().expect("positive").with_prec(prec + GUARD);
    let log2 = base_log2.mul(&m_real.with_prec(prec + GUARD)).with_prec(prec);
    Ok(m.add(&one).mul(&LogNum::from_log2(Sign::Positive, log2)))
}

/// `exp(-mu/8)`, valid for deviations `0 <= t <= mu/2` below the mean.
pub fn chernoff_tail(mu: &LogNum, t: &LogNum) -> Result<LogNum> {
    let prec = mu.precision().max(t.precision());
    if mu.sign() == Sign::Negative || t.sign() == Sign::Negative {
        return Err(invalid("mu and t must be non-negative"));
    }
    let half_mu = mu.mul(&LogNum::pow2(-1, prec));
    if *t > half_mu {
        return Err(Error::OutsideTailRegime);
    }
    if mu.is_zero() {
        return Ok(LogNum::one(prec));
    }
    let x = mu.to_real()?.neg().div(&Real::from_int(8, prec))?;
    exp_of(&x, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn fkg_single_factor() {
        let b = fkg_girth_bound(10, &q(1, 10), 4, P).unwrap();
        let expect = (1.0f64 - 1e-3).powi(120);
        assert!((b.product.to_f64() - expect).abs() < 1e-12);
        assert!(b.closed_form <= b.product);
        assert!(b.product <= LogNum::one(P));
    }

    #[test]
    fn fkg_degenerate_p() {
        let one = fkg_girth_bound(20, &q(0, 1), 5, P).unwrap();
        assert_eq!(one.product, LogNum::one(P));
        let zero = fkg_girth_bound(20, &q(1, 1), 5, P).unwrap();
        assert!(zero.product.is_zero());
        let tiny = fkg_girth_bound(20, &q(1, 1_000_000), 5, P).unwrap();
        assert!(tiny.product.to_f64() > 0.999_99);
    }

    #[test]
    fn union_bound_boundary() {
        // M = N 2^(rs) p exactly: result (M+1) e^M.
        let n = LogNum::from_u64(10, P);
        let s = BigUint::from(1u8);
        let p = LogNum::pow2(-3, P);
        // r s tauK N = 2^(rs) p N  <=>  tauK = 2^2 * 2^-3 / 2 = 1/4
        let tau_k = LogNum::pow2(-2, P);
        let v = union_bound_sum(&n, 2, &s, &tau_k, &p).unwrap();
        let m = 5.0f64;
        assert!((v.to_f64() - (m + 1.0) * m.exp()).abs() < 1e-9);
        let big = LogNum::pow2(0, P);
        assert_eq!(union_bound_sum(&n, 2, &s, &big, &p), Err(Error::DominanceViolated));
    }

    #[test]
    fn chernoff_cases() {
        let mu = LogNum::from_u64(64, P);
        let v = chernoff_tail(&mu, &LogNum::from_u64(32, P)).unwrap();
        assert!((v.to_f64() - (-8f64).exp()).abs() < 1e-15);
        assert_eq!(chernoff_tail(&mu, &LogNum::from_u64(33, P)), Err(Error::OutsideTailRegime));
        assert_eq!(chernoff_tail(&LogNum::zero(P), &LogNum::zero(P)).unwrap(), LogNum::one(P));
    }
}
