//! First-moment formulas for short cycles.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lognum::LogNum;
use crate::combin::{binomial, factorial};
use crate::error::{invalid, Result};

/// Which random object the cycles live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleKind {
    /// Graph cycles of `G(n, p)`.
    Graph,
    /// Hypergraph cycles of the AP_k system of `[n]_p`.
    Ap,
    /// Hypergraph cycles of the K_k system of `G(n, p)`.
    Clique,
}

/// Whether a value is the expectation itself or an upper bound on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Nature {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleExpectation {
    pub j: u64,
    pub nature: Nature,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub exact: Option<BigRational>,
    pub value: LogNum,
}

fn ser_opt_ratio<S: serde::Serializer>(v: &Option<BigRational>, ser: S) -> core::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => ser.serialize_some(&super::params::ratio_string(q)),
        None => ser.serialize_none(),
    }
}

/// `((j-1)!/2) * C(n, j)`: the number of `j`-cycles in `K_n`.
pub fn cycles_in_complete(n: u64, j: u64) -> BigUint {
    if j < 3 || j > n {
        return BigUint::zero();
    }
    factorial(j - 1) * binomial(n, j) / 2u8
}

fn upow(n: u64, e: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(BigUint::from(n).pow(e as u32)))
}

fn rpow(p: &BigRational, e: u64) -> BigRational {
    num_traits::pow(p.clone(), e as usize)
}

fn check_p(p: &BigRational) -> Result<()> {
    if *p < BigRational::zero() || *p > BigRational::one() {
        return Err(invalid("p must lie in [0, 1]"));
    }
    Ok(())
}

fn c2(k: u64) -> u64 {
    k * (k.saturating_sub(1)) / 2
}

/// Exact rational evaluation for moderate `n`.
///
/// `graph`: `E[X_j] = ((j-1)!/2) C(n,j) p^j` for `3 <= j < k` (exact).
/// `ap`: `X_2 <= C(n,2) C(k,2)^2 p^(k+1)`, `X_j <= n^j k^(2j) p^((k-1)j)` for
/// `3 <= j < g`. `clique`: `X_2 <= sum_{i=3}^{k-1} n^(2k-i) p^(2C(k,2)-C(i,2))`,
/// `X_j <= n^(kj-2j) p^(C(k,2)j-j)` for `3 <= j < g`.
pub fn expected_short_cycle_counts(
    kind: CycleKind,
    n: u64,
    p: &BigRational,
    k: u64,
    g: u64,
    prec: u32,
) -> Result<Vec<CycleExpectation>> {
    check_p(p)?;
    if k < 3 {
        return Err(invalid("k must be at least 3"));
    }
    if n > 1 << 20 || k > 64 || g > 64 {
        return Err(invalid("use the log-space evaluator for parameters this large"));
    }
    let mut out = Vec::new();
    let mut push = |j: u64, nature: Nature, q: BigRational| {
        out.push(CycleExpectation { j, nature, value: LogNum::from_ratio(&q, prec), exact: Some(q) });
    };
    match kind {
        CycleKind::Graph => {
            for j in 3..k {
                let c = BigRational::from_integer(cycles_in_complete(n, j).into());
                push(j, Nature::Exact, c * rpow(p, j));
            }
        }
        CycleKind::Ap => {
            if g > 2 {
                let x2 = BigRational::from_integer(binomial(n, 2).into())
                    * upow(c2(k), 2)
                    * rpow(p, k + 1);
                push(2, Nature::UpperBound, x2);
            }
            for j in 3..g {
                push(j, Nature::UpperBound, upow(n, j) * upow(k, 2 * j) * rpow(p, (k - 1) * j));
            }
        }
        CycleKind::Clique => {
            if g > 2 {
                let mut x2 = BigRational::zero();
                for i in 3..k {
                    x2 += upow(n, 2 * k - i) * rpow(p, 2 * c2(k) - c2(i));
                }
                push(2, Nature::UpperBound, x2);
            }
            for j in 3..g {
                push(j, Nature::UpperBound, upow(n, k * j - 2 * j) * rpow(p, c2(k) * j - j));
            }
        }
    }
    Ok(out)
}

/// The same formulas with `n` and `p` in log space (for chain-scale values).
pub fn expected_short_cycle_counts_log(
    kind: CycleKind,
    n: &LogNum,
    p: &LogNum,
    k: u64,
    g: u64,
) -> Result<Vec<CycleExpectation>> {
    if !n.is_positive() || p.sign() == super::lognum::Sign::Negative || *p > LogNum::one(p.precision()) {
        return Err(invalid("n must be positive and p in [0, 1]"));
    }
    if k < 3 {
        return Err(invalid("k must be at least 3"));
    }
    let prec = n.precision().max(p.precision());
    let one = LogNum::one(prec);
    let lu = |v: u64| LogNum::from_u64(v, prec);
    let mut out = Vec::new();
    let mut push = |j: u64, nature: Nature, value: LogNum| out.push(CycleExpectation { j, nature, exact: None, value });
    match kind {
        CycleKind::Graph => {
            for j in 3..k {
                // C(n, j) = prod_{i<j} (n - i) / j!
                let mut c = one.clone();
                for i in 0..j {
                    c = c.mul(&n.sub(&lu(i)).abs());
                }
                let c = c.div(&LogNum::from_uint(&(factorial(j) * 2u8), prec))?.mul(&LogNum::from_uint(&factorial(j - 1), prec));
                push(j, Nature::Exact, c.mul(&p.powi(j as i64)?));
            }
        }
        CycleKind::Ap => {
            if g > 2 {
                let pairs = n.mul(&n.sub(&one)).div(&lu(2))?;
                push(2, Nature::UpperBound, pairs.mul(&lu(c2(k)).powi(2)?).mul(&p.powi(k as i64 + 1)?));
            }
            for j in 3..g {
                let v = n.powi(j as i64)?.mul(&lu(k).powi(2 * j as i64)?).mul(&p.powi(((k - 1) * j) as i64)?);
                push(j, Nature::UpperBound, v);
            }
        }
        CycleKind::Clique => {
            if g > 2 {
                let mut x2 = LogNum::zero(prec);
                for i in 3..k {
                    x2 = x2.add(&n.powi((2 * k - i) as i64)?.mul(&p.powi((2 * c2(k) - c2(i)) as i64)?));
                }
                push(2, Nature::UpperBound, x2);
            }
            for j in 3..g {
                push(j, Nature::UpperBound, n.powi((k * j - 2 * j) as i64)?.mul(&p.powi((c2(k) * j - j) as i64)?));
            }
        }
    }
    Ok(out)
}

/// Sum of the listed values (e.g. `E[X_{k-1}]` for the graph kind).
pub fn total(list: &[CycleExpectation], prec: u32) -> LogNum {
    list.iter().fold(LogNum::zero(prec), |acc, e| acc.add(&e.value))
}
