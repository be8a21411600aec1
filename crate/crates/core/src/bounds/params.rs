//! The constant chains behind the three constructions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::lognum::LogNum;
use super::real::Real;
use crate::combin::{binomial, factorial};
use crate::error::{invalid, Result};

/// Which construction a parameter chain belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Graphs of girth `k` arrowing `C_k`; size parameter `R = R(C_k; r)`.
    Cycles,
    /// AP_{k+1}-free sets arrowing `AP_k` with sparse progressions;
    /// size parameter `W = vdW(k, r)`.
    Ap,
    /// Graphs whose `K_k` system has girth `g` and which arrow `K_k`;
    /// size parameter `R = R(K_k; r)`.
    Cliques,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Cycles => "cycles",
            Theorem::Ap => "ap",
            Theorem::Cliques => "cliques",
        }
    }

    /// Exponent `a/b` with `p = D_p * n^(-a/b)`.
    pub fn p_exponent(self, k: u64) -> (u64, u64) {
        match self {
            Theorem::Cycles => (k - 2, k - 1),
            Theorem::Ap => (1, k - 1),
            Theorem::Cliques => (2, k + 1),
        }
    }

    /// Uniformity of the system of copies.
    pub fn uniformity(self, k: u64) -> u64 {
        match self {
            Theorem::Cliques => k * (k - 1) / 2,
            _ => k,
        }
    }

    /// Name of the size parameter (`R` or `W`).
    pub fn size_param_name(self) -> &'static str {
        match self {
            Theorem::Ap => "W",
            _ => "R",
        }
    }
}

impl core::str::FromStr for Theorem {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycles" => Ok(Theorem::Cycles),
            "ap" => Ok(Theorem::Ap),
            "cliques" => Ok(Theorem::Cliques),
            _ => Err(invalid(format!("unknown theorem {s:?} (expected cycles, ap or cliques)"))),
        }
    }
}

/// A constant with its log-space value and, when representable, its exact
/// rational value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantity {
    pub exact: Option<BigRational>,
    pub log: LogNum,
}

impl Quantity {
    fn exact(q: BigRational, prec: u32) -> Quantity {
        Quantity { log: LogNum::from_ratio(&q, prec), exact: Some(q) }
    }

    fn approx(log: LogNum) -> Quantity {
        Quantity { exact: None, log }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, ser: S) -> core::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Quantity", 2)?;
        st.serialize_field("exact", &self.exact.as_ref().map(ratio_string))?;
        st.serialize_field("log", &self.log)?;
        st.end()
    }
}

pub(crate) fn ratio_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// One inequality evaluated along the chain: `lhs < rhs` (or `<=`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub relation: &'static str,
    pub lhs: LogNum,
    pub rhs: LogNum,
    pub holds: bool,
}

impl Check {
    fn lt(name: &str, lhs: LogNum, rhs: LogNum) -> Check {
        Check { name: name.into(), relation: "<", holds: lhs < rhs, lhs, rhs }
    }

    fn le(name: &str, lhs: LogNum, rhs: LogNum) -> Check {
        Check { name: name.into(), relation: "<=", holds: lhs <= rhs, lhs, rhs }
    }
}

/// Inputs of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamInput {
    pub theorem: Theorem,
    pub k: u64,
    pub r: u64,
    /// Girth target; ignored for [`Theorem::Cycles`].
    pub g: u64,
    /// `R` for cycles and cliques, `W` for ap.
    pub size: u64,
    pub precision: u32,
}

/// The full derived chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamSet {
    pub input: ParamInput,
    pub eps: Quantity,
    pub d_tau: Quantity,
    #[serde(rename = "K", serialize_with = "ser_uint")]
    pub k_const: BigUint,
    #[serde(serialize_with = "ser_uint")]
    pub s: BigUint,
    pub d_p: Quantity,
    pub n: Quantity,
    pub tau: Quantity,
    pub p: Quantity,
    pub t: Option<Quantity>,
    /// Headline vertex-count bound of the construction.
    pub size_bound: LogNum,
    pub checks: Vec<Check>,
}

fn ser_uint<S: Serializer>(v: &BigUint, ser: S) -> core::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&v.to_string())
}

impl ParamSet {
    /// Warnings for every check that fails.
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `floor(K * log2(M))` for positive integers, provably exact: the logarithm
/// is bracketed and the precision doubled until both ends share a floor.
pub fn floor_mul_log2(k: &BigUint, m: &BigUint) -> Result<BigUint> {
    if m.is_zero() {
        return Err(invalid("log2 of zero"));
    }
    let bits = m.bits();
    if (m - BigUint::one()) & m == BigUint::zero() {
        return Ok(k * BigUint::from(bits - 1));
    }
    let kb = BigInt::from(k.clone());
    let mut prec = 128u32;
    loop {
        let l = Real::log2_uint(m, prec)?;
        let slack = Real::from_raw(BigInt::from(2), prec);
        let lo = l.sub(&slack).mul_int(&kb).floor();
        let hi = l.add(&slack).mul_int(&kb).floor();
        if lo == hi {
            return Ok(lo.to_biguint().expect("non-negative"));
        }
        if prec > 1 << 16 {
            return Err(invalid("log2 bracketing did not converge"));
        }
        prec *= 2;
    }
}

fn lu(v: u64, prec: u32) -> LogNum {
    LogNum::from_u64(v, prec)
}

fn lb(v: &BigUint, prec: u32) -> LogNum {
    LogNum::from_uint(v, prec)
}

/// `log2(v)` as a log-number (a double logarithm).
fn log2_of(v: &BigUint, prec: u32) -> Result<LogNum> {
    Ok(LogNum::from_real(&Real::log2_uint(v, prec)?))
}

fn validate(input: &ParamInput) -> Result<()> {
    let min_k = if input.theorem == Theorem::Cycles { 4 } else { 3 };
    if input.k < min_k {
        return Err(invalid(format!("k must be at least {min_k} for {}", input.theorem.name())));
    }
    if input.r < 2 {
        return Err(invalid("r must be at least 2"));
    }
    if input.theorem != Theorem::Cycles && input.g < 2 {
        return Err(invalid("g must be at least 2"));
    }
    if input.size < input.k {
        return Err(invalid(format!("{} must be at least k", input.theorem.size_param_name())));
    }
    if input.k > 64 || input.size > 1 << 32 || input.r > 1 << 20 || input.g > 1 << 16 {
        return Err(invalid("parameters too large to evaluate"));
    }
    if input.precision < 64 {
        return Err(invalid("precision must be at least 64 bits"));
    }
    Ok(())
}

/// Evaluates the constant chain.
pub fn derive_params(input: ParamInput) -> Result<ParamSet> {
    validate(&input)?;
    match input.theorem {
        Theorem::Cycles => cycles(input),
        Theorem::Ap => ap(input),
        Theorem::Cliques => cliques(input),
    }
}

fn ratio(n: BigUint, d: BigUint) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn half(prec: u32) -> LogNum {
    LogNum::pow2(-1, prec)
}

fn cycles(input: ParamInput) -> Result<ParamSet> {
    let ParamInput { k, r, size: big_r, precision: prec, .. } = input;
    let m = BigUint::from(r) * num_traits::pow(BigUint::from(big_r), k as usize);
    let eps = Quantity::exact(ratio(BigUint::one(), m.clone()), prec);
    // D_tau = 2^(2k) / eps^(1/(k-1))
    let d_tau = LogNum::pow2(2 * k, prec).mul(&lb(&m, prec).pow_ratio(1, k - 1)?);
    let kf = factorial(k);
    let k_const = BigUint::from(800u32) * k * &kf * &kf * &kf;
    let s = floor_mul_log2(&k_const, &m)?;
    let c = 10 * big_r * big_r * r;
    let d_p = lu(c * r, prec)
        .mul(&lb(&(&s * &s), prec))
        .mul(&lb(&k_const, prec))
        .mul(&d_tau)
        .mul(&log2_of(&BigUint::from(c), prec)?);
    let n = d_p.powi((k * k) as i64)?;
    let shrink = n.pow_ratio(-((k - 2) as i64), k - 1)?;
    let tau = d_tau.mul(&shrink);
    let p = d_p.mul(&shrink);
    let kl = lu(k, prec);
    let rl = lu(big_r, prec);
    let size_bound = kl.powi(15 * (k * k * k) as i64)?.mul(&rl.powi(10 * (k * k) as i64)?);
    let one = LogNum::one(prec);
    let checks = alloc::vec![
        Check::le("n <= size bound", n.clone(), size_bound.clone()),
        Check::lt("eps < 1/2", eps.log.clone(), half(prec)),
        Check::lt("tau < 1/2", tau.clone(), half(prec)),
        Check::le("p <= 1", p.clone(), one.clone()),
        Check::lt("K < 30 k^(3k)", lb(&k_const, prec), lu(30, prec).mul(&kl.powi((3 * k) as i64)?)),
        Check::lt("D_p < k^(15k) R^10", d_p.clone(), kl.powi((15 * k) as i64)?.mul(&rl.powi(10)?)),
        Check::lt(
            "4 R^2 k D_p^(k-1) < p (n-1)",
            lu(4 * big_r * big_r * k, prec).mul(&d_p.powi((k - 1) as i64)?),
            p.mul(&n.sub(&one)),
        ),
    ];
    Ok(ParamSet {
        input,
        eps,
        d_tau: Quantity::approx(d_tau),
        k_const,
        s,
        d_p: Quantity::approx(d_p),
        n: Quantity::approx(n),
        tau: Quantity::approx(tau),
        p: Quantity::approx(p),
        t: None,
        size_bound,
        checks,
    })
}

fn ap(input: ParamInput) -> Result<ParamSet> {
    let ParamInput { k, r, g, size: w, precision: prec, .. } = input;
    let m = BigUint::from(r) * BigUint::from(w).pow(3);
    let eps = Quantity::exact(ratio(BigUint::one(), m.clone()), prec);
    let kf = factorial(k);
    // D_tau = (6 k! 2^C(k,2) k^3 / eps)^(1/(k-1))
    let inner = BigUint::from(6u8) * &kf * (BigUint::one() << (k * (k - 1) / 2) as usize) * k.pow(3) * &m;
    let d_tau = lb(&inner, prec).pow_ratio(1, k - 1)?;
    let k_const = BigUint::from(800u32) * k * &kf * &kf * &kf;
    let s = floor_mul_log2(&k_const, &m)?;
    let c = 128 * w * r;
    let d_p = lu(128 * w * r * r, prec)
        .mul(&lb(&(&s * &s), prec))
        .mul(&lb(&k_const, prec))
        .mul(&d_tau)
        .mul(&log2_of(&BigUint::from(c), prec)?);
    let kl = lu(k, prec);
    let wl = lu(w, prec);
    let n = kl.powi((4 * g) as i64)?.mul(&d_p.powi((2 * k * (k + g)) as i64)?);
    let shrink = n.pow_ratio(-1, k - 1)?;
    let tau = d_tau.mul(&shrink);
    let p = d_p.mul(&shrink);
    let t = p.mul(&n).div(&lu(8 * w, prec))?;
    let size_bound = kl.powi((40 * k * k * (k + g)) as i64)?.mul(&wl.powi((12 * k * (k + g)) as i64)?);
    let checks = alloc::vec![
        Check::le("n <= size bound", n.clone(), size_bound.clone()),
        Check::lt("eps < 1/2", eps.log.clone(), half(prec)),
        Check::lt("tau < 1/2", tau.clone(), half(prec)),
        Check::le("p <= 1", p.clone(), LogNum::one(prec)),
        Check::lt("K < 30 k^(3k)", lb(&k_const, prec), lu(30, prec).mul(&kl.powi((3 * k) as i64)?)),
        Check::lt(
            "D_p < 2^40 k^(10k) r^3 W^3",
            d_p.clone(),
            LogNum::pow2(40, prec).mul(&kl.powi((10 * k) as i64)?).mul(&lu(r, prec).powi(3)?).mul(&wl.powi(3)?),
        ),
    ];
    Ok(ParamSet {
        input,
        eps,
        d_tau: Quantity::approx(d_tau),
        k_const,
        s,
        d_p: Quantity::approx(d_p),
        n: Quantity::approx(n),
        tau: Quantity::approx(tau),
        p: Quantity::approx(p),
        t: Some(Quantity::approx(t)),
        size_bound,
        checks,
    })
}

fn cliques(input: ParamInput) -> Result<ParamSet> {
    let ParamInput { k, r, g, size: big_r, precision: prec, .. } = input;
    let h = k * (k - 1) / 2;
    let m = BigUint::from(2 * r) * binomial(big_r, k);
    let eps = Quantity::exact(ratio(BigUint::one(), m.clone()), prec);
    let hf = factorial(h);
    // D_tau = (6 h! 2^C(h,2) h k^k / eps)^(10/k^2)
    let inner = BigUint::from(6u8)
        * &hf
        * (BigUint::one() << (h * (h - 1) / 2) as usize)
        * h
        * BigUint::from(k).pow(k as u32)
        * &m;
    let d_tau = lb(&inner, prec).pow_ratio(10, k * k)?;
    let k_const = BigUint::from(800u32) * h * &hf * &hf * &hf;
    let s = floor_mul_log2(&k_const, &m)?;
    let c = 50 * big_r * big_r * r;
    let d_p = lu(c * r, prec)
        .mul(&lb(&(&s * &s), prec))
        .mul(&lb(&k_const, prec))
        .mul(&d_tau)
        .mul(&log2_of(&BigUint::from(c), prec)?);
    let n = d_p.powi((k * k * (5 + g)) as i64)?;
    let shrink = n.pow_ratio(-2, k + 1)?;
    let tau = d_tau.mul(&shrink);
    let p = d_p.mul(&shrink);
    let one = LogNum::one(prec);
    let pairs = n.mul(&n.sub(&one)).div(&lu(2, prec))?;
    let t = p.div(&lu(2 * big_r * big_r, prec))?.mul(&pairs);
    let kl = lu(k, prec);
    let rl = lu(big_r, prec);
    let size_bound = kl.powi((40 * g * k.pow(4)) as i64)?.mul(&rl.powi((40 * g * k * k) as i64)?);
    let checks = alloc::vec![
        Check::le("n <= size bound", n.clone(), size_bound.clone()),
        Check::lt("eps < 1/2", eps.log.clone(), half(prec)),
        Check::lt("tau < 1/2", tau.clone(), half(prec)),
        Check::le("p <= 1", p.clone(), one),
        Check::lt(
            "D_tau < 2^(3k^2/2) k^20 R^(20/k)",
            d_tau.clone(),
            LogNum::pow2(1, prec)
                .pow_ratio((3 * k * k) as i64, 2)?
                .mul(&kl.powi(20)?)
                .mul(&rl.pow_ratio(20, k)?),
        ),
        Check::lt(
            "D_p < k^(10k^2+30) R^(5+20/k)",
            d_p.clone(),
            kl.powi((10 * k * k + 30) as i64)?.mul(&rl.pow_ratio((5 * k + 20) as i64, k)?),
        ),
    ];
    Ok(ParamSet {
        input,
        eps,
        d_tau: Quantity::approx(d_tau),
        k_const,
        s,
        d_p: Quantity::approx(d_p),
        n: Quantity::approx(n),
        tau: Quantity::approx(tau),
        p: Quantity::approx(p),
        t: Some(Quantity::approx(t)),
        size_bound,
        checks,
    })
}
