//! Signed numbers stored as a sign and the binary logarithm of the magnitude.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::real::{decimal_digits, Real, GUARD};
use crate::error::{Error, Result};

/// Default fractional bits of the stored logarithm.
pub const DEFAULT_PRECISION: u32 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// `sign * 2^log2`. Products and powers only touch the logarithm; sums
/// use log-sum-exp with a relative error below `2^-(prec-2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogNum {
    sign: Sign,
    log2: Real,
}

impl LogNum {
    pub fn zero(prec: u32) -> LogNum {
        LogNum { sign: Sign::Zero, log2: Real::zero(prec) }
    }

    pub fn one(prec: u32) -> LogNum {
        LogNum { sign: Sign::Positive, log2: Real::zero(prec) }
    }

    /// `2^e`, exactly.
    pub fn pow2(e: impl Into<BigInt>, prec: u32) -> LogNum {
        LogNum { sign: Sign::Positive, log2: Real::from_int(e, prec) }
    }

    /// `sign * 2^log2`; a zero sign ignores `log2`.
    pub fn from_log2(sign: Sign, log2: Real) -> LogNum {
        match sign {
            Sign::Zero => LogNum::zero(log2.precision()),
            _ => LogNum { sign, log2 },
        }
    }

    pub fn from_uint(v: &BigUint, prec: u32) -> LogNum {
        if v.is_zero() {
            return LogNum::zero(prec);
        }
        let log2 = Real::log2_uint(v, prec).expect("positive");
        LogNum { sign: Sign::Positive, log2 }
    }

    pub fn from_u64(v: u64, prec: u32) -> LogNum {
        Self::from_uint(&BigUint::from(v), prec)
    }

    pub fn from_int(v: &BigInt, prec: u32) -> LogNum {
        let mag = Self::from_uint(v.magnitude(), prec);
        if v.is_negative() {
            mag.neg()
        } else {
            mag
        }
    }

    pub fn from_ratio(q: &BigRational, prec: u32) -> LogNum {
        if q.is_zero() {
            return LogNum::zero(prec);
        }
        let log2 = Real::log2_ratio(&q.abs(), prec).expect("positive");
        let sign = if q.is_negative() { Sign::Negative } else { Sign::Positive };
        LogNum { sign, log2 }
    }

    pub fn from_real(x: &Real) -> LogNum {
        if x.is_zero() {
            return LogNum::zero(x.precision());
        }
        let log2 = x.abs().log2().expect("positive");
        let sign = if x.is_negative() { Sign::Negative } else { Sign::Positive };
        LogNum { sign, log2 }
    }

    /// Exact value of a finite `f64`, rounded into log space.
    pub fn from_f64(x: f64, prec: u32) -> Result<LogNum> {
        let q = BigRational::from_float(x)
            .ok_or_else(|| Error::InvalidParameter("non-finite number".into()))?;
        Ok(Self::from_ratio(&q, prec))
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Binary logarithm of the magnitude; `None` for zero.
    pub fn log2(&self) -> Option<&Real> {
        match self.sign {
            Sign::Zero => None,
            _ => Some(&self.log2),
        }
    }

    pub fn precision(&self) -> u32 {
        self.log2.precision()
    }

    pub fn with_prec(&self, prec: u32) -> LogNum {
        LogNum { sign: self.sign, log2: self.log2.with_prec(prec) }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn neg(&self) -> LogNum {
        LogNum { sign: self.sign.flip(), log2: self.log2.clone() }
    }

    pub fn abs(&self) -> LogNum {
        match self.sign {
            Sign::Negative => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn mul(&self, other: &LogNum) -> LogNum {
        let sign = self.sign.times(other.sign);
        if sign == Sign::Zero {
            return LogNum::zero(self.precision().max(other.precision()));
        }
        LogNum { sign, log2: self.log2.add(&other.log2) }
    }

    pub fn div(&self, other: &LogNum) -> Result<LogNum> {
        if other.is_zero() {
            return Err(Error::InvalidParameter("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LogNum::zero(self.precision().max(other.precision())));
        }
        Ok(LogNum { sign: self.sign.times(other.sign), log2: self.log2.sub(&other.log2) })
    }

    pub fn recip(&self) -> Result<LogNum> {
        LogNum::one(self.precision()).div(self)
    }

    /// `self^e` for an integer exponent.
    pub fn powi(&self, e: i64) -> Result<LogNum> {
        if e == 0 {
            return Ok(LogNum::one(self.precision()));
        }
        if self.is_zero() {
            return if e > 0 {
                Ok(self.clone())
            } else {
                Err(Error::InvalidParameter("zero to a negative power".into()))
            };
        }
        let sign = if self.sign == Sign::Negative && e % 2 != 0 { Sign::Negative } else { Sign::Positive };
        Ok(LogNum { sign, log2: self.log2.mul_int(&BigInt::from(e)) })
    }

    /// `self^e` for a big non-negative integer exponent.
    pub fn pow_uint(&self, e: &BigUint) -> LogNum {
        if e.is_zero() {
            return LogNum::one(self.precision());
        }
        if self.is_zero() {
            return self.clone();
        }
        let odd = e.bit(0);
        let sign = if self.sign == Sign::Negative && odd { Sign::Negative } else { Sign::Positive };
        LogNum { sign, log2: self.log2.mul_int(&BigInt::from(e.clone())) }
    }

    /// `self^(num/den)` for a non-negative base.
    pub fn pow_ratio(&self, num: i64, den: u64) -> Result<LogNum> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator in exponent".into()));
        }
        self.pow_real(&Real::from_ratio(&BigRational::new(num.into(), den.into()), self.precision() + GUARD))
    }

    /// `self^e` for a non-negative base and real exponent.
    pub fn pow_real(&self, e: &Real) -> Result<LogNum> {
        match self.sign {
            Sign::Negative => Err(Error::InvalidParameter("real power of a negative number".into())),
            Sign::Zero if e.is_positive() => Ok(self.clone()),
            Sign::Zero if e.is_zero() => Ok(LogNum::one(self.precision())),
            Sign::Zero => Err(Error::InvalidParameter("zero to a negative power".into())),
            Sign::Positive => {
                let p = self.precision();
                Ok(LogNum { sign: Sign::Positive, log2: self.log2.with_prec(p + GUARD).mul(e).with_prec(p) })
            }
        }
    }

    /// `log2(1 + 2^-d)` or `log2(1 - 2^-d)` for `d >= 0`.
    fn log2_one_pm(d: &Real, plus: bool, prec: u32) -> Result<Real> {
        let w = prec + GUARD;
        if d > &Real::from_int(w as u64 + 2, prec) {
            // The correction is below 2^-w.
            return Ok(Real::zero(prec));
        }
        let t = d.neg().with_prec(w).exp2()?;
        let one = Real::from_int(1, w);
        let u = if plus { one.add(&t) } else { one.sub(&t) };
        Ok(u.log2()?.with_prec(prec))
    }

    pub fn add(&self, other: &LogNum) -> LogNum {
        let prec = self.precision().max(other.precision());
        if other.is_zero() {
            return self.with_prec(prec);
        }
        if self.is_zero() {
            return other.with_prec(prec);
        }
        let (big, small) = if self.log2 >= other.log2 { (self, other) } else { (other, self) };
        let d = big.log2.sub(&small.log2);
        let same = self.sign == other.sign;
        if !same && d.is_zero() {
            return LogNum::zero(prec);
        }
        let corr = Self::log2_one_pm(&d.with_prec(prec), same, prec).expect("bounded argument");
        LogNum { sign: big.sign, log2: big.log2.add(&corr).with_prec(prec) }
    }

    pub fn sub(&self, other: &LogNum) -> LogNum {
        self.add(&other.neg())
    }

    /// The value as a fixed-point real at the same precision.
    pub fn to_real(&self) -> Result<Real> {
        let p = self.precision();
        match self.sign {
            Sign::Zero => Ok(Real::zero(p)),
            s => {
                let m = self.log2.exp2()?;
                Ok(if s == Sign::Negative { m.neg() } else { m })
            }
        }
    }

    /// Nearest `f64`, saturating to `±inf` or `0`.
    pub fn to_f64(&self) -> f64 {
        let mag = match self.sign {
            Sign::Zero => return 0.0,
            _ => {
                let l = self.log2.to_f64();
                if l > 1100.0 {
                    f64::INFINITY
                } else if l < -1100.0 {
                    0.0
                } else {
                    // Split into integer and fractional parts to keep the
                    // fractional power accurate.
                    let i = self.log2.floor();
                    let f = self.log2.sub(&Real::from_int(i.clone(), self.precision()));
                    let frac = f.exp2().map(|r| r.to_f64()).unwrap_or(1.0);
                    let i: i64 = num_traits::ToPrimitive::to_i64(&i).unwrap_or(0);
                    frac * super::real::pow2_f64(i)
                }
            }
        };
        if self.sign == Sign::Negative {
            -mag
        } else {
            mag
        }
    }

    /// `e^x` for a real exponent given as a log-number.
    pub fn exp(x: &LogNum) -> Result<LogNum> {
        let p = x.precision();
        let v = x.to_real()?.with_prec(p + GUARD);
        let log2 = v.div(&Real::ln2(p + GUARD))?.with_prec(p);
        Ok(LogNum { sign: Sign::Positive, log2 })
    }

    /// Natural logarithm of a positive value, as a log-number.
    pub fn ln(&self) -> Result<LogNum> {
        if self.sign != Sign::Positive {
            return Err(Error::InvalidParameter("ln of a non-positive number".into()));
        }
        let p = self.precision();
        Ok(LogNum::from_real(&self.log2.with_prec(p + GUARD).mul(&Real::ln2(p + GUARD)).with_prec(p)))
    }

    /// Floor of the stored approximation. An exact integer whose logarithm
    /// was rounded down may come out one lower.
    pub fn floor(&self) -> Result<BigInt> {
        Ok(self.to_real()?.floor())
    }

    /// Wire form: `{"sign": s, "log2": "<decimal>"}`, `"-inf"` for zero.
    pub fn log2_string(&self) -> String {
        match self.sign {
            Sign::Zero => "-inf".to_string(),
            _ => self.log2.to_decimal(decimal_digits(self.precision())),
        }
    }
}

impl PartialOrd for LogNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LogNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                Sign::Zero => Ordering::Equal,
                Sign::Positive => self.log2.cmp(&other.log2),
                Sign::Negative => other.log2.cmp(&self.log2),
            },
            o => o,
        }
    }
}

impl fmt::Display for LogNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(6);
        match self.sign {
            Sign::Zero => f.write_str("0"),
            s => {
                let v = self.to_f64();
                if v.is_finite() && v != 0.0 && (1e-6..1e15).contains(&v.abs()) {
                    write!(f, "{v:.digits$}")
                } else {
                    let m = if s == Sign::Negative { "-" } else { "" };
                    write!(f, "{m}2^{}", self.log2.to_decimal(digits))
                }
            }
        }
    }
}

impl Serialize for LogNum {
    fn serialize<S: Serializer>(&self, ser: S) -> core::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("LogNum", 2)?;
        st.serialize_field("sign", &self.sign.as_i8())?;
        st.serialize_field("log2", &self.log2_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LogNum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> core::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            sign: i8,
            log2: String,
        }
        let w = Wire::deserialize(de)?;
        let sign = match w.sign {
            -1 => Sign::Negative,
            0 => return Ok(LogNum::zero(DEFAULT_PRECISION)),
            1 => Sign::Positive,
            _ => return Err(de::Error::custom("sign must be -1, 0 or 1")),
        };
        let log2 = Real::parse_decimal(&w.log2, DEFAULT_PRECISION).map_err(de::Error::custom)?;
        Ok(LogNum { sign, log2 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = DEFAULT_PRECISION;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn rel_close(a: &LogNum, b: &BigRational, bits: u32) -> bool {
        let exact = LogNum::from_ratio(b, P);
        if exact.is_zero() {
            return a.is_zero();
        }
        let d = a.sub(&exact).abs();
        let bound = exact.abs().mul(&LogNum::pow2(-(bits as i64), P));
        d <= bound
    }

    #[test]
    fn products_and_quotients() {
        let a = LogNum::from_u64(12, P);
        let b = LogNum::from_u64(5, P);
        assert!(rel_close(&a.mul(&b), &q(60, 1), 120));
        assert!(rel_close(&a.div(&b).unwrap(), &q(12, 5), 120));
        assert!(rel_close(&a.neg().mul(&b), &q(-60, 1), 120));
        assert!(a.div(&LogNum::zero(P)).is_err());
    }

    #[test]
    fn sums_and_cancellation() {
        let a = LogNum::from_u64(1000, P);
        let b = LogNum::from_u64(7, P);
        assert!(rel_close(&a.add(&b), &q(1007, 1), 120));
        assert!(rel_close(&a.sub(&b), &q(993, 1), 120));
        assert!(rel_close(&b.sub(&a), &q(-993, 1), 120));
        assert!(a.sub(&a).is_zero());
        let tiny = LogNum::pow2(-1000, P);
        assert_eq!(a.add(&tiny), a);
    }

    #[test]
    fn powers() {
        let three = LogNum::from_u64(3, P);
        assert!(rel_close(&three.powi(5).unwrap(), &q(243, 1), 118));
        assert!(rel_close(&three.neg().powi(3).unwrap(), &q(-27, 1), 118));
        assert!(rel_close(&three.powi(-2).unwrap(), &q(1, 9), 118));
        let eight = LogNum::from_u64(8, P);
        assert!(rel_close(&eight.pow_ratio(2, 3).unwrap(), &q(4, 1), 118));
        assert!(LogNum::zero(P).powi(-1).is_err());
        assert_eq!(LogNum::zero(P).powi(0).unwrap(), LogNum::one(P));
    }

    #[test]
    fn ordering() {
        let vals = [-5i64, -1, 0, 1, 2, 100];
        for a in vals {
            for b in vals {
                let la = LogNum::from_int(&a.into(), P);
                let lb = LogNum::from_int(&b.into(), P);
                assert_eq!(la.cmp(&lb), a.cmp(&b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn exp_and_ln() {
        let x = LogNum::from_u64(3, P);
        let e3 = LogNum::exp(&x).unwrap();
        assert!((e3.to_f64() - 3f64.exp()).abs() < 1e-12);
        let back = e3.ln().unwrap();
        assert!(rel_close(&back, &q(3, 1), 110));
        let m = LogNum::exp(&x.neg()).unwrap();
        assert!((m.to_f64() - (-3f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn huge_values_stay_finite() {
        let n = LogNum::pow2(1_000_000i64, P);
        let sq = n.mul(&n);
        assert_eq!(sq.log2().unwrap(), &Real::from_int(2_000_000, P));
        assert!(n.to_real().is_ok());
        assert!(LogNum::pow2(1i64 << 40, P).to_real().is_err());
        assert!(n.to_f64().is_infinite());
    }

    #[test]
    fn serde_round_trip() {
        let x = LogNum::from_u64(6, P).neg();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.starts_with("{\"sign\":-1,\"log2\":\"2.584962500721156"), "{s}");
        let back: LogNum = serde_json::from_str(&s).unwrap();
        assert!(back.sub(&x).abs() < LogNum::pow2(-100, P));
        let z = serde_json::to_string(&LogNum::zero(P)).unwrap();
        assert_eq!(z, "{\"sign\":0,\"log2\":\"-inf\"}");
        let back: LogNum = serde_json::from_str(&z).unwrap();
        assert!(back.is_zero());
    }

    #[test]
    fn to_f64_matches() {
        for v in [1u64, 3, 1000, 123_456_789] {
            let l = LogNum::from_u64(v, P);
            assert!((l.to_f64() - v as f64).abs() <= v as f64 * 1e-15);
        }
        assert_eq!(format!("{}", LogNum::from_u64(10, P)), "10.000000");
        assert_eq!(format!("{:.2}", LogNum::pow2(100000, P)), "2^100000.00");
    }
}
