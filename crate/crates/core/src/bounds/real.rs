//! Binary fixed-point reals over big integers.
//!
//! A [`Real`] is `mant / 2^prec`. Arithmetic results are rounded toward
//! negative infinity at the larger operand precision. `log2` and `exp2`
//! work internally with [`GUARD`] extra bits, so their results are within
//! one unit in the last place.

use alloc::string::String;
use alloc::format;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Extra working bits used inside transcendental functions.
pub const GUARD: u32 = 64;

/// Largest integer part accepted by [`Real::exp2`] (the result would need
/// more bits than that to materialise).
pub const MAX_EXP2: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Real {
    mant: BigInt,
    prec: u32,
}

fn floor_shr(x: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x.clone();
    }
    x.div_floor(&(BigInt::one() << bits as usize))
}

fn scale(x: &BigInt, from: u32, to: u32) -> BigInt {
    match to.cmp(&from) {
        Ordering::Greater => x << (to - from) as usize,
        Ordering::Equal => x.clone(),
        Ordering::Less => floor_shr(x, from - to),
    }
}

impl Real {
    pub fn zero(prec: u32) -> Real {
        Real { mant: BigInt::zero(), prec }
    }

    pub fn from_int(v: impl Into<BigInt>, prec: u32) -> Real {
        Real { mant: v.into() << prec as usize, prec }
    }

    /// `floor(q * 2^prec) / 2^prec`.
    pub fn from_ratio(q: &BigRational, prec: u32) -> Real {
        let num = q.numer() << prec as usize;
        Real { mant: num.div_floor(q.denom()), prec }
    }

    /// Raw constructor: the value `mant / 2^prec`.
    pub fn from_raw(mant: BigInt, prec: u32) -> Real {
        Real { mant, prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn with_prec(&self, prec: u32) -> Real {
        Real { mant: scale(&self.mant, self.prec, prec), prec }
    }

    /// Exact rational value.
    pub fn to_ratio(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.prec as usize)
    }

    fn aligned(&self, other: &Real) -> (BigInt, BigInt, u32) {
        let p = self.prec.max(other.prec);
        (scale(&self.mant, self.prec, p), scale(&other.mant, other.prec, p), p)
    }

    pub fn add(&self, other: &Real) -> Real {
        let (a, b, p) = self.aligned(other);
        Real { mant: a + b, prec: p }
    }

    pub fn sub(&self, other: &Real) -> Real {
        let (a, b, p) = self.aligned(other);
        Real { mant: a - b, prec: p }
    }

    pub fn neg(&self) -> Real {
        Real { mant: -&self.mant, prec: self.prec }
    }

    pub fn abs(&self) -> Real {
        Real { mant: self.mant.abs(), prec: self.prec }
    }

    pub fn mul(&self, other: &Real) -> Real {
        let (a, b, p) = self.aligned(other);
        Real { mant: floor_shr(&(a * b), p), prec: p }
    }

    pub fn div(&self, other: &Real) -> Result<Real> {
        let (a, b, p) = self.aligned(other);
        if b.is_zero() {
            return Err(Error::InvalidParameter("division by zero".into()));
        }
        Ok(Real { mant: (a << p as usize).div_floor(&b), prec: p })
    }

    pub fn mul_int(&self, k: &BigInt) -> Real {
        Real { mant: &self.mant * k, prec: self.prec }
    }

    pub fn div_int(&self, k: &BigInt) -> Real {
        Real { mant: self.mant.div_floor(k), prec: self.prec }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        floor_shr(&self.mant, self.prec)
    }

    pub fn ceil(&self) -> BigInt {
        -floor_shr(&-&self.mant, self.prec)
    }

    /// Nearest `f64` (infinite when out of range).
    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits();
        // Keep 64 significant bits, fold the rest into the binary exponent.
        let drop = bits.saturating_sub(64);
        let top = (&self.mant >> drop as usize).to_f64().unwrap_or(0.0);
        let exp = drop as i64 - self.prec as i64;
        top * pow2_f64(exp)
    }

    /// The value as an `i64`, when it is an integer that fits.
    pub fn to_i64_exact(&self) -> Option<i64> {
        let f = self.floor();
        if Real::from_int(f.clone(), self.prec) == *self {
            f.to_i64()
        } else {
            None
        }
    }

    /// Decimal expansion truncated to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.mant.is_negative();
        let abs = self.mant.abs();
        let int = &abs >> self.prec as usize;
        let mask = (BigInt::one() << self.prec as usize) - 1;
        let mut frac = &abs & &mask;
        let mut out = format!("{}{}", if neg { "-" } else { "" }, int);
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                frac *= 10;
                let d = (&frac >> self.prec as usize).to_u8().unwrap_or(0);
                out.push((b'0' + d) as char);
                frac &= &mask;
            }
        }
        out
    }

    /// Parses a decimal string such as `-12.5` into the nearest-below real.
    pub fn parse_decimal(s: &str, prec: u32) -> Result<Real> {
        let bad = || Error::InvalidParameter(format!("not a decimal number: {s:?}"));
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10u8), frac.len());
        let q = BigRational::new(if neg { -num } else { num }, den);
        Ok(Real::from_ratio(&q, prec))
    }

    /// Natural logarithm of two at `prec` bits.
    pub fn ln2(prec: u32) -> Real {
        let w = prec + GUARD;
        // ln 2 = sum_{k >= 1} 1 / (k 2^k)
        let mut acc = BigInt::zero();
        for k in 1..=w {
            acc += (BigInt::one() << (w - k) as usize) / BigInt::from(k);
        }
        Real { mant: floor_shr(&acc, GUARD), prec }
    }

    /// Binary logarithm of `m * 2^shift` for a positive integer `m`.
    pub fn log2_scaled(m: &BigUint, shift: i64, prec: u32) -> Result<Real> {
        if m.is_zero() {
            return Err(Error::InvalidParameter("log2 of zero".into()));
        }
        let w = prec + GUARD;
        let e = m.bits() - 1;
        let mi = BigInt::from_biguint(Sign::Plus, m.clone());
        let mut y = if e <= w as u64 { mi << (w as u64 - e) as usize } else { mi >> (e - w as u64) as usize };
        let two = BigInt::from(2u8) << w as usize;
        let mut frac = BigInt::zero();
        for _ in 0..w {
            y = (&y * &y) >> w as usize;
            frac <<= 1;
            if y >= two {
                y >>= 1;
                frac += 1;
            }
        }
        let int = BigInt::from(e as i64 + shift);
        let total = (int << w as usize) + frac;
        Ok(Real { mant: floor_shr(&total, GUARD), prec })
    }

    pub fn log2_uint(m: &BigUint, prec: u32) -> Result<Real> {
        Self::log2_scaled(m, 0, prec)
    }

    /// Binary logarithm of a positive rational.
    pub fn log2_ratio(q: &BigRational, prec: u32) -> Result<Real> {
        if !q.is_positive() {
            return Err(Error::InvalidParameter("log2 of a non-positive number".into()));
        }
        let num = Self::log2_uint(q.numer().magnitude(), prec + 2)?;
        let den = Self::log2_uint(q.denom().magnitude(), prec + 2)?;
        Ok(num.sub(&den).with_prec(prec))
    }

    /// Binary logarithm of a positive real.
    pub fn log2(&self) -> Result<Real> {
        if !self.is_positive() {
            return Err(Error::InvalidParameter("log2 of a non-positive number".into()));
        }
        Self::log2_scaled(self.mant.magnitude(), -(self.prec as i64), self.prec)
    }

    /// `2^self`.
    pub fn exp2(&self) -> Result<Real> {
        let prec = self.prec;
        let w = prec + GUARD;
        let int = self.floor();
        if int > BigInt::from(MAX_EXP2) {
            return Err(Error::Overflow(self.to_decimal(6)));
        }
        let i = int.to_i64().unwrap_or(i64::MIN);
        if i < -(w as i64) - 2 {
            return Ok(Real::zero(prec));
        }
        let frac = self.sub(&Real::from_int(int, prec)).with_prec(w).mant;
        let ln2 = Real::ln2(w).mant;
        let y = (frac * ln2) >> w as usize;
        let one = BigInt::one() << w as usize;
        let mut sum = one.clone();
        let mut term = one;
        let mut k = 1u32;
        loop {
            term = ((term * &y) >> w as usize) / BigInt::from(k);
            if term.is_zero() {
                break;
            }
            sum += &term;
            k += 1;
        }
        let shift = i - GUARD as i64;
        let mant = if shift >= 0 { sum << shift as usize } else { floor_shr(&sum, (-shift) as u32) };
        Ok(Real { mant, prec })
    }

    /// Natural logarithm.
    pub fn ln(&self) -> Result<Real> {
        Ok(self.log2()?.mul(&Real::ln2(self.prec)))
    }

    /// `e^self`.
    pub fn exp(&self) -> Result<Real> {
        self.div(&Real::ln2(self.prec + 8))?.with_prec(self.prec).exp2()
    }
}

/// `2^e` as an `f64`, saturating to zero or infinity.
pub(crate) fn pow2_f64(e: i64) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else if e >= -1074 {
        f64::from_bits(1u64 << (e + 1074))
    } else {
        0.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        let p = self.prec.max(other.prec);
        // Exact comparison: scale both up.
        let a = &self.mant << (p - self.prec) as usize;
        let b = &other.mant << (p - other.prec) as usize;
        a.cmp(&b)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(decimal_digits(self.prec));
        f.write_str(&self.to_decimal(digits))
    }
}

/// Fractional decimal digits carried by `prec` binary digits.
pub fn decimal_digits(prec: u32) -> usize {
    (prec as usize * 30103).div_ceil(100000)
}
