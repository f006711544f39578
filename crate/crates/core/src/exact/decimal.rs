//! Fixed-scale decimals with one-sided (toward zero) truncation.
//!
//! A [`FixedDecimal`] is `mantissa * 10^-scale`. Addition and subtraction are
//! exact (operands are lifted to the larger scale); multiplication and halving
//! truncate toward zero at an explicit scale. Comparisons that only look at a
//! prefix of the fractional digits go through [`cmp_truncated`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `10^n` as a big integer.
pub fn pow10(n: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n)
}

/// Number of decimal digits of `|x|` (zero has one digit).
pub fn digit_count(x: &BigInt) -> usize {
    if x.is_zero() {
        return 1;
    }
    let bits = x.bits() as f64;
    let mut d = (bits * std::f64::consts::LOG10_2).floor() as usize;
    let a = x.abs();
    // d is within one of the answer; settle it exactly
    while d > 0 && pow10(d - 1) > a {
        d -= 1;
    }
    while pow10(d) <= a {
        d += 1;
    }
    d
}

/// `log10 |x|` for nonzero `x`, accurate to f64 precision.
pub fn log10_abs(x: &BigInt) -> f64 {
    let a = x.abs();
    let bits = a.bits();
    if bits <= 1000 {
        return a.to_f64().unwrap_or(f64::INFINITY).log10();
    }
    let shift = bits - 64;
    let top: BigInt = &a >> shift;
    top.to_f64().unwrap().log10() + shift as f64 * std::f64::consts::LOG10_2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FixedDecimal {
    mantissa: BigInt,
    scale: usize,
}

impl FixedDecimal {
    pub fn new(mantissa: BigInt, scale: usize) -> Self {
        FixedDecimal { mantissa, scale }
    }

    pub fn zero(scale: usize) -> Self {
        Self::new(BigInt::zero(), scale)
    }

    pub fn from_int(n: impl Into<BigInt>, scale: usize) -> Self {
        Self::new(n.into() * pow10(scale), scale)
    }

    /// The unit in the last place, `10^-scale`.
    pub fn ulp(scale: usize) -> Self {
        Self::new(BigInt::one(), scale)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> usize {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        match self.mantissa.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mantissa.abs(), self.scale)
    }

    /// Exact change to a finer scale.
    pub fn rescale_up(&self, scale: usize) -> Self {
        assert!(scale >= self.scale, "rescale_up cannot drop digits");
        Self::new(&self.mantissa * pow10(scale - self.scale), scale)
    }

    /// Drop fractional digits beyond `places`, toward zero.
    pub fn truncate(&self, places: usize) -> Self {
        if places >= self.scale {
            return self.rescale_up(places);
        }
        Self::new(&self.mantissa / pow10(self.scale - places), places)
    }

    /// Product truncated toward zero at `scale`.
    pub fn mul_trunc(&self, other: &Self, scale: usize) -> Self {
        let raw = &self.mantissa * &other.mantissa;
        let raw_scale = self.scale + other.scale;
        if raw_scale >= scale {
            Self::new(raw / pow10(raw_scale - scale), scale)
        } else {
            Self::new(raw * pow10(scale - raw_scale), scale)
        }
    }

    /// Exact product (scale is the sum of the operand scales).
    pub fn mul_exact(&self, other: &Self) -> Self {
        Self::new(&self.mantissa * &other.mantissa, self.scale + other.scale)
    }

    /// Half, truncated toward zero at the current scale.
    pub fn half(&self) -> Self {
        Self::new(&self.mantissa / 2, self.scale)
    }

    /// Floor of a rational at the given scale (callers pass non-negative values).
    pub fn from_rational_floor(r: &BigRational, scale: usize) -> Self {
        let num = r.numer() * pow10(scale);
        Self::new(num.div_floor(r.denom()), scale)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        if self.scale < 300 {
            return self.mantissa.to_f64().unwrap_or(f64::NAN) / 10f64.powi(self.scale as i32);
        }
        self.truncate(30).to_f64()
    }

    /// Parse a decimal literal without exponent; the scale is the number of
    /// fractional digits written.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::BadDecimal(s.to_string());
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-').or_else(|| t.strip_prefix('\u{2212}')) {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty()
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
            || (body.contains('.') && frac_part.is_empty())
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut m = BigInt::from_str(&digits).map_err(|_| bad())?;
        if neg {
            m = -m;
        }
        Ok(Self::new(m, frac_part.len()))
    }
}

impl fmt::Display for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.abs().to_str_radix(10);
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        if self.scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = if digits.len() <= self.scale {
            format!("{}{}", "0".repeat(self.scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (i, fr) = padded.split_at(padded.len() - self.scale);
        write!(f, "{sign}{i}.{fr}")
    }
}

impl fmt::Debug for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale > 40 {
            write!(f, "{}…(scale {})", self.truncate(40), self.scale)
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for FixedDecimal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn aligned(a: &FixedDecimal, b: &FixedDecimal) -> (BigInt, BigInt, usize) {
    let s = a.scale.max(b.scale);
    let am = if a.scale == s { a.mantissa.clone() } else { &a.mantissa * pow10(s - a.scale) };
    let bm = if b.scale == s { b.mantissa.clone() } else { &b.mantissa * pow10(s - b.scale) };
    (am, bm, s)
}

impl Add for &FixedDecimal {
    type Output = FixedDecimal;
    fn add(self, rhs: &FixedDecimal) -> FixedDecimal {
        if self.scale == rhs.scale {
            return FixedDecimal::new(&self.mantissa + &rhs.mantissa, self.scale);
        }
        let (a, b, s) = aligned(self, rhs);
        FixedDecimal::new(a + b, s)
    }
}

impl Sub for &FixedDecimal {
    type Output = FixedDecimal;
    fn sub(self, rhs: &FixedDecimal) -> FixedDecimal {
        if self.scale == rhs.scale {
            return FixedDecimal::new(&self.mantissa - &rhs.mantissa, self.scale);
        }
        let (a, b, s) = aligned(self, rhs);
        FixedDecimal::new(a - b, s)
    }
}

impl Add for FixedDecimal {
    type Output = FixedDecimal;
    fn add(self, rhs: FixedDecimal) -> FixedDecimal {
        &self + &rhs
    }
}

impl Sub for FixedDecimal {
    type Output = FixedDecimal;
    fn sub(self, rhs: FixedDecimal) -> FixedDecimal {
        &self - &rhs
    }
}

impl Neg for FixedDecimal {
    type Output = FixedDecimal;
    fn neg(self) -> FixedDecimal {
        FixedDecimal::new(-self.mantissa, self.scale)
    }
}

/// Exact value ordering (scales may differ).
impl Ord for FixedDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = aligned(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for FixedDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compare `a` and `b` after truncating each toward zero to `places`
/// fractional digits. Both operands must carry the same scale, at least
/// `places`.
pub fn cmp_truncated(a: &FixedDecimal, b: &FixedDecimal, places: usize) -> Result<Ordering> {
    if a.scale != b.scale {
        return Err(Error::ScaleMismatch(a.scale, b.scale));
    }
    if places > a.scale {
        return Err(Error::ScaleMismatch(a.scale, places));
    }
    if places == a.scale {
        return Ok(a.mantissa.cmp(&b.mantissa));
    }
    let d = pow10(a.scale - places);
    Ok((&a.mantissa / &d).cmp(&(&b.mantissa / &d)))
}

/// Compare `a` and `b` by the first `places` fractional digits of their
/// difference: equal when `|a - b| < 10^-places`, otherwise the sign of
/// `a - b`. This is the comparison whose soundness the separation bound
/// guarantees; [`cmp_truncated`] truncates each operand separately.
pub fn cmp_places(a: &FixedDecimal, b: &FixedDecimal, places: usize) -> Result<Ordering> {
    if a.scale != b.scale {
        return Err(Error::ScaleMismatch(a.scale, b.scale));
    }
    if places > a.scale {
        return Err(Error::ScaleMismatch(a.scale, places));
    }
    let diff = &a.mantissa - &b.mantissa;
    if diff.magnitude() < pow10(a.scale - places).magnitude() {
        Ok(Ordering::Equal)
    } else {
        Ok(diff.sign().cmp(&num_bigint::Sign::NoSign))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> FixedDecimal {
        FixedDecimal::parse(s).unwrap()
    }

    #[test]
    fn difference_comparison() {
        assert_eq!(cmp_places(&d("0.12351"), &d("0.12349"), 4).unwrap(), Ordering::Equal);
        assert_eq!(cmp_places(&d("0.12360"), &d("0.12349"), 4).unwrap(), Ordering::Greater);
        assert_eq!(cmp_places(&d("0.99999"), &d("1.00000"), 4).unwrap(), Ordering::Equal);
        assert_eq!(cmp_places(&d("-0.5000"), &d("0.0000"), 4).unwrap(), Ordering::Less);
    }

    #[test]
    fn display_keeps_exact_scale() {
        assert_eq!(d("0.6180").to_string(), "0.6180");
        assert_eq!(d("-0.0005").to_string(), "-0.0005");
        assert_eq!(FixedDecimal::from_int(3, 4).to_string(), "3.0000");
        assert_eq!(FixedDecimal::from_int(-12, 0).to_string(), "-12");
        assert_eq!(d("\u{2212}1.5").to_string(), "-1.5");
    }

    #[test]
    fn parse_rejects_junk() {
        for bad in ["", "1e5", ".5", "1.", "0x10", "1.2.3", "--1"] {
            assert!(FixedDecimal::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn cmp_truncated_examples() {
        assert_eq!(cmp_truncated(&d("0.1234999"), &d("0.1234000"), 4).unwrap(), Ordering::Equal);
        assert_eq!(cmp_truncated(&d("0.12351"), &d("0.12349"), 4).unwrap(), Ordering::Greater);
        let x = d("3.14159");
        for p in 0..=5 {
            assert_eq!(cmp_truncated(&x, &x, p).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn cmp_truncated_rejects_mismatched_scales() {
        assert_eq!(cmp_truncated(&d("0.12"), &d("0.123"), 2), Err(Error::ScaleMismatch(2, 3)));
        assert!(cmp_truncated(&d("0.12"), &d("0.13"), 3).is_err());
    }

    #[test]
    fn truncation_is_toward_zero() {
        assert_eq!(d("1.999").truncate(1), d("1.9"));
        assert_eq!(d("-1.999").truncate(1), d("-1.9"));
        assert_eq!(d("0.7").mul_trunc(&d("0.7"), 1), d("0.4"));
        assert_eq!(d("-0.7").mul_trunc(&d("0.7"), 1), d("-0.4"));
        assert_eq!(d("0.0003").half(), d("0.0001"));
    }

    #[test]
    fn digit_counts() {
        assert_eq!(digit_count(&BigInt::from(0)), 1);
        assert_eq!(digit_count(&BigInt::from(9)), 1);
        assert_eq!(digit_count(&BigInt::from(10)), 2);
        assert_eq!(digit_count(&BigInt::from(-99999)), 5);
        assert_eq!(digit_count(&pow10(500)), 501);
        assert!((log10_abs(&pow10(2000)) - 2000.0).abs() < 1e-9);
    }

    #[test]
    fn rational_floor() {
        let r = BigRational::new(BigInt::from(2), BigInt::from(3));
        assert_eq!(FixedDecimal::from_rational_floor(&r, 4), d("0.6666"));
    }
}
