//! Dense univariate integer polynomials.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::decimal::{log10_abs, pow10, FixedDecimal};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // homogenised Horner keeps everything integral until the end
        let (n, d) = (x.numer(), x.denom());
        let deg = match self.degree() {
            Some(k) => k,
            None => return BigRational::zero(),
        };
        BigRational::new(self.homogeneous_eval(n, d), num_traits::pow(d.clone(), deg))
    }

    /// `d^deg * f(n/d)`, an integer with the sign of `f(n/d)` when `d > 0`.
    pub fn homogeneous_eval(&self, n: &BigInt, d: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.homogeneous_eval(x.numer(), x.denom()).cmp(&BigInt::zero())
    }

    /// Exact quotient if `o` divides `self` in `Z[x]`.
    pub fn exact_div(&self, o: &Self) -> Option<Self> {
        let od = o.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = self.degree()?;
        if sd < od {
            return None;
        }
        let lc = o.leading();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - od + 1];
        for k in (0..=sd - od).rev() {
            let top = &rem[k + od];
            if top.is_zero() {
                continue;
            }
            let (qq, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in o.coeffs.iter().enumerate() {
                rem[k + j] -= &qq * c;
            }
            q[k] = qq;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(o)^(deg self - deg o + 1) * self mod o`.
    pub fn pseudo_rem(&self, o: &Self) -> Self {
        let od = o.degree().expect("pseudo_rem by zero polynomial");
        let mut rem = self.clone();
        let lc = o.leading();
        let mut steps = match self.degree() {
            Some(sd) if sd >= od => sd - od + 1,
            _ => return self.clone(),
        };
        while let Some(rd) = rem.degree() {
            if rd < od {
                break;
            }
            let t = rem.leading();
            rem = rem.scale(&lc).sub(&o.scale(&t).shift(rd - od));
            steps -= 1;
        }
        // keep the exponent exact so signs follow the classical definition
        if steps > 0 {
            rem = rem.scale(&num_traits::pow(lc, steps));
        }
        rem
    }

    /// Remainder modulo a monic polynomial (stays in `Z[x]`).
    pub fn rem_monic(&self, m: &Self) -> Self {
        let md = m.degree().expect("modulus must be nonzero");
        debug_assert!(m.leading().is_one());
        let mut rem = self.coeffs.clone();
        if rem.len() <= md {
            return self.clone();
        }
        for k in (md..rem.len()).rev() {
            let t = std::mem::take(&mut rem[k]);
            if t.is_zero() {
                continue;
            }
            for (j, c) in m.coeffs.iter().enumerate().take(md) {
                rem[k - md + j] -= &t * c;
            }
        }
        rem.truncate(md);
        Self::new(rem)
    }

    /// Primitive gcd over `Z[x]` (positive leading coefficient).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        let g = a.primitive();
        let c = self.content().gcd(&o.content());
        if g.degree() == Some(0) {
            return Self::constant(if c.is_zero() { BigInt::one() } else { c });
        }
        g
    }

    /// `self / gcd(self, self')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        let p = self.primitive();
        if g.degree() == Some(0) {
            return p;
        }
        p.exact_div(&g).expect("gcd divides").primitive()
    }

    /// `log10` of the largest absolute coefficient.
    pub fn height(&self) -> Result<f64> {
        if self.is_zero() {
            return Err(Error::UndefinedHeight);
        }
        Ok(log10_abs(&self.max_abs_coeff()))
    }

    /// Smallest integer `h` with every `|a_i| <= 10^h`.
    pub fn height_ceil(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::UndefinedHeight);
        }
        let m = self.max_abs_coeff();
        let mut h = super::decimal::digit_count(&m) - 1;
        if pow10(h) < m {
            h += 1;
        }
        Ok(h)
    }

    /// Horner evaluation at the scale of `x`, truncating every product toward
    /// zero. With `d = x.scale()` the result differs from the exact value by
    /// less than `(deg + 1) * 10^-d * max(1, |x|)^deg`.
    pub fn horner_eval(&self, x: &FixedDecimal) -> FixedDecimal {
        let s = x.scale();
        let mut acc = FixedDecimal::zero(s);
        for c in self.coeffs.iter().rev() {
            acc = &acc.mul_trunc(x, s) + &FixedDecimal::from_int(c.clone(), s);
        }
        acc
    }

    /// Exact value of `f(x)`, at scale `deg * x.scale()`.
    pub fn horner_eval_exact(&self, x: &FixedDecimal) -> FixedDecimal {
        let deg = match self.degree() {
            Some(d) => d,
            None => return FixedDecimal::zero(0),
        };
        let s = x.scale();
        let unit = pow10(s);
        let mut acc = BigInt::zero();
        let mut upow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.mantissa() + c * &upow;
            upow *= &unit;
        }
        FixedDecimal::new(acc, s * deg)
    }

    /// Serialise as decimal coefficient strings, low degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(v: &[String]) -> Result<Self> {
        let cs = v
            .iter()
            .map(|s| {
                let t = s.trim().replace('\u{2212}', "-");
                t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cs))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        IntPolynomial::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn heights() {
        assert!((p(&[1, -3, 1]).height().unwrap() - 3f64.log10()).abs() < 1e-12);
        assert_eq!(p(&[-1, 1]).height().unwrap(), 0.0);
        assert!((p(&[7, 0, 0, 100]).height().unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(IntPolynomial::zero().height(), Err(Error::UndefinedHeight));
        assert_eq!(p(&[7, 0, 0, 100]).height_ceil().unwrap(), 2);
        assert_eq!(p(&[7, 0, 0, 101]).height_ceil().unwrap(), 3);
        assert_eq!(p(&[1]).height_ceil().unwrap(), 0);
    }

    #[test]
    fn horner_examples() {
        let half = FixedDecimal::parse("0.5000").unwrap();
        assert_eq!(p(&[0, 0, 1]).horner_eval(&half).to_string(), "0.2500");
        let three = FixedDecimal::parse("3.0000").unwrap();
        assert_eq!(p(&[-3, 1]).horner_eval(&three).to_string(), "0.0000");
        // exact rational value at 2.6180 is -0.000076
        let x = FixedDecimal::parse("2.6180").unwrap();
        let exact = p(&[1, -3, 1]).horner_eval_exact(&x);
        assert_eq!(exact.to_rational(), BigRational::new((-76).into(), 1_000_000.into()));
        let v = p(&[1, -3, 1]).horner_eval(&x);
        assert!(v.abs() <= FixedDecimal::parse("0.0010").unwrap(), "{v}");
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
        let g = p(&[-1, 1]).mul(&p(&[3, 2]));
        assert_eq!(f.gcd(&g), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[6])), p(&[2]));
    }

    #[test]
    fn division() {
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.exact_div(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(f.exact_div(&p(&[1, 2])), None);
        let m = p(&[1, -3, 1]);
        // x^2 = 3x - 1 mod m
        assert_eq!(p(&[0, 0, 1]).rem_monic(&m), p(&[-1, 3]));
        assert_eq!(p(&[5, 0, 2, 1]).pseudo_rem(&p(&[1, 2])).degree(), Some(0));
    }
}
