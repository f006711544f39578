//! Precision and step constants of the verifier.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every constant from the closed-form bounds in `ζ` and `ℓ(p)`.
    Strict,
    /// Heights from the certificate's polynomials and the split count from
    /// the certificate; the precisions follow from those by the same
    /// formulas.
    Adaptive,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "adaptive" => Ok(Mode::Adaptive),
            _ => Err(Error::Parse(format!("unknown mode {s:?}; use strict or adaptive"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifierParams {
    pub zeta: usize,
    pub path_length: usize,
    /// Rational constant `K`, as `"p/q"` or an integer.
    #[serde(rename = "K")]
    pub k: String,
    pub t: usize,
    pub h0: usize,
    pub h1: usize,
    pub p1: usize,
    pub d1: usize,
    pub mode: Mode,
}

pub fn parse_k(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid K {s:?}"));
    let k: BigRational = match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n.trim().parse().map_err(|_| bad())?, d)
        }
        None => BigRational::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    if !k.is_positive() {
        return Err(Error::Parse(format!("K must be positive, got {s}")));
    }
    Ok(k)
}

fn ceil(r: &BigRational) -> usize {
    let (q, m) = r.numer().div_mod_floor(r.denom());
    let q = if m.is_zero() { q } else { q + 1 };
    q.try_into().expect("constant fits in usize")
}

fn finish(zeta: usize, len: usize, k: &BigRational, t: usize, h0: usize, mode: Mode) -> VerifierParams {
    let h1 = h0 + 2 * zeta;
    let p1 = 2 * zeta * zeta * (2 * h1 + t + 3);
    let d1 = p1 + t + zeta * h1 + 2;
    let k = if k.denom().is_one() { k.numer().to_string() } else { k.to_string() };
    VerifierParams { zeta, path_length: len, k, t, h0, h1, p1, d1, mode }
}

/// `t = ⌈24ζK·ℓ²⌉`, `h0 = ζ⁴(ℓ+6)`, `h1 = h0 + 2ζ`, `p1 = 2ζ²(2h1+t+3)`,
/// `d1 = p1 + t + ζh1 + 2`.
pub fn box_params(zeta: usize, len: usize, k: &BigRational) -> VerifierParams {
    let t = ceil(&(k * BigInt::from(24 * zeta * len * len)));
    let h0 = zeta.pow(4) * (len + 6);
    finish(zeta, len, k, t, h0, Mode::Strict)
}

/// Constants for a certificate with polynomials `f` that claims `t` splits.
pub fn adaptive_params(
    zeta: usize,
    len: usize,
    k: &BigRational,
    f: &[IntPolynomial],
    t: usize,
) -> Result<VerifierParams> {
    let mut h0 = len.max(1);
    for p in f {
        h0 = h0.max(p.height_ceil()?);
    }
    Ok(finish(zeta, len, k, t, h0, Mode::Adaptive))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn box_constants() {
        let p = box_params(3, 1, &one());
        assert_eq!((p.t, p.h0, p.h1, p.p1, p.d1), (72, 567, 573, 21978, 23771));
        let p = box_params(3, 0, &one());
        assert_eq!((p.t, p.h0), (0, 486));
        let p = box_params(3, 4, &one());
        assert_eq!((p.t, p.h0, p.h1, p.p1, p.d1), (1152, 810, 816, 50166, 53768));
    }

    #[test]
    fn monotone() {
        let ks = ["1/3", "1", "5/2", "7"];
        for z in [3, 6, 9] {
            for l in 0..12 {
                for w in ks.windows(2) {
                    let a = box_params(z, l, &parse_k(w[0]).unwrap());
                    let b = box_params(z, l, &parse_k(w[1]).unwrap());
                    assert!(a.t <= b.t && a.p1 <= b.p1 && a.d1 <= b.d1);
                }
                let a = box_params(z, l, &one());
                let b = box_params(z, l + 1, &one());
                assert!(a.t <= b.t && a.h0 <= b.h0 && a.p1 <= b.p1 && a.d1 <= b.d1);
            }
        }
    }

    #[test]
    fn fractional_k_rounds_up() {
        // 24 * 3 * 1 * (1/7) = 72/7 -> 11
        assert_eq!(box_params(3, 1, &parse_k("1/7").unwrap()).t, 11);
        assert!(parse_k("0").is_err());
        assert!(parse_k("-1").is_err());
        assert!(parse_k("x").is_err());
    }

    #[test]
    fn adaptive_uses_certificate_heights() {
        let f = vec![IntPolynomial::from_i64s(&[1, -3, 1]), IntPolynomial::from_i64s(&[-1, 1500])];
        let p = adaptive_params(3, 4, &one(), &f, 10).unwrap();
        assert_eq!(p.h0, 4);
        assert_eq!(p.h1, 10);
        assert_eq!(p.p1, 2 * 9 * (20 + 10 + 3));
        assert_eq!(p.mode, Mode::Adaptive);
    }
}
