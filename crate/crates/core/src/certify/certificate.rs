use serde::{Deserialize, Serialize};

use super::params::{Mode, VerifierParams};
use crate::error::{Error, Result};
use crate::exact::{FixedDecimal, IntPolynomial};

/// Constants recorded alongside a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertParams {
    pub t: usize,
    pub h0: usize,
    pub h1: usize,
    pub p1: usize,
    pub d1: usize,
    #[serde(rename = "K")]
    pub k: String,
}

impl From<&VerifierParams> for CertParams {
    fn from(p: &VerifierParams) -> Self {
        CertParams { t: p.t, h0: p.h0, h1: p.h1, p1: p.p1, d1: p.d1, k: p.k.clone() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Raw {
    zeta: usize,
    d1: usize,
    x: Vec<String>,
    f: Vec<Vec<String>>,
    params: CertParams,
    mode: Mode,
}

/// Decimals approximating the edge measures of an invariant lamination and
/// integer polynomials vanishing at the measures.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub zeta: usize,
    pub d1: usize,
    pub x: Vec<FixedDecimal>,
    pub f: Vec<IntPolynomial>,
    pub params: CertParams,
    pub mode: Mode,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let raw = Raw {
            zeta: self.zeta,
            d1: self.d1,
            x: self.x.iter().map(|x| x.to_string()).collect(),
            f: self.f.iter().map(|f| f.to_strings()).collect(),
            params: self.params.clone(),
            mode: self.mode,
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    /// Parse, checking only that every field is well formed.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Raw = serde_json::from_str(s).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
        let x = raw
            .x
            .iter()
            .map(|s| FixedDecimal::parse(s).map_err(|e| Error::MalformedCertificate(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let f = raw
            .f
            .iter()
            .map(|c| IntPolynomial::from_strings(c).map_err(|e| Error::MalformedCertificate(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate { zeta: raw.zeta, d1: raw.d1, x, f, params: raw.params, mode: raw.mode })
    }

    /// Structural problems that make the certificate unreadable for the
    /// given constants.
    pub fn structural_defect(&self, zeta: usize, p: &VerifierParams) -> Option<String> {
        if self.zeta != zeta {
            return Some(format!("certificate is for zeta = {}, path has zeta = {zeta}", self.zeta));
        }
        if self.x.len() != zeta || self.f.len() != zeta {
            return Some(format!(
                "expected {zeta} decimals and polynomials, got {} and {}",
                self.x.len(),
                self.f.len()
            ));
        }
        if self.d1 != p.d1 || self.params.d1 != p.d1 {
            return Some(format!("certificate precision {} does not match required d1 = {}", self.d1, p.d1));
        }
        if let Some(i) = self.x.iter().position(|x| x.scale() != p.d1) {
            return Some(format!("x[{i}] has {} fractional digits, expected {}", self.x[i].scale(), p.d1));
        }
        if let Some(i) = self.f.iter().position(|f| f.is_zero()) {
            return Some(format!("f[{i}] is the zero polynomial"));
        }
        None
    }
}

impl Certificate {
    /// Copy with fractional digit `place` (1-based) of `x[i]` set to `digit`.
    pub fn with_digit(&self, i: usize, place: usize, digit: u8) -> Certificate {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Signed;
        assert!(place >= 1 && place <= self.x[i].scale() && digit < 10);
        let w = crate::exact::decimal::pow10(self.x[i].scale() - place);
        let m = self.x[i].mantissa();
        let old = m.abs().div_floor(&w).mod_floor(&BigInt::from(10));
        let delta = (BigInt::from(digit) - old) * w;
        let delta = if m < &BigInt::from(0) { -delta } else { delta };
        let mut c = self.clone();
        c.x[i] = FixedDecimal::new(m + delta, self.x[i].scale());
        c
    }

    /// A random single-digit change within the first `places` fractional
    /// digits of one coordinate.
    pub fn tampered<R: rand::Rng>(&self, places: usize, rng: &mut R) -> (Certificate, usize, usize) {
        let i = rng.gen_range(0..self.x.len());
        let place = rng.gen_range(1..=places.min(self.x[i].scale()));
        let cur = self.digit(i, place);
        let digit = (cur + rng.gen_range(1..10u8)) % 10;
        (self.with_digit(i, place, digit), i, place)
    }

    pub fn digit(&self, i: usize, place: usize) -> u8 {
        use num_integer::Integer;
        use num_traits::{Signed, ToPrimitive};
        let w = crate::exact::decimal::pow10(self.x[i].scale() - place);
        self.x[i].mantissa().abs().div_floor(&w).mod_floor(&10.into()).to_u8().expect("digit")
    }
}
