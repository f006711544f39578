//! Degree/height bookkeeping for algebraic numbers and the separation-based
//! zero test. All logarithms are base 10.

use serde::{Deserialize, Serialize};

use super::decimal::{pow10, FixedDecimal};
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraicBound {
    pub degree_bound: usize,
    pub height_bound: f64,
}

impl AlgebraicBound {
    pub fn new(degree_bound: usize, height_bound: f64) -> Self {
        assert!(degree_bound >= 1, "degree bound must be positive");
        assert!(height_bound >= 0.0, "height bound must be non-negative");
        AlgebraicBound { degree_bound, height_bound }
    }

    /// Bound for a root of `f`: same degree, height `height(f) + 2 deg(f)`.
    pub fn of_root(f: &IntPolynomial) -> Result<Self> {
        let d = f.degree().ok_or(Error::UndefinedHeight)?.max(1);
        Ok(AlgebraicBound::new(d, f.height()? + 2.0 * d as f64))
    }

    pub fn log_degree(&self) -> f64 {
        (self.degree_bound as f64).log10()
    }

    /// Number of leading fractional digits that must vanish for zero.
    pub fn zero_digits(&self) -> usize {
        (self.height_bound + self.log_degree()).ceil() as usize
    }

    pub fn sum(&self, o: &Self) -> Self {
        AlgebraicBound::new(self.degree_bound * o.degree_bound, self.height_bound + o.height_bound + 1.0)
    }

    pub fn product(&self, o: &Self) -> Self {
        AlgebraicBound::new(self.degree_bound * o.degree_bound, self.height_bound + o.height_bound)
    }
}

pub fn poly_height(f: &IntPolynomial) -> Result<f64> {
    f.height()
}

/// True iff `a` is indistinguishable from zero at the separation bound, which
/// (given `a` approximates an algebraic number within the bound) means that
/// number is exactly zero.
pub fn zero_test(a: &FixedDecimal, bound: &AlgebraicBound) -> Result<bool> {
    let needed = bound.height_bound + bound.log_degree() + 1.0;
    if (a.scale() as f64) <= needed {
        return Err(Error::PrecisionBelowSeparation { scale: a.scale(), needed: needed.ceil() as usize });
    }
    let k = bound.zero_digits();
    // integer part zero and first k fractional digits zero
    Ok(a.mantissa().magnitude() < pow10(a.scale() - k).magnitude())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenHeightBounds {
    pub det_bound: f64,
    pub eigvec_bound: f64,
    pub eigval_bound: f64,
}

/// Height bounds for the determinant of an `alpha`-shifted `k`-bounded
/// `m x m` matrix, the entries of an eigenvector solving it, and an
/// eigenvalue of an integer `k`-bounded matrix.
pub fn eigen_height_bounds(m: usize, k: f64, alpha_height: f64) -> EigenHeightBounds {
    assert!(m >= 1 && k >= 0.0);
    let mf = m as f64;
    let lm = mf.log10();
    EigenHeightBounds {
        det_bound: mf * mf * (k + lm + alpha_height),
        eigvec_bound: 2.0 * mf * mf * (k + lm + alpha_height),
        eigval_bound: mf * k + mf * lm + 2.0 * mf,
    }
}

/// Height bound on the coordinates of a stable lamination reached by a path
/// of length `len` on a triangulation with `zeta` edges.
pub fn coordinate_height_bound(zeta: usize, len: usize) -> f64 {
    let ev = eigen_height_bounds(zeta, len as f64, 0.0).eigval_bound;
    eigen_height_bounds(zeta, len as f64, ev).eigvec_bound
}
