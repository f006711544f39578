//! Certificate generation from exact stable laminations.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::certificate::{CertParams, Certificate};
use super::params::{adaptive_params, box_params, Mode, VerifierParams};
use crate::error::{Error, Result};
use crate::exact::matrix::{charpoly, resultant_y};
use crate::exact::roots::{isolate_real_roots, refine};
use crate::exact::{FieldElem, IntPolynomial, NumberField};
use crate::mcg::path::{FlipPath, PLPiece};
use crate::surface::lamination::corner_value;
use crate::surface::Triangulation;
use crate::traintrack::MeasuredTrainTrack;

/// An exact invariant lamination `p(v) = λv`, normalized to unit mass.
#[derive(Debug, Clone)]
pub struct StableLamination {
    pub field: Arc<NumberField>,
    pub lambda: FieldElem,
    pub measures: Vec<FieldElem>,
    pub piece: PLPiece,
    /// Iterations of the action before the linear piece settled.
    pub iterations: usize,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub certificate: Certificate,
    pub params: VerifierParams,
    pub lamination: StableLamination,
    /// Preperiod and period of the maximal splitting sequence.
    pub n: usize,
    pub m: usize,
}

fn closed(path: &FlipPath) -> Result<()> {
    if path.start() != path.end() {
        return Err(Error::BadMove("path does not return to its starting triangulation".into()));
    }
    Ok(())
}

fn int_sum(v: &[BigRational]) -> BigRational {
    v.iter().fold(BigRational::zero(), |a, x| a + x)
}

/// Remove the peripheral curves from a measure: at each vertex subtract the
/// smallest corner, then read the edges back off the corners.
pub fn strip_peripheral(tri: &Triangulation, v: &[BigRational]) -> Vec<BigRational> {
    let tris = tri.triangles();
    let mut c: Vec<[BigRational; 3]> =
        (0..tris.len()).map(|t| std::array::from_fn(|i| corner_value(tri, v, t, i))).collect();
    for vert in tri.vertices() {
        let m = vert.iter().map(|&(t, i)| c[t][i].clone()).min().expect("vertex has corners");
        for &(t, i) in vert {
            c[t][i] -= &m;
        }
    }
    let mut out = vec![BigRational::zero(); v.len()];
    for (t, s) in tris.iter().enumerate() {
        for i in 0..3 {
            out[s[i]] = &c[t][(i + 2) % 3] + &c[t][i];
        }
    }
    out
}

/// Deterministic start vectors, peripheral parts removed; purely peripheral
/// candidates are skipped.
fn start_vectors(tri: &Triangulation) -> impl Iterator<Item = Vec<BigRational>> + '_ {
    let z = tri.zeta();
    (0..4 * z).filter_map(move |j| {
        let v: Vec<BigRational> = (0..z)
            .map(|i| {
                let x = if j == 0 { z + i + 1 } else { 2 * z + (i * (j + 1) * (j + 1) + j) % (z + 1) };
                BigRational::from_integer(BigInt::from(x))
            })
            .collect();
        let w = strip_peripheral(tri, &v);
        w.iter().any(|x| !x.is_zero()).then_some(w)
    })
}

/// Iterate the action from a generic non-peripheral point until the linear
/// piece repeats `ζ+1` times in a row, then solve for the eigenvector there.
/// Start points are tried in turn, sharing `budget` iterations.
pub fn stable_lamination(path: &FlipPath, budget: usize) -> Result<StableLamination> {
    closed(path)?;
    let z = path.zeta();
    if path.len() == 0 {
        return Err(Error::WrongType("identity path has no stable lamination".into()));
    }
    let mut tried: Vec<Vec<bool>> = vec![];
    let mut used = 0;
    let per_start = (budget / 3).max(4 * z);
    for mut v in start_vectors(path.start()) {
        let mut last: Option<Vec<bool>> = None;
        let mut streak = 0;
        for _ in 0..per_start {
            if used >= budget {
                break;
            }
            used += 1;
            let piece = path.piece_at(&v);
            let w = path.apply(&v)?;
            let ratio = (int_sum(&w) / int_sum(&v)).to_f64_lossy();
            if last.as_ref() == Some(&piece.choices) {
                streak += 1;
            } else {
                streak = 1;
                last = Some(piece.choices.clone());
            }
            v = w;
            if streak > z && !tried.contains(&piece.choices) {
                tried.push(piece.choices.clone());
                if let Some(mut lam) = solve_piece(path, piece, ratio)? {
                    lam.iterations = used;
                    return Ok(lam);
                }
            }
        }
        if used >= budget {
            break;
        }
    }
    Err(Error::WrongType(format!(
        "no invariant cell with λ > 1 within {budget} iterations: settled cells have λ = 1 \
         (periodic or reducible class), or the budget is too small"
    )))
}

trait LossyF64 {
    fn to_f64_lossy(&self) -> f64;
}

impl LossyF64 for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Eigenvector of the piece for the real eigenvalue nearest `estimate`, if it
/// lies in the piece's cell and is an expanding lamination.
fn solve_piece(path: &FlipPath, piece: PLPiece, estimate: f64) -> Result<Option<StableLamination>> {
    let cp = charpoly(&piece.a);
    let roots = isolate_real_roots(&cp);
    let w = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    let mut best: Option<(f64, _)> = None;
    for r in roots {
        let r = refine(&cp.squarefree_part(), &r, &w);
        let mid = ((&r.lo + &r.hi) / BigInt::from(2)).to_f64_lossy();
        let d = (mid - estimate).abs();
        if mid > 1.0 && best.as_ref().is_none_or(|b| d < b.0) {
            best = Some((d, r));
        }
    }
    let Some((_, iv)) = best else { return Ok(None) };
    let field = NumberField::new(&cp, &iv)?;
    let lambda = FieldElem::generator(&field);
    if lambda.cmp_value(&FieldElem::from_int(&field, 1)).is_le() {
        return Ok(None);
    }
    let Some(vec) = kernel_vector(&piece.a, &lambda) else { return Ok(None) };
    let total = vec.iter().skip(1).fold(vec[0].clone(), |a, x| a.add(x));
    if total.is_zero() {
        return Ok(None);
    }
    let mut measures: Vec<FieldElem> = vec.iter().map(|x| x.div(&total)).collect::<Result<_>>()?;
    if measures.iter().any(|x| x.signum().is_lt()) {
        // the opposite sign of the same line
        measures.iter_mut().for_each(|x| *x = x.neg());
        if measures.iter().any(|x| x.signum().is_lt()) {
            return Ok(None);
        }
    }
    if !piece.guards_hold(&measures) {
        return Ok(None);
    }
    let Ok(image) = path.apply(&measures) else { return Ok(None) };
    if image.iter().zip(&measures).any(|(y, x)| !y.sub(&x.mul(&lambda)).is_zero()) {
        return Ok(None);
    }
    Ok(Some(StableLamination { field, lambda, measures, piece, iterations: 0 }))
}

/// The unique (up to scale) solution of `(A - λI)x = 0`, or `None` when the
/// kernel is not a line.
fn kernel_vector(a: &[Vec<BigInt>], lambda: &FieldElem) -> Option<Vec<FieldElem>> {
    let n = a.len();
    let f = lambda.field();
    let mut m: Vec<Vec<FieldElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = FieldElem::from_int(f, a[i][j].clone());
                    if i == j {
                        x.sub(lambda)
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    let mut pivots = vec![];
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv().ok()?;
        for j in col..n {
            m[row][j] = m[row][j].mul(&inv);
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let k = m[r][col].clone();
                for j in col..n {
                    let d = m[row][j].mul(&k);
                    m[r][j] = m[r][j].sub(&d);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if n - pivots.len() != 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut x = vec![FieldElem::from_int(f, 0); n];
    x[free] = FieldElem::from_int(f, 1);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][free].neg();
    }
    Some(x)
}

/// Squarefree primitive integer polynomial vanishing at `x`, where `x` is a
/// polynomial in the field generator over a common denominator.
pub fn annihilating_polynomial(x: &FieldElem) -> IntPolynomial {
    let g = x.field().modulus().clone();
    let num = x.numerator();
    let den = x.denominator();
    if num.degree().unwrap_or(0) == 0 {
        return IntPolynomial::new(vec![-num.coeff(0), den.clone()]).primitive();
    }
    // Res_y(g(y), D*x - P(y))
    let mut b: Vec<IntPolynomial> = num.coeffs().iter().map(|c| IntPolynomial::constant(-c)).collect();
    b[0] = IntPolynomial::new(vec![-num.coeff(0), den.clone()]);
    let r = resultant_y(&g, &b);
    let mut r = r.squarefree_part().primitive();
    if r.leading().is_negative() {
        r = r.neg();
    }
    r
}

/// Generate a certificate under the chosen mode. In adaptive mode the split
/// count is the preperiod plus period of the exact splitting sequence.
pub fn generate(path: &FlipPath, k: &BigRational, mode: Mode, budget: usize) -> Result<Generated> {
    let lam = stable_lamination(path, budget)?;
    let z = path.zeta();
    let track = MeasuredTrainTrack::from_triangulation(path.start(), &lam.measures)?;
    let per = track.detect_periodicity(budget)?;
    if !per.tracks[per.n].is_filling() {
        return Err(Error::WrongType("invariant lamination does not fill: the class is reducible".into()));
    }
    let f: Vec<IntPolynomial> = lam.measures.iter().map(annihilating_polynomial).collect();
    let params = match mode {
        Mode::Strict => box_params(z, path.len(), k),
        Mode::Adaptive => adaptive_params(z, path.len(), k, &f, per.n + per.m)?,
    };
    let bound = box_params(z, path.len(), k).h0;
    for (i, p) in f.iter().enumerate() {
        if p.degree().unwrap_or(0) > z || p.height_ceil()? > bound {
            return Err(Error::Algebra(format!("coordinate {i} has polynomial {p} outside the height bounds")));
        }
    }
    let x = lam.measures.iter().map(|m| m.floor_decimal(params.d1)).collect();
    let certificate = Certificate { zeta: z, d1: params.d1, x, f, params: CertParams::from(&params), mode };
    Ok(Generated { certificate, params, lamination: lam, n: per.n, m: per.m })
}

/// Generate then verify; the report records both outcomes.
pub fn roundtrip(
    path: &FlipPath,
    k: &BigRational,
    mode: Mode,
    budget: usize,
) -> Result<(Generated, super::verify::VerificationReport)> {
    let g = generate(path, k, mode, budget)?;
    let rep = super::verify::verify(path, &g.certificate, &g.params);
    Ok((g, rep))
}

/// Strict constants for a path.
pub fn derive_params(path: &FlipPath, k: &BigRational) -> VerifierParams {
    box_params(path.zeta(), path.len(), k)
}
