//! Multiarcs in normal coordinates. An entry `-k` records `k` parallel
//! copies of that edge; non-negative entries count transverse crossings.
//!
//! Inside a triangle with sides `x, y, z` a multiarc meets the triangle in
//! corner arcs and in "cevians": arcs from a vertex to the opposite side.
//! Cevians from different vertices would cross, so at most one vertex has
//! them, and then the corner arcs at that vertex must be absent. Writing
//! `r_Z = x̂ + ŷ - ẑ` for the doubled corner count opposite `z`, the cevians
//! to `z` number `-r_Z` when `r_Z < 0`, and otherwise all three `r` must be
//! even. These per-triangle conditions are the admissibility test; they
//! do not rule out closed components alongside the arcs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::triangulation::{FlipSquare, Triangulation};
use crate::error::{Error, Result};
use crate::scalar::pos_part;

/// Decomposition of a multiarc inside one triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePieces {
    /// Corner-arc counts, indexed by corner (corner `i` between sides `i`, `i+1`).
    pub corners: [BigInt; 3],
    /// Side index receiving the cevians, and how many there are.
    pub cevians: Option<(usize, BigInt)>,
}

pub fn triangle_pieces(tri: &Triangulation, v: &[BigInt], t: usize) -> Option<TrianglePieces> {
    let s = tri.triangles()[t];
    let h: Vec<BigInt> = s.iter().map(|&e| pos_part(&v[e])).collect();
    // r[i]: doubled corner count at corner i, opposite side i + 2
    let r: Vec<BigInt> = (0..3).map(|i| &h[i] + &h[(i + 1) % 3] - &h[(i + 2) % 3]).collect();
    let neg: Vec<usize> = (0..3).filter(|&i| r[i].is_negative()).collect();
    match neg.as_slice() {
        [] => {
            if r.iter().any(|x| x.is_odd()) {
                return None;
            }
            let c: Vec<BigInt> = r.iter().map(|x| x / 2).collect();
            Some(TrianglePieces { corners: [c[0].clone(), c[1].clone(), c[2].clone()], cevians: None })
        }
        [i] => {
            let k = -&r[*i];
            let side = (i + 2) % 3;
            let mut corners = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
            // corner i+1 sits between sides i+1 and z; it is cut off by arcs
            // crossing side i+1, likewise corner i+2 for side i
            corners[(i + 1) % 3] = h[(i + 1) % 3].clone();
            corners[(i + 2) % 3] = h[*i].clone();
            Some(TrianglePieces { corners, cevians: Some((side, k)) })
        }
        _ => None,
    }
}

/// Admissible nonzero normal coordinates of a multiarc.
pub fn is_multiarc(tri: &Triangulation, v: &[BigInt]) -> Result<bool> {
    if v.len() != tri.zeta() {
        return Err(Error::WrongLength { got: v.len(), expected: tri.zeta() });
    }
    if v.iter().all(|x| x.is_zero()) {
        return Ok(false);
    }
    Ok((0..tri.triangles().len()).all(|t| triangle_pieces(tri, v, t).is_some()))
}

/// Integer entries from rationals, rejecting fractions.
pub fn integer_entries(v: &[BigRational]) -> Result<Vec<BigInt>> {
    v.iter().map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::NonInteger(x.to_string())) }).collect()
}

/// New coordinate of the flipped diagonal for a multiarc.
pub fn flipped_multiarc_measure(sq: &FlipSquare, v: &[BigInt]) -> BigInt {
    let a = pos_part(&v[sq.a]);
    let b = pos_part(&v[sq.b]);
    let c = pos_part(&v[sq.c]);
    let d = pos_part(&v[sq.d]);
    let e = v[sq.e].clone();
    let zero = BigInt::zero();
    let two = BigInt::from(2);
    if e >= &a + &b && a >= d && b >= c {
        &a + &b - &e
    } else if e >= &c + &d && d >= a && c >= b {
        &c + &d - &e
    } else if e <= zero && a >= b && d >= c {
        &a + &d - &e
    } else if e <= zero && b >= a && c >= d {
        &b + &c - &e
    } else if e >= zero && a >= &b + &e && d >= &c + &e {
        &a + &d - &two * &e
    } else if e >= zero && b >= &a + &e && c >= &d + &e {
        &b + &c - &two * &e
    } else if &a + &b >= e && &b + &e >= &two * &c + &a && &a + &e >= &two * &d + &b {
        (&a + &b - &e) / &two
    } else if &c + &d >= e && &d + &e >= &two * &a + &c && &c + &e >= &two * &b + &d {
        (&c + &d - &e) / &two
    } else {
        (&a + &c).max(&b + &d) - &e
    }
}

pub fn flip_multiarc(sq: &FlipSquare, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    out[sq.e] = flipped_multiarc_measure(sq, v);
    out
}
