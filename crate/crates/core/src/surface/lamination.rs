//! Measured laminations in edge-vector coordinates.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::triangulation::{FlipSquare, Triangulation};
use crate::error::{Error, Result};
use crate::exact::FixedDecimal;
use crate::scalar::{Scalar, Truncated};

/// File form of an edge vector: decimal strings, with `scale` set when the
/// entries are fixed-point decimals rather than exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeVector {
    pub scale: Option<usize>,
    pub entries: Vec<String>,
}

impl EdgeVector {
    pub fn from_rationals(v: &[BigRational]) -> Self {
        EdgeVector { scale: None, entries: v.iter().map(|x| x.to_string()).collect() }
    }

    pub fn from_decimals(v: &[FixedDecimal]) -> Self {
        EdgeVector { scale: v.first().map(|x| x.scale()), entries: v.iter().map(|x| x.to_string()).collect() }
    }

    pub fn rationals(&self) -> Result<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|s| {
                if s.contains('.') {
                    FixedDecimal::parse(s).map(|d| d.to_rational())
                } else {
                    s.replace('−', "-").parse::<BigRational>().map_err(|_| Error::Parse(format!("bad entry {s:?}")))
                }
            })
            .collect()
    }

    /// Entries as decimals compared to `places` digits.
    pub fn decimals(&self, places: usize) -> Result<Vec<Truncated>> {
        let scale = self.scale.ok_or_else(|| Error::Parse("edge vector has no decimal scale".into()))?;
        self.entries
            .iter()
            .map(|s| {
                let d = FixedDecimal::parse(s)?;
                if d.scale() != scale {
                    return Err(Error::ScaleMismatch(d.scale(), scale));
                }
                Ok(Truncated::new(d, places.min(scale)))
            })
            .collect()
    }
}

fn check_len<S>(tri: &Triangulation, v: &[S]) -> Result<()> {
    if v.len() != tri.zeta() {
        return Err(Error::WrongLength { got: v.len(), expected: tri.zeta() });
    }
    Ok(())
}

/// Corner coordinate at corner `i` of triangle `t`: `(v_x + v_y - v_z) / 2`
/// where `x`, `y` are the sides meeting at the corner and `z` is opposite.
pub fn corner_value<S: Scalar>(tri: &Triangulation, v: &[S], t: usize, i: usize) -> S {
    let s = tri.triangles()[t];
    v[s[i]].add(&v[s[(i + 1) % 3]]).sub(&v[s[(i + 2) % 3]]).half()
}

/// Why `v` fails to be the edge vector of a measured multicurve, where
/// peripheral components are allowed: non-negative, nonzero, and satisfying
/// every triangle inequality.
pub fn measure_defect<S: Scalar>(tri: &Triangulation, v: &[S]) -> Result<Option<String>> {
    check_len(tri, v)?;
    if v.iter().any(|x| x.is_negative()) {
        return Ok(Some("negative entry".into()));
    }
    let total = crate::scalar::sum(v).expect("nonempty");
    if !total.is_positive() {
        return Ok(Some("entries sum to zero".into()));
    }
    for (t, s) in tri.triangles().iter().enumerate() {
        for i in 0..3 {
            if v[s[i]].add(&v[s[(i + 1) % 3]]).compare(&v[s[(i + 2) % 3]]).is_lt() {
                return Ok(Some(format!("triangle inequality fails in triangle {t} at corner {i}")));
            }
        }
    }
    Ok(None)
}

/// Why `v` fails to be a lamination, if it does.
pub fn lamination_defect<S: Scalar>(tri: &Triangulation, v: &[S]) -> Result<Option<String>> {
    if let Some(d) = measure_defect(tri, v)? {
        return Ok(Some(d));
    }
    for (k, corners) in tri.vertices().iter().enumerate() {
        let ok = corners.iter().any(|&(t, i)| {
            let s = tri.triangles()[t];
            v[s[i]].add(&v[s[(i + 1) % 3]]).compare(&v[s[(i + 2) % 3]]).is_eq()
        });
        if !ok {
            return Ok(Some(format!("no corner equality at vertex {k}")));
        }
    }
    Ok(None)
}

pub fn is_lamination<S: Scalar>(tri: &Triangulation, v: &[S]) -> Result<bool> {
    Ok(lamination_defect(tri, v)?.is_none())
}

/// New measure of the flipped diagonal.
pub fn flipped_measure<S: Scalar>(sq: &FlipSquare, v: &[S]) -> S {
    let ac = v[sq.a].add(&v[sq.c]);
    let bd = v[sq.b].add(&v[sq.d]);
    ac.max_with(&bd).sub(&v[sq.e])
}

pub fn flip_lamination<S: Scalar>(sq: &FlipSquare, v: &[S]) -> Vec<S> {
    let mut out = v.to_vec();
    out[sq.e] = flipped_measure(sq, v);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rationals;

    fn torus() -> Triangulation {
        Triangulation::new(vec![[0, 1, 2], [0, 1, 2]]).unwrap()
    }

    #[test]
    fn torus_examples() {
        let t = torus();
        assert!(!is_lamination(&t, &rationals(&[0, 0, 0])).unwrap());
        assert!(is_lamination(&t, &rationals(&[1, 1, 2])).unwrap());
        assert!(!is_lamination(&t, &rationals(&[3, 1, 1])).unwrap());
        // strictly inside every triangle inequality: no peripheral corner
        assert!(!is_lamination(&t, &rationals(&[2, 2, 2])).unwrap());
        assert!(matches!(is_lamination(&t, &rationals(&[1, 1])), Err(Error::WrongLength { .. })));
    }

    #[test]
    fn square_formula_examples() {
        let sq = FlipSquare { e: 4, a: 0, b: 1, c: 2, d: 3 };
        let v = rationals(&[1, 0, 1, 0, 1]);
        assert_eq!(flipped_measure(&sq, &v), rationals(&[1])[0]);
        let v = rationals(&[2, 1, 2, 1, 3]);
        assert_eq!(flipped_measure(&sq, &v), rationals(&[1])[0]);
        let w = flip_lamination(&sq, &flip_lamination(&sq, &v));
        assert_eq!(w, v);
    }

    #[test]
    fn edge_vector_file() {
        let ev = EdgeVector { scale: Some(4), entries: vec!["0.2500".into(), "0.2500".into(), "0.5000".into()] };
        let d = ev.decimals(4).unwrap();
        assert!(is_lamination(&torus(), &d).unwrap());
        let r = ev.rationals().unwrap();
        assert!(is_lamination(&torus(), &r).unwrap());
        let s = serde_json::to_string(&ev).unwrap();
        assert_eq!(serde_json::from_str::<EdgeVector>(&s).unwrap(), ev);
    }
}
