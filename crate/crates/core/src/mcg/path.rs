//! Flip paths and their piecewise-linear action on edge vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::surface::lamination::{flipped_measure, measure_defect};
use crate::surface::multiarc::flip_multiarc;
use crate::surface::triangulation::check_permutation;
use crate::surface::{FlipSquare, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    Flip(usize),
    /// Old edge `i` is renamed `perm[i]`.
    Relabel(Vec<usize>),
}

fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

fn permute<T: Clone>(v: &[T], perm: &[usize]) -> Vec<T> {
    let mut out = v.to_vec();
    for (i, x) in v.iter().enumerate() {
        out[perm[i]] = x.clone();
    }
    out
}

/// A replayable sequence of moves from a start triangulation. The
/// intermediate triangulations are cached so replays do not redo the
/// combinatorics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipPath {
    moves: Vec<Move>,
    tris: Vec<Triangulation>,
    squares: Vec<Option<FlipSquare>>,
}

impl FlipPath {
    pub fn new(start: Triangulation, moves: Vec<Move>) -> Result<Self> {
        let mut tris = vec![start];
        let mut squares = Vec::with_capacity(moves.len());
        for m in &moves {
            let cur = tris.last().unwrap();
            let (next, sq) = match m {
                Move::Flip(e) => (cur.flip(*e)?, Some(cur.square(*e)?)),
                Move::Relabel(p) => {
                    check_permutation(p, cur.zeta())?;
                    (cur.relabel(p)?, None)
                }
            };
            squares.push(sq);
            tris.push(next);
        }
        Ok(FlipPath { moves, tris, squares })
    }

    pub fn empty(start: Triangulation) -> Self {
        FlipPath { moves: vec![], tris: vec![start], squares: vec![] }
    }

    pub fn start(&self) -> &Triangulation {
        &self.tris[0]
    }

    pub fn end(&self) -> &Triangulation {
        self.tris.last().unwrap()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn triangulations(&self) -> &[Triangulation] {
        &self.tris
    }

    /// ℓ(p): flips and relabellings each count one.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn zeta(&self) -> usize {
        self.start().zeta()
    }

    pub fn num_flips(&self) -> usize {
        self.squares.iter().filter(|s| s.is_some()).count()
    }

    pub fn inverse(&self) -> FlipPath {
        let moves = self
            .moves
            .iter()
            .rev()
            .map(|m| match m {
                Move::Flip(e) => Move::Flip(*e),
                Move::Relabel(p) => Move::Relabel(invert_perm(p)),
            })
            .collect();
        FlipPath::new(self.end().clone(), moves).expect("reversed path is valid")
    }

    pub fn compose(&self, q: &FlipPath) -> Result<FlipPath> {
        if self.end() != q.start() {
            return Err(Error::CompositionMismatch);
        }
        let mut moves = self.moves.clone();
        moves.extend(q.moves.iter().cloned());
        FlipPath::new(self.start().clone(), moves)
    }

    pub fn power(&self, k: usize) -> Result<FlipPath> {
        let mut p = FlipPath::empty(self.start().clone());
        for _ in 0..k {
            p = p.compose(self)?;
        }
        Ok(p)
    }

    /// Image of a measured multicurve (peripheral components allowed).
    pub fn apply<S: Scalar>(&self, v: &[S]) -> Result<Vec<S>> {
        if let Some(d) = measure_defect(self.start(), v)? {
            return Err(Error::NotLamination(d));
        }
        Ok(self.apply_unchecked(v))
    }

    pub fn apply_unchecked<S: Scalar>(&self, v: &[S]) -> Vec<S> {
        let mut v = v.to_vec();
        for (m, sq) in self.moves.iter().zip(&self.squares) {
            match (m, sq) {
                (Move::Flip(_), Some(sq)) => {
                    let x = flipped_measure(sq, &v);
                    v[sq.e] = x;
                }
                (Move::Relabel(p), _) => v = permute(&v, p),
                _ => unreachable!(),
            }
        }
        v
    }

    /// Image of a multiarc in normal coordinates.
    pub fn apply_multiarc(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if !crate::surface::is_multiarc(self.start(), v)? {
            return Err(Error::NotLamination("not an admissible multiarc".into()));
        }
        let mut v = v.to_vec();
        for (m, sq) in self.moves.iter().zip(&self.squares) {
            match (m, sq) {
                (Move::Flip(_), Some(sq)) => v = flip_multiarc(sq, &v),
                (Move::Relabel(p), _) => v = permute(&v, p),
                _ => unreachable!(),
            }
        }
        Ok(v)
    }

    /// The linear piece of the action containing `v`. At each flip the
    /// branch `a + c` is taken when `v_a + v_c >= v_b + v_d` (ties, which are
    /// recorded, go to this first branch).
    pub fn piece_at<S: Scalar>(&self, v: &[S]) -> PLPiece {
        let n = self.zeta();
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        let mut guards = Vec::new();
        let mut choices = Vec::new();
        let mut ties = Vec::new();
        let mut v = v.to_vec();
        let comb = |a: &[Vec<BigInt>], p: usize, q: usize, r: usize, s: usize| -> Vec<BigInt> {
            (0..n).map(|j| &a[p][j] + &a[q][j] - &a[r][j] - &a[s][j]).collect()
        };
        for (k, (m, sq)) in self.moves.iter().zip(&self.squares).enumerate() {
            match (m, sq) {
                (Move::Flip(_), Some(sq)) => {
                    let ac = v[sq.a].add(&v[sq.c]);
                    let bd = v[sq.b].add(&v[sq.d]);
                    let ord = ac.compare(&bd);
                    if ord.is_eq() {
                        ties.push(k);
                    }
                    let first = !ord.is_lt();
                    let (p, q, r, s) = if first { (sq.a, sq.c, sq.b, sq.d) } else { (sq.b, sq.d, sq.a, sq.c) };
                    guards.push(comb(&a, p, q, r, s));
                    let row: Vec<BigInt> = (0..n).map(|j| &a[p][j] + &a[q][j] - &a[sq.e][j]).collect();
                    a[sq.e] = row;
                    choices.push(first);
                    v[sq.e] = if first { ac } else { bd }.sub(&v[sq.e]);
                }
                (Move::Relabel(perm), _) => {
                    a = permute(&a, perm);
                    v = permute(&v, perm);
                }
                _ => unreachable!(),
            }
        }
        PLPiece { a, guards, choices, ties }
    }

    /// Where each marked point of the start goes, for a path ending at a
    /// triangulation label-identical to its start (`None` otherwise).
    /// Marked points are followed physically through every flip; the end
    /// is matched to the start by a label-preserving isomorphism.
    pub fn puncture_permutation(&self) -> Option<Vec<usize>> {
        let start = self.start();
        let mut punct: Vec<usize> = (0..start.vertices().len()).collect();
        for (k, m) in self.moves.iter().enumerate() {
            let (old, new) = (&self.tris[k], &self.tris[k + 1]);
            let Move::Flip(e) = m else { continue };
            let [(t, i), (u, j)] = old.sides_of(*e);
            // old corner of each corner of the two new triangles, following
            // the square's corners through the flip
            let oc = |tri: usize, rot: usize, c: usize| (tri, (rot + c) % 3);
            let mut next = vec![usize::MAX; new.vertices().len()];
            for tt in 0..new.triangles().len() {
                for c in 0..3 {
                    let src = if tt == t {
                        [oc(u, j, 1), oc(t, i, 0), oc(t, i, 1)][c]
                    } else if tt == u {
                        [oc(t, i, 1), oc(t, i, 2), oc(u, j, 1)][c]
                    } else {
                        (tt, c)
                    };
                    next[new.vertex_of((tt, c))] = punct[old.vertex_of(src)];
                }
            }
            punct = next;
        }
        let end = self.end();
        let identity: Vec<usize> = (0..start.zeta()).collect();
        let (tri_map, _) = end.label_preserving_map(start, &identity)?;
        // vertex x of the start corresponds to end vertex y; h(x) = punct[y]
        let mut perm = vec![usize::MAX; punct.len()];
        for (te, &(ts, r)) in tri_map.iter().enumerate() {
            for c in 0..3 {
                let y = end.vertex_of((te, c));
                let x = start.vertex_of((ts, (c + r) % 3));
                perm[x] = punct[y];
            }
        }
        Some(perm)
    }

    /// True when the path ends where it started (label for label) and
    /// fixes the probe set: the coordinate-simplex measures `2 + 2 δ_i`, one
    /// interior measure, and every edge viewed as an arc.
    pub fn is_identity(&self) -> bool {
        if self.end() != self.start() {
            return false;
        }
        for v in probe_measures(self.zeta()) {
            if self.apply_unchecked(&v) != v {
                return false;
            }
        }
        for i in 0..self.zeta() {
            let mut arc = vec![BigInt::zero(); self.zeta()];
            arc[i] = -BigInt::one();
            match self.apply_multiarc(&arc) {
                Ok(w) if w == arc => {}
                _ => return false,
            }
        }
        true
    }
}

/// Probe measures: `2 + 2 δ_i` for each edge, and `2 (ζ + j + 1)`.
pub fn probe_measures(zeta: usize) -> Vec<Vec<num_rational::BigRational>> {
    use crate::scalar::rational;
    let mut out: Vec<Vec<_>> =
        (0..zeta).map(|i| (0..zeta).map(|j| rational(if i == j { 4 } else { 2 })).collect()).collect();
    out.push((0..zeta).map(|j| rational(2 * (zeta + j + 1) as i64)).collect());
    out
}

/// A linear piece of a flip path's action: `A v` on the cell `guards · v >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLPiece {
    pub a: Vec<Vec<BigInt>>,
    pub guards: Vec<Vec<BigInt>>,
    /// Branch taken at each flip (`true` for `a + c`).
    pub choices: Vec<bool>,
    /// Move indices where the two branches compared equal.
    pub ties: Vec<usize>,
}

impl PLPiece {
    pub fn apply<S: Scalar>(&self, v: &[S]) -> Vec<S> {
        mat_vec(&self.a, v)
    }

    pub fn guards_hold<S: Scalar>(&self, v: &[S]) -> bool {
        mat_vec(&self.guards, v).iter().all(|x| !x.is_negative())
    }

    pub fn max_entry_digits(&self) -> usize {
        self.a.iter().chain(&self.guards).flatten().map(crate::exact::decimal::digit_count).max().unwrap_or(1)
    }
}

pub fn mat_vec<S: Scalar>(m: &[Vec<BigInt>], v: &[S]) -> Vec<S> {
    let zero = v[0].zero_like();
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(zero.clone(), |acc, (k, x)| if k.is_zero() { acc } else { acc.add(&x.scale_int(k)) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rationals;
    use crate::surface::builtin_surface;

    #[test]
    fn empty_path() {
        let p = FlipPath::empty(builtin_surface("S_1_1").unwrap());
        let v = rationals(&[1, 1, 2]);
        assert_eq!(p.apply(&v).unwrap(), v);
        let piece = p.piece_at(&v);
        assert!(piece.guards.is_empty());
        assert_eq!(piece.apply(&v), v);
        assert!(p.is_identity());
    }

    #[test]
    fn single_flip_piece() {
        let t = builtin_surface("S_1_1").unwrap();
        let p = FlipPath::new(t.clone(), vec![Move::Flip(2)]).unwrap();
        let sq = t.square(2).unwrap();
        let mut v = rationals(&[0, 0, 0]);
        v[sq.a] = rationals(&[3])[0].clone();
        v[sq.b] = rationals(&[1])[0].clone();
        v[2] = rationals(&[4])[0].clone();
        // on S_1_1 the square's sides are two edges each used twice
        let piece = p.piece_at(&v);
        assert_eq!(piece.apply(&v), p.apply_unchecked(&v));
        assert!(piece.guards_hold(&v));
    }

    #[test]
    fn flip_twice_is_identity() {
        let t = builtin_surface("S_0_5").unwrap();
        for e in 0..t.zeta() {
            if t.is_flippable(e) {
                let p = FlipPath::new(t.clone(), vec![Move::Flip(e), Move::Flip(e)]).unwrap();
                assert!(p.is_identity(), "edge {e}");
                assert!(!FlipPath::new(t.clone(), vec![Move::Flip(e)]).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn json_move_shape() {
        let s = serde_json::to_string(&vec![Move::Flip(2), Move::Relabel(vec![0, 2, 1])]).unwrap();
        assert_eq!(s, r#"[{"flip":2},{"relabel":[0,2,1]}]"#);
    }
}
