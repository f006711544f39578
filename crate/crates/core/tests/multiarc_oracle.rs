//! The multiarc flip formula against a direct count: glue the pieces of the
//! two triangles along the diagonal into strands of the square, then count
//! strands that cross the new diagonal, minus those parallel to it.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use trackcert::surface::multiarc::{flip_multiarc, is_multiarc, triangle_pieces};
use trackcert::surface::{builtin_surface, Triangulation};

/// Where a strand ends on the boundary of the square `P0 P1 P2 P3`, whose
/// old diagonal runs `P0 P2` and new diagonal `P1 P3`.
#[derive(Clone, Copy, Debug, PartialEq)]
enum End {
    /// Beyond the new diagonal on the `P2` side (or `P2` itself).
    X,
    /// On the `P0` side (or `P0` itself).
    Y,
    /// The apex `P1` or `P3`.
    Apex,
}

fn n(x: &BigInt) -> usize {
    x.to_usize().unwrap()
}

/// Ends of the strands in one triangle. Returns strands that stay inside
/// the triangle, and the far ends of the pieces meeting the diagonal, in
/// order along it from `P0`. `p0_first` says whether the triangle's own
/// orientation runs along the diagonal from `P0`.
fn half(tri: &Triangulation, v: &[BigInt], t: usize, i: usize, p0_first: bool) -> (Vec<(End, End)>, Vec<End>) {
    let p = triangle_pieces(tri, v, t).expect("admissible");
    // side i is the diagonal; corner i-1 is its tail, corner i its head, and
    // corner i+1 the apex
    let (tail, head, apex) = ((i + 2) % 3, i, (i + 1) % 3);
    // T1 (p0_first): tail = P0, head = P2; side i+1 runs P2 -> apex, side
    // i+2 runs apex -> P0. T2: tail = P2, head = P0.
    let (side_next, side_prev) = if p0_first { (End::X, End::Y) } else { (End::Y, End::X) };
    let mut inside = vec![];
    for _ in 0..n(&p.corners[apex]) {
        inside.push((side_next, side_prev));
    }
    let mut tail_arcs = vec![side_prev; n(&p.corners[tail])];
    let mut head_arcs = vec![side_next; n(&p.corners[head])];
    let mut cev = vec![];
    if let Some((side, k)) = &p.cevians {
        let k = n(k);
        if *side == i {
            cev = vec![End::Apex; k];
        } else if *side == (i + 1) % 3 {
            // from the tail vertex to the side after the diagonal
            let tail_end = if p0_first { End::Y } else { End::X };
            inside.extend(std::iter::repeat((tail_end, side_next)).take(k));
        } else {
            let head_end = if p0_first { End::X } else { End::Y };
            inside.extend(std::iter::repeat((head_end, side_prev)).take(k));
        }
    }
    let mut along = vec![];
    if p0_first {
        along.append(&mut tail_arcs);
        along.append(&mut cev);
        along.append(&mut head_arcs);
    } else {
        along.append(&mut head_arcs);
        along.append(&mut cev);
        along.append(&mut tail_arcs);
    }
    (inside, along)
}

fn oracle(tri: &Triangulation, v: &[BigInt], e: usize) -> BigInt {
    let [(t, i), (u, j)] = tri.sides_of(e);
    let (mut strands, a) = half(tri, v, t, i, true);
    let (s2, b) = half(tri, v, u, j, false);
    strands.extend(s2);
    assert_eq!(a.len(), b.len(), "diagonal crossings disagree");
    strands.extend(a.into_iter().zip(b));
    if v[e].is_negative() {
        for _ in 0..n(&-&v[e]) {
            strands.push((End::Y, End::X));
        }
    }
    let crossing = strands.iter().filter(|&&(x, y)| matches!((x, y), (End::X, End::Y) | (End::Y, End::X))).count();
    let parallel = strands.iter().filter(|&&(x, y)| x == End::Apex && y == End::Apex).count();
    BigInt::from(crossing) - BigInt::from(parallel)
}

fn corpus(tri: &Triangulation, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
    let z = tri.zeta();
    let mut out = vec![];
    let mut v = vec![lo; z];
    loop {
        let w: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        if w.iter().any(|x| !x.is_zero()) && is_multiarc(tri, &w).unwrap() {
            out.push(w);
        }
        let mut k = 0;
        while k < z && v[k] == hi {
            v[k] = lo;
            k += 1;
        }
        if k == z {
            return out;
        }
        v[k] += 1;
    }
}

pub fn check_surface(name: &str, lo: i64, hi: i64) -> usize {
    let tri = builtin_surface(name).unwrap();
    let arcs = corpus(&tri, lo, hi);
    assert!(!arcs.is_empty());
    let mut checked = 0;
    for v in &arcs {
        for e in 0..tri.zeta() {
            if !tri.is_flippable(e) {
                continue;
            }
            let sq = tri.square(e).unwrap();
            let w = flip_multiarc(&sq, v);
            assert_eq!(w[e], oracle(&tri, v, e), "{name} {v:?} flip {e}");
            let back_tri = tri.flip(e).unwrap();
            assert!(is_multiarc(&back_tri, &w).unwrap(), "{name} {v:?} flip {e} gives {w:?}");
            let back = flip_multiarc(&back_tri.square(e).unwrap(), &w);
            assert_eq!(&back, v, "double flip of {e}");
            checked += 1;
        }
    }
    checked
}

#[test]
fn torus_corpus_matches_oracle() {
    assert!(check_surface("S_1_1", -3, 6) > 0);
}

#[test]
fn four_punctured_sphere_corpus_matches_oracle() {
    assert!(check_surface("S_0_4", -2, 3) > 0);
}
