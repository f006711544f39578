//! Labelled ideal triangulations of punctured surfaces.
//!
//! A triangle is a counter-clockwise triple of edge labels. Gluings are
//! implicit: the two sides carrying the same label are identified with the
//! orientation-reversing map, so every triangulation describes an oriented
//! surface. Corner `i` of a triangle sits between side `i` and side `i + 1`,
//! at the vertex where side `i` ends and side `i + 1` begins.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Corner = (usize, usize);

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Triangulation {
    zeta: usize,
    triangles: Vec<[usize; 3]>,
    vertices: Vec<Vec<Corner>>,
    genus: usize,
    marked: usize,
}

impl PartialEq for Triangulation {
    /// Label-sensitive equality: the same labelled triangles, each up to
    /// cyclic rotation, in any order.
    fn eq(&self, o: &Self) -> bool {
        self.zeta == o.zeta && self.normalized() == o.normalized()
    }
}

impl Eq for Triangulation {}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn rotate_min(t: &[usize; 3]) -> [usize; 3] {
    let k = (0..3).min_by_key(|&i| t[i]).unwrap();
    [t[k], t[(k + 1) % 3], t[(k + 2) % 3]]
}

impl Triangulation {
    pub fn new(triangles: Vec<[usize; 3]>) -> Result<Self> {
        let zeta = triangles.len() * 3 / 2;
        if triangles.is_empty() || triangles.len() % 2 != 0 {
            return Err(Error::BadTriangulation(format!("{} triangles; need a positive even count", triangles.len())));
        }
        let mut count = vec![0usize; zeta];
        for t in &triangles {
            for &s in t {
                if s >= zeta {
                    return Err(Error::BadTriangulation(format!("edge label {s} out of range 0..{zeta}")));
                }
                count[s] += 1;
            }
        }
        if let Some(e) = count.iter().position(|&c| c != 2) {
            return Err(Error::BadTriangulation(format!("edge {e} appears {} times", count[e])));
        }
        let mut tri = Triangulation { zeta, triangles, vertices: vec![], genus: 0, marked: 0 };
        if !tri.connected() {
            return Err(Error::BadTriangulation("triangles do not form a connected surface".into()));
        }
        tri.compute_vertices();
        let f = tri.triangles.len() as i64;
        let chi = tri.vertices.len() as i64 - zeta as i64 + f;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(Error::BadTriangulation(format!("Euler characteristic {chi}")));
        }
        tri.genus = ((2 - chi) / 2) as usize;
        tri.marked = tri.vertices.len();
        if 6 * tri.genus + 3 * tri.marked < 6 || zeta != 6 * tri.genus + 3 * tri.marked - 6 {
            return Err(Error::BadTriangulation("edge count inconsistent with topology".into()));
        }
        Ok(tri)
    }

    fn connected(&self) -> bool {
        let n = self.triangles.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(t) = queue.pop_front() {
            for i in 0..3 {
                let (u, _) = self.other_side(t, i);
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    fn compute_vertices(&mut self) {
        let n = self.triangles.len();
        let mut parent: Vec<usize> = (0..3 * n).collect();
        for t in 0..n {
            for i in 0..3 {
                let (u, j) = self.other_side(t, (i + 1) % 3);
                let a = find(&mut parent, 3 * t + i);
                let b = find(&mut parent, 3 * u + j);
                parent[a] = b;
            }
        }
        let mut groups: BTreeMap<usize, Vec<Corner>> = BTreeMap::new();
        for c in 0..3 * n {
            let r = find(&mut parent, c);
            groups.entry(r).or_default().push((c / 3, c % 3));
        }
        let mut vs: Vec<Vec<Corner>> = groups.into_values().collect();
        vs.sort();
        self.vertices = vs;
    }

    pub fn zeta(&self) -> usize {
        self.zeta
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn vertices(&self) -> &[Vec<Corner>] {
        &self.vertices
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn num_marked(&self) -> usize {
        self.marked
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.marked as i64 - self.zeta as i64 + self.triangles.len() as i64
    }

    /// The two (triangle, side) occurrences of edge `e`.
    pub fn sides_of(&self, e: usize) -> [Corner; 2] {
        let mut out = Vec::with_capacity(2);
        for (t, tri) in self.triangles.iter().enumerate() {
            for (i, &s) in tri.iter().enumerate() {
                if s == e {
                    out.push((t, i));
                }
            }
        }
        [out[0], out[1]]
    }

    /// The other occurrence of the edge on side `i` of triangle `t`.
    pub fn other_side(&self, t: usize, i: usize) -> Corner {
        let e = self.triangles[t][i];
        let [p, q] = self.sides_of(e);
        if p == (t, i) {
            q
        } else {
            p
        }
    }

    /// Index of the vertex containing corner `(t, i)`.
    pub fn vertex_of(&self, corner: Corner) -> usize {
        self.vertices.iter().position(|v| v.contains(&corner)).expect("every corner has a vertex")
    }

    /// Vertices at the two ends of edge `e`.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let (t, i) = self.sides_of(e)[0];
        (self.vertex_of((t, (i + 2) % 3)), self.vertex_of((t, i)))
    }

    pub fn is_flippable(&self, e: usize) -> bool {
        e < self.zeta && {
            let [(t, _), (u, _)] = self.sides_of(e);
            t != u
        }
    }

    /// Labels `(a, b, c, d)` around flippable `e`: the triangles are
    /// `(e, a, b)` and `(e, c, d)` counter-clockwise, so `a`/`c` and `b`/`d`
    /// are opposite sides of the square.
    pub fn square(&self, e: usize) -> Result<FlipSquare> {
        if !self.is_flippable(e) {
            return Err(Error::Unflippable(e));
        }
        let [(t, i), (u, j)] = self.sides_of(e);
        let r1 = self.triangles[t];
        let r2 = self.triangles[u];
        Ok(FlipSquare { e, a: r1[(i + 1) % 3], b: r1[(i + 2) % 3], c: r2[(j + 1) % 3], d: r2[(j + 2) % 3] })
    }

    pub fn flip(&self, e: usize) -> Result<Triangulation> {
        let sq = self.square(e)?;
        let [(t, _), (u, _)] = self.sides_of(e);
        let mut triangles = self.triangles.clone();
        triangles[t] = [e, sq.d, sq.a];
        triangles[u] = [e, sq.b, sq.c];
        Triangulation::new(triangles)
    }

    /// Apply a relabelling: old edge `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Triangulation> {
        check_permutation(perm, self.zeta)?;
        let triangles = self.triangles.iter().map(|t| [perm[t[0]], perm[t[1]], perm[t[2]]]).collect();
        Triangulation::new(triangles)
    }

    /// Triangles rotated to start at their least label, then sorted.
    pub fn normalized(&self) -> Vec<[usize; 3]> {
        let mut ts: Vec<[usize; 3]> = self.triangles.iter().map(rotate_min).collect();
        ts.sort();
        ts
    }

    /// An orientation-preserving combinatorial isomorphism to `o`, as a
    /// relabelling `perm` (old label `i` maps to `perm[i]`) with
    /// `self.relabel(perm) == o`.
    pub fn isomorphism_to(&self, o: &Triangulation) -> Option<Vec<usize>> {
        self.isomorphisms_to(o).into_iter().next()
    }

    pub fn isomorphisms_to(&self, o: &Triangulation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.zeta != o.zeta || self.triangles.len() != o.triangles.len() {
            return out;
        }
        for u in 0..o.triangles.len() {
            for rot in 0..3 {
                if let Some(p) = self.extend_iso(o, u, rot) {
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Triangle correspondence `(u, r)` (side `i` of `t` to side `i + r` of
    /// `u`) of an isomorphism to `o` inducing the relabelling `perm`.
    pub fn label_preserving_map(&self, o: &Triangulation, perm: &[usize]) -> Option<(Vec<(usize, usize)>, Vec<usize>)> {
        for u in 0..o.triangles.len() {
            for rot in 0..3 {
                if let Some((p, m)) = self.extend_iso_full(o, u, rot) {
                    if p == perm {
                        return Some((m, p));
                    }
                }
            }
        }
        None
    }

    fn extend_iso(&self, o: &Triangulation, u0: usize, rot: usize) -> Option<Vec<usize>> {
        self.extend_iso_full(o, u0, rot).map(|(p, _)| p)
    }

    fn extend_iso_full(&self, o: &Triangulation, u0: usize, rot: usize) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
        let n = self.triangles.len();
        // tri_map[t] = (u, r): side i of t goes to side (i + r) % 3 of u
        let mut tri_map: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut used = vec![false; n];
        let mut perm = vec![usize::MAX; self.zeta];
        tri_map[0] = Some((u0, rot));
        used[u0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(t) = queue.pop_front() {
            let (u, r) = tri_map[t].unwrap();
            for i in 0..3 {
                let e = self.triangles[t][i];
                let f = o.triangles[u][(i + r) % 3];
                if perm[e] == usize::MAX {
                    perm[e] = f;
                } else if perm[e] != f {
                    return None;
                }
                let (t2, i2) = self.other_side(t, i);
                let (u2, j2) = o.other_side(u, (i + r) % 3);
                let r2 = (j2 + 3 - i2) % 3;
                match tri_map[t2] {
                    Some(m) if m != (u2, r2) => return None,
                    Some(_) => {}
                    None => {
                        if used[u2] {
                            return None;
                        }
                        used[u2] = true;
                        tri_map[t2] = Some((u2, r2));
                        queue.push_back(t2);
                    }
                }
            }
        }
        Some((perm, tri_map.into_iter().map(|m| m.unwrap()).collect()))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parse the triangulation file format; vertex, genus and marked-point
    /// data are recomputed and must agree with the file.
    pub fn from_json(s: &str) -> Result<Triangulation> {
        let raw: Triangulation = serde_json::from_str(s)?;
        let tri = Triangulation::new(raw.triangles.clone())?;
        if raw.zeta != tri.zeta || raw.genus != tri.genus || raw.marked != tri.marked {
            return Err(Error::BadTriangulation("declared zeta/genus/marked disagree with triangles".into()));
        }
        if !raw.vertices.is_empty() {
            let mut declared: Vec<Vec<Corner>> = raw
                .vertices
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.sort();
                    v
                })
                .collect();
            declared.sort();
            if declared != tri.vertices {
                return Err(Error::BadTriangulation("declared vertices disagree with gluing".into()));
            }
        }
        Ok(tri)
    }
}

pub fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::BadMove(format!("relabelling has length {}, expected {n}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::BadMove(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// The square around a flippable edge `e`, labelled as in the usual flip
/// picture: `e` is the diagonal, `a` and `c` are opposite, `b` and `d` are
/// opposite; the triangles are `(e, a, b)` and `(e, c, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipSquare {
    pub e: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> Triangulation {
        Triangulation::new(vec![[0, 1, 2], [0, 1, 2]]).unwrap()
    }

    #[test]
    fn punctured_torus_counts() {
        let t = torus();
        assert_eq!((t.zeta(), t.genus(), t.num_marked()), (3, 1, 1));
        assert_eq!(t.vertices().len(), 1);
        assert_eq!(t.vertices()[0].len(), 6);
    }

    #[test]
    fn flip_is_involution_and_preserves_topology() {
        let t = torus();
        for e in 0..3 {
            let f = t.flip(e).unwrap();
            assert_eq!((f.zeta(), f.genus(), f.num_marked()), (3, 1, 1));
            assert_eq!(f.flip(e).unwrap(), t);
            assert!(t.isomorphism_to(&f).is_some());
        }
    }

    #[test]
    fn self_folded_edge_is_unflippable() {
        // a once-marked monogon inside a triangle: edge 1 is glued to itself
        let t = Triangulation::new(vec![[0, 1, 1], [0, 2, 2]]);
        if let Ok(t) = t {
            assert_eq!(t.flip(1), Err(Error::Unflippable(1)));
        }
        let err = torus().flip(7);
        assert_eq!(err, Err(Error::Unflippable(7)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Triangulation::new(vec![[0, 1, 2], [0, 1, 1]]).is_err());
        assert!(Triangulation::new(vec![]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let t = torus();
        let s = t.to_json().unwrap();
        assert_eq!(Triangulation::from_json(&s).unwrap(), t);
    }
}
