//! Measured train tracks as ribbon graphs.
//!
//! A switch has two sides, each an ordered list of branch ends. Side 0 is
//! where trains enter when moving in the switch's direction, side 1 where
//! they leave; both lists run left to right as seen looking along that
//! direction. Every switch is trivalent except that a closed loop keeps a
//! single bivalent switch.
//!
//! Marked points are remembered by a branch side on the boundary of the
//! complementary region that contains them: `(b, j)` means "leave branch
//! `b` from end `j`, the region is on the left".

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::surface::Triangulation;

/// `(branch, 0 | 1)`.
pub type End = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Switch {
    pub sides: [Vec<End>; 2],
}

#[derive(Debug, Clone)]
pub struct Branch<S> {
    /// Switch holding each end.
    pub at: [usize; 2],
    pub measure: S,
}

#[derive(Debug, Clone)]
pub struct MeasuredTrainTrack<S> {
    pub(crate) switches: BTreeMap<usize, Switch>,
    pub(crate) branches: BTreeMap<usize, Branch<S>>,
    pub(crate) marked: Vec<Option<End>>,
    pub(crate) genus: usize,
    pub(crate) next_id: usize,
}

/// How a large branch was split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitKind {
    Left,
    Central,
    Right,
}

impl<S: Scalar> MeasuredTrainTrack<S> {
    /// Track dual to a lamination given by edge measures. Each positive edge
    /// contributes a short branch crossing it; each positive corner
    /// coordinate contributes a branch cutting off that corner.
    pub fn from_triangulation(tri: &Triangulation, v: &[S]) -> Result<Self> {
        let z = tri.zeta();
        if v.len() != z {
            return Err(Error::WrongLength { got: v.len(), expected: z });
        }
        if v.iter().any(|x| x.is_negative()) || v.iter().all(|x| x.is_zero_value()) {
            return Err(Error::NotLamination("measures must be non-negative and not all zero".into()));
        }
        let tris = tri.triangles();
        let corner = |t: usize, i: usize| -> S {
            let s = &tris[t];
            v[s[i]].add(&v[s[(i + 1) % 3]]).sub(&v[s[(i + 2) % 3]]).half()
        };
        for t in 0..tris.len() {
            for i in 0..3 {
                if corner(t, i).is_negative() {
                    return Err(Error::NotLamination(format!("triangle {t} fails a triangle inequality")));
                }
            }
        }
        let mut tt = MeasuredTrainTrack {
            switches: BTreeMap::new(),
            branches: BTreeMap::new(),
            marked: vec![],
            genus: tri.genus(),
            next_id: 0,
        };
        // switch on side i of triangle t, oriented into t
        let mut side_switch: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut edge_branch: BTreeMap<usize, usize> = BTreeMap::new();
        for e in 0..z {
            if v[e].is_zero_value() {
                continue;
            }
            let b = tt.fresh();
            let sides = tri.sides_of(e);
            let mut at = [0; 2];
            for (j, &(t, i)) in sides.iter().enumerate() {
                let s = tt.fresh();
                tt.switches.insert(s, Switch { sides: [vec![(b, j)], vec![]] });
                side_switch.insert((t, i), s);
                at[j] = s;
            }
            tt.branches.insert(b, Branch { at, measure: v[e].clone() });
            edge_branch.insert(e, b);
        }
        let mut corner_branch: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in 0..tris.len() {
            for i in 0..3 {
                let c = corner(t, i);
                if c.is_zero_value() {
                    continue;
                }
                let b = tt.fresh();
                let s0 = side_switch[&(t, i)];
                let s1 = side_switch[&(t, (i + 1) % 3)];
                tt.branches.insert(b, Branch { at: [s0, s1], measure: c });
                corner_branch.insert((t, i), b);
            }
        }
        // facing into the triangle from side i, corner i-1 is on the left
        for t in 0..tris.len() {
            for i in 0..3 {
                if let Some(&s) = side_switch.get(&(t, i)) {
                    let mut out = vec![];
                    if let Some(&b) = corner_branch.get(&(t, (i + 2) % 3)) {
                        out.push((b, 1));
                    }
                    if let Some(&b) = corner_branch.get(&(t, i)) {
                        out.push((b, 0));
                    }
                    tt.switches.get_mut(&s).unwrap().sides[1] = out;
                }
            }
        }
        for vert in tri.vertices() {
            let mut place = None;
            for &(t, i) in vert {
                if let Some(&b) = corner_branch.get(&(t, i)) {
                    place = Some((b, 1));
                    break;
                }
            }
            if place.is_none() {
                for &(t, i) in vert {
                    if let Some(&b) = edge_branch.get(&tris[t][i]) {
                        let j = tri.sides_of(tris[t][i]).iter().position(|&c| c == (t, i)).unwrap();
                        place = Some((b, j));
                        break;
                    }
                }
            }
            tt.marked.push(place);
        }
        tt.tidy();
        tt.check()?;
        Ok(tt)
    }

    /// The track with no branches on a surface of the given genus.
    pub fn empty(genus: usize, marked: usize) -> Self {
        MeasuredTrainTrack {
            switches: BTreeMap::new(),
            branches: BTreeMap::new(),
            marked: vec![None; marked],
            genus,
            next_id: 0,
        }
    }

    /// Same track with every measure multiplied by `k`.
    pub fn scaled(&self, k: &num_bigint::BigInt) -> Self {
        let mut t = self.clone();
        for b in t.branches.values_mut() {
            b.measure = b.measure.scale_int(k);
        }
        t
    }

    /// Same track with branch and switch ids renamed by the given maps.
    pub fn renamed(&self, bmap: &BTreeMap<usize, usize>, smap: &BTreeMap<usize, usize>) -> Self {
        let end = |(b, j): End| (bmap[&b], j);
        MeasuredTrainTrack {
            switches: self
                .switches
                .iter()
                .map(|(s, sw)| (smap[s], Switch { sides: sw.sides.clone().map(|l| l.into_iter().map(end).collect()) }))
                .collect(),
            branches: self
                .branches
                .iter()
                .map(|(b, br)| (bmap[b], Branch { at: br.at.map(|s| smap[&s]), measure: br.measure.clone() }))
                .collect(),
            marked: self.marked.iter().map(|m| m.map(end)).collect(),
            genus: self.genus,
            next_id: bmap.values().chain(smap.values()).max().map_or(0, |m| m + 1),
        }
    }

    fn fresh(&mut self) -> usize {
        self.next_id += 1;
        self.next_id - 1
    }

    pub fn num_branches(&self) -> usize {
        self.branches.len()
    }

    pub fn num_switches(&self) -> usize {
        self.switches.len()
    }

    pub fn num_marked(&self) -> usize {
        self.marked.len()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn branch_ids(&self) -> Vec<usize> {
        self.branches.keys().copied().collect()
    }

    pub fn measure(&self, b: usize) -> Option<&S> {
        self.branches.get(&b).map(|x| &x.measure)
    }

    pub fn measures(&self) -> Vec<S> {
        self.branches.values().map(|b| b.measure.clone()).collect()
    }

    pub fn total_measure(&self) -> Option<S> {
        crate::scalar::sum(&self.measures())
    }

    pub fn switch(&self, s: usize) -> Option<&Switch> {
        self.switches.get(&s)
    }

    pub fn branch(&self, b: usize) -> Option<&Branch<S>> {
        self.branches.get(&b)
    }

    /// `(switch, side, position)` of a branch end.
    pub fn locate(&self, end: End) -> (usize, usize, usize) {
        let s = self.branches[&end.0].at[end.1];
        let sw = &self.switches[&s];
        for side in 0..2 {
            if let Some(k) = sw.sides[side].iter().position(|&x| x == end) {
                return (s, side, k);
            }
        }
        panic!("branch end {end:?} missing from switch {s}")
    }

    pub(crate) fn set_end(&mut self, end: End, s: usize) {
        self.branches.get_mut(&end.0).unwrap().at[end.1] = s;
    }

    /// Remove bivalent switches by merging their branches, except on closed
    /// loops.
    pub(crate) fn tidy(&mut self) {
        loop {
            let found = self.switches.iter().find_map(|(&s, sw)| {
                let bival = sw.sides[0].len() == 1 && sw.sides[1].len() == 1;
                (bival && sw.sides[0][0].0 != sw.sides[1][0].0).then_some(s)
            });
            let Some(s) = found else { break };
            let sw = self.switches.remove(&s).unwrap();
            let (b1, j1) = sw.sides[0][0];
            let (b2, j2) = sw.sides[1][0];
            let far = self.branches[&b2].at[1 - j2];
            // b2's far end is taken over by b1's end j1
            let fs = self.switches.get_mut(&far).unwrap();
            for side in fs.sides.iter_mut() {
                for x in side.iter_mut() {
                    if *x == (b2, 1 - j2) {
                        *x = (b1, j1);
                    }
                }
            }
            self.branches.remove(&b2);
            self.set_end((b1, j1), far);
            for m in self.marked.iter_mut().flatten() {
                if m.0 == b2 {
                    *m = if m.1 == j2 { (b1, 1 - j1) } else { (b1, j1) };
                }
            }
        }
    }

    /// Structural and switch-condition check.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTrack(m));
        let mut seen = 0;
        for (&s, sw) in &self.switches {
            let (l, r) = (sw.sides[0].len(), sw.sides[1].len());
            if l == 0 || r == 0 {
                return bad(format!("switch {s} has all branches on one side"));
            }
            if l + r != 3 && !(l == 1 && r == 1) {
                return bad(format!("switch {s} has valence {}", l + r));
            }
            for side in &sw.sides {
                for &(b, j) in side {
                    match self.branches.get(&b) {
                        Some(br) if br.at[j] == s => seen += 1,
                        _ => return bad(format!("switch {s} lists a stray end ({b},{j})")),
                    }
                }
            }
            let tot = |side: &Vec<End>| {
                crate::scalar::sum(&side.iter().map(|e| self.branches[&e.0].measure.clone()).collect::<Vec<_>>())
            };
            if !tot(&sw.sides[0]).unwrap().compare(&tot(&sw.sides[1]).unwrap()).is_eq() {
                return bad(format!("switch condition fails at switch {s}"));
            }
        }
        if seen != 2 * self.branches.len() {
            return bad("branch ends and switches disagree".into());
        }
        for b in self.branches.values() {
            if !b.measure.is_positive() {
                return bad("non-positive branch measure".into());
            }
        }
        Ok(())
    }

    /// Whether `e` can be split: it is alone on its side at two distinct
    /// trivalent switches.
    pub fn is_large(&self, e: usize) -> bool {
        let Some(br) = self.branches.get(&e) else { return false };
        if br.at[0] == br.at[1] {
            return false;
        }
        (0..2).all(|j| {
            let (s, side, _) = self.locate((e, j));
            let sw = &self.switches[&s];
            sw.sides[side].len() == 1 && sw.sides[1 - side].len() == 2
        })
    }

    /// The four ends around a large branch, travelling from end 0 to end 1:
    /// `[a, d]` behind (left, right) and `[b, c]` ahead (left, right).
    fn neighbours(&self, e: usize) -> [End; 4] {
        let (sa, side_a, _) = self.locate((e, 0));
        let (sb, side_b, _) = self.locate((e, 1));
        let swa = &self.switches[&sa];
        let swb = &self.switches[&sb];
        let (a, d) = if side_a == 1 { (swa.sides[0][0], swa.sides[0][1]) } else { (swa.sides[1][1], swa.sides[1][0]) };
        let (b, c) = if side_b == 0 { (swb.sides[1][0], swb.sides[1][1]) } else { (swb.sides[0][1], swb.sides[0][0]) };
        [a, b, c, d]
    }

    /// Split a large branch. The branch keeps its id in the left and right
    /// cases and disappears in the central case.
    pub fn split_branch(&self, e: usize) -> Result<(Self, SplitKind)> {
        if !self.is_large(e) {
            return Err(Error::NotSplittable(format!("branch {e} is not large")));
        }
        let mut t = self.clone();
        t.move_marks_off(e);
        let [a, b, c, d] = t.neighbours(e);
        let m = |x: End| t.branches[&x.0].measure.clone();
        let kind = match m(a).compare(&m(b)) {
            std::cmp::Ordering::Greater => SplitKind::Left,
            std::cmp::Ordering::Equal => SplitKind::Central,
            std::cmp::Ordering::Less => SplitKind::Right,
        };
        let sa = t.branches[&e].at[0];
        let sb = t.branches[&e].at[1];
        let (swa, swb, mu) = match kind {
            SplitKind::Left => (
                Switch { sides: [vec![a], vec![b, (e, 0)]] },
                Switch { sides: [vec![(e, 1), d], vec![c]] },
                Some(m(a).sub(&m(b))),
            ),
            SplitKind::Right => (
                Switch { sides: [vec![d], vec![(e, 0), c]] },
                Switch { sides: [vec![a, (e, 1)], vec![b]] },
                Some(m(b).sub(&m(a))),
            ),
            SplitKind::Central => (Switch { sides: [vec![a], vec![b]] }, Switch { sides: [vec![d], vec![c]] }, None),
        };
        for (s, sw) in [(sa, swa), (sb, swb)] {
            for side in &sw.sides {
                for &x in side {
                    if x.0 != e {
                        t.set_end(x, s);
                    }
                }
            }
            t.switches.insert(s, sw);
        }
        match mu {
            Some(mu) => t.branches.get_mut(&e).unwrap().measure = mu,
            None => {
                t.branches.remove(&e);
                t.tidy();
            }
        }
        debug_assert!(t.check().is_ok(), "{:?}", t.check());
        Ok((t, kind))
    }

    /// Re-anchor marked points recorded on `e` to another side of the same
    /// region.
    fn move_marks_off(&mut self, e: usize) {
        for k in 0..self.marked.len() {
            let Some(mut st) = self.marked[k] else { continue };
            let mut guard = 0;
            while st.0 == e && guard <= 2 * self.branches.len() {
                st = self.next_side(st).0;
                guard += 1;
            }
            self.marked[k] = Some(st);
        }
    }

    /// Branches of maximal measure.
    pub fn maximal_branches(&self) -> Vec<usize> {
        let Some(max) =
            self.branches.values().map(|b| &b.measure).reduce(|x, y| if x.compare(y).is_lt() { y } else { x })
        else {
            return vec![];
        };
        let max = max.clone();
        self.branches.iter().filter(|(_, b)| b.measure.compare(&max).is_eq()).map(|(&k, _)| k).collect()
    }

    /// Split every branch of maximal measure.
    pub fn maximal_split(&self) -> Result<(Self, Vec<(usize, SplitKind)>)> {
        let maxes = self.maximal_branches();
        if maxes.is_empty() {
            return Err(Error::NotSplittable("empty track".into()));
        }
        let mut t = self.clone();
        let mut kinds = vec![];
        for e in maxes {
            if !t.is_large(e) {
                return Err(Error::NotSplittable(format!(
                    "maximal branch {e} is not large; the track does not carry a lamination"
                )));
            }
            let (n, k) = t.split_branch(e)?;
            t = n;
            kinds.push((e, k));
        }
        Ok((t, kinds))
    }
}
