//! Complementary regions, traced as cycles of branch sides.

use std::collections::BTreeMap;

use serde::Serialize;

use super::track::{End, MeasuredTrainTrack};
use crate::scalar::Scalar;

/// One boundary cycle of a complementary region.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RegionBoundary {
    pub sides: Vec<End>,
    pub cusps: usize,
    pub marked: usize,
}

impl<S: Scalar> MeasuredTrainTrack<S> {
    /// Follow the region on the left of side `st` to the next branch side.
    /// Returns the next side and whether a cusp was passed.
    pub fn next_side(&self, st: End) -> (End, bool) {
        let arrive = (st.0, 1 - st.1);
        let (s, side, k) = self.locate(arrive);
        let sw = self.switch(s).unwrap();
        let list = &sw.sides[side];
        // the neighbour on the traveller's left
        let left = if side == 0 { k.checked_sub(1) } else { (k + 1 < list.len()).then_some(k + 1) };
        if let Some(n) = left {
            return (list[n], true);
        }
        let out = &sw.sides[1 - side];
        let next = if side == 0 { out[0] } else { out[out.len() - 1] };
        (next, false)
    }

    /// Boundary cycles of all complementary regions.
    pub fn region_boundaries(&self) -> Vec<RegionBoundary> {
        let mut seen: BTreeMap<End, usize> = BTreeMap::new();
        let mut out = vec![];
        for &b in self.branches.keys() {
            for j in 0..2 {
                if seen.contains_key(&(b, j)) {
                    continue;
                }
                let idx = out.len();
                let mut sides = vec![];
                let mut cusps = 0;
                let mut st = (b, j);
                while !seen.contains_key(&st) {
                    seen.insert(st, idx);
                    sides.push(st);
                    let (n, c) = self.next_side(st);
                    cusps += c as usize;
                    st = n;
                }
                out.push(RegionBoundary { sides, cusps, marked: 0 });
            }
        }
        for m in self.marked.iter().flatten() {
            if let Some(&i) = seen.get(m) {
                out[i].marked += 1;
            }
        }
        out
    }

    /// Every complementary region is a disk with at most one marked point,
    /// with at least one cusp if marked and at least three otherwise.
    pub fn is_filling(&self) -> bool {
        if self.branches.is_empty() || self.marked.iter().any(|m| m.is_none()) {
            return false;
        }
        let regions = self.region_boundaries();
        // all regions are disks iff there are exactly chi(S) - chi(track) of them
        let chi = 2 - 2 * self.genus as i64 - self.switches.len() as i64 + self.branches.len() as i64;
        if regions.len() as i64 != chi {
            return false;
        }
        regions.iter().all(|r| match r.marked {
            0 => r.cusps >= 3,
            1 => r.cusps >= 1,
            _ => false,
        })
    }

    /// Sorted (cusps, marked) pairs over the region boundaries.
    pub fn census(&self) -> Vec<(usize, usize)> {
        let mut c: Vec<_> = self.region_boundaries().iter().map(|r| (r.cusps, r.marked)).collect();
        c.sort();
        c
    }
}
