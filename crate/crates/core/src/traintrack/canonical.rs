//! Labelling-independent encodings of measured train tracks.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::track::{End, MeasuredTrainTrack};
use crate::scalar::{projectively_equal, Scalar};

/// Combinatorial code plus the branch measures in code order. Two tracks are
/// projectively equal iff the codes agree and the measures are proportional.
#[derive(Debug, Clone)]
pub struct CanonicalForm<S> {
    pub code: Vec<usize>,
    pub measures: Vec<S>,
}

impl<S: Scalar> CanonicalForm<S> {
    pub fn matches(&self, o: &Self) -> bool {
        self.code == o.code && projectively_equal(&self.measures, &o.measures)
    }
}

fn cmp_measures<S: Scalar>(a: &[S], b: &[S]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = x.compare(y);
        if c.is_ne() {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

struct Labelling {
    code: Vec<usize>,
    order: Vec<usize>,
}

impl<S: Scalar> MeasuredTrainTrack<S> {
    /// Breadth-first labelling from a directed branch.
    fn label_from(&self, b0: usize, j0: usize) -> Labelling {
        let mut blabel: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let mut slabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut order = vec![b0];
        blabel.insert(b0, (0, j0));
        let mut code = vec![];
        let mut i = 0;
        while i < order.len() {
            let b = order[i];
            let flip = blabel[&b].1;
            for ce in 0..2 {
                let actual = ce ^ flip;
                let s = self.branches[&b].at[actual];
                if slabel.contains_key(&s) {
                    continue;
                }
                slabel.insert(s, slabel.len());
                let sw = &self.switches[&s];
                let ring: Vec<(End, usize)> =
                    sw.sides[1].iter().map(|&x| (x, 1)).chain(sw.sides[0].iter().rev().map(|&x| (x, 0))).collect();
                let k = ring.iter().position(|&(x, _)| x == (b, actual)).unwrap();
                let base_side = ring[k].1;
                code.push(ring.len());
                for r in 0..ring.len() {
                    let ((bb, jj), side) = ring[(k + r) % ring.len()];
                    if !blabel.contains_key(&bb) {
                        blabel.insert(bb, (blabel.len(), jj));
                        order.push(bb);
                    }
                    let (lab, fl) = blabel[&bb];
                    code.extend([(side != base_side) as usize, lab, jj ^ fl]);
                }
            }
            i += 1;
        }
        // marked points, by the least labelled side of their region
        let regions = self.region_boundaries();
        let mut marks = vec![];
        for m in self.marked.iter().flatten() {
            if !blabel.contains_key(&m.0) {
                continue;
            }
            let r = regions.iter().find(|r| r.sides.contains(m)).unwrap();
            let best = r
                .sides
                .iter()
                .map(|&(b, j)| {
                    let (lab, fl) = blabel[&b];
                    2 * lab + (j ^ fl)
                })
                .min()
                .unwrap();
            marks.push(best);
        }
        marks.sort();
        code.push(usize::MAX);
        code.extend(marks);
        Labelling { code, order }
    }

    /// Canonical encoding: the least labelling over all directed starting
    /// branches of each component, components sorted.
    pub fn canonical_form(&self) -> CanonicalForm<S> {
        let mut todo: Vec<usize> = self.branches.keys().copied().collect();
        let mut comps: Vec<CanonicalForm<S>> = vec![];
        while let Some(&first) = todo.first() {
            let comp = self.label_from(first, 0).order;
            let mut best: Option<CanonicalForm<S>> = None;
            for &b in &comp {
                for j in 0..2 {
                    let l = self.label_from(b, j);
                    let cand = CanonicalForm {
                        measures: l.order.iter().map(|x| self.branches[x].measure.clone()).collect(),
                        code: l.code,
                    };
                    let better = match &best {
                        None => true,
                        Some(cur) => {
                            cand.code.cmp(&cur.code).then_with(|| cmp_measures(&cand.measures, &cur.measures)).is_lt()
                        }
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
            todo.retain(|x| !comp.contains(x));
            comps.push(best.unwrap());
        }
        comps.sort_by(|a, b| a.code.cmp(&b.code).then_with(|| cmp_measures(&a.measures, &b.measures)));
        let mut code = vec![comps.len()];
        let mut measures = vec![];
        for c in comps {
            code.push(c.code.len());
            code.extend(c.code);
            measures.extend(c.measures);
        }
        code.push(self.marked.iter().filter(|m| m.is_none()).count());
        CanonicalForm { code, measures }
    }
}
