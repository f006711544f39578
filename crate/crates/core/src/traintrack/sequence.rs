//! Maximal splitting sequences and their projective periodicity.

use serde::Serialize;

use super::canonical::CanonicalForm;
use super::track::{MeasuredTrainTrack, SplitKind};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct SplitRecord {
    pub step: usize,
    pub split: Vec<(usize, SplitKind)>,
}

/// A detected period: `s^(n+m)(T)` is `s^n(T)` rescaled by `1/lambda`.
#[derive(Debug, Clone)]
pub struct Periodicity<S> {
    pub n: usize,
    pub m: usize,
    pub lambda: S,
    pub records: Vec<SplitRecord>,
    /// Tracks `s^0 .. s^(n+m)`.
    pub tracks: Vec<MeasuredTrainTrack<S>>,
    pub forms: Vec<CanonicalForm<S>>,
}

impl<S: Scalar> Periodicity<S> {
    /// Branches of `s^n(T)` split within `steps` further maximal splittings,
    /// out of all of them. Ids persist across left and right splits; a branch
    /// that disappears (split centrally, or absorbed when a neighbouring
    /// central split leaves a bivalent switch) counts as split.
    pub fn branches_split_within(&self, steps: usize) -> (usize, usize) {
        let (hit, total, _) = self.branch_coverage(steps);
        (hit, total)
    }

    /// As `branches_split_within`, also giving the first step count after
    /// which every branch has been split.
    pub fn branch_coverage(&self, steps: usize) -> (usize, usize, Option<usize>) {
        let mut cur = self.tracks[self.n].clone();
        let ids = cur.branch_ids();
        let mut open: Vec<usize> = ids.clone();
        let mut full = None;
        for k in 1..=steps {
            let Ok((next, split)) = cur.maximal_split() else { break };
            open.retain(|b| !split.iter().any(|&(e, _)| e == *b) && next.measure(*b).is_some());
            cur = next;
            if open.is_empty() {
                full = Some(k);
                break;
            }
        }
        (ids.len() - open.len(), ids.len(), full)
    }

    /// The periodic cycle of canonical forms.
    pub fn cycle(&self) -> &[CanonicalForm<S>] {
        &self.forms[self.n..self.n + self.m]
    }
}

/// Why periodicity detection stopped.
#[derive(Debug, Clone, Serialize)]
pub struct NotFound {
    pub steps: usize,
    pub branches: Vec<usize>,
    pub reason: String,
}

impl<S: Scalar> MeasuredTrainTrack<S> {
    /// Iterate maximal splitting until two tracks are projectively equal.
    pub fn detect_periodicity(&self, max_steps: usize) -> std::result::Result<Periodicity<S>, NotFound> {
        let mut tracks = vec![self.clone()];
        let mut forms = vec![self.canonical_form()];
        let mut records = vec![];
        let mut sizes = vec![self.num_branches()];
        for step in 0..max_steps {
            let cur = tracks.last().unwrap();
            let (next, split) = match cur.maximal_split() {
                Ok(x) => x,
                Err(e) => {
                    return Err(NotFound { steps: step, branches: sizes, reason: e.to_string() });
                }
            };
            records.push(SplitRecord { step, split });
            let form = next.canonical_form();
            sizes.push(next.num_branches());
            if let Some(i) = forms.iter().position(|f| f.matches(&form)) {
                let j = forms.len();
                let ti = tracks[i].total_measure().unwrap();
                let tj = next.total_measure().unwrap();
                let lambda = ratio(&ti, &tj);
                tracks.push(next);
                forms.push(form);
                return Ok(Periodicity { n: i, m: j - i, lambda, records, tracks, forms });
            }
            tracks.push(next);
            forms.push(form);
        }
        Err(NotFound { steps: max_steps, branches: sizes, reason: "step budget exhausted".into() })
    }

    /// `s^k(T)`.
    pub fn split_times(&self, k: usize) -> Result<Self> {
        let mut t = self.clone();
        for _ in 0..k {
            t = t.maximal_split()?.0;
        }
        Ok(t)
    }
}

/// `a / b` in the scalar's own arithmetic, where that is available.
fn ratio<S: Scalar>(a: &S, b: &S) -> S {
    S::divide(a, b)
}

impl From<NotFound> for Error {
    fn from(n: NotFound) -> Self {
        Error::PeriodicityNotFound(format!("{} after {} steps", n.reason, n.steps))
    }
}
