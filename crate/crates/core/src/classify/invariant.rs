//! Conjugacy invariant of pseudo-Anosov classes: the periodic part of the
//! maximal splitting sequence of the stable lamination's track.

use serde::{Deserialize, Serialize};

use crate::certify::stable_lamination;
use crate::error::{Error, Result};
use crate::exact::FieldElem;
use crate::mcg::path::FlipPath;
use crate::traintrack::{CanonicalForm, MeasuredTrainTrack};

pub const INVARIANT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleEntry {
    pub code: String,
    /// Branch measures in canonical order, scaled to total 1, each as
    /// `c0 c1 ... / d` in the powers of λ.
    pub measures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PAConjInvariant {
    pub version: u32,
    pub cycle: Vec<CycleEntry>,
    /// Minimal polynomial of λ, constant term first.
    pub lambda_poly: Vec<String>,
    /// λ to 30 places, for reading only.
    pub lambda: String,
}

impl PAConjInvariant {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let inv: Self = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if inv.version != INVARIANT_VERSION {
            return Err(Error::Parse(format!("unsupported invariant version {}", inv.version)));
        }
        Ok(inv)
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }
}

fn encode_code(code: &[usize]) -> String {
    code.iter().map(|&c| if c == usize::MAX { "|".to_string() } else { c.to_string() }).collect::<Vec<_>>().join(",")
}

fn encode_elem(x: &FieldElem) -> String {
    let (num, den) = x.to_strings();
    format!("{}/{}", num.join(" "), den)
}

fn entry(f: &CanonicalForm<FieldElem>) -> Result<CycleEntry> {
    let total = f.measures.iter().skip(1).fold(f.measures[0].clone(), |a, x| a.add(x));
    let measures = f.measures.iter().map(|x| x.div(&total).map(|y| encode_elem(&y))).collect::<Result<_>>()?;
    Ok(CycleEntry { code: encode_code(&f.code), measures })
}

/// Rotate a cycle to its lexicographically least rotation.
pub fn rotation_minimal<T: Ord + Clone>(cycle: &[T]) -> Vec<T> {
    (0..cycle.len())
        .map(|r| cycle[r..].iter().chain(&cycle[..r]).cloned().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// The invariant of a pseudo-Anosov path. Fails with `WrongType` when no
/// filling expanding lamination exists, and `PeriodicityNotFound` when the
/// splitting budget runs out.
pub fn pa_invariant(path: &FlipPath, budget: usize) -> Result<PAConjInvariant> {
    let lam = stable_lamination(path, budget)?;
    let track = MeasuredTrainTrack::from_triangulation(path.start(), &lam.measures)?;
    let per = track.detect_periodicity(budget)?;
    if !per.tracks[per.n].is_filling() {
        return Err(Error::WrongType("invariant lamination does not fill".into()));
    }
    let cycle = per.forms[per.n..per.n + per.m].iter().map(entry).collect::<Result<Vec<_>>>()?;
    Ok(PAConjInvariant {
        version: INVARIANT_VERSION,
        cycle: rotation_minimal(&cycle),
        lambda_poly: lam.field.modulus().to_strings(),
        lambda: lam.field.lambda_approx(30).to_string(),
    })
}

/// Equality of invariants; both paths must be pseudo-Anosov.
pub fn pa_conjugate(p: &FlipPath, q: &FlipPath, budget: usize) -> Result<bool> {
    let (a, b) = std::thread::scope(|s| {
        let a = s.spawn(|| pa_invariant(p, budget));
        let b = pa_invariant(q, budget);
        (a.join().expect("invariant thread"), b)
    });
    Ok(a? == b?)
}
