//! Measured train tracks, splitting, filling and periodicity of maximal
//! splitting sequences.

pub mod canonical;
pub mod regions;
pub mod sequence;
pub mod track;

pub use canonical::CanonicalForm;
pub use regions::RegionBoundary;
pub use sequence::{NotFound, Periodicity, SplitRecord};
pub use track::{Branch, End, MeasuredTrainTrack, SplitKind, Switch};

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct SwitchDump {
    pub id: usize,
    pub sides: [Vec<End>; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchDump {
    pub id: usize,
    pub ends: [usize; 2],
    pub measure: String,
}

/// JSON form of a track.
#[derive(Debug, Clone, Serialize)]
pub struct TrackDump {
    pub genus: usize,
    pub switches: Vec<SwitchDump>,
    pub branches: Vec<BranchDump>,
    pub marked: Vec<Option<End>>,
    pub filling: bool,
}

impl<S: Scalar> MeasuredTrainTrack<S> {
    pub fn dump(&self) -> TrackDump {
        TrackDump {
            genus: self.genus,
            switches: self.switches.iter().map(|(&id, s)| SwitchDump { id, sides: s.sides.clone() }).collect(),
            branches: self
                .branches
                .iter()
                .map(|(&id, b)| BranchDump { id, ends: b.at, measure: b.measure.repr() })
                .collect(),
            marked: self.marked.clone(),
            filling: self.is_filling(),
        }
    }
}

#[cfg(test)]
mod tests;
