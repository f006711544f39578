//! Certified pseudo-Anosov detection for surface mapping classes given as
//! flip paths, via measured train-track splitting sequences.

pub mod certify;
pub mod classify;
pub mod cli;
pub mod error;
pub mod exact;
pub mod mcg;
pub mod scalar;
pub mod surface;
pub mod traintrack;

pub use error::{Error, Result};
