//! Nielsen–Thurston type and conjugacy of pseudo-Anosov classes.

pub mod invariant;
pub mod nt;

pub use invariant::{pa_conjugate, pa_invariant, rotation_minimal, CycleEntry, PAConjInvariant};
pub use nt::{nt_classify, order_bound, periodic_order, ClassifySummary, NTType};
