//! Ideal triangulations, flips, and edge-vector coordinates.

pub mod lamination;
pub mod multiarc;
pub mod presets;
pub mod triangulation;

pub use lamination::{flip_lamination, is_lamination, EdgeVector};
pub use multiarc::{flip_multiarc, is_multiarc};
pub use presets::builtin_surface;
pub use triangulation::{FlipSquare, Triangulation};
