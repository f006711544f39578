pub mod generators;
pub mod path;

pub use generators::{alphabet, generator, word_to_path, MappingInput, PathFile, WordFile};
pub use path::{probe_measures, FlipPath, Move, PLPiece};
