use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::certify::Mode;

pub const DEFAULT_BUDGET: usize = 500;

#[derive(Debug, Parser)]
#[command(name = "trackcert", version, about = "Certify pseudo-Anosov mapping classes given as flip paths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nielsen–Thurston type of a mapping class
    Classify(Common),
    /// Generate a certificate and check it
    Certify {
        #[command(flatten)]
        common: Common,
        /// Where to write the certificate
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a certificate (or every *.json in a directory)
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cert: PathBuf,
        /// Also check this many random single-digit perturbations
        #[arg(long, default_value_t = 0)]
        tamper: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Maximal splitting sequence as CSV
    SplitSeq(Common),
    /// Whether two pseudo-Anosov classes are conjugate
    Conjugate {
        #[arg(long)]
        surface: Option<String>,
        #[arg(long)]
        tri: Option<PathBuf>,
        #[arg(long)]
        word1: Option<String>,
        #[arg(long)]
        word2: Option<String>,
        #[arg(long)]
        path1: Option<PathBuf>,
        #[arg(long)]
        path2: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Preset surface: S_1_1, S_0_4, S_0_5, S_2_1
    #[arg(long)]
    pub surface: Option<String>,
    /// Triangulation file, for path files on a custom surface
    #[arg(long)]
    pub tri: Option<PathBuf>,
    #[arg(long, conflicts_with = "path")]
    pub word: Option<String>,
    /// Word or path file (JSON)
    #[arg(long)]
    pub path: Option<PathBuf>,
    #[arg(long = "K", default_value = "1")]
    pub k: String,
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, default_value = "adaptive")]
    pub mode: Mode,
    /// Machine-readable report (JSON, or CSV for split-seq)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl clap::ValueEnum for Mode {
    fn value_variants<'a>() -> &'a [Self] {
        &[Mode::Adaptive, Mode::Strict]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            Mode::Adaptive => "adaptive",
            Mode::Strict => "strict",
        }))
    }
}

/// `--budget`, else `TRACKCERT_BUDGET`, else the default.
pub fn budget(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("TRACKCERT_BUDGET").ok()?.parse().ok()).unwrap_or(DEFAULT_BUDGET)
}
