//! Command-line front end. Exit codes: 0 accepted/true/classified,
//! 1 rejected/false, 2 inconclusive or failure, 64 usage error.

mod args;
mod commands;

use std::path::Path;

use clap::Parser;

pub use args::{budget, Cli, Command, Common, DEFAULT_BUDGET};

use crate::error::Error;
use crate::mcg::{word_to_path, FlipPath, MappingInput};
use crate::surface::{builtin_surface, Triangulation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Either a usage problem (exit 64) or a failure of the computation (exit 2).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Io(_)
            | Error::UnknownSurface { .. }
            | Error::UnknownLetter { .. }
            | Error::BadTriangulation(_)
            | Error::BadMove(_)
            | Error::Unflippable(_)
            | Error::MalformedCertificate(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

pub(crate) fn read(p: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
}

pub(crate) fn write(p: &Path, s: &str) -> Result<(), CliError> {
    std::fs::write(p, s).map_err(|e| CliError::Failed(format!("{}: {e}", p.display())))
}

fn located(p: &Path, e: Error) -> CliError {
    CliError::Usage(format!("{}: {e}", p.display()))
}

/// The mapping class named by one of `--word` (with `--surface`) or
/// `--path` (optionally on the triangulation in `--tri`).
pub(crate) fn load_path(
    surface: Option<&str>,
    tri: Option<&Path>,
    word: Option<&str>,
    path: Option<&Path>,
) -> Result<(String, FlipPath), CliError> {
    match (word, path) {
        (Some(_), Some(_)) => Err(CliError::Usage("give exactly one of --word and --path".into())),
        (None, None) => Err(CliError::Usage("missing input: give --word or --path".into())),
        (Some(w), None) => {
            if tri.is_some() {
                return Err(CliError::Usage("--word needs a preset --surface, not --tri".into()));
            }
            let s = surface.ok_or_else(|| CliError::Usage("--word needs --surface".into()))?;
            Ok((s.to_string(), word_to_path(s, w)?))
        }
        (None, Some(p)) => {
            let input = MappingInput::from_json(&read(p)?).map_err(|e| located(p, e))?;
            if let Some(s) = surface {
                if s != input.surface() {
                    return Err(CliError::Usage(format!(
                        "--surface {s} disagrees with {} in {}",
                        input.surface(),
                        p.display()
                    )));
                }
            }
            match (tri, &input) {
                (Some(t), MappingInput::Path(pf)) => {
                    let start = Triangulation::from_json(&read(t)?).map_err(|e| located(t, e))?;
                    let fp = FlipPath::new(start, pf.moves.clone()).map_err(|e| located(p, e))?;
                    Ok((pf.surface.clone(), fp))
                }
                (Some(_), MappingInput::Word(_)) => {
                    Err(CliError::Usage("word files name a preset surface; drop --tri".into()))
                }
                (None, _) => {
                    builtin_surface(input.surface())?;
                    Ok((input.surface().to_string(), input.to_path().map_err(|e| located(p, e))?))
                }
            }
        }
    }
}

/// Run with explicit arguments (the first is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match commands::run(&cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Failed(m)) => {
            eprintln!("failed: {m}");
            EXIT_FAILURE
        }
    }
}

pub fn main() -> i32 {
    run_from(std::env::args_os())
}
