//! Loading theory and program files.

use std::fmt;
use std::path::Path;

use clap::ValueEnum;
use collarg::program::compile_with_cap;
use collarg::{Program, Theory};

/// Input file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Collective theory: `args:` header and `sources -> targets` lines.
    Caf,
    /// Ground disjunctive logic program.
    Dlp,
}

/// A failure to obtain usable input; always reported with exit code 2.
#[derive(Debug)]
pub struct InputError(String);

impl InputError {
    pub fn new(path: &Path, message: impl fmt::Display) -> Self {
        InputError(format!("{}: {message}", path.display()))
    }

    /// Parse errors render as `file:line:column: message`.
    fn parse(path: &Path, error: collarg::Error) -> Self {
        match error {
            collarg::Error::Syntax { .. } | collarg::Error::NonGround { .. } => {
                InputError(format!("{}:{error}", path.display()))
            }
            other => InputError::new(path, other),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<collarg::Error> for InputError {
    fn from(e: collarg::Error) -> Self {
        InputError(e.to_string())
    }
}

/// The parsed contents of an input file.
pub enum Input {
    Theory(Theory),
    Program(Program),
}

fn detect(path: &Path, forced: Option<Format>) -> Result<Format, InputError> {
    if let Some(format) = forced {
        return Ok(format);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("caf") => Ok(Format::Caf),
        Some("dlp") => Ok(Format::Dlp),
        _ => Err(InputError::new(
            path,
            "cannot tell the format from the extension (expected .caf or .dlp, or pass --format)",
        )),
    }
}

pub fn load(path: &Path, forced: Option<Format>) -> Result<Input, InputError> {
    let format = detect(path, forced)?;
    let text = std::fs::read_to_string(path).map_err(|e| InputError::new(path, e))?;
    let located = |e| InputError::parse(path, e);
    match format {
        Format::Caf => text.parse().map(Input::Theory).map_err(located),
        Format::Dlp => text.parse().map(Input::Program).map_err(located),
    }
}

pub fn load_program(path: &Path, forced: Option<Format>) -> Result<Program, InputError> {
    match load(path, forced)? {
        Input::Program(p) => Ok(p),
        Input::Theory(_) => Err(InputError::new(path, "expected a program, found a theory")),
    }
}

/// Loads a theory, compiling programs into the theory of their abducibles.
pub fn load_theory(
    path: &Path,
    forced: Option<Format>,
    atom_cap: usize,
) -> Result<Theory, InputError> {
    match load(path, forced)? {
        Input::Theory(t) => Ok(t),
        Input::Program(p) => compile_with_cap(&p, atom_cap).map_err(|e| InputError::new(path, e)),
    }
}
