//! Library backing the `mim` command-line tool.
//!
//! The binary itself only parses arguments and routes I/O; everything it
//! computes lives here (and in the `mim` crate) so tests can call it
//! directly.

pub mod commands;
pub mod table;
pub mod worstcase;

use mim::MimError;

/// Process-level error with the exit code it maps to.
///
/// Exit-code contract: 0 success, 2 input validation, 3 degenerate-math
/// condition (the inputs were well-formed but the requested quantity does
/// not exist for them).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(MimError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(
                MimError::DegenerateDistribution
                | MimError::NoCrossing { .. }
                | MimError::DegenerateInterval,
            ) => 3,
            CliError::Math(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<MimError> for CliError {
    fn from(e: MimError) -> Self {
        CliError::Math(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("i/o failure: {e}"))
    }
}

/// Parses an `a:b:step` range argument.
pub fn parse_range(text: &str) -> Result<(f64, f64, f64), CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "range must look like a:b:step, got '{text}'"
        )));
    }
    let mut values = [0.0f64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("'{part}' in range '{text}' is not a number")))?;
    }
    Ok((values[0], values[1], values[2]))
}
