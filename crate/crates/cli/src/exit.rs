use std::fmt;

use weightdec::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Ok = 0,
    /// Computation finished but the result failed its own check.
    Failed = 1,
    Argument = 2,
    Resource = 3,
    Io = 4,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn io(path: &str, err: std::io::Error) -> Self {
        Self::new(ExitCode::Io, format!("{path}: {err}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Domain(_) | Error::Argument(_) | Error::Region(_) => ExitCode::Argument,
            Error::Resource(_) => ExitCode::Resource,
            Error::Contract(_) | Error::Consistency(_) | Error::Internal(_) => ExitCode::Failed,
        };
        Self::new(code, err.to_string())
    }
}
