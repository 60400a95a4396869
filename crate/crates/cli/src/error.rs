use std::fmt;

use edge_expand::Error;

/// A failed command, carrying its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input: exit 2.
    Input(String),
    /// Graph size outside what the command supports: exit 3.
    Size(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Size(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Size(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooSmall(_) | Error::TooLarge { .. } => CliError::Size(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub fn with_context(context: &str) -> impl Fn(Error) -> CliError + '_ {
    move |e| match CliError::from(e) {
        CliError::Input(m) => CliError::Input(format!("{context}: {m}")),
        CliError::Size(m) => CliError::Size(format!("{context}: {m}")),
    }
}
