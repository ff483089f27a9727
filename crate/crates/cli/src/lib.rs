//! Command-line front end for `qschur`: coefficient queries, expansions,
//! identity verification and an append-only coefficient cache.

pub mod args;
pub mod cache;
pub mod commands;
pub mod verify;

use std::fmt;

/// Process exit status.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok = 0,
    IdentityFailure = 1,
    Usage = 2,
    Consistency = 3,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Consistency(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Usage(_) => Status::Usage,
            CliError::Consistency(_) | CliError::Io(_) => Status::Consistency,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Consistency(msg) => write!(f, "consistency failure: {msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<qschur::Error> for CliError {
    fn from(e: qschur::Error) -> Self {
        use qschur::Error as E;
        match e {
            E::Parse(..)
            | E::NotAPartition(_)
            | E::NotStrict(_)
            | E::Containment { .. }
            | E::LengthMismatch(..)
            | E::BudgetExceeded { .. } => CliError::Usage(e.to_string()),
            E::NotInQSpan { .. } | E::NotDivisible { .. } | E::Consistency(_) => {
                CliError::Consistency(e.to_string())
            }
        }
    }
}
