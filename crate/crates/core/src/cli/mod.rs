//! Command-line surface: presentation files, named families, the
//! verification suite and its report.

pub mod commands;
pub mod expr;
pub mod file;
pub mod named;
pub mod report;
pub mod suite;

pub use expr::{parse_expr, parse_expr_with, ParseError};
pub use file::parse_presentation;
pub use named::build_family;
pub use report::{CheckRecord, Report, Status, Summary};
pub use suite::{run_suite, SuiteConfig};

use thiserror::Error;

use crate::families::FamilyError;
use crate::hopfcheck::HopfError;
use crate::ncpoly::NcError;
use crate::rewrite::RewriteError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}:{err}")]
    Parse { path: String, err: ParseError },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Nc(#[from] NcError),
}

impl CliError {
    /// 2 for usage and input errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io(..) => 2,
            CliError::Family(FamilyError::Nc(_)) | CliError::Nc(_) => 2,
            _ => 1,
        }
    }
}
