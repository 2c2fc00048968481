//! Support library for the `brieskorn` binary: serializable record
//! views, the census cache, and output rendering.

pub mod cache;
pub mod output;
pub mod record;

use brieskorn::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for bad input, 2 for exhausted budgets and I/O trouble.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_)
            | CliError::Math(
                Error::TooFewExponents(_)
                | Error::ExponentTooSmall(_)
                | Error::DimensionTooSmall(_)
                | Error::EvenExponentCount(_)
                | Error::BpOrderDomain(_)
                | Error::BadSearchDimension(_)
                | Error::SylvesterPrefixTooLarge(_),
            ) => 1,
            _ => 2,
        }
    }

    /// The reader hung up; conventional CLIs exit quietly on this.
    pub fn is_broken_pipe(&self) -> bool {
        match self {
            CliError::Io(e) => e.kind() == std::io::ErrorKind::BrokenPipe,
            CliError::Json(e) => e.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe),
            CliError::Csv(e) => matches!(
                e.kind(),
                csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe
            ),
            _ => false,
        }
    }
}
