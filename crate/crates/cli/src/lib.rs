//! Library side of the `hepta` command: instance files, seeded draws,
//! oracle checks, report formatting and the benchmark.

pub mod bench;
pub mod checks;
pub mod instance;
pub mod output;
pub mod random;
pub mod verify;

use hepta::HeptaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] HeptaError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::VerifyFailed => 1,
            CliError::Engine(e) => match e {
                HeptaError::InvalidParams(_) => 2,
                HeptaError::SingularMatrix | HeptaError::SymbolZero { .. } => 3,
                HeptaError::DistinctnessViolated { .. } => 4,
                _ => 1,
            },
        }
    }
}
