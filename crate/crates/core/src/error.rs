use thiserror::Error;

/// Broad classes of failure. The command-line front end maps each family to
/// its own exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorFamily {
    Config,
    Resolution,
    Convergence,
    Invariant,
}

impl ErrorFamily {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorFamily::Config => 1,
            ErrorFamily::Resolution => 2,
            ErrorFamily::Convergence => 3,
            ErrorFamily::Invariant => 4,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("insufficient resolution: {0}")]
    Resolution(String),

    #[error(
        "eigensolver did not converge after {iterations} iterations \
         (worst relative residual {worst_residual:.3e})"
    )]
    NotConverged {
        iterations: usize,
        worst_residual: f64,
        /// Best Ritz values at the time of failure.
        best: Vec<f64>,
    },

    #[error("operator is not positive definite (pivot {pivot} = {value:.3e})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn family(&self) -> ErrorFamily {
        match self {
            Error::InvalidDomain(_) | Error::InvalidInput(_) | Error::Format(_) | Error::Io(_) => ErrorFamily::Config,
            Error::Resolution(_) => ErrorFamily::Resolution,
            Error::NotConverged { .. } | Error::NotPositiveDefinite { .. } => ErrorFamily::Convergence,
            Error::Invariant(_) => ErrorFamily::Invariant,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
