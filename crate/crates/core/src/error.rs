use std::fmt;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Preconditions on an argument were violated.
    InvalidInput(String),
    /// A regulated quadrature failed to stabilize; usually signals a
    /// genuinely divergent integral fed to a finite-expectation path.
    NonConvergent(String),
    /// A numerical procedure failed on input that should have been benign.
    Numerical(String),
    /// Evaluation too close to a pole of the tangent modulation.
    PoleProximity { argument: f64, distance: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NonConvergent(msg) => write!(f, "quadrature did not converge: {msg}"),
            Error::Numerical(msg) => write!(f, "numerical failure: {msg}"),
            Error::PoleProximity { argument, distance } => write!(
                f,
                "tan argument {argument} is within {distance} rad of a pole"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
