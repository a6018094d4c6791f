use thiserror::Error;

use crate::divisor::Divisor;
use crate::rational::Rational;
use crate::resolution::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resolution data failed validation:\n{0}")]
    Validation(ValidationReport),

    #[error("divisor {0} is not integral")]
    NonIntegral(Divisor),

    #[error("divisor {0} is not effective")]
    NonEffective(Divisor),

    #[error("divisor {0} is not antinef")]
    NotAntinef(Divisor),

    #[error("divisor {0} is not reduced")]
    NotReduced(Divisor),

    #[error("exponent {0} out of range: {1}")]
    BadExponent(Rational, &'static str),

    #[error("{0} is not a jumping number of this ideal")]
    NotAJumpingNumber(Rational),

    #[error("{lambda} is not a candidate jumping number for {divisor}")]
    NotACandidate { lambda: Rational, divisor: Divisor },

    #[error("divisor {divisor} does not contribute to {lambda}")]
    NotContributing { lambda: Rational, divisor: Divisor },

    #[error("the divisor F is zero; there are no jumping numbers")]
    ZeroIdeal,

    #[error("component index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("components {0} and {1} are not adjacent exceptional components")]
    NotAdjacent(usize, usize),

    #[error("unloading did not converge within {0} steps; the input data is corrupt")]
    UnloadingDiverged(usize),

    #[error("adjunction system is singular; the intersection matrix is degenerate")]
    SingularSystem,
}

impl Error {
    /// Process exit code for the CLI: 2 for bad input, 1 for computation errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Validation(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
