use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidParameter(String),
    NonExactDivision,
    DivisionByZero,
    VariableMismatch { left: String, right: String },
    NonUnitConstantTerm,
    DivergentTruncation(String),
    /// The same connection coefficient came out different when solved at two
    /// different polynomial degrees.
    ThetaInconsistent { k: usize, n_a: usize, n_b: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NonExactDivision => f.write_str("division is not exact in the Laurent polynomial ring"),
            Error::DivisionByZero => f.write_str("division by zero polynomial"),
            Error::VariableMismatch { left, right } => {
                write!(f, "series variables differ: `{left}` vs `{right}`")
            }
            Error::NonUnitConstantTerm => f.write_str("constant term is not a unit"),
            Error::DivergentTruncation(msg) => write!(f, "product does not converge q-adically: {msg}"),
            Error::ThetaInconsistent { k, n_a, n_b } => {
                write!(f, "theta_{k} differs when solved at N={n_a} and N={n_b}")
            }
        }
    }
}

impl core::error::Error for Error {}
