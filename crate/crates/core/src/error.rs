use thiserror::Error;

use crate::su2rep::Spin;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid spin `{0}`: expected a nonnegative integer or half-integer such as `3/2` or `1.5`")]
    InvalidSpin(String),
    #[error("spin {spin} exceeds the configured cap 2j <= {cap}")]
    SpinCap { spin: Spin, cap: u32 },
    #[error("minimal polynomial does not split over the candidate eigenvalues")]
    NonSplitSpectrum,
    #[error("excluded case: {0}")]
    ExcludedCase(String),
    #[error("central character C = {0} admits no eigenvalue for {1}")]
    EmptyCharacter(String, String),
    #[error("product does not reduce into the span of the basis at truncation degree {0}")]
    NotClosed(usize),
    #[error("basis words are linearly dependent modulo the truncated ideal")]
    DependentBasis,
    #[error("presentation parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
