use thiserror::Error;

/// Errors raised by mathematical precondition violations.
///
/// These are distinct from panics: a panic means an internal invariant was
/// broken, an `Error` means the caller asked for something outside the
/// domain of the operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroDenominator: denominator polynomial is zero")]
    ZeroDenominator,
    #[error("DivisionByZero: division by the zero field element")]
    DivisionByZero,
    #[error("PoleAtPoint: denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("AlreadyPresent: position {0} already in the set")]
    AlreadyPresent(usize),
    #[error("WrongCardinality: expected a set of cardinality {expected}, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("InvalidLabel: {0}")]
    InvalidLabel(String),
    #[error("MixedFermionicDegree: all terms of a polynomial must share one fermionic degree")]
    MixedFermionicDegree,
    #[error("DegenerateSpectralGap: spectral values at adjacent positions coincide")]
    DegenerateSpectralGap,
    #[error("NotColumnStrict: the labeled tableau has a repeated value in column 1")]
    NotColumnStrict,
    #[error("NotRowStrict: the labeled tableau has a repeated value in row 1")]
    NotRowStrict,
    #[error("ParameterOutOfRange: {0}")]
    ParameterOutOfRange(String),
    #[error("MalformedInput: {0}")]
    MalformedInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
