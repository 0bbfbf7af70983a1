use thiserror::Error;

use crate::gf::Elem;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// Variants fall into three classes (see [`Error::class`]): malformed input,
/// violated mathematical preconditions, and theorem-check mismatches. The last
/// class never describes bad input; it means two independent constructions
/// that must agree did not.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("field of order {p}^{e} exceeds the supported size")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over GF(p)")]
    ReducibleModulus,
    #[error("root of the modulus is not a primitive element")]
    NonPrimitiveModulusRoot,
    #[error("{0} is not a valid field element code")]
    InvalidElement(u64),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("variable index {index} out of range for {m} variables")]
    BadIndex { index: usize, m: usize },
    #[error("duplicate evaluation point {0}")]
    DuplicatePoints(Elem),
    #[error("point set {0} is empty")]
    EmptyComponent(usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("lcm of two zero polynomials")]
    BothZero,
    #[error("denominator vanishes at point {0:?}")]
    DenominatorVanishes(Vec<Elem>),
    #[error("weight polynomial vanishes at point {0:?}")]
    GeneratorVanishes(Vec<Elem>),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("exponent {0:?} lies outside the footprint")]
    ExponentOutOfFootprint(Vec<usize>),
    #[error("code is the zero code")]
    ZeroCode,
    #[error("code is degenerate (zero or full space)")]
    DegenerateCode,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("dual-partner certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("theorem check failed: {0}")]
    MismatchDetected(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// Coarse classification of an [`Error`], used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input could not be parsed or does not describe a valid object.
    Input,
    /// The input is well formed but violates a mathematical precondition.
    Precondition,
    /// A theorem-level cross check failed.
    Mismatch,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            NotPrime(_)
            | InvalidDegree(_)
            | FieldTooLarge { .. }
            | InvalidModulus(_)
            | ReducibleModulus
            | NonPrimitiveModulusRoot
            | InvalidElement(_)
            | DuplicatePoints(_)
            | EmptyComponent(_)
            | BadIndex { .. }
            | Parse { .. } => ErrorClass::Input,
            MismatchDetected(_) => ErrorClass::Mismatch,
            _ => ErrorClass::Precondition,
        }
    }

    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse { column, message: message.into() }
    }
}
