use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inversion of zero in GF({0})")]
    InversionOfZero(u32),

    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),

    #[error("monomial does not divide the target")]
    NotDivisible,

    #[error("exponent or degree overflow")]
    DegreeOverflow,

    #[error("zero operand")]
    ZeroOperand,

    #[error("ambiguous module order: generators {0} and {1} share a lead monomial")]
    AmbiguousOrder(usize, usize),

    #[error("no rewriter divides the signature")]
    NoRewriter,

    #[error("input is not homogeneous (generator {0})")]
    RequiresHomogeneous(usize),

    #[error("unknown system `{0}`")]
    UnknownSystem(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("run `{config}` failed: {cause}")]
    RunFailed { config: String, cause: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
