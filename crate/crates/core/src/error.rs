use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in {grammar}: {message}")]
    Syntax { grammar: &'static str, message: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero elements is undefined")]
    BothZero,
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("residue field of {0} is infinite")]
    InfiniteResidueField(String),
    #[error("operation requires a polynomial of positive degree")]
    ConstantPolynomial,
    #[error("polynomial {0} is not primitive")]
    NotPrimitive(String),
    #[error("ideal is not proper")]
    NotProper,
    #[error("ideal {0} is not known to be prime")]
    NotPrimeIdeal(String),
    #[error("unsupported ideal shape: {0}")]
    UnsupportedShape(String),
    #[error("ring {0} has no irreducible elements")]
    NoIrreducibles(String),
    #[error("operation not supported over {0}")]
    UnsupportedRing(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn syntax(grammar: &'static str, message: impl Into<String>) -> Self {
        Error::Syntax { grammar, message: message.into() }
    }
}
