use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent at offset {pos} is not a non-negative integer literal")]
    BadExponent { pos: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("term count exceeded the cap of {cap} terms")]
    TermCapExceeded { cap: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("colon or saturation by the zero polynomial")]
    ZeroDivisor,

    #[error("the unit ideal has no {0}")]
    UnitIdeal(&'static str),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("dimension claim {claimed} does not match computed dimension {computed}")]
    DimensionMismatch { claimed: usize, computed: usize },

    #[error("uncertified symbolic power: {0}")]
    UncertifiedSymbolicPower(String),

    #[error("input is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("{0} is not a minimal prime of top dimension")]
    NotMinimalPrime(String),

    #[error("ideal is not generated by a subset of the variables")]
    NotCoordinatePrime,

    #[error("polynomial does not lie in both primes")]
    NotInIntersection,

    #[error("order search exceeded the cap of {cap}")]
    OrderCapExceeded { cap: u32 },

    #[error("regular-sequence check failed: {0}")]
    NotRegularSequence(String),

    #[error("zero polynomial has no finite order")]
    ZeroPolynomial,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
}

impl Error {
    /// True for errors raised by a resource guard rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        match self {
            Error::TermCapExceeded { .. } | Error::OrderCapExceeded { .. } => true,
            Error::AtLine { source, .. } => source.is_resource_cap(),
            _ => false,
        }
    }

    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}
