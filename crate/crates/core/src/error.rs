use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("`{0}` is reserved for the series variable")]
    ReservedVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("denominator constant term must be 1, found `{0}`")]
    BadConstantTerm(String),
    #[error("denominator power must be at least 1")]
    InvalidPower,
    #[error("expected denominator power 1, found {0}; reduce the denominator first")]
    PowerNotOne(u32),
    #[error("coefficient `{0}` mentions the series variable t")]
    SeriesVariableInCoefficient(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("exponent {exponent} at position {position} exceeds the bound {bound}")]
    ExponentTooLarge {
        position: usize,
        exponent: String,
        bound: u32,
    },
}

impl Error {
    pub(crate) fn bad_parameter(name: &str, reason: impl Into<String>) -> Self {
        Error::BadParameter {
            name: name.to_string(),
            reason: reason.into(),
        }
    }
}
