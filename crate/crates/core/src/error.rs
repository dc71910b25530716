use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("Q(sqrt {0}) is not on the class-number-one whitelist")]
    UnsupportedField(i64),
    #[error("radicand must be nonzero")]
    ZeroRadicand,
    #[error("elements belong to different fields: Q(sqrt {0}) and Q(sqrt {1})")]
    FieldMismatch(i64, i64),
    #[error("residues have different moduli: {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("modulus {0} exceeds the supported maximum {1}")]
    ModulusTooLarge(u64, u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{what} = {value} exceeds the budget {cap}")]
    BudgetExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Q has degree one; there is no splitting to report")]
    DegreeOne,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
