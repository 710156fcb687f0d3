use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// `NotDivisible`, `EquivalenceViolation` and `TheoremViolation` are raised
/// when a computed value contradicts a proven identity. They indicate an
/// implementation bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("tower height is capped at two extensions above the prime field")]
    TowerTooTall,
    #[error("field order too large: {0}")]
    OrderTooLarge(String),
    #[error("element code {code} out of range for a field of order {order}")]
    CodeOutOfRange { code: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("coefficients do not lie in the subfield of order {0}")]
    CoefficientsNotInFixedField(u64),
    #[error("{what} exceeds bound: {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        bound: u128,
    },
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("perturbation constant must be nonzero")]
    ZeroC,
    #[error("equivalent conditions disagree for {prime}: {detail}")]
    EquivalenceViolation { prime: String, detail: String },
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("schema mismatch at line {line}: {detail}")]
    SchemaVersionMismatch { line: usize, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
