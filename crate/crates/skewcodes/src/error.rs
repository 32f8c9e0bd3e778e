use thiserror::Error;

/// Errors surfaced by the algebra and code-construction layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two elements from different field constructions were combined.
    #[error("field spec mismatch: operands belong to different field constructions")]
    SpecMismatch,

    /// Two skew polynomials over different ring automorphisms were combined.
    #[error("automorphism mismatch: operands use different twists")]
    AutomorphismMismatch,

    /// Inversion of a non-invertible element (zero in F_q, or a + ub with a = 0).
    #[error("not invertible: {0}")]
    NotInvertible(String),

    /// An operation required a unit where a non-unit appeared.
    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("division by zero polynomial")]
    DivisionByZero,

    /// gcrd/lcrm require every nonzero coefficient of both inputs to be a unit.
    #[error("unsupported coefficients: {0}")]
    UnsupportedCoefficients(String),

    /// The divisor does not right-divide the dividend where exact division was required.
    #[error("not a divisor: {0}")]
    NotADivisor(String),

    /// -1 cannot be a square in characteristic 2 in the intended sense.
    #[error("characteristic 2: the minus-one-is-square question is not meaningful")]
    EvenCharacteristic,

    /// multiplicative order is defined only for arguments coprime to the modulus.
    #[error("{a} is not coprime to {n}; multiplicative order undefined")]
    NotCoprime { a: u128, n: u128 },

    /// A length had the wrong parity or was otherwise unsupported.
    #[error("unsupported length {n}: {reason}")]
    UnsupportedLength { n: usize, reason: String },

    /// The automorphism does not have the order required by the operation.
    #[error("automorphism order is {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },

    /// An enumeration would exceed the configured budget.
    #[error("enumeration of {required} items exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// Degree or shape constraint violated.
    #[error("degree error: {0}")]
    DegreeError(String),

    /// The question falls outside the coverage of the implemented criteria.
    #[error("not covered: {0}")]
    NotCovered(String),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A cross-check that should be unconditionally true failed; indicates a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
