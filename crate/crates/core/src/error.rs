//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands belong to different coefficient rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// Division by the zero value of a coefficient ring.
    #[error("division by zero")]
    DivisionByZero,

    /// Inversion of a coefficient that is not a unit of its ring.
    #[error("not a unit: {0}")]
    NotAUnit(String),

    /// A denominator that is not a member of the multiplicative set.
    #[error("invalid denominator: {0}")]
    InvalidDenominator(String),

    /// Endomorphism or derivation data that is not valid over the ring.
    #[error("invalid map data: {0}")]
    InvalidMap(String),

    /// Monomials of different generator counts were combined.
    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    /// An element does not fit the presentation it was used with.
    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),

    /// Structurally invalid presentation data.
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    /// A presentation failed its rewriting-consistency check.
    #[error("inconsistent presentation: {0} violation(s), first: {1}")]
    InconsistentPresentation(usize, String),

    /// Leading data of the zero element is undefined.
    #[error("undefined leader: zero element")]
    UndefinedLeader,

    /// The operation requires a nonzero coefficient argument.
    #[error("zero coefficient argument")]
    ZeroCoefficient,

    /// The operation is only defined for quasi-commutative presentations.
    #[error("not quasi-commutative: {0}")]
    NotQuasiCommutative(String),

    /// A sigma-inverse was required but the endomorphism carries none.
    #[error("missing inverse data for generator {0}")]
    MissingInverse(usize),

    /// Negative exponent outside the invertible block.
    #[error("negative exponent at position {0} outside the invertible block")]
    NegativeExponent(usize),

    /// Fractions with different sides or multiplicative sets were combined.
    #[error("fraction mismatch: {0}")]
    FractionMismatch(String),

    /// The coefficient fraction field needed here is not supported.
    #[error("unsupported fraction field: {0}")]
    UnsupportedFractionField(String),

    /// The parameter matrix of a quantum space violates its constraints.
    #[error("invalid parameter matrix: {0}")]
    InvalidParameterMatrix(String),

    /// Text that could not be parsed; `pos` is a byte offset.
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Malformed presentation or q-matrix file.
    #[error("file format error: {0}")]
    FileFormat(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
