//! Exact-arithmetic toolkit for ideals of fat points in projective space.
//!
//! The crate has two halves that check each other:
//!
//! * an interpolation oracle ([`interpolation`]) that computes
//!   `dim [I^(t)]_d` for a point configuration by exact rank computations on
//!   Hasse-derivative condition matrices, and
//! * a plane-cubic group-law engine ([`cubic`]) that, for nine points on a
//!   smooth cubic, predicts those dimensions from the torsion order of the
//!   class `3H - (P_1 + ... + P_9)` in `Pic^0` of the cubic.
//!
//! [`verify`] runs both sides against each other; [`catalog`] manufactures
//! nine-point configurations with prescribed torsion order. Everything is
//! exact: scalars are arbitrary-precision rationals or elements of a prime
//! field `F_p` with odd `p`.

pub mod catalog;
pub mod cubic;
pub mod field;
pub mod interpolation;
pub mod linalg;
pub mod projective;
pub mod verify;

pub use field::{FieldSpec, Scalar};
pub use linalg::ExactMatrix;
pub use projective::{ExponentVector, PointConfiguration, ProjectivePoint};

use thiserror::Error;

/// Crate-wide error type. Variants up to `NonInvertible` are malformed-value
/// errors; the rest are mathematical precondition failures reported by the
/// higher-level operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("prime {0} exceeds the supported limit 2^62")]
    PrimeTooLarge(u64),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix shape does not match entry count")]
    ShapeMismatch,
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("points of a configuration must be pairwise distinct")]
    DuplicatePoint,
    #[error("multiplicities must be >= 1")]
    ZeroMultiplicity,
    #[error("ambient dimensions disagree")]
    AmbientMismatch,
    #[error("matrix is not invertible")]
    NonInvertible,

    #[error("general-position test supports at most n+2 points, got {0}")]
    UnsupportedSize(usize),
    #[error("points are not in general position")]
    NotInGeneralPosition,
    #[error("transform is singular")]
    SingularTransform,
    #[error("expected exactly {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("cubic through the points is not unique (solution space has dimension {dim})")]
    AmbiguousCubic { dim: usize },
    #[error("cubic form is identically zero")]
    ZeroCubic,
    #[error("cubic is singular")]
    SingularCubic,
    #[error("no smooth member found in the pencil of cubics through the points")]
    NoSmoothMember,
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("divisor has nonzero degree {0}")]
    NonzeroDegree(i64),
    #[error("class is not torsion of order <= {bound}; cannot evaluate gamma({k})")]
    InsufficientBound { k: u32, bound: u32 },
    #[error("computed ninth point collides with a seed point; choose different seeds")]
    SeedCollision,
    #[error("torsion point does not have finite order within the search bound")]
    NotTorsion,
    #[error("order {order} is not realizable over the requested field{}", detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default())]
    UnrealizableOrder { order: u32, detail: Option<String> },
    #[error("point enumeration requires a prime field with p <= {limit}")]
    EnumerationUnsupported { limit: u64 },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
