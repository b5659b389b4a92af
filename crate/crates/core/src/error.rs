//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by algebra, spinor and geometry operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: left is Cl({0},{1}), right is Cl({2},{3})")]
    SignatureMismatch(u8, u8, u8, u8),
    #[error("dimension {0} out of range (need 1 ..= 6)")]
    DimensionOutOfRange(usize),
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientLength { got: usize, expected: usize },
    #[error("non-finite coefficient at blade index {0}")]
    NonFinite(usize),
    #[error("bivector is not a blade (B∧B ≠ 0); general exponentials are unsupported")]
    NotABlade,
    #[error("multivector is not of grade {0}")]
    NotGrade(usize),
    #[error("multivector has odd-grade components; expected an even element")]
    NotEven,
    #[error("element does not lie in the Pauli span {{1, Iσ₁, Iσ₂, Iσ₃}}")]
    NotPauli,
    #[error("element is not a rotor: RR̃ deviates from 1 by {0:.3e}")]
    NotARotor(f64),
    #[error("basis index {0} out of range 0..{1}")]
    IndexOutOfRange(usize, usize),
    #[error("length scale must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("point lies on the representation boundary (x² = λ²)")]
    BoundaryOfDisc,
    #[error("conformal point sits at infinity (X·n = 0)")]
    PointAtInfinity,
    #[error("special conformal map is singular at this point")]
    SingularPoint,
    #[error("line direction vanishes")]
    ZeroDirection,
    #[error("projection into the hyperplane is degenerate (L_P ≈ 0)")]
    DegenerateProjection,
    #[error("twistor is not null: helicity = {0:.3e}")]
    NonNullTwistor(f64),
    #[error("projection part vanishes; the locus is the light cone at infinity")]
    LocusAtInfinity,
    #[error("acceleration vanishes: degenerate axis circle of infinite radius")]
    DegenerateAxis,
    #[error("motion fails the circularity check: {0}")]
    NotCircular(String),
    #[error("scene configuration invalid: {0}")]
    InvalidScene(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
