//! Exact computer algebra for root geometry on the projective line.
//!
//! The crate provides arbitrary-precision rational polynomial arithmetic,
//! homogenization to binary forms, GL(2) polynomial transforms, fixed-degree
//! resultants and discriminants, exact real-root isolation, projective root
//! sets with a first-class root at infinity, and delineability checkers over
//! finite base sets and sampled one-parameter paths. Everything except the
//! branch-matching metric is computed exactly over the rationals.

pub mod delineability;
pub mod elimination;
pub mod forms;
pub mod json;
pub mod poly;
pub mod projective;
pub mod rat;
pub mod roots;
pub mod tracking;

pub use forms::{BinaryForm, Matrix2};
pub use poly::{MultiPoly, UniPoly};
pub use projective::{NumProjPoint, ProjPoint};
pub use rat::Rat;
pub use roots::{IsolatedRoot, ProjRootSet, RootLocation};
pub use tracking::{BasePath, RootTrace, TrackStatus, TrackVerdict};

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} in the last variable exceeds the reference degree {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("reference degrees p and q must not both be zero")]
    ZeroReferenceDegrees,
    #[error("discriminant needs reference degree at least 2, got {0}")]
    DiscriminantDegree(usize),
    #[error("matrix has zero determinant")]
    SingularMatrix,
    #[error("projective point needs a nonzero representative")]
    ZeroProjPoint,
    #[error("polynomial nullifies at base point ({point})")]
    Nullified { point: String },
    #[error("input must have positive degree in the projection variable")]
    NotProjectable,
    #[error("sample point lies on a root of a projection polynomial")]
    OnProjectionRoot,
    #[error("ambiguous branch matching at parameter {t}")]
    AmbiguousMatch { t: f64 },
    #[error("path needs at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("root tracking did not reach a consistent verdict: {0}")]
    TrackingFailed(String),
    #[error("circle paths need a two-dimensional base, got {0}")]
    BadCircleBase(usize),
    #[error("cell bounds need a single base variable, got {0} variables")]
    BadCellDimension(usize),
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
