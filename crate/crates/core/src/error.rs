//! Error type shared by every module of the crate.
//!
//! Only data-dependent failures are reported through [`CoreError`];
//! violations of documented preconditions (out-of-range indices, mismatched
//! ambient rings, …) panic instead, as they indicate a programming error in
//! the caller rather than a property of the input.

use thiserror::Error;

/// A mathematical rejection or an internal consistency failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// Input list of generators is empty or otherwise unusable.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The quotient is not finite-dimensional: some variable has no pure
    /// power among the leading terms of the Gröbner basis.
    #[error("quotient not Artinian")]
    NotArtinian,

    /// A Milnor algebra turned out infinite-dimensional, i.e. the
    /// hypersurface singularity is not isolated.
    #[error("not an isolated singularity")]
    NotIsolated,

    /// Generators do not all vanish at the origin, so the quotient is not a
    /// local algebra at 0.
    #[error("generators must have zero constant term")]
    NotLocal,

    /// The quotient algebra has dimension < 2 (the maximal ideal is zero),
    /// or an operation requiring dimension > 2 was applied to a
    /// dimension-2 algebra.
    #[error("algebra dimension too small: {0}")]
    DimensionTooSmall(String),

    /// An operation requiring a Gorenstein algebra (1-dimensional socle)
    /// was applied to a non-Gorenstein one.
    #[error("algebra is not Gorenstein (socle dimension {socle_dim})")]
    NotGorenstein { socle_dim: usize },

    /// A matrix that must be invertible is singular.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// A ternary cubic is not of the supported shape
    /// a·z₁³ + b·z₂³ + c·z₃³ + 6d·z₁z₂z₃.
    #[error("unsupported cubic shape: {0}")]
    UnsupportedCubicShape(String),

    /// A requested absolute invariant is undefined because a denominator
    /// vanishes; the offending denominator is named.
    #[error("invariant undefined (vanishing denominator: {denominator})")]
    UndefinedInvariant { denominator: String },

    /// The selected subspace L (degree-1 standard-monomial classes) fails to
    /// span 𝔪/𝔪², or the presentation is not minimal where a minimal one is
    /// required.
    #[error("restriction subspace unavailable: {0}")]
    RestrictionUnavailable(String),

    /// A consistency check that should hold by theory failed — this
    /// indicates a bug, never a property of valid input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
