use alloc::string::String;

use crate::Family;

/// Errors raised by the geometric engines.
///
/// Geometric degeneracies that are part of the data (shared coordinates,
/// co-circular quadruples) are reported by
/// [`validate_general_position`](crate::validate_general_position) instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// Dimension required by the receiver.
        expected: usize,
        /// Dimension that was supplied.
        found: usize,
    },
    /// The family is not defined in the requested dimension.
    #[error("{family} is not defined in dimension {dim}")]
    FamilyDimension {
        /// The family that was requested.
        family: Family,
        /// The offending dimension.
        dim: usize,
    },
    /// A coordinate exceeds [`COORD_LIMIT`](crate::COORD_LIMIT).
    #[error("coordinate {value} exceeds the magnitude cap 2^50")]
    CoordinateRange {
        /// The rejected coordinate.
        value: i128,
    },
    /// The query point shares a coordinate with a point of the set other than itself.
    #[error("query point lies on the axis-{axis} grid line of point {index}")]
    CoordinateTie {
        /// Index of the point in the set.
        index: usize,
        /// Axis on which the coordinates agree.
        axis: usize,
    },
    /// An intermediate value did not fit in 128 bits.
    #[error("exact arithmetic overflowed 128 bits")]
    Overflow,
    /// A point set must contain at least one point.
    #[error("point set is empty")]
    Empty,
    /// A point set contains the same point twice.
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    /// A rational point was given a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,
    /// An inducing pair must consist of two distinct points.
    #[error("an inducing pair needs two distinct points")]
    DegeneratePair,
    /// A pair index is out of range or repeats a point.
    #[error("invalid pair ({0}, {1})")]
    InvalidPair(usize, usize),
    /// The instance is larger than the configured cap of an exhaustive search.
    #[error("{what}: n = {n} exceeds the cap {cap}")]
    CapExceeded {
        /// Name of the search that refused the input.
        what: &'static str,
        /// Size of the input.
        n: usize,
        /// Configured cap.
        cap: usize,
    },
    /// No candidate reached the required Tukey depth.
    #[error("no candidate reached Tukey depth {required} after {attempts} attempts")]
    CertificationFailed {
        /// Depth that had to be certified.
        required: usize,
        /// Number of candidates that were verified.
        attempts: usize,
    },
    /// The point set is not symmetric about the origin.
    #[error("point set is not symmetric about the origin")]
    NotSymmetric,
    /// A search that cannot fail on valid input found nothing.
    #[error("{0}")]
    NotFound(&'static str),
    /// The family has no engine for the requested operation.
    #[error("{family} is not supported by {op}")]
    Unsupported {
        /// The family that was requested.
        family: Family,
        /// Operation name.
        op: &'static str,
    },
    /// A construction spec violates its invariants.
    #[error("invalid construction: {0}")]
    InvalidSpec(String),
    /// Rejection sampling did not produce a valid set.
    #[error("rejection sampling gave up after {0} attempts")]
    RetryExhausted(usize),
    /// More pairs were requested than exist.
    #[error("m = {m} exceeds the {available} available pairs")]
    MTooLarge {
        /// Requested number of pairs.
        m: usize,
        /// Number of unordered pairs of the point set.
        available: usize,
    },
    /// `m` lies outside the validity range of a construction.
    #[error("m = {m} is outside the valid range for n = {n}")]
    InvalidRange {
        /// Number of points.
        n: usize,
        /// Requested number of objects.
        m: usize,
    },
}
