//! Exact depth engines and piercing-point finders for selection lemmas on
//! objects induced by pairs of points.
//!
//! Every object in this crate is determined by two points `a`, `b` of a finite
//! integer point set `P`: the axis-parallel rectangle with diagonal `ab`, the
//! disk with diameter `ab`, the quadrant anchored at the pair, and so on (see
//! [`Family`]). The *depth* of a query point is the number of induced objects
//! containing it. The crate provides
//!
//! * exact predicates and depth engines ([`depth_brute`], [`depth_fast`]),
//! * piercing-point finders for the strong and weak variants ([`first`]),
//! * the extremal point sets used as upper-bound witnesses ([`constructions`]),
//! * second-selection engines for an arbitrary subset of the induced objects
//!   ([`second`]).
//!
//! All predicates are polynomial in the coordinates and evaluated in `i128`
//! with overflow checks, so no result depends on floating point. Floats appear
//! only when proposing candidate points; every reported depth is recomputed
//! exactly at a rational point.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

mod angular;
mod depth;
mod error;
mod family;
mod point;
mod predicate;

pub mod constructions;
pub mod first;
pub mod second;

pub use depth::{
    depth, depth_brute, depth_fast, has_fast_path, orthant_counts, quadrant_counts, DepthResult, Engine, QuadrantCounts,
};
pub use error::GeomError;
pub use family::{Family, Variant};
pub use point::{
    validate_general_position, validate_general_position_with, Point, PointSet, RationalPoint, ValidationReport,
    Violation, COCIRCULAR_CAP, COORD_LIMIT,
};
pub use predicate::{contains, multiplicity};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, GeomError>;
