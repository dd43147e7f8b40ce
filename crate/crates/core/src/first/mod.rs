//! Piercing-point finders for the first selection lemma, and the harness that
//! checks them against the lower and upper bounds.
//!
//! *Strong* finders return a member of `P`; *weak* finders may return any
//! rational point. Every finder reports the exact depth of its point.

use alloc::string::String;

use crate::RationalPoint;

mod bounds;
mod boxes;
mod sphere;
mod strong;
mod tukey;
mod weak;

pub use bounds::{verify_first_selection, BoundCheck, BoundKind, BoundSpec, Method};
pub use boxes::box_point_recursive;
pub use sphere::{hypersphere_weak_point, hypersphere_weak_point_with, peel_pairs, symmetric_peel};
pub use strong::{
    halfplane_counts, quadrant_strong_point, skyline_strong_point, strong_max, strong_rect_centerpoint, HalfplaneCounts,
};
pub use tukey::{tukey_centerpoint, tukey_centerpoint_with, tukey_depth, Centerpoint, TukeyConfig};
pub(crate) use weak::cell_sample;
pub use weak::{weak_max, weak_max_with, WeakConfig};

/// A piercing point with its depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiercingResult {
    /// The point.
    pub point: RationalPoint,
    /// Index of the point in `P` when it is a member.
    pub index: Option<usize>,
    /// Exact number of induced objects strictly containing the point.
    pub depth: u64,
    /// How the point was obtained.
    pub certificate: String,
}
