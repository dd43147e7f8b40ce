//! Exact angular order of integer vectors.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{GeomError, Result};

pub(crate) type Vec2 = (i128, i128);

/// Components at or above this bound could overflow a cross product.
const COMPONENT_BOUND: u128 = 1 << 62;

pub(crate) fn check_components(vs: &[Vec2]) -> Result<()> {
    if vs.iter().all(|v| v.0.unsigned_abs() < COMPONENT_BOUND && v.1.unsigned_abs() < COMPONENT_BOUND) {
        Ok(())
    } else {
        Err(GeomError::Overflow)
    }
}

pub(crate) fn cross(u: Vec2, v: Vec2) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

/// 0 for angles in `[0, pi)`, 1 for `[pi, 2 pi)`.
fn half(v: Vec2) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

/// Compares the polar angles of two nonzero vectors, measured in `[0, 2 pi)`.
pub(crate) fn cmp_angle(u: Vec2, v: Vec2) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&cross(u, v)))
}

/// Nonzero vectors sorted by polar angle, answering open-arc counts.
pub(crate) struct AngularIndex {
    sorted: Vec<Vec2>,
}

impl AngularIndex {
    /// Sorts the vectors; all must be nonzero and pass [`check_components`].
    pub(crate) fn new(mut vs: Vec<Vec2>) -> Self {
        vs.sort_by(|&u, &v| cmp_angle(u, v));
        AngularIndex { sorted: vs }
    }

    fn count_le(&self, u: Vec2) -> usize {
        self.sorted.partition_point(|&w| cmp_angle(w, u) != Ordering::Greater)
    }

    fn count_lt(&self, u: Vec2) -> usize {
        self.sorted.partition_point(|&w| cmp_angle(w, u) == Ordering::Less)
    }

    /// Number of stored vectors strictly inside the counterclockwise arc from
    /// `from` to `to` (the two directions must differ).
    pub(crate) fn count_open_arc(&self, from: Vec2, to: Vec2) -> usize {
        let lo = self.count_le(from);
        let hi = self.count_lt(to);
        if cmp_angle(from, to) == Ordering::Less {
            hi - lo
        } else {
            self.sorted.len() - lo + hi
        }
    }

    /// Number of stored vectors `w` with `v . w < 0`.
    pub(crate) fn count_obtuse(&self, v: Vec2) -> usize {
        self.count_open_arc((-v.1, v.0), (v.1, -v.0))
    }
}
