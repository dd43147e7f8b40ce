use alloc::format;
use alloc::vec::Vec;

use super::PiercingResult;
use crate::depth::depth;
use crate::{Family, GeomError, PointSet, RationalPoint, Result};

/// Number of points of `P` in the four open halfplanes bounded by the axis-parallel lines through a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HalfplaneCounts {
    /// Points with a smaller x-coordinate.
    pub left: usize,
    /// Points with a larger x-coordinate.
    pub right: usize,
    /// Points with a smaller y-coordinate.
    pub below: usize,
    /// Points with a larger y-coordinate.
    pub above: usize,
}

impl HalfplaneCounts {
    /// The largest of the four counts.
    pub fn max(&self) -> usize {
        self.left.max(self.right).max(self.below).max(self.above)
    }
}

fn check_planar(set: &PointSet, min_n: usize, what: &'static str) -> Result<()> {
    if set.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, found: set.dim() });
    }
    if set.len() < min_n.max(1) {
        return Err(GeomError::NotFound(what));
    }
    Ok(())
}

/// Halfplane counts of every member of a planar set, in index order. `O(n log n)`.
pub fn halfplane_counts(set: &PointSet) -> Result<Vec<HalfplaneCounts>> {
    check_planar(set, 1, "halfplane counts of an empty set")?;
    let mut xs: Vec<i64> = set.points().iter().map(|p| p.coord(0)).collect();
    let mut ys: Vec<i64> = set.points().iter().map(|p| p.coord(1)).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    let n = set.len();
    Ok(set
        .points()
        .iter()
        .map(|p| {
            let (x, y) = (p.coord(0), p.coord(1));
            HalfplaneCounts {
                left: xs.partition_point(|&v| v < x),
                right: n - xs.partition_point(|&v| v <= x),
                below: ys.partition_point(|&v| v < y),
                above: n - ys.partition_point(|&v| v <= y),
            }
        })
        .collect())
}

fn member_result(set: &PointSet, family: Family, index: usize, certificate: &str) -> Result<PiercingResult> {
    let point = RationalPoint::from(set.point(index));
    let depth = depth(set, family, &point)?.depth;
    Ok(PiercingResult { point, index: Some(index), depth, certificate: certificate.into() })
}

/// The member of largest depth, ties to the smallest index.
pub fn strong_max(set: &PointSet, family: Family) -> Result<PiercingResult> {
    family.check_dim(set.dim())?;
    if set.is_empty() {
        return Err(GeomError::Empty);
    }
    let mut best: Option<(usize, u64)> = None;
    for (i, p) in set.points().iter().enumerate() {
        let d = depth(set, family, &RationalPoint::from(p))?.depth;
        if best.is_none_or(|(_, b)| d > b) {
            best = Some((i, d));
        }
    }
    let (index, depth) = best.expect("nonempty");
    Ok(PiercingResult {
        point: RationalPoint::from(set.point(index)),
        index: Some(index),
        depth,
        certificate: format!("strong {family}: maximum over {} members", set.len()),
    })
}

/// Picks, among members satisfying `admissible`, the one of largest `family` depth.
fn best_admissible(
    set: &PointSet,
    family: Family,
    admissible: impl Fn(&HalfplaneCounts) -> bool,
    what: &'static str,
) -> Result<PiercingResult> {
    let counts = halfplane_counts(set)?;
    let mut best: Option<PiercingResult> = None;
    for (i, c) in counts.iter().enumerate() {
        if !admissible(c) {
            continue;
        }
        let candidate = member_result(set, family, i, what)?;
        if best.as_ref().is_none_or(|b| candidate.depth > b.depth) {
            best = Some(candidate);
        }
    }
    best.ok_or(GeomError::NotFound(what))
}

/// A member contained in every axis-parallel rectangle holding more than `3n/4` points of `P`.
///
/// A closed rectangle that misses `p` lies inside one of the four open
/// halfplanes bounded by the lines through `p`, so `p` has the property
/// exactly when each of its [`HalfplaneCounts`] is at most `floor(3n/4)`.
/// Such a member always exists: the members whose x-rank passes the test and
/// those whose y-rank passes each number more than `n/2`.
///
/// Among the admissible members the one with the smallest largest count is
/// returned, ties to the smallest index. The depth reported is the
/// Rectangle depth.
pub fn strong_rect_centerpoint(set: &PointSet) -> Result<PiercingResult> {
    check_planar(set, 1, "strong rectangle centerpoint")?;
    let limit = 3 * set.len() / 4;
    let counts = halfplane_counts(set)?;
    let (index, worst) = counts
        .iter()
        .map(HalfplaneCounts::max)
        .enumerate()
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("nonempty");
    if worst > limit {
        return Err(GeomError::NotFound("strong rectangle centerpoint"));
    }
    member_result(set, Family::Rectangle, index, &format!("strong rect-centerpoint: halfplane counts <= {worst}"))
}

/// A member contained in every induced quadrant holding more than `n/2` points of `P`.
///
/// Quadrants open toward `+x, +y`, so a quadrant missing `p` lies in the open
/// halfplane right of `p` or in the one above `p`. The admissible members are
/// those with at most `floor(n/2)` points on each of these sides: the members
/// on or right of the vertical line `v` and on or above the horizontal line
/// `h`, where `v` and `h` pass through the points with exactly
/// `ceil(n/2) - 1` points strictly left of, respectively below, them. The
/// admissible member of largest Quadrant depth is returned, ties to the
/// smallest index.
pub fn quadrant_strong_point(set: &PointSet) -> Result<PiercingResult> {
    check_planar(set, 1, "quadrant strong point")?;
    let limit = set.len() / 2;
    best_admissible(set, Family::Quadrant, |c| c.right <= limit && c.above <= limit, "strong quadrant point")
}

/// A member contained in every induced skyline holding more than `2n/3` points of `P`.
///
/// Skylines are unbounded toward `-y`, so a skyline missing `p` lies left of,
/// right of, or above `p`. The admissible members have at most
/// `floor(2n/3)` points strictly on each of these sides: the region between
/// the vertical lines `v1`, `v2` with `ceil(n/3) - 1` points strictly outside
/// each, on or below the horizontal line `h` with `ceil(n/3) - 1` points
/// strictly above it. The admissible member of largest Skyline depth is
/// returned, ties to the smallest index.
pub fn skyline_strong_point(set: &PointSet) -> Result<PiercingResult> {
    check_planar(set, 1, "skyline strong point")?;
    let limit = 2 * set.len() / 3;
    best_admissible(
        set,
        Family::Skyline,
        |c| c.left <= limit && c.right <= limit && c.below <= limit,
        "strong skyline point",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PointSet {
        PointSet::planar(&[(0, 0), (1, 3), (2, 1), (3, 2)]).unwrap()
    }

    #[test]
    fn strong_max_examples() {
        let chain = PointSet::planar(&[(0, 3), (1, 2), (2, 1), (3, 0)]).unwrap();
        // One point above times two below (or the reverse): the member itself pairs with nothing.
        let r = strong_max(&chain, Family::Quadrant).unwrap();
        assert_eq!((r.index, r.depth), (Some(1), 2));
        let two = PointSet::planar(&[(0, 0), (1, 1)]).unwrap();
        for family in [Family::Rectangle, Family::Quadrant, Family::Disk, Family::Skyline] {
            assert_eq!(strong_max(&two, family).unwrap().depth, 0);
        }
    }

    #[test]
    fn rect_centerpoint_sample() {
        let r = strong_rect_centerpoint(&sample()).unwrap();
        let counts = halfplane_counts(&sample()).unwrap();
        assert!(counts[r.index.unwrap()].max() <= 3);
        assert_eq!(r.index, Some(2));
    }

    #[test]
    fn rect_centerpoint_chain() {
        let chain = PointSet::planar(&(0..8).map(|i| (i, i)).collect::<Vec<_>>()).unwrap();
        let r = strong_rect_centerpoint(&chain).unwrap();
        assert_eq!(r.index, Some(3));
        let one = PointSet::planar(&[(4, 4)]).unwrap();
        assert_eq!(strong_rect_centerpoint(&one).unwrap().index, Some(0));
    }

    #[test]
    fn quadrant_examples() {
        let chain = PointSet::planar(&[(0, 3), (1, 2), (2, 1), (3, 0)]).unwrap();
        let r = quadrant_strong_point(&chain).unwrap();
        assert_eq!(r.depth, 2);
        assert!(quadrant_strong_point(&sample()).unwrap().depth >= 2);
        let two = PointSet::planar(&[(0, 0), (1, 1)]).unwrap();
        assert_eq!(quadrant_strong_point(&two).unwrap().depth, 0);
    }

    #[test]
    fn skyline_examples() {
        let line = PointSet::planar(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(skyline_strong_point(&line).unwrap().index, Some(1));
        let three = PointSet::planar(&[(0, 0), (1, 3), (2, 1)]).unwrap();
        assert_eq!(skyline_strong_point(&three).unwrap().index, Some(0));
    }
}
