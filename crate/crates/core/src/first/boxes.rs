use alloc::format;
use alloc::vec::Vec;

use super::weak::{cell_sweep, WeakConfig};
use super::PiercingResult;
use crate::second::open_depth_profile;
use crate::{Family, PointSet, RationalPoint, Result};

/// A weak piercing point for `d`-dimensional boxes, built one dimension at a time.
///
/// In the plane this is the exact cell sweep of [`weak_max`](super::weak_max)
/// for rectangles. In dimension `d >= 3` the points are projected onto the
/// first `d - 1` axes and the construction recurses to a point `q`. The pairs
/// whose projected box strictly contains `q` keep their extent on the last
/// axis as an open interval, and the last coordinate is the sample of the
/// deepest cell of [`open_depth_profile`] over those intervals (leftmost on
/// ties).
///
/// The reported depth is the number of intervals containing that cell,
/// which is exactly the number of induced boxes strictly containing the
/// returned point. All coordinates are multiples of `1/2`.
pub fn box_point_recursive(set: &PointSet) -> Result<PiercingResult> {
    Family::Box.check_dim(set.dim())?;
    let rows: Vec<&[i64]> = set.points().iter().map(|p| p.coords()).collect();
    let (sample, depth) = recurse(&rows, set.dim())?;
    let point = RationalPoint::new(sample, 2)?;
    Ok(PiercingResult {
        index: set.index_of(&point),
        point,
        depth,
        certificate: format!("recursive box point: {depth} boxes through {} levels", set.dim() - 1),
    })
}

/// Sample numerators over 2 and depth for the first `k` coordinates of the rows.
fn recurse(rows: &[&[i64]], k: usize) -> Result<(Vec<i128>, u64)> {
    if k == 2 {
        let planar: Vec<&[i64]> = rows.iter().map(|r| &r[..2]).collect();
        let sweep = cell_sweep(&planar, WeakConfig::default().cell_cap)?;
        return Ok((sweep.sample, sweep.depth));
    }
    let (mut q, _) = recurse(rows, k - 1)?;
    let strictly_inside = |a: &[i64], b: &[i64]| {
        (0..k - 1).all(|axis| {
            let (lo, hi) = (2 * a[axis].min(b[axis]) as i128, 2 * a[axis].max(b[axis]) as i128);
            lo < q[axis] && q[axis] < hi
        })
    };
    let mut intervals = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if strictly_inside(rows[i], rows[j]) {
                intervals.push((rows[i][k - 1], rows[j][k - 1]));
            }
        }
    }
    let profile = open_depth_profile(&intervals);
    let &(sample, depth) = profile.iter().rev().max_by_key(|c| c.1).expect("profile has a cell");
    q.push(sample);
    Ok((q, depth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random_point_set;
    use crate::depth_brute;

    fn weak_max_check(p: &PointSet) -> u64 {
        super::super::weak_max(p, Family::Rectangle).unwrap().depth
    }

    #[test]
    fn planar_case_is_the_rectangle_sweep() {
        let p = random_point_set(16, 2, 3, false, 1000).unwrap();
        let r = box_point_recursive(&p).unwrap();
        assert_eq!(r.depth, weak_max_check(&p));
    }

    #[test]
    fn depth_is_exact_in_space() {
        for seed in 0..5 {
            let p = random_point_set(16, 3, seed, false, 1000).unwrap();
            let r = box_point_recursive(&p).unwrap();
            assert_eq!(depth_brute(&p, Family::Box, &r.point).unwrap().depth, r.depth);
        }
    }

    #[test]
    fn two_points_in_space() {
        let p = PointSet::from_rows(&[[0, 0, 0], [2, 4, 6]]).unwrap();
        let r = box_point_recursive(&p).unwrap();
        assert_eq!(r.depth, 1);
        assert_eq!(r.point, RationalPoint::new(vec![1, 2, 3], 1).unwrap());
    }
}
