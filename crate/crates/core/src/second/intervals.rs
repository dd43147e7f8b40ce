use alloc::vec;
use alloc::vec::Vec;

use super::InducedSubset;
use crate::first::cell_sample;
use crate::{Family, GeomError, PointSet, Result};

/// Number of intervals of a subset containing each point (closed containment).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalProfile {
    /// `I_p` for every point, in index order.
    pub depths: Vec<u64>,
    /// The largest `I_p` (0 for an empty set).
    pub max: u64,
    /// Smallest index attaining the maximum.
    pub argmax: usize,
    /// Whether `max >= m^2 / (2n^2) + 3m / (2n) - 1`.
    pub bound_holds: bool,
}

fn check_line(set: &PointSet) -> Result<()> {
    if set.dim() != 1 {
        return Err(GeomError::DimensionMismatch { expected: 1, found: set.dim() });
    }
    Ok(())
}

/// Whether `max >= m^2 / (2n^2) + 3m / (2n) - 1`, in exact integer form.
pub fn interval_bound_holds(n: usize, m: usize, max: u64) -> bool {
    let (n, m, max) = (n as i128, m as i128, max as i128);
    2 * n * n * max >= m * m + 3 * m * n - 2 * n * n
}

/// `I_p` for every point by a sorted sweep in `O(n log n + m)`.
pub fn interval_depth_profile(set: &PointSet, subset: &InducedSubset) -> Result<IntervalProfile> {
    check_line(set)?;
    subset.check_base(set)?;
    let n = set.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| set.point(i).coord(0));
    let mut rank = vec![0usize; n];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut diff = vec![0i64; n + 1];
    for &(i, j) in subset.pairs() {
        let (lo, hi) = (rank[i].min(rank[j]), rank[i].max(rank[j]));
        diff[lo] += 1;
        diff[hi + 1] -= 1;
    }
    let mut by_rank = vec![0u64; n];
    let mut running = 0i64;
    for r in 0..n {
        running += diff[r];
        by_rank[r] = running as u64;
    }
    let depths: Vec<u64> = (0..n).map(|i| by_rank[rank[i]]).collect();
    let (argmax, max) =
        depths.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).map_or((0, 0), |(i, &d)| (i, d));
    Ok(IntervalProfile { bound_holds: interval_bound_holds(n, subset.len(), max), depths, max, argmax })
}

/// Number of open intervals strictly containing each open cell of the line
/// cut at the interval endpoints.
///
/// Returns one `(sample, count)` per cell from left to right, where
/// `sample / 2` lies inside the cell (midpoints between consecutive distinct
/// endpoints, one unit beyond the extremes). Degenerate intervals contain
/// nothing. With no intervals the single cell is sampled at 0.
pub fn open_depth_profile(intervals: &[(i64, i64)]) -> Vec<(i128, u64)> {
    let mut values: Vec<i64> = intervals.iter().flat_map(|&(a, b)| [a, b]).collect();
    values.sort_unstable();
    values.dedup();
    if values.is_empty() {
        return vec![(0, 0)];
    }
    let mut diff = vec![0i64; values.len() + 2];
    for &(a, b) in intervals {
        let (lo, hi) = (a.min(b), a.max(b));
        if lo == hi {
            continue;
        }
        let lo = values.binary_search(&lo).expect("endpoint present");
        let hi = values.binary_search(&hi).expect("endpoint present");
        diff[lo + 1] += 1;
        diff[hi + 1] -= 1;
    }
    let mut running = 0i64;
    (0..=values.len())
        .map(|c| {
            running += diff[c];
            (cell_sample(&values, c), running as u64)
        })
        .collect()
}

/// Whether every interval of the subset, grouped by left endpoint and
/// ranked by right endpoint, contains at least one more point than its rank.
///
/// The `j`-th interval (from 1) with a given left endpoint has `j` distinct
/// right endpoints at or before its own, so it contains at least `j + 1`
/// points of `P`.
pub fn interval_partition_holds(set: &PointSet, subset: &InducedSubset) -> Result<bool> {
    check_line(set)?;
    subset.check_base(set)?;
    let mut sorted: Vec<i64> = set.points().iter().map(|p| p.coord(0)).collect();
    sorted.sort_unstable();
    let mut groups: Vec<Vec<(i64, i64)>> = vec![Vec::new(); set.len()];
    for &(i, j) in subset.pairs() {
        let (a, b) = (set.point(i).coord(0), set.point(j).coord(0));
        let (lo, hi) = (a.min(b), a.max(b));
        let left = if a <= b { i } else { j };
        groups[left].push((lo, hi));
    }
    for group in groups.iter_mut() {
        group.sort_by_key(|&(_, hi)| hi);
        for (j, &(lo, hi)) in group.iter().enumerate() {
            let inside = sorted.partition_point(|&x| x <= hi) - sorted.partition_point(|&x| x < lo);
            if inside < j + 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The prefix-interval construction for the interval upper bound.
///
/// The points are `1, ..., n`. With `k` the smallest integer satisfying
/// `k^2 n^2 >= 2 m^2` (that is `ceil(sqrt(2) m / n)`), every point `x_i` starts
/// the intervals `[x_i, x_{i+1}], ..., [x_i, x_{i+k}]` that fit. The first `m`
/// of these are kept, shortest first and left to right among equal lengths.
///
/// Requires `m <= n^2 (sqrt 2 - 1) - n / sqrt 2`, checked exactly as
/// `2 (m + n^2)^2 <= (2 n^2 - n)^2`; fails with [`GeomError::InvalidRange`]
/// outside that range or when fewer than `m` intervals are available.
pub fn gen_interval_upper(n: usize, m: usize) -> Result<(PointSet, InducedSubset)> {
    let invalid = GeomError::InvalidRange { n, m };
    if n == 0 {
        return Err(invalid);
    }
    let (nn, mm) = (n as u128, m as u128);
    let sq = |x: u128| x.checked_mul(x);
    let lhs = sq(mm + nn * nn).map(|x| 2 * x);
    let rhs = sq(2 * nn * nn - nn);
    if lhs.zip(rhs).is_none_or(|(l, r)| l > r) {
        return Err(invalid);
    }
    let mut k = 0u128;
    while k * k * nn * nn < 2 * mm * mm {
        k += 1;
    }
    let k = k as usize;
    let mut pairs = Vec::with_capacity(m);
    'lengths: for len in 1..=k {
        for i in 0..n.saturating_sub(len) {
            if pairs.len() == m {
                break 'lengths;
            }
            pairs.push((i, i + len));
        }
    }
    if pairs.len() < m {
        return Err(invalid);
    }
    let values: Vec<i64> = (1..=n as i64).collect();
    Ok((PointSet::line(&values)?, InducedSubset::new(n, Family::Interval, pairs)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: i64) -> PointSet {
        PointSet::line(&(1..=n).collect::<Vec<_>>()).unwrap()
    }

    /// Closed containment by direct comparison.
    fn brute(set: &PointSet, subset: &InducedSubset) -> Vec<u64> {
        set.points()
            .iter()
            .map(|p| {
                subset
                    .pairs()
                    .iter()
                    .filter(|&&(i, j)| {
                        let (a, b) = (set.point(i).coord(0), set.point(j).coord(0));
                        a.min(b) <= p.coord(0) && p.coord(0) <= a.max(b)
                    })
                    .count() as u64
            })
            .collect()
    }

    #[test]
    fn all_intervals_on_four_points() {
        let p = line(4);
        let s = InducedSubset::all(4, Family::Interval);
        let profile = interval_depth_profile(&p, &s).unwrap();
        assert_eq!(profile.depths, vec![3, 5, 5, 3]);
        assert_eq!((profile.max, profile.argmax), (5, 1));
        assert!(profile.bound_holds);
        assert_eq!(profile.depths, brute(&p, &s));
    }

    #[test]
    fn single_interval() {
        let p = line(2);
        let s = InducedSubset::all(2, Family::Interval);
        let profile = interval_depth_profile(&p, &s).unwrap();
        assert_eq!(profile.depths, vec![1, 1]);
        assert!(profile.bound_holds);
    }

    #[test]
    fn upper_construction_examples() {
        let (p, s) = gen_interval_upper(4, 3).unwrap();
        assert_eq!(s.pairs(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(interval_depth_profile(&p, &s).unwrap().max, 2);
        let (p, s) = gen_interval_upper(8, 8).unwrap();
        assert!(interval_depth_profile(&p, &s).unwrap().max <= 10);
        let (p, s) = gen_interval_upper(5, 0).unwrap();
        assert_eq!(interval_depth_profile(&p, &s).unwrap().max, 0);
        assert_eq!(gen_interval_upper(4, 100), Err(GeomError::InvalidRange { n: 4, m: 100 }));
    }

    #[test]
    fn open_profile_counts() {
        let profile = open_depth_profile(&[(0, 4), (2, 6), (3, 3)]);
        let counts: Vec<u64> = profile.iter().map(|c| c.1).collect();
        assert_eq!(counts, vec![0, 1, 2, 2, 1, 0]);
        assert_eq!(profile[2].0, 5);
        assert_eq!(open_depth_profile(&[]), vec![(0, 0)]);
    }

    #[test]
    fn partition_rule_holds_on_all_pairs() {
        let p = PointSet::line(&[5, -3, 8, 0, 2]).unwrap();
        let s = InducedSubset::all(5, Family::Interval);
        assert!(interval_partition_holds(&p, &s).unwrap());
    }
}
