use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::PiercingResult;
use crate::depth::depth;
use crate::{Family, GeomError, PointSet, RationalPoint, Result};

/// Limits of the exhaustive weak searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeakConfig {
    /// Largest `n` accepted by the disk and hypersphere candidate search.
    pub disk_cap: usize,
    /// Largest number of grid cells of the axis-parallel sweep.
    pub cell_cap: usize,
}

impl Default for WeakConfig {
    fn default() -> Self {
        WeakConfig { disk_cap: 48, cell_cap: 1 << 24 }
    }
}

/// Weak maximum with the default limits; see [`weak_max_with`].
pub fn weak_max(set: &PointSet, family: Family) -> Result<PiercingResult> {
    weak_max_with(set, family, &WeakConfig::default())
}

/// A point of maximum depth over the family's candidate set.
///
/// * Axis-parallel families: one sample per cell of the grid formed by the
///   coordinates of `P` (midpoints between consecutive distinct values, and
///   one unit beyond the extremes). Depth is constant on open cells and the
///   maximum of a strict-containment depth is attained on one, so the result
///   is the exact maximum over all of space.
/// * Quadrant: `(x_max + 1, y_max + 1)`, inside every induced quadrant.
/// * Skyline: `(x, y_min - 1)` over all x-cells; also exact.
/// * DownTriangle: one sample per face of the arrangement of the lines
///   `u = const`, `v = const`, `u + v = const` through the points; exact.
/// * Disk (and Hypersphere in the plane): all circle centres, all points, and
///   all pairwise intersections of the induced circles, each moved to the
///   four diagonal neighbours at distance `1/D` for a power of two `D`. The
///   depth of each moved point is exact, so the result is a certified lower
///   bound on the true maximum rather than the maximum itself.
/// * Hypersphere in `d >= 3`: centres and points, each moved to all `2^d`
///   diagonal neighbours; also a lower bound.
///
/// Ties are broken by candidate order, which is deterministic.
pub fn weak_max_with(set: &PointSet, family: Family, config: &WeakConfig) -> Result<PiercingResult> {
    family.check_dim(set.dim())?;
    match family {
        Family::Rectangle | Family::Box | Family::Interval => box_sweep(set, family, config.cell_cap),
        Family::VSlab | Family::HSlab | Family::SlabBoth | Family::Skyline => slab_sweep(set, family),
        Family::Quadrant => {
            let num = (0..2).map(|k| set.axis_ranks(k).0.last().copied().unwrap_or(0) as i128 + 1).collect();
            finish(set, family, RationalPoint::new(num, 1)?, "beyond the maximum corner")
        }
        Family::Disk | Family::Hypersphere => {
            if set.len() > config.disk_cap {
                return Err(GeomError::CapExceeded { what: "weak disk search", n: set.len(), cap: config.disk_cap });
            }
            if set.dim() == 2 {
                disk_candidates(set, family)
            } else {
                sphere_candidates(set, family)
            }
        }
        Family::DownTriangle => triangle_faces(set),
    }
}

fn finish(set: &PointSet, family: Family, point: RationalPoint, how: &str) -> Result<PiercingResult> {
    let depth = depth(set, family, &point)?.depth;
    Ok(PiercingResult { index: set.index_of(&point), point, depth, certificate: format!("weak {family}: {how}") })
}

/// Numerator over 2 of the sample point of cell `c` among sorted distinct `values`.
pub(crate) fn cell_sample(values: &[i64], c: usize) -> i128 {
    let u = values.len();
    if c == 0 {
        2 * (values[0] as i128 - 1)
    } else if c == u {
        2 * (values[u - 1] as i128 + 1)
    } else {
        values[c - 1] as i128 + values[c] as i128
    }
}

fn box_sweep(set: &PointSet, family: Family, cell_cap: usize) -> Result<PiercingResult> {
    let rows: Vec<&[i64]> = set.points().iter().map(|p| p.coords()).collect();
    let sweep = cell_sweep(&rows, cell_cap)?;
    Ok(PiercingResult {
        index: None,
        point: RationalPoint::new(sweep.sample, 2)?,
        depth: sweep.depth,
        certificate: format!("weak {family}: exact cell sweep over {} cells", sweep.cells),
    })
}

/// Outcome of [`cell_sweep`].
pub(crate) struct CellSweep {
    /// Numerators over 2 of the best cell's sample point.
    pub sample: Vec<i128>,
    /// Number of pairs whose open box contains the cell.
    pub depth: u64,
    /// Number of cells of the grid.
    pub cells: usize,
}

/// Sorted distinct values of one axis and the rank of every row's value among them.
pub(crate) fn ranks(rows: &[&[i64]], axis: usize) -> (Vec<i64>, Vec<usize>) {
    let mut values: Vec<i64> = rows.iter().map(|r| r[axis]).collect();
    values.sort_unstable();
    values.dedup();
    let ranks = rows.iter().map(|r| values.binary_search(&r[axis]).expect("value present")).collect();
    (values, ranks)
}

/// Exact maximum over the cells of the coordinate grid of the number of
/// pairs of rows whose open box contains the cell, by a `d`-dimensional
/// difference array over the `(u_1 + 1) x ... x (u_d + 1)` cells.
///
/// The box of a pair with axis ranks `lo < hi` covers exactly the cells
/// `lo + 1 ..= hi` on that axis; a pair sharing a coordinate covers nothing.
/// Rows may repeat. Ties go to the first cell in row-major order.
pub(crate) fn cell_sweep(rows: &[&[i64]], cell_cap: usize) -> Result<CellSweep> {
    let d = rows[0].len();
    let axes: Vec<(Vec<i64>, Vec<usize>)> = (0..d).map(|k| ranks(rows, k)).collect();
    let sizes: Vec<usize> = axes.iter().map(|(v, _)| v.len() + 1).collect();
    let total = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s)).unwrap_or(usize::MAX);
    if total > cell_cap {
        return Err(GeomError::CapExceeded { what: "cell sweep", n: total, cap: cell_cap });
    }
    let mut strides = vec![1usize; d];
    for k in (0..d.saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * sizes[k + 1];
    }
    let mut diff = vec![0i64; total];
    let n = rows.len();
    let mut lo = vec![0usize; d];
    let mut hi = vec![0usize; d];
    for i in 0..n {
        'pairs: for j in i + 1..n {
            for k in 0..d {
                let (a, b) = (axes[k].1[i], axes[k].1[j]);
                if a == b {
                    continue 'pairs;
                }
                lo[k] = a.min(b) + 1;
                hi[k] = a.max(b) + 1;
            }
            for mask in 0..1usize << d {
                let mut idx = 0;
                for k in 0..d {
                    idx += strides[k] * if mask >> k & 1 == 1 { hi[k] } else { lo[k] };
                }
                diff[idx] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    for k in 0..d {
        let stride = strides[k];
        for idx in 0..total {
            if !(idx / stride).is_multiple_of(sizes[k]) {
                diff[idx] += diff[idx - stride];
            }
        }
    }
    let (best, &depth) = diff.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).expect("nonempty");
    let sample = (0..d).map(|k| cell_sample(&axes[k].0, (best / strides[k]) % sizes[k])).collect();
    Ok(CellSweep { sample, depth: depth as u64, cells: total })
}

/// Best cell along one axis: the number of pairs straddling each cell is `left * right`.
fn best_axis_cell(values: &[i64], ranks: &[usize]) -> (usize, u64) {
    let mut per_value = vec![0u64; values.len()];
    for &r in ranks {
        per_value[r] += 1;
    }
    let n = ranks.len() as u64;
    let mut left = 0u64;
    let mut best = (0, 0);
    for (c, &here) in per_value.iter().chain([&0]).enumerate() {
        let count = left * (n - left);
        if count > best.1 {
            best = (c, count);
        }
        left += here;
    }
    best
}

fn slab_sweep(set: &PointSet, family: Family) -> Result<PiercingResult> {
    let (xs, xr) = set.axis_ranks(0);
    let (ys, yr) = set.axis_ranks(1);
    let below = 2 * (ys[0] as i128 - 1);
    let left = 2 * (xs[0] as i128 - 1);
    let (bx, dx) = best_axis_cell(&xs, &xr);
    let (by, dy) = best_axis_cell(&ys, &yr);
    let (num, depth) = match family {
        Family::VSlab | Family::Skyline => (vec![cell_sample(&xs, bx), below], dx),
        Family::HSlab => (vec![left, cell_sample(&ys, by)], dy),
        _ => (vec![cell_sample(&xs, bx), cell_sample(&ys, by)], dx + dy),
    };
    let point = RationalPoint::new(num, 2)?;
    Ok(PiercingResult { index: None, point, depth, certificate: format!("weak {family}: exact median-cell sweep") })
}

/// Power-of-two denominator for candidates: keeps `D * |coord|` below `2^40`.
fn candidate_den(set: &PointSet) -> i128 {
    let bits = 64 - (set.max_abs_coord() as u64 + 1).leading_zeros();
    1i128 << (40u32.saturating_sub(bits)).clamp(2, 30)
}

/// Tracks the best candidate in the order candidates are offered.
struct Best {
    point: Option<RationalPoint>,
    depth: u64,
    evaluated: usize,
}

impl Best {
    fn offer(&mut self, set: &PointSet, family: Family, point: RationalPoint) -> Result<()> {
        let depth = depth(set, family, &point)?.depth;
        self.evaluated += 1;
        if self.point.is_none() || depth > self.depth {
            self.point = Some(point);
            self.depth = depth;
        }
        Ok(())
    }

    /// Offers every diagonal neighbour of `num / den` at distance `1/den` per axis.
    fn offer_diagonals(&mut self, set: &PointSet, family: Family, num: &[i128], den: i128) -> Result<()> {
        let d = num.len();
        for mask in 0..1usize << d {
            let moved = (0..d).map(|k| num[k] + if mask >> k & 1 == 1 { 1 } else { -1 }).collect();
            self.offer(set, family, RationalPoint::new(moved, den)?)?;
        }
        Ok(())
    }

    fn into_result(self, set: &PointSet, family: Family, what: &str) -> PiercingResult {
        let point = self.point.expect("at least one candidate");
        PiercingResult {
            index: set.index_of(&point),
            point,
            depth: self.depth,
            certificate: format!("weak {family}: best of {} {what} candidates (lower envelope)", self.evaluated),
        }
    }
}

fn disk_candidates(set: &PointSet, family: Family) -> Result<PiercingResult> {
    let den = candidate_den(set);
    let pts: Vec<(f64, f64)> = set.points().iter().map(|p| (p.coord(0) as f64, p.coord(1) as f64)).collect();
    let mut best = Best { point: None, depth: 0, evaluated: 0 };
    for p in set.points() {
        let num = [p.coord(0) as i128 * den, p.coord(1) as i128 * den];
        best.offer_diagonals(set, family, &num, den)?;
    }
    let n = set.len();
    let mut circles: Vec<((f64, f64), f64)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (set.point(i), set.point(j));
            let num = [
                (a.coord(0) as i128 + b.coord(0) as i128) * den / 2,
                (a.coord(1) as i128 + b.coord(1) as i128) * den / 2,
            ];
            best.offer_diagonals(set, family, &num, den)?;
            let centre = ((pts[i].0 + pts[j].0) / 2.0, (pts[i].1 + pts[j].1) / 2.0);
            let radius = libm::hypot(pts[i].0 - pts[j].0, pts[i].1 - pts[j].1) / 2.0;
            circles.push((centre, radius));
        }
    }
    let scale = den as f64;
    for s in 0..circles.len() {
        for t in s + 1..circles.len() {
            for (x, y) in circle_intersections(circles[s], circles[t]) {
                let num = [libm::round(x * scale) as i128, libm::round(y * scale) as i128];
                best.offer_diagonals(set, family, &num, den)?;
            }
        }
    }
    Ok(best.into_result(set, family, "circle-arrangement"))
}

/// Intersection points of two circles, empty when they do not cross.
fn circle_intersections(c1: ((f64, f64), f64), c2: ((f64, f64), f64)) -> Vec<(f64, f64)> {
    let ((x1, y1), r1) = c1;
    let ((x2, y2), r2) = c2;
    let (dx, dy) = (x2 - x1, y2 - y1);
    let dist = libm::hypot(dx, dy);
    if dist == 0.0 || dist >= r1 + r2 || dist <= (r1 - r2).abs() {
        return Vec::new();
    }
    let along = (r1 * r1 - r2 * r2 + dist * dist) / (2.0 * dist);
    let h = libm::sqrt((r1 * r1 - along * along).max(0.0));
    let (mx, my) = (x1 + along * dx / dist, y1 + along * dy / dist);
    vec![(mx - h * dy / dist, my + h * dx / dist), (mx + h * dy / dist, my - h * dx / dist)]
}

fn sphere_candidates(set: &PointSet, family: Family) -> Result<PiercingResult> {
    let den = candidate_den(set);
    let d = set.dim();
    let mut best = Best { point: None, depth: 0, evaluated: 0 };
    for p in set.points() {
        let num: Vec<i128> = p.coords().iter().map(|&c| c as i128 * den).collect();
        best.offer_diagonals(set, family, &num, den)?;
    }
    let n = set.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (set.point(i), set.point(j));
            let num: Vec<i128> = (0..d).map(|k| (a.coord(k) as i128 + b.coord(k) as i128) * den / 2).collect();
            best.offer_diagonals(set, family, &num, den)?;
        }
    }
    Ok(best.into_result(set, family, "centre"))
}

/// Exact maximum for down-triangles by sampling every face of the line arrangement.
fn triangle_faces(set: &PointSet) -> Result<PiercingResult> {
    let (us, _) = set.axis_ranks(0);
    let (vs, _) = set.axis_ranks(1);
    let mut sums: Vec<i64> = set.points().iter().map(|p| p.coord(0) + p.coord(1)).collect();
    sums.sort_unstable();
    sums.dedup();
    // A box containing every vertex of the arrangement in its interior meets every face.
    let u_lo = us[0].min(sums[0] - vs[vs.len() - 1]) - 1;
    let u_hi = us[us.len() - 1].max(sums[sums.len() - 1] - vs[0]) + 1;
    let v_lo = vs[0].min(sums[0] - us[us.len() - 1]) - 1;
    let v_hi = vs[vs.len() - 1].max(sums[sums.len() - 1] - us[0]) + 1;
    let mut u_edges = vec![u_lo];
    u_edges.extend_from_slice(&us);
    u_edges.push(u_hi);
    let mut v_edges = vec![v_lo];
    v_edges.extend_from_slice(&vs);
    v_edges.push(v_hi);
    let mut best = Best { point: None, depth: 0, evaluated: 0 };
    for cu in u_edges.windows(2) {
        for cv in v_edges.windows(2) {
            let (u0, u1, v0, v1) = (cu[0] as i128, cu[1] as i128, cv[0] as i128, cv[1] as i128);
            let mut cuts = vec![u0 + v0];
            cuts.extend(sums.iter().map(|&s| s as i128).filter(|&s| u0 + v0 < s && s < u1 + v1));
            cuts.push(u1 + v1);
            for w in cuts.windows(2) {
                // Midpoint of the diagonal through the middle of the slice, scaled by 4.
                let s2 = w[0] + w[1];
                let ua = (2 * u0).max(s2 - 2 * v1);
                let ub = (2 * u1).min(s2 - 2 * v0);
                let u4 = ua + ub;
                let v4 = 2 * s2 - u4;
                best.offer(set, Family::DownTriangle, RationalPoint::new(vec![u4, v4], 4)?)?;
            }
        }
    }
    let faces = best.evaluated;
    let mut result = best.into_result(set, Family::DownTriangle, "face");
    result.certificate = format!("weak downtri: exact face enumeration over {faces} faces");
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, ConstructionSpec, Kind};
    use crate::depth_brute;

    fn brute_depth_of(set: &PointSet, family: Family, result: &PiercingResult) -> Result<u64> {
        Ok(depth_brute(set, family, &result.point)?.depth)
    }

    #[test]
    fn chain_rectangle_example() {
        let p = PointSet::planar(&[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        let r = weak_max(&p, Family::Rectangle).unwrap();
        assert_eq!(r.depth, 4);
        assert_eq!(r.point, RationalPoint::new(vec![3, 3], 2).unwrap());
        assert_eq!(brute_depth_of(&p, Family::Rectangle, &r).unwrap(), 4);
    }

    #[test]
    fn quadrant_example() {
        let p = PointSet::planar(&[(0, 0), (1, 3), (2, 1), (3, 2)]).unwrap();
        let r = weak_max(&p, Family::Quadrant).unwrap();
        assert_eq!(r.depth, 6);
        assert_eq!(r.point, RationalPoint::new(vec![4, 4], 1).unwrap());
    }

    #[test]
    fn single_point_depth_zero() {
        let p = PointSet::planar(&[(3, 4)]).unwrap();
        for family in
            [Family::Rectangle, Family::Quadrant, Family::SlabBoth, Family::Skyline, Family::Disk, Family::DownTriangle]
        {
            assert_eq!(weak_max(&p, family).unwrap().depth, 0, "{family}");
        }
    }

    #[test]
    fn grid_centre_cell() {
        let p = generate(&ConstructionSpec::new(Kind::UniformGrid, 8).with_dim(3)).unwrap();
        let r = weak_max(&p, Family::Box).unwrap();
        assert_eq!(r.depth, 4);
        assert_eq!(brute_depth_of(&p, Family::Box, &r).unwrap(), 4);
    }

    #[test]
    fn reported_depths_are_exact() {
        let p = PointSet::planar(&[(0, 0), (5, 9), (2, 1), (7, 3), (4, 6), (9, 8), (1, 4)]).unwrap();
        for family in [
            Family::Rectangle,
            Family::VSlab,
            Family::HSlab,
            Family::SlabBoth,
            Family::Skyline,
            Family::Disk,
            Family::DownTriangle,
            Family::Hypersphere,
        ] {
            let r = weak_max(&p, family).unwrap();
            assert_eq!(brute_depth_of(&p, family, &r).unwrap(), r.depth, "{family}");
        }
    }

    #[test]
    fn disk_cap() {
        let p = crate::constructions::random_point_set(50, 2, 1, false, 10_000).unwrap();
        assert!(matches!(weak_max(&p, Family::Disk), Err(GeomError::CapExceeded { .. })));
    }
}
