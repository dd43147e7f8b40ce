use alloc::vec;
use alloc::vec::Vec;

use crate::angular::{check_components, AngularIndex, Vec2};
use crate::{multiplicity, Family, GeomError, PointSet, RationalPoint, Result};

/// Counts of the point set in the four open quadrants around a query point.
///
/// `a` is north-west (`x < p.x`, `y > p.y`), `b` north-east, `c` south-east and
/// `d` south-west. A query point that belongs to the set is not counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuadrantCounts {
    /// North-west count.
    pub a: u64,
    /// North-east count.
    pub b: u64,
    /// South-east count.
    pub c: u64,
    /// South-west count.
    pub d: u64,
}

impl QuadrantCounts {
    /// `a + b + c + d`.
    pub fn total(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }
}

/// Which engine produced a depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Enumeration of all inducing pairs.
    Brute,
    /// Closed-form count or angular sweep.
    Fast,
}

/// A query point with its depth in one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    /// The query point.
    pub query: RationalPoint,
    /// The family the depth refers to.
    pub family: Family,
    /// Number of induced objects strictly containing the query point.
    pub depth: u64,
    /// Engine that computed the depth.
    pub engine: Engine,
}

fn check_query(set: &PointSet, p: &RationalPoint) -> Result<()> {
    if p.dim() != set.dim() {
        return Err(GeomError::DimensionMismatch { expected: set.dim(), found: p.dim() });
    }
    Ok(())
}

/// Counts of the set in the `2^d` open orthants around `p`, indexed by the
/// bit mask whose bit `k` is set when the point lies above `p` on axis `k`.
///
/// A member equal to `p` is skipped. Any other point sharing a coordinate
/// with `p` raises [`GeomError::CoordinateTie`].
pub fn orthant_counts(set: &PointSet, p: &RationalPoint) -> Result<Vec<u64>> {
    check_query(set, p)?;
    let d = set.dim();
    if d >= 16 {
        return Err(GeomError::CapExceeded { what: "orthant counts", n: d, cap: 15 });
    }
    let member = set.index_of(p);
    let mut counts = vec![0u64; 1 << d];
    for (i, a) in set.points().iter().enumerate() {
        if Some(i) == member {
            continue;
        }
        let mut mask = 0usize;
        for k in 0..d {
            let s = p.scale(a, k)?;
            let x = p.numerators()[k];
            if s == x {
                return Err(GeomError::CoordinateTie { index: i, axis: k });
            }
            if s > x {
                mask |= 1 << k;
            }
        }
        counts[mask] += 1;
    }
    Ok(counts)
}

/// Open-quadrant counts around a planar query point.
///
/// See [`QuadrantCounts`] for the labelling; errors as [`orthant_counts`].
pub fn quadrant_counts(set: &PointSet, p: &RationalPoint) -> Result<QuadrantCounts> {
    if set.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, found: set.dim() });
    }
    let o = orthant_counts(set, p)?;
    Ok(QuadrantCounts { a: o[0b10], b: o[0b11], c: o[0b01], d: o[0b00] })
}

/// Depth of `p` by enumerating every inducing pair of `P \ {p}`.
///
/// This is the oracle every other engine is checked against. It accepts any
/// query point; strict containment makes points on object boundaries count 0.
pub fn depth_brute(set: &PointSet, family: Family, p: &RationalPoint) -> Result<DepthResult> {
    check_query(set, p)?;
    family.check_dim(set.dim())?;
    let member = set.index_of(p);
    let pts = set.points();
    let mut depth = 0u64;
    for i in 0..pts.len() {
        if Some(i) == member {
            continue;
        }
        for j in i + 1..pts.len() {
            if Some(j) == member {
                continue;
            }
            depth += multiplicity(family, &pts[i], &pts[j], p)? as u64;
        }
    }
    Ok(DepthResult { query: p.clone(), family, depth, engine: Engine::Brute })
}

/// Whether [`depth_fast`] handles `family` in dimension `d`.
pub fn has_fast_path(family: Family, d: usize) -> bool {
    match family {
        Family::Rectangle
        | Family::Quadrant
        | Family::VSlab
        | Family::HSlab
        | Family::SlabBoth
        | Family::Skyline
        | Family::Disk => d == 2,
        Family::Hypersphere => d == 2,
        Family::Box => (2..16).contains(&d),
        Family::Interval => d == 1,
        Family::DownTriangle => false,
    }
}

/// Depth of `p` by a closed form in the orthant counts, or by an angular
/// sweep for disks.
///
/// With `(A, B, C, D)` the [`QuadrantCounts`] around `p`:
///
/// | family | depth |
/// |---|---|
/// | Rectangle | `AC + BD` |
/// | SlabBoth | `2(AC + BD) + (A + C)(B + D)` |
/// | Skyline | `AC + BD + AB` |
/// | Quadrant | `D(D - 1)/2 + D(A + B + C) + AC` |
/// | VSlab / HSlab | `(A + D)(B + C)` / `(A + B)(C + D)` |
///
/// Boxes sum the products of opposite orthant counts, intervals multiply the
/// two side counts. Disks count, for every direction vector `v` from `p`, the
/// vectors at an angle above 90 degrees by binary search in angular order,
/// and halve the total: `O(n log n)`.
///
/// The result always equals [`depth_brute`]. Fails with
/// [`GeomError::Unsupported`] where no fast path exists and with
/// [`GeomError::CoordinateTie`] when an axis-parallel count meets a tie.
pub fn depth_fast(set: &PointSet, family: Family, p: &RationalPoint) -> Result<DepthResult> {
    check_query(set, p)?;
    family.check_dim(set.dim())?;
    if !has_fast_path(family, set.dim()) {
        return Err(GeomError::Unsupported { family, op: "depth_fast" });
    }
    let depth = match family {
        Family::Disk | Family::Hypersphere => disk_depth_sweep(set, p)?,
        Family::Box | Family::Interval => {
            let o = orthant_counts(set, p)?;
            let full = o.len() - 1;
            (0..o.len()).filter(|&m| m < full - m).map(|m| o[m] * o[full - m]).sum()
        }
        _ => {
            let QuadrantCounts { a, b, c, d } = quadrant_counts(set, p)?;
            match family {
                Family::Rectangle => a * c + b * d,
                Family::SlabBoth => 2 * (a * c + b * d) + (a + c) * (b + d),
                Family::Skyline => a * c + b * d + a * b,
                Family::Quadrant => d * d.saturating_sub(1) / 2 + d * (a + b + c) + a * c,
                Family::VSlab => (a + d) * (b + c),
                Family::HSlab => (a + b) * (c + d),
                _ => unreachable!("families with a fast path are handled above"),
            }
        }
    };
    Ok(DepthResult { query: p.clone(), family, depth, engine: Engine::Fast })
}

/// Depth with the fast engine where one exists, otherwise by enumeration.
///
/// A coordinate tie in the fast engine also falls back to enumeration, so
/// this accepts every query point [`depth_brute`] accepts.
pub fn depth(set: &PointSet, family: Family, p: &RationalPoint) -> Result<DepthResult> {
    if has_fast_path(family, set.dim()) {
        match depth_fast(set, family, p) {
            Err(GeomError::CoordinateTie { .. }) => {}
            other => return other,
        }
    }
    depth_brute(set, family, p)
}

fn disk_depth_sweep(set: &PointSet, p: &RationalPoint) -> Result<u64> {
    let mut vs: Vec<Vec2> = Vec::with_capacity(set.len());
    for a in set.points() {
        let v = (p.offset_to(a, 0)?, p.offset_to(a, 1)?);
        if v != (0, 0) {
            vs.push(v);
        }
    }
    check_components(&vs)?;
    let index = AngularIndex::new(vs.clone());
    let total: usize = vs.iter().map(|&v| index.count_obtuse(v)).sum();
    Ok(total as u64 / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PointSet {
        PointSet::planar(&[(0, 0), (1, 3), (2, 1), (3, 2)]).unwrap()
    }

    fn half() -> RationalPoint {
        RationalPoint::new(vec![3, 3], 2).unwrap()
    }

    #[test]
    fn quadrant_count_examples() {
        let p = sample();
        assert_eq!(quadrant_counts(&p, &half()).unwrap(), QuadrantCounts { a: 1, b: 1, c: 1, d: 1 });
        let member = RationalPoint::from(p.point(2));
        assert_eq!(quadrant_counts(&p, &member).unwrap(), QuadrantCounts { a: 1, b: 1, c: 0, d: 1 });
        let single = PointSet::planar(&[(0, 0)]).unwrap();
        let far = RationalPoint::new(vec![10, 10], 1).unwrap();
        assert_eq!(quadrant_counts(&single, &far).unwrap(), QuadrantCounts { a: 0, b: 0, c: 0, d: 1 });
    }

    #[test]
    fn tie_is_rejected() {
        let p = sample();
        let on_line = RationalPoint::new(vec![1, 5], 1).unwrap();
        assert_eq!(quadrant_counts(&p, &on_line), Err(GeomError::CoordinateTie { index: 1, axis: 0 }));
    }

    #[test]
    fn brute_examples() {
        let p = sample();
        let expected = [
            (Family::Rectangle, 2),
            (Family::SlabBoth, 8),
            (Family::Skyline, 3),
            (Family::Quadrant, 4),
            (Family::Disk, 3),
        ];
        for (family, depth) in expected {
            assert_eq!(depth_brute(&p, family, &half()).unwrap().depth, depth, "{family}");
            assert_eq!(depth_fast(&p, family, &half()).unwrap().depth, depth, "{family}");
        }
    }

    #[test]
    fn single_point_has_depth_zero() {
        let p = PointSet::planar(&[(5, 5)]).unwrap();
        let q = RationalPoint::new(vec![1, 1], 1).unwrap();
        for family in [Family::Rectangle, Family::Quadrant, Family::SlabBoth, Family::Skyline, Family::Disk] {
            assert_eq!(depth_fast(&p, family, &q).unwrap().depth, 0);
        }
    }

    #[test]
    fn down_triangle_has_no_fast_path() {
        let p = sample();
        assert!(matches!(depth_fast(&p, Family::DownTriangle, &half()), Err(GeomError::Unsupported { .. })));
        assert_eq!(depth(&p, Family::DownTriangle, &half()).unwrap().engine, Engine::Brute);
    }
}
