use crate::{Family, GeomError, Point, RationalPoint, Result};

/// Number of objects induced by `{a, b}` that strictly contain `p`.
///
/// This is 0 or 1 for every family except [`Family::SlabBoth`], where the
/// vertical and the horizontal slab each contribute.
///
/// Containment is strict in every family:
///
/// * `Rectangle`, `Box`, `Interval`: `p` lies strictly between `a` and `b` in every coordinate.
/// * `VSlab` / `HSlab`: strict straddle in x (resp. y).
/// * `Skyline`: strict x-straddle and `p.y < max(a.y, b.y)`.
/// * `Quadrant`: with apex `(min(a.x, b.x), min(a.y, b.y))`, `p.x > apex.x` and `p.y > apex.y`.
/// * `Disk`, `Hypersphere`: `(a - p) . (b - p) < 0`, the angle `apb` is obtuse.
/// * `DownTriangle`: with `c1 = -u - v`, `c2 = u`, `c3 = v` in sheared coordinates,
///   `ci(p) < max(ci(a), ci(b))` for all three functionals.
pub fn multiplicity(family: Family, a: &Point, b: &Point, p: &RationalPoint) -> Result<u32> {
    let d = p.dim();
    family.check_dim(d)?;
    for q in [a, b] {
        if q.dim() != d {
            return Err(GeomError::DimensionMismatch { expected: d, found: q.dim() });
        }
    }
    if a == b {
        return Err(GeomError::DegeneratePair);
    }
    let straddles = |k: usize| -> Result<bool> {
        let (sa, sb) = (p.scale(a, k)?, p.scale(b, k)?);
        let x = p.numerators()[k];
        Ok(sa.min(sb) < x && x < sa.max(sb))
    };
    let hit = match family {
        Family::Rectangle | Family::Box | Family::Interval => {
            let mut inside = true;
            for k in 0..d {
                if !straddles(k)? {
                    inside = false;
                    break;
                }
            }
            inside
        }
        Family::VSlab => straddles(0)?,
        Family::HSlab => straddles(1)?,
        Family::SlabBoth => return Ok(straddles(0)? as u32 + straddles(1)? as u32),
        Family::Skyline => straddles(0)? && p.numerators()[1] < p.scale(a, 1)?.max(p.scale(b, 1)?),
        Family::Quadrant => {
            p.numerators()[0] > p.scale(a, 0)?.min(p.scale(b, 0)?)
                && p.numerators()[1] > p.scale(a, 1)?.min(p.scale(b, 1)?)
        }
        Family::Disk | Family::Hypersphere => {
            let mut dot: i128 = 0;
            for k in 0..d {
                let term = p.offset_to(a, k)?.checked_mul(p.offset_to(b, k)?).ok_or(GeomError::Overflow)?;
                dot = dot.checked_add(term).ok_or(GeomError::Overflow)?;
            }
            dot < 0
        }
        Family::DownTriangle => {
            let fa = triangle_functionals(p.scale(a, 0)?, p.scale(a, 1)?)?;
            let fb = triangle_functionals(p.scale(b, 0)?, p.scale(b, 1)?)?;
            let fp = triangle_functionals(p.numerators()[0], p.numerators()[1])?;
            (0..3).all(|i| fp[i] < fa[i].max(fb[i]))
        }
    };
    Ok(hit as u32)
}

/// Whether some object induced by `{a, b}` strictly contains `p`.
///
/// See [`multiplicity`] for the containment rule of each family.
pub fn contains(family: Family, a: &Point, b: &Point, p: &RationalPoint) -> Result<bool> {
    Ok(multiplicity(family, a, b, p)? > 0)
}

/// The three functionals `(-u - v, u, v)` bounding a downward triangle.
pub(crate) fn triangle_functionals(u: i128, v: i128) -> Result<[i128; 3]> {
    let s = u.checked_add(v).and_then(|s| s.checked_neg()).ok_or(GeomError::Overflow)?;
    Ok([s, u, v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(x: i64, y: i64) -> Point {
        Point::xy(x, y).unwrap()
    }

    fn q(x: (i128, i128), y: (i128, i128)) -> RationalPoint {
        RationalPoint::from_ratios(&[x, y]).unwrap()
    }

    #[test]
    fn examples() {
        let half = q((3, 2), (3, 2));
        assert!(contains(Family::Disk, &pt(0, 0), &pt(4, 0), &RationalPoint::from(&pt(2, 1))).unwrap());
        assert!(contains(Family::Rectangle, &pt(0, 0), &pt(3, 2), &half).unwrap());
        assert!(!contains(Family::Rectangle, &pt(0, 0), &pt(2, 1), &half).unwrap());
        assert!(!contains(Family::Quadrant, &pt(1, 3), &pt(3, 2), &half).unwrap());
        assert!(!contains(Family::Disk, &pt(0, 0), &pt(2, 1), &half).unwrap());
    }

    #[test]
    fn slab_multiplicity() {
        let p = q((1, 1), (1, 1));
        assert_eq!(multiplicity(Family::SlabBoth, &pt(0, 0), &pt(2, 2), &p).unwrap(), 2);
        assert_eq!(multiplicity(Family::SlabBoth, &pt(0, 5), &pt(2, 6), &p).unwrap(), 1);
        assert_eq!(multiplicity(Family::SlabBoth, &pt(3, 5), &pt(4, 6), &p).unwrap(), 0);
    }

    #[test]
    fn skyline_and_quadrant() {
        let p = RationalPoint::from(&pt(1, 1));
        assert!(contains(Family::Skyline, &pt(0, 5), &pt(2, -3), &p).unwrap());
        assert!(!contains(Family::Skyline, &pt(0, 0), &pt(2, 1), &p).unwrap());
        // Increasing pair: apex is the lower-left point.
        assert!(contains(Family::Quadrant, &pt(0, 0), &pt(5, 5), &p).unwrap());
        // Decreasing pair: apex is (left x, right y).
        assert!(contains(Family::Quadrant, &pt(0, 9), &pt(9, 0), &p).unwrap());
        assert!(!contains(Family::Quadrant, &pt(0, 9), &pt(9, 2), &p).unwrap());
    }

    #[test]
    fn down_triangle() {
        // a = (0, 0), b = (4, 0): bounds u < 4, v < 0, -u - v < 0.
        let (a, b) = (pt(0, 0), pt(4, 0));
        assert!(!contains(Family::DownTriangle, &a, &b, &RationalPoint::from(&pt(2, 0))).unwrap());
        assert!(contains(Family::DownTriangle, &a, &b, &q((2, 1), (-1, 1))).unwrap());
        assert!(!contains(Family::DownTriangle, &a, &b, &q((1, 1), (-2, 1))).unwrap());
    }

    #[test]
    fn box_and_interval() {
        let a = Point::new(vec![0, 0, 0]).unwrap();
        let b = Point::new(vec![2, 2, 2]).unwrap();
        let inside = RationalPoint::new(vec![1, 1, 1], 1).unwrap();
        let face = RationalPoint::new(vec![1, 1, 2], 1).unwrap();
        assert!(contains(Family::Box, &a, &b, &inside).unwrap());
        assert!(!contains(Family::Box, &a, &b, &face).unwrap());
        let (l, r) = (Point::new(vec![1]).unwrap(), Point::new(vec![4]).unwrap());
        assert!(contains(Family::Interval, &l, &r, &RationalPoint::new(vec![5], 2).unwrap()).unwrap());
        assert!(!contains(Family::Interval, &l, &r, &RationalPoint::new(vec![4], 1).unwrap()).unwrap());
    }

    #[test]
    fn errors() {
        let p = RationalPoint::from(&pt(1, 1));
        let a3 = Point::new(vec![0, 0, 0]).unwrap();
        assert!(matches!(contains(Family::Disk, &a3, &pt(1, 1), &p), Err(GeomError::DimensionMismatch { .. })));
        assert!(matches!(contains(Family::Interval, &pt(0, 0), &pt(1, 1), &p), Err(GeomError::FamilyDimension { .. })));
        assert_eq!(contains(Family::Disk, &pt(0, 0), &pt(0, 0), &p), Err(GeomError::DegeneratePair));
    }
}
