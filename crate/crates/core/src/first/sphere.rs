use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::tukey::{tukey_centerpoint_with, TukeyConfig};
use super::PiercingResult;
use crate::depth::depth;
use crate::{Family, GeomError, PointSet, RationalPoint, Result};

/// A weak piercing point for diametral hyperspheres.
///
/// For a set symmetric about the origin this is the origin: every pair
/// `p, -p` and every pair whose inner product is negative sees it at an
/// obtuse angle. Otherwise it is the Tukey centerpoint: a ball with
/// diameter `ab` contains every point that sees `ab` at an obtuse angle, and
/// a point of Tukey depth `t` sees at least about `t(n - t)` pairs that way.
/// The reported depth is the exact Hypersphere depth.
pub fn hypersphere_weak_point(set: &PointSet) -> Result<PiercingResult> {
    hypersphere_weak_point_with(set, &TukeyConfig::default())
}

/// [`hypersphere_weak_point`] with an explicit centerpoint configuration.
pub fn hypersphere_weak_point_with(set: &PointSet, config: &TukeyConfig) -> Result<PiercingResult> {
    Family::Hypersphere.check_dim(set.dim())?;
    let (point, certificate) = if set.is_origin_symmetric() {
        (RationalPoint::new(vec![0; set.dim()], 1)?, "origin of a symmetric set".into())
    } else {
        let c = tukey_centerpoint_with(set, config)?;
        (c.point, format!("Tukey depth {}", c.depth))
    };
    let depth = depth(set, Family::Hypersphere, &point)?.depth;
    Ok(PiercingResult { index: set.index_of(&point), point, depth, certificate })
}

/// The peeling order of a set symmetric about the origin.
///
/// Repeatedly removes the remaining point farthest from the origin (ties to
/// the smallest index) together with its negation, and records the pair as
/// `(farthest, negation)`. Fails with [`GeomError::NotSymmetric`] unless the
/// set is symmetric about the origin and does not contain it.
pub fn peel_pairs(set: &PointSet) -> Result<Vec<(usize, usize)>> {
    let origin = RationalPoint::new(vec![0; set.dim()], 1)?;
    if set.is_empty() || !set.is_origin_symmetric() || set.index_of(&origin).is_some() {
        return Err(GeomError::NotSymmetric);
    }
    let mut order: Vec<usize> = (0..set.len()).collect();
    order.sort_by(|&i, &j| set.point(j).norm2().cmp(&set.point(i).norm2()).then(i.cmp(&j)));
    let mut removed = vec![false; set.len()];
    let mut pairs = Vec::with_capacity(set.len() / 2);
    for i in order {
        if removed[i] {
            continue;
        }
        let mirror = RationalPoint::from(set.point(i).negated());
        let j = set.index_of(&mirror).ok_or(GeomError::NotSymmetric)?;
        removed[i] = true;
        removed[j] = true;
        pairs.push((i, j));
    }
    Ok(pairs)
}

/// A member of a planar origin-symmetric set lying in many induced disks.
///
/// Returns the smaller-index member of the last pair of [`peel_pairs`]. Each
/// peeled pair `a, -a` induces a disk centred at the origin that contains
/// every point peeled after it, so with `j = n/2 - 1` earlier pairs the
/// returned point lies in at least `j^2 / 2` induced disks. The reported depth
/// is the exact Disk depth.
pub fn symmetric_peel(set: &PointSet) -> Result<PiercingResult> {
    if set.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, found: set.dim() });
    }
    let pairs = peel_pairs(set)?;
    let &(a, b) = pairs.last().expect("a symmetric set has a pair");
    let index = a.min(b);
    let point = RationalPoint::from(set.point(index));
    let depth = depth(set, Family::Disk, &point)?.depth;
    Ok(PiercingResult {
        point,
        index: Some(index),
        depth,
        certificate: format!("symmetric peel after {} pairs", pairs.len() - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, random_point_set, ConstructionSpec, Kind};

    fn cross() -> PointSet {
        PointSet::planar(&[(2, 0), (-2, 0), (0, 1), (0, -1)]).unwrap()
    }

    #[test]
    fn peel_cross() {
        assert_eq!(peel_pairs(&cross()).unwrap(), vec![(0, 1), (2, 3)]);
        let r = symmetric_peel(&cross()).unwrap();
        assert_eq!(r.index, Some(2));
        assert_eq!(r.depth, 1);
    }

    #[test]
    fn weak_point_of_cross_is_origin() {
        let r = hypersphere_weak_point(&cross()).unwrap();
        assert_eq!(r.point, RationalPoint::new(vec![0, 0], 1).unwrap());
        assert!(r.depth >= 2);
    }

    #[test]
    fn peel_rejects_asymmetric_sets() {
        let p = PointSet::planar(&[(1, 0), (-1, 0), (0, 2)]).unwrap();
        assert_eq!(peel_pairs(&p), Err(GeomError::NotSymmetric));
        let with_origin = PointSet::planar(&[(1, 0), (-1, 0), (0, 0)]).unwrap();
        assert_eq!(peel_pairs(&with_origin), Err(GeomError::NotSymmetric));
    }

    #[test]
    fn peel_guarantee_on_symmetric_sets() {
        for seed in 0..10 {
            let p = random_point_set(20, 2, seed, true, 1000).unwrap();
            let r = symmetric_peel(&p).unwrap();
            let j = (p.len() / 2 - 1) as u64;
            assert!(2 * r.depth >= j * j, "seed {seed}");
        }
        let circle = generate(&ConstructionSpec::new(Kind::Circle, 16)).unwrap();
        let r = symmetric_peel(&circle).unwrap();
        assert!(2 * r.depth >= 49);
    }

    #[test]
    fn increasing_line_in_space() {
        let p = PointSet::from_rows(&(1..=12).map(|i| [i, i, i]).collect::<Vec<_>>()).unwrap();
        let r = hypersphere_weak_point(&p).unwrap();
        assert!(r.depth >= 6);
    }

    #[test]
    fn two_points() {
        let p = PointSet::planar(&[(0, 0), (3, 1)]).unwrap();
        assert_eq!(hypersphere_weak_point(&p).unwrap().depth, 0);
    }
}
