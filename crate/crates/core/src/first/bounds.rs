use alloc::string::String;

use num_rational::Ratio;

use super::{
    box_point_recursive, hypersphere_weak_point, quadrant_strong_point, skyline_strong_point, strong_max,
    strong_rect_centerpoint, symmetric_peel, weak_max, PiercingResult,
};
use crate::depth::depth;
use crate::{Family, PointSet, RationalPoint, Result, Variant};

/// Direction of a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Some point reaches at least the bound, for every point set.
    Lower,
    /// On a specific construction no point exceeds the bound.
    Upper,
}

/// How the observed depth is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The best depth found by [`strong_max`] or [`weak_max`].
    Optimal,
    /// The depth at the point produced by the family's constructive finder.
    Constructive,
}

/// A quadratic bound `c n^2 -/+ s n + constant` on the piercing depth of one family.
///
/// For a lower bound the requirement is `depth >= c n^2 - s n + constant`,
/// for an upper bound `depth <= c n^2 + s n + constant`. The slack `s`
/// absorbs rounding when `n` is not divisible by the denominators of `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSpec {
    /// The family of induced objects.
    pub family: Family,
    /// Strong (members only) or weak (any point).
    pub variant: Variant,
    /// Lower or upper bound.
    pub kind: BoundKind,
    /// Coefficient `c` of `n^2`.
    pub coefficient: Ratio<i128>,
    /// Linear slack `s >= 0`.
    pub slack: Ratio<i128>,
    /// Additive constant.
    pub constant: Ratio<i128>,
    /// Finder used to produce the observed depth.
    pub method: Method,
}

fn r(num: i128, den: i128) -> Ratio<i128> {
    Ratio::new(num, den)
}

impl BoundSpec {
    /// A lower bound `c n^2 - s n`, checked at the constructive point.
    pub fn lower(family: Family, variant: Variant, coefficient: Ratio<i128>, slack: Ratio<i128>) -> Self {
        BoundSpec {
            family,
            variant,
            kind: BoundKind::Lower,
            coefficient,
            slack,
            constant: r(0, 1),
            method: Method::Constructive,
        }
    }

    /// An upper bound `c n^2 + s n`, checked against the optimal depth.
    pub fn upper(family: Family, variant: Variant, coefficient: Ratio<i128>, slack: Ratio<i128>) -> Self {
        BoundSpec {
            kind: BoundKind::Upper,
            method: Method::Optimal,
            ..BoundSpec::lower(family, variant, coefficient, slack)
        }
    }

    /// Sets the additive constant.
    pub fn with_constant(mut self, constant: Ratio<i128>) -> Self {
        self.constant = constant;
        self
    }

    /// Sets the finder.
    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    /// Sets the linear slack.
    pub fn with_slack(mut self, slack: Ratio<i128>) -> Self {
        self.slack = slack;
        self
    }

    /// The lower bound of the table for a family, variant and dimension, with its default slack.
    ///
    /// | family | strong | weak |
    /// |---|---|---|
    /// | Rectangle | `n^2/16 - 2n` | `n^2/8 - 2n` |
    /// | Quadrant | `n^2/4 - 2n` | `n^2/2 - n/2` |
    /// | SlabBoth | `3n^2/8 - 3n` | `n^2/2 - n` |
    /// | Skyline | `n^2/9 - 2n` | `n^2/4 - n` |
    /// | VSlab, HSlab, Interval | `n^2/4 - n` | `n^2/4 - n` |
    /// | Disk | `n^2/16 - 2n` | `n^2/6 - n` |
    /// | Hypersphere | | `n^2/(2(d+1)) - n` |
    /// | Box | | `n^2/2^(2^d - 1) - 2n` |
    ///
    /// Returns `None` where the table has no entry.
    pub fn table(family: Family, variant: Variant, d: usize) -> Option<BoundSpec> {
        use Family::*;
        let (c, s) = match (family, variant) {
            (Rectangle, Variant::Strong) => (r(1, 16), r(2, 1)),
            (Rectangle, Variant::Weak) => (r(1, 8), r(2, 1)),
            (Quadrant, Variant::Strong) => (r(1, 4), r(2, 1)),
            (Quadrant, Variant::Weak) => (r(1, 2), r(1, 2)),
            (SlabBoth, Variant::Strong) => (r(3, 8), r(3, 1)),
            (SlabBoth, Variant::Weak) => (r(1, 2), r(1, 1)),
            (Skyline, Variant::Strong) => (r(1, 9), r(2, 1)),
            (Skyline, Variant::Weak) => (r(1, 4), r(1, 1)),
            (VSlab | HSlab | Interval, _) => (r(1, 4), r(1, 1)),
            (Disk, Variant::Strong) => (r(1, 16), r(2, 1)),
            (Disk, Variant::Weak) => (r(1, 6), r(1, 1)),
            (Hypersphere, Variant::Weak) if d >= 2 => (r(1, 2 * (d as i128 + 1)), r(1, 1)),
            (Box, Variant::Weak) if (2..=6).contains(&d) => (r(1, 1i128 << ((1 << d) - 1)), r(2, 1)),
            _ => return None,
        };
        Some(BoundSpec::lower(family, variant, c, s))
    }

    /// Strong disk bound for origin-symmetric sets: `(n/2 - 1)^2 / 2`, exactly.
    pub fn symmetric_disk() -> Self {
        BoundSpec::lower(Family::Disk, Variant::Strong, r(1, 8), r(1, 2)).with_constant(r(1, 2))
    }

    /// Weak disk bound at the origin of an origin-symmetric set: `n^2/4 - n`.
    pub fn symmetric_origin() -> Self {
        BoundSpec::lower(Family::Hypersphere, Variant::Weak, r(1, 4), r(1, 1))
    }

    /// The bound at `n`.
    pub fn required(&self, n: usize) -> Ratio<i128> {
        let n = r(n as i128, 1);
        let linear = match self.kind {
            BoundKind::Lower => -self.slack,
            BoundKind::Upper => self.slack,
        };
        self.coefficient * n * n + linear * n + self.constant
    }
}

/// Outcome of [`verify_first_selection`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    /// The bound that was checked.
    pub spec: BoundSpec,
    /// Number of points.
    pub n: usize,
    /// Dimension.
    pub d: usize,
    /// Depth at the selected point.
    pub observed: u64,
    /// Value of the bound at `n`.
    pub required: Ratio<i128>,
    /// Whether the observed depth satisfies the bound.
    pub holds: bool,
    /// The selected point.
    pub point: RationalPoint,
    /// Its index when it belongs to the set.
    pub index: Option<usize>,
    /// How the point was obtained.
    pub certificate: String,
}

/// Runs the finder selected by `spec` and compares its depth with the bound.
///
/// Constructive finders by family and variant:
///
/// * strong Rectangle, SlabBoth, Disk: [`strong_rect_centerpoint`], except
///   that a planar origin-symmetric set uses [`symmetric_peel`] for Disk;
/// * strong Quadrant and Skyline: [`quadrant_strong_point`],
///   [`skyline_strong_point`];
/// * weak Disk and Hypersphere: [`hypersphere_weak_point`];
/// * weak Box: [`box_point_recursive`];
/// * anything else: the optimal finder.
///
/// The depth is always recomputed for `spec.family` at the chosen point.
pub fn verify_first_selection(set: &PointSet, spec: &BoundSpec) -> Result<BoundCheck> {
    let family = spec.family;
    family.check_dim(set.dim())?;
    let found: PiercingResult = match (spec.method, spec.variant, family) {
        (Method::Optimal, Variant::Strong, _) => strong_max(set, family)?,
        (Method::Optimal, Variant::Weak, _) => weak_max(set, family)?,
        (_, Variant::Strong, Family::Disk) if set.dim() == 2 && set.is_origin_symmetric() => symmetric_peel(set)?,
        (_, Variant::Strong, Family::Rectangle | Family::SlabBoth | Family::Disk) => strong_rect_centerpoint(set)?,
        (_, Variant::Strong, Family::Quadrant) => quadrant_strong_point(set)?,
        (_, Variant::Strong, Family::Skyline) => skyline_strong_point(set)?,
        (_, Variant::Weak, Family::Disk | Family::Hypersphere) => hypersphere_weak_point(set)?,
        (_, Variant::Weak, Family::Box) => box_point_recursive(set)?,
        (_, Variant::Strong, _) => strong_max(set, family)?,
        (_, Variant::Weak, _) => weak_max(set, family)?,
    };
    let observed = depth(set, family, &found.point)?.depth;
    let required = spec.required(set.len());
    let value = r(observed as i128, 1);
    let holds = match spec.kind {
        BoundKind::Lower => value >= required,
        BoundKind::Upper => value <= required,
    };
    Ok(BoundCheck {
        spec: spec.clone(),
        n: set.len(),
        d: set.dim(),
        observed,
        required,
        holds,
        point: found.point,
        index: found.index,
        certificate: found.certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate, random_point_set, ConstructionSpec, Kind};

    #[test]
    fn circle_strong_rectangle_witness() {
        let p = generate(&ConstructionSpec::new(Kind::Circle, 16)).unwrap();
        let spec = BoundSpec::upper(Family::Rectangle, Variant::Strong, r(1, 16), r(0, 1));
        let check = verify_first_selection(&p, &spec).unwrap();
        // The idealized count (n/2 - 2k) 2k = 16 at k = 2 includes the member itself in its quadrant sizes.
        assert_eq!(check.observed, 12);
        assert!(check.holds);
    }

    #[test]
    fn random_slab_both_strong() {
        let p = random_point_set(24, 2, 5, false, 5000).unwrap();
        let check =
            verify_first_selection(&p, &BoundSpec::table(Family::SlabBoth, Variant::Strong, 2).unwrap()).unwrap();
        assert!(check.holds, "{check:?}");
    }

    #[test]
    fn single_point_holds_trivially() {
        let p = PointSet::planar(&[(1, 1)]).unwrap();
        for family in [Family::Rectangle, Family::Quadrant, Family::SlabBoth, Family::Skyline, Family::Disk] {
            for variant in [Variant::Strong, Variant::Weak] {
                let spec = BoundSpec::table(family, variant, 2).unwrap();
                assert!(spec.required(1) <= r(0, 1));
                assert!(verify_first_selection(&p, &spec).unwrap().holds, "{family} {variant}");
            }
        }
    }

    #[test]
    fn required_values() {
        assert_eq!(BoundSpec::symmetric_disk().required(10), r(8, 1));
        assert_eq!(BoundSpec::table(Family::Box, Variant::Weak, 3).unwrap().coefficient, r(1, 128));
        assert_eq!(BoundSpec::table(Family::Hypersphere, Variant::Weak, 3).unwrap().coefficient, r(1, 8));
        assert!(BoundSpec::table(Family::Box, Variant::Strong, 3).is_none());
    }
}
