use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::{GeomError, Result};

/// Largest admissible coordinate magnitude, `2^50`.
///
/// Degree-two predicates on coordinates of this size stay below `2^104`, and
/// the remaining headroom of `i128` absorbs the denominators of rational query
/// points. Every operation that could exceed 128 bits checks and reports
/// [`GeomError::Overflow`] instead of wrapping.
pub const COORD_LIMIT: i64 = 1 << 50;

/// Default largest `n` for which the co-circularity scan runs.
pub const COCIRCULAR_CAP: usize = 64;

/// A point with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<i64>,
}

impl Point {
    /// Creates a point, checking the dimension and the coordinate cap.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(GeomError::DimensionMismatch { expected: 1, found: 0 });
        }
        if let Some(&c) = coords.iter().find(|c| c.unsigned_abs() > COORD_LIMIT as u64) {
            return Err(GeomError::CoordinateRange { value: c as i128 });
        }
        Ok(Point { coords })
    }

    /// Creates a planar point.
    pub fn xy(x: i64, y: i64) -> Result<Self> {
        Point::new(alloc::vec![x, y])
    }

    /// The coordinates.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinate `k`.
    pub fn coord(&self, k: usize) -> i64 {
        self.coords[k]
    }

    /// The dimension.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The point reflected through the origin.
    pub fn negated(&self) -> Point {
        Point { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Squared Euclidean norm.
    pub fn norm2(&self) -> i128 {
        self.coords.iter().map(|&c| c as i128 * c as i128).sum()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A point with rational coordinates over a common positive denominator.
///
/// Used for query points that need not belong to the point set: cell samples,
/// perturbed circle intersections, centerpoints. The representation is
/// normalized, so equal points compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    num: Vec<i128>,
    den: i128,
}

impl RationalPoint {
    /// Creates the point `num / den`.
    pub fn new(num: Vec<i128>, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(GeomError::ZeroDenominator);
        }
        if num.is_empty() {
            return Err(GeomError::DimensionMismatch { expected: 1, found: 0 });
        }
        let (mut num, mut den) = (num, den);
        if den < 0 {
            den = den.checked_neg().ok_or(GeomError::Overflow)?;
            for x in num.iter_mut() {
                *x = x.checked_neg().ok_or(GeomError::Overflow)?;
            }
        }
        let g = num.iter().fold(den, |g, x| g.gcd(x));
        if g > 1 {
            den /= g;
            for x in num.iter_mut() {
                *x /= g;
            }
        }
        Ok(RationalPoint { num, den })
    }

    /// Creates a point from per-coordinate fractions `(numerator, denominator)`.
    pub fn from_ratios(coords: &[(i128, i128)]) -> Result<Self> {
        let mut den: i128 = 1;
        for &(_, d) in coords {
            if d == 0 {
                return Err(GeomError::ZeroDenominator);
            }
            let l = den.lcm(&d.abs());
            den = l;
        }
        let num = coords
            .iter()
            .map(|&(n, d)| n.checked_mul(den / d).ok_or(GeomError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        RationalPoint::new(num, den)
    }

    /// The dimension.
    pub fn dim(&self) -> usize {
        self.num.len()
    }

    /// The common denominator (always positive).
    pub fn den(&self) -> i128 {
        self.den
    }

    /// Numerators over [`RationalPoint::den`].
    pub fn numerators(&self) -> &[i128] {
        &self.num
    }

    /// Coordinate `k` as a reduced fraction `(numerator, denominator)`.
    pub fn coord(&self, k: usize) -> (i128, i128) {
        let g = self.num[k].gcd(&self.den);
        (self.num[k] / g, self.den / g)
    }

    /// The lattice point with the same coordinates, if all coordinates are integers.
    pub fn as_point(&self) -> Option<Point> {
        if self.den != 1 {
            return None;
        }
        let coords = self.num.iter().map(|&c| i64::try_from(c).ok()).collect::<Option<Vec<_>>>()?;
        Point::new(coords).ok()
    }

    /// Floating-point approximation, for display and proposals only.
    pub fn to_f64(&self) -> Vec<f64> {
        self.num.iter().map(|&c| c as f64 / self.den as f64).collect()
    }

    /// `den * a_k - num_k`: coordinate `k` of `a - self`, scaled by the denominator.
    pub(crate) fn offset_to(&self, a: &Point, k: usize) -> Result<i128> {
        (a.coord(k) as i128).checked_mul(self.den).and_then(|s| s.checked_sub(self.num[k])).ok_or(GeomError::Overflow)
    }

    /// Scaled coordinate `k` of a lattice point, `den * a_k`.
    pub(crate) fn scale(&self, a: &Point, k: usize) -> Result<i128> {
        (a.coord(k) as i128).checked_mul(self.den).ok_or(GeomError::Overflow)
    }
}

impl From<&Point> for RationalPoint {
    fn from(p: &Point) -> Self {
        RationalPoint { num: p.coords.iter().map(|&c| c as i128).collect(), den: 1 }
    }
}

impl From<Point> for RationalPoint {
    fn from(p: Point) -> Self {
        RationalPoint::from(&p)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for k in 0..self.dim() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let (n, d) = self.coord(k);
            if d == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}/{d}")?;
            }
        }
        f.write_str(")")
    }
}

/// A finite set of distinct integer points of one dimension, the universe `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    general_position_checked: bool,
}

impl PointSet {
    /// Creates a point set, checking dimensions and distinctness.
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(GeomError::Empty);
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(GeomError::DimensionMismatch { expected: dim, found: p.dim() });
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&i, &j| points[i].cmp(&points[j]).then(i.cmp(&j)));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(GeomError::DuplicatePoint(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        Ok(PointSet { dim, points, general_position_checked: false })
    }

    /// Creates a point set from coordinate rows; the dimension is taken from the first row.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map(|r| r.as_ref().len()).ok_or(GeomError::Empty)?;
        let points = rows.iter().map(|r| Point::new(r.as_ref().to_vec())).collect::<Result<Vec<_>>>()?;
        PointSet::new(dim, points)
    }

    /// Creates a planar point set.
    pub fn planar(points: &[(i64, i64)]) -> Result<Self> {
        let points = points.iter().map(|&(x, y)| Point::xy(x, y)).collect::<Result<Vec<_>>>()?;
        PointSet::new(2, points)
    }

    /// Creates a one-dimensional point set.
    pub fn line(values: &[i64]) -> Result<Self> {
        let points = values.iter().map(|&x| Point::new(alloc::vec![x])).collect::<Result<Vec<_>>>()?;
        PointSet::new(1, points)
    }

    /// The dimension `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The number of points `n`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false: point sets are nonempty.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points in input order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Point `i`.
    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Whether [`validate_general_position`] succeeded on this set.
    pub fn general_position_checked(&self) -> bool {
        self.general_position_checked
    }

    /// Index of the member equal to `p`, if any.
    pub fn index_of(&self, p: &RationalPoint) -> Option<usize> {
        if p.den() != 1 || p.dim() != self.dim {
            return None;
        }
        self.points.iter().position(|q| q.coords().iter().zip(p.numerators()).all(|(&a, &b)| a as i128 == b))
    }

    /// Largest coordinate magnitude.
    pub fn max_abs_coord(&self) -> i64 {
        self.points.iter().flat_map(|p| p.coords().iter()).map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Whether `-p` belongs to the set for every member `p`.
    pub fn is_origin_symmetric(&self) -> bool {
        let mut sorted = self.points.clone();
        sorted.sort();
        self.points.iter().all(|p| sorted.binary_search(&p.negated()).is_ok())
    }

    /// The set restricted to its first `k` coordinates.
    ///
    /// Fails with [`GeomError::DuplicatePoint`] if the projection is not injective.
    pub fn project_prefix(&self, k: usize) -> Result<PointSet> {
        let points = self.points.iter().map(|p| Point::new(p.coords()[..k].to_vec())).collect::<Result<Vec<_>>>()?;
        let mut set = PointSet::new(k, points)?;
        set.general_position_checked = self.general_position_checked;
        Ok(set)
    }

    /// Ranks of every point along axis `k` among the distinct values on that axis,
    /// together with the sorted distinct values.
    pub fn axis_ranks(&self, k: usize) -> (Vec<i64>, Vec<usize>) {
        let mut values: Vec<i64> = self.points.iter().map(|p| p.coord(k)).collect();
        values.sort_unstable();
        values.dedup();
        let ranks = self.points.iter().map(|p| values.binary_search(&p.coord(k)).unwrap_or_else(|r| r)).collect();
        (values, ranks)
    }
}

/// A single general-position violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Several points share the value `value` on axis `axis`.
    SharedCoordinate {
        /// The axis.
        axis: usize,
        /// The shared value.
        value: i64,
        /// Indices of all points with that value, ascending.
        indices: Vec<usize>,
    },
    /// Four points lie on a common circle (or a common line).
    CoCircular {
        /// Indices of the four points, ascending.
        indices: [usize; 4],
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SharedCoordinate { axis, value, indices } => {
                write!(f, "points {indices:?} share coordinate {value} on axis {axis}")
            }
            Violation::CoCircular { indices } => write!(f, "points {indices:?} are co-circular"),
        }
    }
}

/// Outcome of a general-position check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Every violation found.
    pub violations: Vec<Violation>,
    /// Whether the co-circularity scan ran (it is skipped above the cap).
    pub cocircularity_checked: bool,
}

impl ValidationReport {
    /// True when no violation was found.
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks general position with the default co-circularity cap.
///
/// See [`validate_general_position_with`].
pub fn validate_general_position(set: &mut PointSet) -> ValidationReport {
    validate_general_position_with(set, COCIRCULAR_CAP)
}

/// Reports every coordinate collision per axis and, for planar sets with
/// `n <= cocircular_cap`, every co-circular quadruple. Marks the set as checked
/// when nothing was found.
pub fn validate_general_position_with(set: &mut PointSet, cocircular_cap: usize) -> ValidationReport {
    let mut report = ValidationReport::default();
    for axis in 0..set.dim {
        let mut order: Vec<usize> = (0..set.len()).collect();
        order.sort_by_key(|&i| (set.points[i].coord(axis), i));
        let mut start = 0;
        while start < order.len() {
            let value = set.points[order[start]].coord(axis);
            let mut end = start + 1;
            while end < order.len() && set.points[order[end]].coord(axis) == value {
                end += 1;
            }
            if end - start > 1 {
                let mut indices = order[start..end].to_vec();
                indices.sort_unstable();
                report.violations.push(Violation::SharedCoordinate { axis, value, indices });
            }
            start = end;
        }
    }
    let n = set.len();
    if set.dim == 2 && n <= cocircular_cap {
        report.cocircularity_checked = true;
        let pts = &set.points;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        if incircle_sign(&pts[i], &pts[j], &pts[k], &pts[l]) == 0 {
                            report.violations.push(Violation::CoCircular { indices: [i, j, k, l] });
                        }
                    }
                }
            }
        }
    }
    if report.is_ok() {
        set.general_position_checked = true;
    }
    report
}

/// Sign of the in-circle determinant of four planar points.
///
/// Zero exactly when the points are co-circular or collinear. Uses `i128`
/// when the operands are small enough and big integers otherwise.
pub(crate) fn incircle_sign(a: &Point, b: &Point, c: &Point, d: &Point) -> i32 {
    let rows: [[i128; 2]; 3] =
        [a, b, c].map(|p| [p.coord(0) as i128 - d.coord(0) as i128, p.coord(1) as i128 - d.coord(1) as i128]);
    let small = rows.iter().flatten().all(|v| v.unsigned_abs() < 1 << 29);
    if small {
        let lift = |r: &[i128; 2]| r[0] * r[0] + r[1] * r[1];
        let [r0, r1, r2] = rows;
        let det = r0[0] * (r1[1] * lift(&r2) - lift(&r1) * r2[1]) - r0[1] * (r1[0] * lift(&r2) - lift(&r1) * r2[0])
            + lift(&r0) * (r1[0] * r2[1] - r1[1] * r2[0]);
        return det.signum() as i32;
    }
    let big: [[BigInt; 3]; 3] = rows.map(|r| {
        let x = BigInt::from(r[0]);
        let y = BigInt::from(r[1]);
        let w = &x * &x + &y * &y;
        [x, y, w]
    });
    let minor = |r: &[BigInt; 3], s: &[BigInt; 3], i: usize, j: usize| &r[i] * &s[j] - &r[j] * &s[i];
    let det = &big[0][0] * minor(&big[1], &big[2], 1, 2) - &big[0][1] * minor(&big[1], &big[2], 0, 2)
        + &big[0][2] * minor(&big[1], &big[2], 0, 1);
    match det.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_position_examples() {
        let mut p = PointSet::planar(&[(0, 0), (1, 3), (2, 1), (3, 2)]).unwrap();
        assert!(validate_general_position(&mut p).is_ok());
        assert!(p.general_position_checked());

        let mut p = PointSet::planar(&[(0, 0), (0, 1)]).unwrap();
        let report = validate_general_position(&mut p);
        assert_eq!(
            report.violations,
            alloc::vec![Violation::SharedCoordinate { axis: 0, value: 0, indices: alloc::vec![0, 1] }]
        );
        assert!(!p.general_position_checked());

        let mut p = PointSet::planar(&[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap();
        let report = validate_general_position(&mut p);
        assert!(report.violations.contains(&Violation::CoCircular { indices: [0, 1, 2, 3] }));
    }

    #[test]
    fn incircle_agrees_between_paths() {
        let big = 1i64 << 45;
        let pts = [(big, 0), (0, big), (-big, 0), (0, -big)].map(|(x, y)| Point::xy(x, y).unwrap());
        assert_eq!(incircle_sign(&pts[0], &pts[1], &pts[2], &pts[3]), 0);
        let off = Point::xy(0, -big + 1).unwrap();
        assert_ne!(incircle_sign(&pts[0], &pts[1], &pts[2], &off), 0);
        let small = [(5, 0), (0, 5), (-5, 0), (3, 4)].map(|(x, y)| Point::xy(x, y).unwrap());
        assert_eq!(incircle_sign(&small[0], &small[1], &small[2], &small[3]), 0);
    }

    #[test]
    fn rational_points_normalize() {
        let p = RationalPoint::new(alloc::vec![3, 6], 6).unwrap();
        assert_eq!(p.den(), 2);
        assert_eq!(p.coord(0), (1, 2));
        assert_eq!(p.coord(1), (1, 1));
        let q = RationalPoint::from_ratios(&[(1, 2), (1, 1)]).unwrap();
        assert_eq!(p, q);
        assert_eq!(alloc::format!("{p}"), "(1/2, 1)");
        let r = RationalPoint::new(alloc::vec![4, -2], -2).unwrap();
        assert_eq!(r.as_point(), Some(Point::xy(-2, 1).unwrap()));
        assert_eq!(RationalPoint::new(alloc::vec![1], 0), Err(GeomError::ZeroDenominator));
    }

    #[test]
    fn duplicate_points_rejected() {
        assert_eq!(PointSet::planar(&[(1, 1), (2, 2), (1, 1)]), Err(GeomError::DuplicatePoint(0, 2)));
        assert!(Point::xy(COORD_LIMIT + 1, 0).is_err());
    }

    #[test]
    fn symmetry_and_membership() {
        let p = PointSet::planar(&[(2, 0), (-2, 0), (0, 1), (0, -1)]).unwrap();
        assert!(p.is_origin_symmetric());
        assert_eq!(p.index_of(&RationalPoint::from(&Point::xy(0, 1).unwrap())), Some(2));
        assert_eq!(p.index_of(&RationalPoint::new(alloc::vec![0, 1], 2).unwrap()), None);
        let q = PointSet::planar(&[(2, 0), (-2, 0), (0, 1)]).unwrap();
        assert!(!q.is_origin_symmetric());
    }
}
