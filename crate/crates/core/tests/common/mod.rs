//! Independent oracles shared by the integration tests.
//!
//! Containment is re-derived here from the definitions, with rational query
//! points `num / den` compared by cross-multiplication, so these tests do
//! not depend on the crate's own predicates.

#![allow(dead_code)]

use induced_core::{Family, PointSet, RationalPoint};
use proptest::prelude::*;

/// Strictly between `a` and `b` after scaling both by `den`.
fn between(a: i64, b: i64, x: i128, den: i128) -> bool {
    let (a, b) = (a as i128 * den, b as i128 * den);
    a.min(b) < x && x < a.max(b)
}

/// Number of objects induced by `{a, b}` that strictly contain `num / den`.
pub fn hits(family: Family, a: &[i64], b: &[i64], num: &[i128], den: i128) -> u64 {
    let s = |v: i64| v as i128 * den;
    let all_between = (0..num.len()).all(|k| between(a[k], b[k], num[k], den));
    let hit = match family {
        Family::Rectangle | Family::Box | Family::Interval => all_between,
        Family::VSlab => between(a[0], b[0], num[0], den),
        Family::HSlab => between(a[1], b[1], num[1], den),
        Family::SlabBoth => {
            return u64::from(between(a[0], b[0], num[0], den)) + u64::from(between(a[1], b[1], num[1], den))
        }
        Family::Skyline => between(a[0], b[0], num[0], den) && num[1] < s(a[1].max(b[1])),
        Family::Quadrant => num[0] > s(a[0].min(b[0])) && num[1] > s(a[1].min(b[1])),
        Family::Disk | Family::Hypersphere => {
            let dot: i128 = (0..num.len()).map(|k| (s(a[k]) - num[k]) * (s(b[k]) - num[k])).sum();
            dot < 0
        }
        Family::DownTriangle => {
            let f = |u: i128, v: i128| [-u - v, u, v];
            let (fa, fb, fp) = (f(s(a[0]), s(a[1])), f(s(b[0]), s(b[1])), f(num[0], num[1]));
            (0..3).all(|i| fp[i] < fa[i].max(fb[i]))
        }
    };
    u64::from(hit)
}

/// Depth of `p` over all pairs of `P` not containing `p` itself.
pub fn oracle_depth(set: &PointSet, family: Family, p: &RationalPoint) -> u64 {
    let (num, den) = (p.numerators(), p.den());
    let rows: Vec<&[i64]> = set.points().iter().map(|q| q.coords()).collect();
    let is_p = |r: &[i64]| r.iter().zip(num).all(|(&c, &x)| c as i128 * den == x);
    let mut depth = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if !is_p(rows[i]) && !is_p(rows[j]) {
                depth += hits(family, rows[i], rows[j], num, den);
            }
        }
    }
    depth
}

/// Midpoints of consecutive sorted coordinates on one axis, plus one point
/// beyond each end, all over denominator 2.
pub fn cell_samples(set: &PointSet, axis: usize) -> Vec<i128> {
    let mut v: Vec<i64> = set.points().iter().map(|p| p.coord(axis)).collect();
    v.sort_unstable();
    v.dedup();
    let mut out = vec![2 * v[0] as i128 - 1];
    out.extend(v.windows(2).map(|w| w[0] as i128 + w[1] as i128));
    out.push(2 * *v.last().unwrap() as i128 + 1);
    out
}

/// Every open cell of the coordinate arrangement, as a point over denominator 2.
pub fn all_cells(set: &PointSet) -> Vec<RationalPoint> {
    let axes: Vec<Vec<i128>> = (0..set.dim()).map(|k| cell_samples(set, k)).collect();
    let mut cells = vec![Vec::new()];
    for axis in &axes {
        cells = cells
            .into_iter()
            .flat_map(|prefix: Vec<i128>| {
                axis.iter().map(move |&x| {
                    let mut c = prefix.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    cells.into_iter().map(|c| RationalPoint::new(c, 2).unwrap()).collect()
}

/// The members of `set` as query points.
pub fn members(set: &PointSet) -> Vec<RationalPoint> {
    set.points().iter().map(RationalPoint::from).collect()
}

/// Sets whose coordinates on every axis are a scaled, shifted permutation,
/// so no two points share a coordinate.
pub fn distinct_set(dim: usize, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PointSet> {
    n.prop_flat_map(move |n| {
        let perm = Just((0..n as i64).collect::<Vec<_>>()).prop_shuffle();
        (proptest::collection::vec(perm, dim), proptest::collection::vec((1i64..40, -500i64..500), dim))
    })
    .prop_map(move |(perms, affine)| {
        let n = perms[0].len();
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..dim).map(|k| perms[k][i] * affine[k].0 + affine[k].1).collect()).collect();
        PointSet::from_rows(&rows).unwrap()
    })
}

/// Origin-symmetric planar sets with distinct coordinates and distinct norms.
pub fn symmetric_set(pairs: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PointSet> {
    pairs
        .prop_flat_map(|k| {
            let perm = Just((1..=k as i64).collect::<Vec<_>>()).prop_shuffle();
            (perm, proptest::collection::vec(any::<bool>(), k), proptest::collection::vec(any::<bool>(), k))
        })
        .prop_map(|(perm, fx, fy)| {
            // x = 2i + 1 and y = 4^i spread keep norms distinct.
            let mut rows = Vec::new();
            for (i, &p) in perm.iter().enumerate() {
                let x = (2 * i as i64 + 1) * if fx[i] { 1 } else { -1 };
                let y = (1i64 << (2 * p)) * if fy[i] { 1 } else { -1 };
                rows.push(vec![x, y]);
                rows.push(vec![-x, -y]);
            }
            PointSet::from_rows(&rows).unwrap()
        })
}
