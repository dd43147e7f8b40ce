use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{GeomError, PointSet, RationalPoint, Result};

/// Size caps and search budget of [`tukey_centerpoint_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TukeyConfig {
    /// Largest `n` accepted in the plane.
    pub cap_d2: usize,
    /// Largest `n` accepted in three dimensions.
    pub cap_d3: usize,
    /// Largest `n` accepted in four dimensions.
    pub cap_d4: usize,
    /// Number of iterated-Radon proposals tried in three and four dimensions.
    pub attempts: usize,
    /// Seed of the proposal generator.
    pub seed: u64,
}

impl Default for TukeyConfig {
    fn default() -> Self {
        TukeyConfig { cap_d2: 60, cap_d3: 48, cap_d4: 16, attempts: 256, seed: 0x0074_756b_6579 }
    }
}

/// A point with a certified Tukey depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centerpoint {
    /// The point.
    pub point: RationalPoint,
    /// Certified depth: every closed halfspace whose boundary passes through
    /// the point contains at least this many points of `P`.
    pub depth: u64,
    /// The centerpoint guarantee `ceil(n / (d + 1))`.
    pub required: u64,
    /// Number of candidates that were verified.
    pub attempts: usize,
}

/// Centerpoint with the default configuration; see [`tukey_centerpoint_with`].
pub fn tukey_centerpoint(set: &PointSet) -> Result<Centerpoint> {
    tukey_centerpoint_with(set, &TukeyConfig::default())
}

/// A point of Tukey depth at least `ceil(n / (d + 1))`, with its certificate.
///
/// The search first reduces to the affine hull of `P`: a single point is its
/// own centerpoint, a collinear set uses its median member, and a set
/// spanning a `k`-flat with `k < d` is projected bijectively onto `k`
/// coordinate axes, solved there and lifted back exactly.
///
/// In the plane the candidates are the centroid followed by the members and
/// the crossings of lines through pairs of points, nearest to the
/// coordinate-wise median first. The centerpoint region is a convex polygon
/// whose vertices are such crossings or members, so the final exhaustive
/// round always succeeds. Each candidate's depth is computed exactly.
///
/// In three and four dimensions the candidates are the centroid, the
/// coordinate-wise median and iterated Radon points of random samples, each
/// rounded to a dyadic grid, then the members and the exact Radon points of
/// `(d + 2)`-subsets in lexicographic order. Small or degenerate sets need
/// the exact points: a centerpoint of few points sits on a segment or a
/// face spanned by members. Every candidate is certified by [`tukey_depth`].
///
/// Fails with [`GeomError::CapExceeded`] beyond the configured size caps and
/// with [`GeomError::CertificationFailed`] when the budget runs out; an
/// uncertified point is never returned.
pub fn tukey_centerpoint_with(set: &PointSet, config: &TukeyConfig) -> Result<Centerpoint> {
    let (n, d) = (set.len(), set.dim());
    if n == 0 {
        return Err(GeomError::Empty);
    }
    let cap = match d {
        1 | 2 => config.cap_d2,
        3 => config.cap_d3,
        4 => config.cap_d4,
        _ => return Err(GeomError::CapExceeded { what: "tukey centerpoint dimension", n: d, cap: 4 }),
    };
    if n > cap {
        return Err(GeomError::CapExceeded { what: "tukey centerpoint", n, cap });
    }
    let required = n.div_ceil(d + 1) as u64;
    let hull = AffineHull::of(set);
    match hull.rank() {
        0 => Ok(Centerpoint { point: RationalPoint::from(set.point(0)), depth: 1, required, attempts: 1 }),
        1 => {
            let axis = hull.axes[0];
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&i| set.point(i).coord(axis));
            let pos = (n - 1) / 2;
            let depth = (pos + 1).min(n - pos) as u64;
            Ok(Centerpoint { point: RationalPoint::from(set.point(order[pos])), depth, required, attempts: 1 })
        }
        k if k < d => {
            let projected = PointSet::from_rows(
                &set.points()
                    .iter()
                    .map(|p| hull.axes.iter().map(|&a| p.coord(a)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            )?;
            let found = solve_full(&projected, required, config)?;
            Ok(Centerpoint { point: hull.lift(set, &found.point)?, ..found })
        }
        _ => solve_full(set, required, config),
    }
}

fn solve_full(set: &PointSet, required: u64, config: &TukeyConfig) -> Result<Centerpoint> {
    if set.dim() == 2 {
        solve_planar(set, required)
    } else {
        solve_spatial(set, required, config)
    }
}

/// Tukey depth of `c`: the fewest points of `P` in a closed halfspace whose boundary passes through `c`.
///
/// * `d = 1`: `min(#{p <= c}, #{p >= c})`.
/// * `d = 2`: exact for every `c`. For each point `p_i != c` the line through
///   `c` and `p_i` splits the others into `L_i` strictly left, `R_i` strictly
///   right, `S_i` on the ray towards `p_i` (including `p_i`) and `O_i` on the
///   opposite ray. Turning that line slightly either way gives the closed
///   counts `Z + min(L_i, R_i) + min(S_i, O_i)`, with `Z` the number of points
///   equal to `c`, and every closed halfplane through `c` contains at least
///   the smallest of these.
/// * `d = 3, 4`: for every hyperplane `H` through `c` and `d - 1` points,
///   the smaller number of points strictly on one side plus the depth of the
///   points on `H` within `H`, recursively, plus `Z`. Exact for every `c`.
///
/// In three and four dimensions a set that is not full-dimensional is first
/// projected onto its affine hull; a query off the hull has depth 0.
pub fn tukey_depth(set: &PointSet, c: &RationalPoint) -> Result<u64> {
    if c.dim() != set.dim() {
        return Err(GeomError::DimensionMismatch { expected: set.dim(), found: c.dim() });
    }
    if set.dim() >= 3 {
        let hull = AffineHull::of(set);
        if hull.rank() == 0 {
            let at = (0..c.dim()).all(|k| c.coord(k) == (set.point(0).coord(k) as i128, 1));
            return Ok(if at { set.len() as u64 } else { 0 });
        }
        if hull.rank() < set.dim() {
            let project = |x: &[(i128, i128)]| hull.axes.iter().map(|&a| x[a]).collect::<Vec<_>>();
            let coords: Vec<(i128, i128)> = (0..c.dim()).map(|k| c.coord(k)).collect();
            let shadow = RationalPoint::from_ratios(&project(&coords))?;
            if hull.lift(set, &shadow)? != *c {
                return Ok(0);
            }
            let rows: Vec<Vec<i64>> =
                set.points().iter().map(|p| hull.axes.iter().map(|&a| p.coord(a)).collect()).collect();
            return tukey_depth(&PointSet::from_rows(&rows)?, &shadow);
        }
    }
    depth_full(set, c)
}

/// [`tukey_depth`] for a set spanning its space.
fn depth_full(set: &PointSet, c: &RationalPoint) -> Result<u64> {
    let vectors: Vec<Vec<i128>> = set
        .points()
        .iter()
        .map(|p| (0..set.dim()).map(|k| c.offset_to(p, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let zero = vectors.iter().filter(|v| v.iter().all(|&x| x == 0)).count() as u64;
    let live: Vec<&Vec<i128>> = vectors.iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
    let open = match set.dim() {
        1 => {
            let below = live.iter().filter(|v| v[0] < 0).count();
            below.min(live.len() - below) as u64
        }
        2 => planar_open_min(&live),
        3 | 4 => spatial_closed_min(&live),
        d => return Err(GeomError::CapExceeded { what: "tukey depth dimension", n: d, cap: 4 }),
    };
    Ok(zero + open)
}

fn sign_i128(x: i128) -> i32 {
    match x.cmp(&0) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn sign_big(x: &BigInt) -> i32 {
    sign_i128(match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    })
}

/// Sign of `u0 * v1 - u1 * v0`, falling back to big integers on overflow.
fn cross_sign(u: &[i128], v: &[i128]) -> i32 {
    match u[0].checked_mul(v[1]).zip(u[1].checked_mul(v[0])).and_then(|(a, b)| a.checked_sub(b)) {
        Some(x) => sign_i128(x),
        None => sign_big(&(BigInt::from(u[0]) * v[1] - BigInt::from(u[1]) * v[0])),
    }
}

/// Sign of `u0 * v0 + u1 * v1`, falling back to big integers on overflow.
fn dot_sign(u: &[i128], v: &[i128]) -> i32 {
    match u[0].checked_mul(v[0]).zip(u[1].checked_mul(v[1])).and_then(|(a, b)| a.checked_add(b)) {
        Some(x) => sign_i128(x),
        None => sign_big(&(BigInt::from(u[0]) * v[0] + BigInt::from(u[1]) * v[1])),
    }
}

fn planar_open_min(live: &[&Vec<i128>]) -> u64 {
    let mut best = live.len() as u64;
    for u in live {
        let (mut left, mut right, mut same, mut opposite) = (0u64, 0u64, 0u64, 0u64);
        for v in live {
            match cross_sign(u, v) {
                1 => left += 1,
                -1 => right += 1,
                _ if dot_sign(u, v) > 0 => same += 1,
                _ => opposite += 1,
            }
        }
        best = best.min(left.min(right) + same.min(opposite));
    }
    best
}

/// Calls `f` with every increasing `k`-subset of `0..m`.
fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if k > m {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        let Some(t) = (0..k).rev().find(|&t| idx[t] != t + m - k) else {
            return Ok(());
        };
        idx[t] += 1;
        for s in t + 1..k {
            idx[s] = idx[s - 1] + 1;
        }
    }
}

/// Exact arithmetic for the depth recursion. `i128` reports overflow as
/// `None`, after which the caller retries with `BigInt`.
trait Ring: Clone {
    fn from_i128(x: i128) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn sign(&self) -> i32;
}

impl Ring for i128 {
    fn from_i128(x: i128) -> Self {
        x
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sign(&self) -> i32 {
        sign_i128(*self)
    }
}

impl Ring for BigInt {
    fn from_i128(x: i128) -> Self {
        BigInt::from(x)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sign(&self) -> i32 {
        sign_big(self)
    }
}

/// Determinant by cofactor expansion along the first row (sizes up to 3).
fn ring_det<R: Ring>(m: &[Vec<R>]) -> Option<R> {
    if m.len() == 1 {
        return Some(m[0][0].clone());
    }
    let mut acc = R::from_i128(0);
    for c in 0..m.len() {
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][c].mul(&ring_det(&minor)?)?;
        acc = acc.add(&if c % 2 == 0 { term } else { term.neg()? })?;
    }
    Some(acc)
}

/// A normal of the hyperplane spanned by `k - 1` vectors in dimension `k`.
fn ring_normal<R: Ring>(rows: &[&Vec<R>], k: usize) -> Option<Vec<R>> {
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<R>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let det = ring_det(&minor)?;
            if j % 2 == 0 {
                Some(det)
            } else {
                det.neg()
            }
        })
        .collect()
}

fn ring_dot<R: Ring>(u: &[R], v: &[R]) -> Option<R> {
    u.iter().zip(v).try_fold(R::from_i128(0), |acc, (a, b)| acc.add(&a.mul(b)?))
}

/// Fewest vectors in a closed halfspace through the origin, for nonzero
/// vectors spanning their space `R^k`.
///
/// An optimal halfspace can be turned until its boundary `H` is spanned by
/// `k - 1` of the vectors. Tilting `H` slightly then keeps the vectors
/// strictly on the chosen side and, of those on `H`, exactly the ones in a
/// closed halfspace of `H`; the best tilt is the same problem one dimension
/// lower, for the vectors on `H` projected injectively to `k - 1`
/// coordinates. Those vectors span `H`, so the recursion stays well posed.
fn closed_min<R: Ring>(vs: &[Vec<R>]) -> Option<u64> {
    let Some(k) = vs.first().map(Vec::len) else {
        return Some(0);
    };
    if k == 1 {
        let neg = vs.iter().filter(|v| v[0].sign() < 0).count();
        return Some(neg.min(vs.len() - neg) as u64);
    }
    let mut best = vs.len() as u64;
    let mut idx: Vec<usize> = (0..k - 1).collect();
    let m = vs.len();
    if m < k - 1 {
        return Some(0);
    }
    loop {
        let rows: Vec<&Vec<R>> = idx.iter().map(|&i| &vs[i]).collect();
        let u = ring_normal(&rows, k)?;
        if let Some(drop) = u.iter().position(|x| x.sign() != 0) {
            let (mut pos, mut neg) = (0u64, 0u64);
            let mut on: Vec<Vec<R>> = Vec::new();
            for v in vs {
                match ring_dot(&u, v)?.sign() {
                    1 => pos += 1,
                    -1 => neg += 1,
                    _ => on.push(v.iter().enumerate().filter(|&(c, _)| c != drop).map(|(_, x)| x.clone()).collect()),
                }
            }
            let side = pos.min(neg);
            if side < best {
                best = best.min(side + closed_min(&on)?);
            }
        }
        let Some(t) = (0..k - 1).rev().find(|&t| idx[t] != t + m - (k - 1)) else {
            return Some(best);
        };
        idx[t] += 1;
        for s in t + 1..k - 1 {
            idx[s] = idx[s - 1] + 1;
        }
    }
}

/// [`closed_min`] in `i128`, falling back to `BigInt` on overflow.
fn spatial_closed_min(live: &[&Vec<i128>]) -> u64 {
    let small: Vec<Vec<i128>> = live.iter().map(|v| v.to_vec()).collect();
    closed_min(&small).unwrap_or_else(|| {
        let big: Vec<Vec<BigInt>> = live.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        closed_min(&big).expect("BigInt arithmetic cannot overflow")
    })
}

/// The Radon point of `d + 2` members, exactly, when it fits in `i128`.
///
/// With `lambda` the null vector of the affine dependence (by cofactors),
/// the point is `sum_{lambda_i > 0} lambda_i p_i / sum_{lambda_i > 0} lambda_i`.
fn exact_radon(set: &PointSet, idx: &[usize]) -> Option<RationalPoint> {
    let d = set.dim();
    let column = |i: usize| -> Vec<BigInt> {
        let mut c: Vec<BigInt> = set.point(i).coords().iter().map(|&x| BigInt::from(x)).collect();
        c.push(BigInt::from(1));
        c
    };
    let cols: Vec<Vec<BigInt>> = idx.iter().map(|&i| column(i)).collect();
    let lambda: Vec<BigInt> = (0..idx.len())
        .map(|skip| {
            let m: Vec<Vec<BigInt>> = (0..=d)
                .map(|r| cols.iter().enumerate().filter(|&(c, _)| c != skip).map(|(_, col)| col[r].clone()).collect())
                .collect();
            let det = big_det(&m);
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect();
    let zero = BigInt::from(0);
    let weight: BigInt = lambda.iter().filter(|&l| *l > zero).sum();
    if weight == zero {
        return None;
    }
    let mut num: Vec<BigInt> =
        (0..d).map(|k| lambda.iter().zip(&cols).filter(|(l, _)| **l > zero).map(|(l, c)| l * &c[k]).sum()).collect();
    let g = num.iter().fold(weight.clone(), |g, x| g.gcd(x));
    for x in num.iter_mut() {
        *x /= &g;
    }
    let den = i128::try_from(weight / &g).ok()?;
    let num = num.iter().map(|x| i128::try_from(x).ok()).collect::<Option<Vec<_>>>()?;
    RationalPoint::new(num, den).ok()
}

fn coordinate_median(set: &PointSet) -> Vec<f64> {
    (0..set.dim())
        .map(|k| {
            let mut xs: Vec<i64> = set.points().iter().map(|p| p.coord(k)).collect();
            xs.sort_unstable();
            let n = xs.len();
            (xs[(n - 1) / 2] as f64 + xs[n / 2] as f64) / 2.0
        })
        .collect()
}

fn centroid(set: &PointSet) -> Result<RationalPoint> {
    let num = (0..set.dim()).map(|k| set.points().iter().map(|p| p.coord(k) as i128).sum()).collect();
    RationalPoint::new(num, set.len() as i128)
}

fn distance2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Crossing of the line through points `a, b` with the line through `c, e`.
fn crossing(set: &PointSet, [a, b, c, e]: [usize; 4]) -> Result<Option<RationalPoint>> {
    let p = |i: usize| (set.point(i).coord(0) as i128, set.point(i).coord(1) as i128);
    let (pa, pb, pc, pe) = (p(a), p(b), p(c), p(e));
    let r = (pb.0 - pa.0, pb.1 - pa.1);
    let s = (pe.0 - pc.0, pe.1 - pc.1);
    let den = r.0 * s.1 - r.1 * s.0;
    if den == 0 {
        return Ok(None);
    }
    let t = (pc.0 - pa.0) * s.1 - (pc.1 - pa.1) * s.0;
    let coord =
        |base: i128, dir: i128| base.checked_mul(den).zip(dir.checked_mul(t)).and_then(|(x, y)| x.checked_add(y));
    match (coord(pa.0, r.0), coord(pa.1, r.1)) {
        (Some(x), Some(y)) => Ok(Some(RationalPoint::new(vec![x, y], den)?)),
        _ => Err(GeomError::Overflow),
    }
}

fn solve_planar(set: &PointSet, required: u64) -> Result<Centerpoint> {
    let mut attempts = 0usize;
    let mut check = |point: RationalPoint| -> Result<Option<Centerpoint>> {
        attempts += 1;
        let depth = tukey_depth(set, &point)?;
        Ok((depth >= required).then_some(Centerpoint { point, depth, required, attempts }))
    };
    if let Some(found) = check(centroid(set)?)? {
        return Ok(found);
    }
    let n = set.len();
    let median = coordinate_median(set);
    let mut by_distance: Vec<usize> = (0..n).collect();
    let pts: Vec<Vec<f64>> = set.points().iter().map(|p| p.coords().iter().map(|&c| c as f64).collect()).collect();
    by_distance.sort_by(|&i, &j| distance2(&pts[i], &median).total_cmp(&distance2(&pts[j], &median)));
    let mut done = 0usize;
    for near in [12usize, 24, n] {
        let near = near.min(n);
        if near <= done {
            continue;
        }
        let chosen = &by_distance[..near];
        let mut candidates: Vec<(f64, [usize; 4])> = Vec::new();
        for (s, &i) in chosen.iter().enumerate() {
            if s >= done {
                candidates.push((distance2(&pts[i], &median), [i, i, i, i]));
            }
        }
        let mut lines: Vec<(usize, usize, bool)> = Vec::new();
        for s in 0..near {
            for t in s + 1..near {
                lines.push((chosen[s], chosen[t], t >= done));
            }
        }
        for x in 0..lines.len() {
            for y in x + 1..lines.len() {
                let ((a, b, new_a), (c, e, new_c)) = (lines[x], lines[y]);
                if !(new_a || new_c) || a == c || a == e || b == c || b == e {
                    continue;
                }
                if let Some(q) = crossing(set, [a, b, c, e])? {
                    let f = q.to_f64();
                    candidates.push((distance2(&f, &median), [a, b, c, e]));
                }
            }
        }
        candidates.sort_by(|x, y| x.0.total_cmp(&y.0));
        for (_, quad) in candidates {
            let point = if quad[0] == quad[1] {
                RationalPoint::from(set.point(quad[0]))
            } else {
                crossing(set, quad)?.expect("crossing was computed before")
            };
            if let Some(found) = check(point)? {
                return Ok(found);
            }
        }
        done = near;
    }
    Err(GeomError::CertificationFailed { required: required as usize, attempts })
}

/// Null vector of the `(d + 1) x (d + 2)` Radon system, by Gaussian elimination.
fn radon_point(points: &[Vec<f64>]) -> Vec<f64> {
    let d = points[0].len();
    let cols = d + 2;
    let mut m: Vec<Vec<f64>> = (0..d).map(|k| points.iter().map(|p| p[k]).collect()).collect();
    m.push(vec![1.0; cols]);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let best = (row..m.len()).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs())).expect("rows remain");
        let scale = m.iter().map(|r| r[col].abs()).fold(1.0, f64::max);
        if m[best][col].abs() <= 1e-12 * scale {
            continue;
        }
        m.swap(row, best);
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row {
                let f = other[col] / pivot_row[col];
                for (x, p) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = (0..cols).find(|c| !pivots.contains(c)).expect("more columns than rows");
    let mut lambda = vec![0.0; cols];
    lambda[free] = 1.0;
    for (r, &col) in pivots.iter().enumerate() {
        lambda[col] = -m[r][free] / m[r][col];
    }
    let weight: f64 = lambda.iter().filter(|&&l| l > 0.0).sum();
    (0..d)
        .map(|k| points.iter().zip(&lambda).filter(|(_, &l)| l > 0.0).map(|(p, &l)| l * p[k]).sum::<f64>() / weight)
        .collect()
}

fn iterated_radon(pts: &[Vec<f64>], rng: &mut ChaCha8Rng, levels: u32) -> Vec<f64> {
    let d = pts[0].len();
    let size = (d + 2).pow(levels);
    let mut layer: Vec<Vec<f64>> = (0..size).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect();
    while layer.len() > 1 {
        layer = layer.chunks(d + 2).map(radon_point).collect();
    }
    layer.pop().expect("one point remains")
}

fn solve_spatial(set: &PointSet, required: u64, config: &TukeyConfig) -> Result<Centerpoint> {
    let d = set.dim();
    let entry_bits: i32 = if d == 3 { 39 } else { 29 };
    let bits = 64 - (set.max_abs_coord() as u64).leading_zeros() as i32;
    let den = 1i128 << (entry_bits - bits).clamp(0, 60);
    let jitter = [1i128, 3, 7, 13];
    let snap = |x: &[f64]| -> Result<RationalPoint> {
        let num = x.iter().enumerate().map(|(k, &v)| libm::round(v * den as f64) as i128 + jitter[k]).collect();
        RationalPoint::new(num, den)
    };
    let pts: Vec<Vec<f64>> = set.points().iter().map(|p| p.coords().iter().map(|&c| c as f64).collect()).collect();
    let mut attempts = 0usize;
    let mut check = |point: RationalPoint| -> Result<Option<Centerpoint>> {
        attempts += 1;
        let depth = depth_full(set, &point)?;
        Ok((depth >= required).then_some(Centerpoint { point, depth, required, attempts }))
    };
    if let Some(found) = check(snap(&centroid(set)?.to_f64())?)? {
        return Ok(found);
    }
    if let Some(found) = check(snap(&coordinate_median(set))?)? {
        return Ok(found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for attempt in 0..config.attempts {
        let levels = 2 + (attempt % 2) as u32;
        if let Some(found) = check(snap(&iterated_radon(&pts, &mut rng, levels))?)? {
            return Ok(found);
        }
    }
    for member in set.points() {
        if let Some(found) = check(RationalPoint::from(member))? {
            return Ok(found);
        }
    }
    let mut result = None;
    let mut tried = 0usize;
    for_each_subset(set.len(), d + 2, |idx| {
        if result.is_some() || tried >= EXACT_RADON_CAP {
            return Ok(());
        }
        tried += 1;
        if let Some(point) = exact_radon(set, idx) {
            result = check(point)?;
        }
        Ok(())
    })?;
    result.ok_or(GeomError::CertificationFailed { required: required as usize, attempts })
}

/// Largest number of `(d + 2)`-subsets whose exact Radon points are tried
/// after the rounded proposals and the members.
const EXACT_RADON_CAP: usize = 4096;

/// Affine hull of a point set: an independent set of difference vectors and
/// coordinate axes onto which the hull projects bijectively.
struct AffineHull {
    basis: Vec<Vec<BigInt>>,
    axes: Vec<usize>,
}

fn big_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        k => (0..k)
            .map(|c| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][c] * big_det(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

impl AffineHull {
    fn of(set: &PointSet) -> Self {
        let d = set.dim();
        let origin = set.point(0);
        let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
        let mut basis = Vec::new();
        for p in set.points().iter().skip(1) {
            let diff: Vec<BigInt> =
                (0..d).map(|k| BigInt::from(p.coord(k) as i128 - origin.coord(k) as i128)).collect();
            let mut v = diff.clone();
            for (col, row) in &echelon {
                if v[*col] != BigInt::from(0) {
                    let f = v[*col].clone();
                    v = v.iter().zip(row).map(|(x, r)| x * &row[*col] - r * &f).collect();
                }
            }
            if let Some(col) = v.iter().position(|x| *x != BigInt::from(0)) {
                echelon.push((col, v));
                basis.push(diff);
            }
        }
        let k = basis.len();
        let mut axes: Vec<usize> = Vec::new();
        let _ = for_each_subset(d, k, |cols| {
            if axes.is_empty() || k == 0 {
                let m: Vec<Vec<BigInt>> = (0..k).map(|r| cols.iter().map(|&c| basis[r][c].clone()).collect()).collect();
                if big_det(&m) != BigInt::from(0) {
                    axes = cols.to_vec();
                }
            }
            Ok(())
        });
        AffineHull { basis, axes }
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The point of the hull whose coordinates on `self.axes` are `c`.
    fn lift(&self, set: &PointSet, c: &RationalPoint) -> Result<RationalPoint> {
        let k = self.rank();
        let d = set.dim();
        let origin = set.point(0);
        // Column t of `m` is basis vector t restricted to the chosen axes.
        let m: Vec<Vec<BigInt>> =
            (0..k).map(|r| (0..k).map(|t| self.basis[t][self.axes[r]].clone()).collect()).collect();
        let det = big_det(&m);
        let den = BigInt::from(c.den());
        let y: Vec<BigInt> =
            (0..k).map(|r| BigInt::from(c.numerators()[r]) - &den * BigInt::from(origin.coord(self.axes[r]))).collect();
        // lambda = adj(m) y / det, by Cramer's rule.
        let lambda: Vec<BigInt> = (0..k)
            .map(|t| {
                let replaced: Vec<Vec<BigInt>> = (0..k)
                    .map(|r| (0..k).map(|s| if s == t { y[r].clone() } else { m[r][s].clone() }).collect())
                    .collect();
                big_det(&replaced)
            })
            .collect();
        let total_den = &det * &den;
        let mut num: Vec<BigInt> = (0..d)
            .map(|j| {
                let base = BigInt::from(origin.coord(j)) * &total_den;
                base + (0..k).map(|t| &self.basis[t][j] * &lambda[t]).sum::<BigInt>()
            })
            .collect();
        let mut total_den = total_den;
        if total_den.sign() == num_bigint::Sign::Minus {
            total_den = -total_den;
            num.iter_mut().for_each(|x| *x = -x.clone());
        }
        let g = num.iter().fold(total_den.clone(), |g, x| g.gcd(x));
        let to_i128 = |x: BigInt| i128::try_from(x / &g).map_err(|_| GeomError::Overflow);
        let num = num.into_iter().map(to_i128).collect::<Result<Vec<_>>>()?;
        RationalPoint::new(num, to_i128(total_den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random_point_set;

    #[test]
    fn triangle_centroid() {
        let p = PointSet::planar(&[(0, 0), (6, 0), (0, 6)]).unwrap();
        let c = tukey_centerpoint(&p).unwrap();
        assert_eq!(c.point, RationalPoint::new(vec![2, 2], 1).unwrap());
        assert_eq!((c.depth, c.required), (1, 1));
    }

    #[test]
    fn convex_quadrilateral_diagonal_crossing() {
        let p = PointSet::planar(&[(0, 0), (10, 1), (12, 9), (1, 7)]).unwrap();
        let c = tukey_centerpoint(&p).unwrap();
        assert!(c.depth >= 2);
        assert_eq!(tukey_depth(&p, &c.point).unwrap(), c.depth);
    }

    #[test]
    fn planar_depth_examples() {
        let p = PointSet::planar(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        let centre = RationalPoint::new(vec![1, 1], 1).unwrap();
        assert_eq!(tukey_depth(&p, &centre).unwrap(), 2);
        let corner = RationalPoint::new(vec![0, 0], 1).unwrap();
        assert_eq!(tukey_depth(&p, &corner).unwrap(), 1);
        let outside = RationalPoint::new(vec![5, 5], 1).unwrap();
        assert_eq!(tukey_depth(&p, &outside).unwrap(), 0);
        let edge = RationalPoint::new(vec![1, 0], 1).unwrap();
        assert_eq!(tukey_depth(&p, &edge).unwrap(), 1);
    }

    #[test]
    fn random_planar_sets_certify() {
        for seed in 0..5 {
            let p = random_point_set(40, 2, seed, false, 5000).unwrap();
            let c = tukey_centerpoint(&p).unwrap();
            assert!(c.depth >= 14, "seed {seed}: {c:?}");
        }
    }

    #[test]
    fn collinear_sets_use_the_median() {
        let p = PointSet::from_rows(&(1..=12).map(|i| [i, 2 * i, 3 * i]).collect::<Vec<_>>()).unwrap();
        let c = tukey_centerpoint(&p).unwrap();
        assert_eq!(c.point, RationalPoint::new(vec![6, 12, 18], 1).unwrap());
        assert_eq!((c.depth, c.required), (6, 3));
    }

    #[test]
    fn coplanar_set_in_space_is_lifted() {
        // All points satisfy z = x + 2y.
        let rows: Vec<[i64; 3]> = [(0, 0), (7, 1), (3, 9), (8, 6), (1, 5), (5, 3), (9, 9), (2, 8)]
            .iter()
            .map(|&(x, y)| [x, y, x + 2 * y])
            .collect();
        let p = PointSet::from_rows(&rows).unwrap();
        let c = tukey_centerpoint(&p).unwrap();
        let (x, y, z) = (c.point.coord(0), c.point.coord(1), c.point.coord(2));
        let f = |r: (i128, i128)| num_rational::Ratio::new(r.0, r.1);
        assert_eq!(f(z), f(x) + f(y) * 2);
        assert!(c.depth >= c.required);
    }

    #[test]
    fn random_spatial_sets_certify() {
        for (n, d) in [(48, 3), (24, 3), (16, 4)] {
            let p = random_point_set(n, d, 7, false, 10_000).unwrap();
            let c = tukey_centerpoint(&p).unwrap();
            assert!(c.depth >= c.required);
        }
    }

    #[test]
    fn caps() {
        let p = random_point_set(61, 2, 1, false, 100_000).unwrap();
        assert!(matches!(tukey_centerpoint(&p), Err(GeomError::CapExceeded { .. })));
    }

    #[test]
    fn small_spatial_set_reaches_depth_two() {
        let p = PointSet::from_rows(&[[0, 2, 35], [1, 1, 36], [2, 4, 38], [3, 3, 37], [4, 0, 39]]).unwrap();
        let c = tukey_centerpoint(&p).unwrap();
        assert!(c.depth >= 2);
        assert_eq!(tukey_depth(&p, &c.point).unwrap(), c.depth);
    }

    #[test]
    fn spatial_depth_of_a_cube_centre() {
        let rows: Vec<[i64; 3]> = (0..8).map(|m| [2 * (m & 1), (m >> 1) & 1, (m >> 2) & 1].map(|x| 2 * x)).collect();
        let p = PointSet::from_rows(&rows).unwrap();
        let centre = RationalPoint::new(vec![2, 1, 1], 1).unwrap();
        assert_eq!(tukey_depth(&p, &centre).unwrap(), 4);
        let vertex = RationalPoint::new(vec![0, 0, 0], 1).unwrap();
        assert_eq!(tukey_depth(&p, &vertex).unwrap(), 1);
    }

    #[test]
    fn flat_spatial_sets_are_projected() {
        let p = PointSet::from_rows(&[[0, 0, 5], [4, 0, 5], [4, 4, 5], [0, 4, 5]]).unwrap();
        let on = RationalPoint::new(vec![2, 2, 5], 1).unwrap();
        assert_eq!(tukey_depth(&p, &on).unwrap(), 2);
        let off = RationalPoint::new(vec![2, 2, 6], 1).unwrap();
        assert_eq!(tukey_depth(&p, &off).unwrap(), 0);
        let line = PointSet::from_rows(&[[0, 0, 0], [1, 1, 1], [2, 2, 2], [3, 3, 3]]).unwrap();
        let mid = RationalPoint::new(vec![3, 3, 3], 2).unwrap();
        assert_eq!(tukey_depth(&line, &mid).unwrap(), 2);
        let same = PointSet::from_rows(&[[1, 1, 1]]).unwrap();
        assert_eq!(tukey_depth(&same, &RationalPoint::new(vec![1, 1, 1], 1).unwrap()).unwrap(), 1);
    }
}
