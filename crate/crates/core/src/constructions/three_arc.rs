use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use super::obtuse::verify_obtuse_pattern;
use crate::{GeomError, Point, PointSet, Result};

/// Shape parameters of the three-arc construction.
///
/// The points lie on three short arcs placed at the vertices `A`, `B`, `C` of
/// a triangle. The arc at `A` is centred at `B`, the arc at `B` is centred at
/// `C` and the arc at `C` is centred at `A`, each passing through its vertex.
/// With `m = n / 3` points per arc and `M = m - 1`, the derived quantities are
///
/// * `beta = width_b / (M cos B)`, `gamma = width_c / (M sin B)`,
/// * `eta = tilt * beta * gamma / M`, angle `A = 90 deg - eta`, `C = 90 deg - B + eta`,
/// * arc lengths `L_A = spread * eta / (1 + beta + beta gamma) * R`,
///   `L_B = beta L_A`, `L_C = gamma L_B`, where `R = |AB|`.
///
/// These ratios make every chord of one arc subtend an obtuse angle at the
/// next arc while every triangle with one point per arc stays acute, which
/// forces the angle at `A` to within about `1 / M^3` of a right angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeArcParams {
    /// Angle of the triangle at `B`, in degrees.
    pub angle_b_deg: f64,
    /// Rotation of the whole figure, in degrees, so that no two points share a coordinate.
    pub rotation_deg: f64,
    /// Ratio factor for the arc at `B`.
    pub width_b: f64,
    /// Ratio factor for the arc at `C`.
    pub width_c: f64,
    /// Fraction of the admissible deviation of angle `A` from 90 degrees.
    pub tilt: f64,
    /// Fraction of the admissible length of the arc at `A`.
    pub spread: f64,
    /// Number of lattice columns searched on each side of an ideal arc point,
    /// as a fraction of the spacing between consecutive arc points.
    pub search: f64,
    /// Upper bound on the lattice columns searched on each side.
    pub search_cap: i64,
}

impl Default for ThreeArcParams {
    fn default() -> Self {
        ThreeArcParams {
            angle_b_deg: 70.0,
            rotation_deg: 23.0,
            width_b: 0.5,
            width_c: 0.5,
            tilt: 0.4,
            spread: 0.5,
            search: 0.2,
            search_cap: 1 << 16,
        }
    }
}

/// Largest exponent tried when the radius is chosen automatically.
const MAX_RADIUS_BITS: u32 = 48;

/// First exponent tried for `m` points per arc. The radius needed grows like
/// `m^3.5` (it passes at `2^23`, `2^34` and `2^43` for `m = 4, 8, 16`), so the
/// search starts a few bits below that trend.
fn first_radius_bits(m: usize) -> u32 {
    let log_m = usize::BITS - m.saturating_sub(1).leading_zeros();
    (10 * log_m).saturating_sub(2).max(12)
}

/// Point labels of a three-arc set: `n / 3` points each of classes 0, 1, 2, in order.
pub fn three_arc_labels(n: usize) -> Vec<u8> {
    (0..n).map(|i| (3 * i / n.max(1)) as u8).collect()
}

/// Builds the three-arc set with `n / 3` points per arc.
///
/// With `radius = Some(r)` the set is built at `|AB| = r` without further
/// checks. With `None` the radius doubles from a size-dependent start and the first
/// set with distinct coordinates that passes [`verify_obtuse_pattern`] is
/// returned.
pub fn three_arc(n: usize, radius: Option<i64>, params: &ThreeArcParams) -> Result<PointSet> {
    if n == 0 || !n.is_multiple_of(3) {
        return Err(GeomError::InvalidSpec(alloc::format!("threearc: n = {n} is not a positive multiple of 3")));
    }
    if let Some(r) = radius {
        return build(n, r as f64, params);
    }
    let labels = three_arc_labels(n);
    for bits in first_radius_bits(n / 3)..=MAX_RADIUS_BITS {
        let set = match build(n, (1u64 << bits) as f64, params) {
            Ok(set) => set,
            Err(GeomError::DuplicatePoint(..)) => continue,
            Err(e) => return Err(e),
        };
        let distinct = (0..2).all(|k| set.axis_ranks(k).0.len() == n);
        if distinct && verify_obtuse_pattern(&set, &labels)?.holds {
            return Ok(set);
        }
    }
    Err(GeomError::InvalidSpec(alloc::format!(
        "threearc: no radius up to 2^{} realizes the obtuse pattern for n = {n}",
        MAX_RADIUS_BITS
    )))
}

fn build(n: usize, r: f64, params: &ThreeArcParams) -> Result<PointSet> {
    let m = n / 3;
    let big_m = m.saturating_sub(1).max(1) as f64;
    let angle_b = params.angle_b_deg.to_radians();
    let beta = params.width_b / (big_m * libm::cos(angle_b));
    let gamma = params.width_c / (big_m * libm::sin(angle_b));
    let eta = params.tilt * gamma * beta / big_m;
    let angle_a = FRAC_PI_2 - eta;
    let angle_c = core::f64::consts::PI - angle_a - angle_b;
    let lambda = params.spread * eta / (1.0 + beta + beta * gamma);
    let ac = r * libm::sin(angle_b) / libm::sin(angle_c);
    let rot = params.rotation_deg.to_radians();
    let place = |x: f64, y: f64| -> (i64, i64) {
        let (s, c) = (libm::sin(rot), libm::cos(rot));
        (libm::round(x * c - y * s) as i64, libm::round(x * s + y * c) as i64)
    };
    let a = place(0.0, 0.0);
    let b = place(r, 0.0);
    let c = place(ac * libm::cos(angle_a), ac * libm::sin(angle_a));
    let len_a = lambda * r;
    let len_b = beta * len_a;
    let len_c = gamma * len_b;
    let columns = |len: f64| ((len / big_m * params.search) as i64).clamp(1, params.search_cap);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    for (centre, vertex, len) in [(b, a, len_a), (c, b, len_b), (a, c, len_c)] {
        for (x, y) in lattice_arc(centre, vertex, len, m, columns(len)) {
            rows.push(alloc::vec![x, y]);
        }
    }
    let points = rows.into_iter().map(Point::new).collect::<Result<Vec<_>>>()?;
    PointSet::new(2, points)
}

/// `m` lattice points near the circle about `centre` through `vertex`, spread
/// evenly over an arc of length `len` centred at `vertex`.
///
/// Each ideal point is replaced by the lattice point within `columns` steps
/// along the tangent direction whose squared distance to `centre` is closest
/// to the squared radius, so the curvature of short arcs survives rounding.
fn lattice_arc(centre: (i64, i64), vertex: (i64, i64), len: f64, m: usize, columns: i64) -> Vec<(i64, i64)> {
    let (dx, dy) = ((vertex.0 - centre.0) as i128, (vertex.1 - centre.1) as i128);
    let r2 = dx * dx + dy * dy;
    let r = libm::sqrt(r2 as f64);
    let base = libm::atan2(dy as f64, dx as f64);
    let half_width = len / (2.0 * r);
    let steps = m.saturating_sub(1).max(1) as f64;
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let t = if m == 1 { base } else { base - half_width + 2.0 * half_width * k as f64 / steps };
        let (ct, st) = (libm::cos(t), libm::sin(t));
        let ideal = (centre.0 as f64 + r * ct, centre.1 as f64 + r * st);
        // Walk along the coordinate closest to the tangent and solve for the other.
        let walk_y = ct.abs() > st.abs();
        let (walk0, solve_sign) = if walk_y {
            (libm::round(ideal.1) as i128, if ideal.0 >= centre.0 as f64 { 1 } else { -1 })
        } else {
            (libm::round(ideal.0) as i128, if ideal.1 >= centre.1 as f64 { 1 } else { -1 })
        };
        let (walk_c, solve_c) =
            if walk_y { (centre.1 as i128, centre.0 as i128) } else { (centre.0 as i128, centre.1 as i128) };
        let mut best: Option<(u128, (i128, i128))> = None;
        for dt in -(columns as i128)..=columns as i128 {
            let w = walk0 + dt;
            let rem = r2 - (w - walk_c) * (w - walk_c);
            if rem < 0 {
                continue;
            }
            let s = (rem as u128).isqrt() as i128;
            for off in [s, s + 1] {
                let other = solve_c + solve_sign * off;
                let err = ((w - walk_c) * (w - walk_c) + off * off - r2).unsigned_abs();
                if best.is_none_or(|(e, _)| err < e) {
                    best = Some((err, (w, other)));
                }
            }
        }
        let (_, (w, other)) = best.expect("the search window always contains the ideal point");
        let (x, y) = if walk_y { (other, w) } else { (w, other) };
        out.push((x as i64, y as i64));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_split_evenly() {
        assert_eq!(three_arc_labels(6), alloc::vec![0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn default_twelve_point_set_holds() {
        let set = three_arc(12, None, &ThreeArcParams::default()).unwrap();
        let report = verify_obtuse_pattern(&set, &three_arc_labels(12)).unwrap();
        assert!(report.holds, "{:?}", report.violations);
    }

    #[test]
    fn three_points_form_an_acute_triangle() {
        let set = three_arc(3, None, &ThreeArcParams::default()).unwrap();
        assert!(verify_obtuse_pattern(&set, &[0, 1, 2]).unwrap().holds);
    }
}
