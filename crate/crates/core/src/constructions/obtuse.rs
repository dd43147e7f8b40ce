use alloc::vec::Vec;

use crate::{GeomError, Point, PointSet, Result};

/// Shape of a triangle, decided by exact dot and cross products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleShape {
    /// Every angle is below 90 degrees.
    Acute,
    /// One angle is above 90 degrees.
    Obtuse,
    /// Collinear vertices or a right angle.
    Degenerate,
}

/// Result of [`verify_obtuse_pattern`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObtuseReport {
    /// Whether no triple violates the pattern.
    pub holds: bool,
    /// Triples `(i, j, k)` with `i < j < k` whose shape disagrees with the
    /// pattern, or that are degenerate.
    pub violations: Vec<([usize; 3], TriangleShape)>,
    /// Number of triples examined.
    pub triples: usize,
}

/// Classifies the triangle `abc`.
pub fn triangle_shape(a: &Point, b: &Point, c: &Point) -> TriangleShape {
    let sub = |p: &Point, q: &Point| (p.coord(0) as i128 - q.coord(0) as i128, p.coord(1) as i128 - q.coord(1) as i128);
    let (ab, ac, bc) = (sub(b, a), sub(c, a), sub(c, b));
    if ab.0 * ac.1 - ab.1 * ac.0 == 0 {
        return TriangleShape::Degenerate;
    }
    let dots = [ab.0 * ac.0 + ab.1 * ac.1, -ab.0 * bc.0 - ab.1 * bc.1, ac.0 * bc.0 + ac.1 * bc.1];
    if dots.contains(&0) {
        TriangleShape::Degenerate
    } else if dots.iter().any(|&d| d < 0) {
        TriangleShape::Obtuse
    } else {
        TriangleShape::Acute
    }
}

/// Checks that the obtuse triangles of `set` are exactly the triples whose
/// class pattern is one of `000, 111, 222, 011, 122, 002`.
///
/// `labels[i]` in `{0, 1, 2}` is the class of point `i` (the arc it lies on).
/// Degenerate triples (collinear or right-angled) are always violations.
pub fn verify_obtuse_pattern(set: &PointSet, labels: &[u8]) -> Result<ObtuseReport> {
    if set.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, found: set.dim() });
    }
    if labels.len() != set.len() || labels.iter().any(|&l| l > 2) {
        return Err(GeomError::InvalidSpec(alloc::format!(
            "need one label in 0..=2 per point ({} labels for {} points)",
            labels.len(),
            set.len()
        )));
    }
    let pts = set.points();
    let n = pts.len();
    let mut violations = Vec::new();
    let mut triples = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triples += 1;
                let shape = triangle_shape(&pts[i], &pts[j], &pts[k]);
                let expect_obtuse = obtuse_expected([labels[i], labels[j], labels[k]]);
                let ok = match shape {
                    TriangleShape::Degenerate => false,
                    TriangleShape::Obtuse => expect_obtuse,
                    TriangleShape::Acute => !expect_obtuse,
                };
                if !ok {
                    violations.push(([i, j, k], shape));
                }
            }
        }
    }
    Ok(ObtuseReport { holds: violations.is_empty(), violations, triples })
}

/// Whether the class pattern of a triple is one of the obtuse patterns.
fn obtuse_expected(mut classes: [u8; 3]) -> bool {
    classes.sort_unstable();
    matches!(classes, [0, 0, 0] | [1, 1, 1] | [2, 2, 2] | [0, 1, 1] | [1, 2, 2] | [0, 0, 2])
}
