use alloc::vec::Vec;

use crate::{contains, Family, GeomError, PointSet, RationalPoint, Result};

/// The Delaunay graph of a family: `(a, b)` is an edge when the object
/// induced by `a` and `b` strictly contains no other point of `P`.
///
/// Defined for Skyline, DownTriangle (in the sheared frame) and Disk; the
/// naive `O(n^3)` enumeration uses the exact containment predicates. Edges
/// are returned as `(i, j)` with `i < j` in lexicographic order.
///
/// Planarity needs general position for the family: for DownTriangle no two
/// points may share `u`, `v` or `u + v`, for Disk no four points may be
/// co-circular. A point on the boundary of an induced object does not block
/// its edge, so ties can produce crossing edges.
pub fn delaunay_graph(set: &PointSet, family: Family) -> Result<Vec<(usize, usize)>> {
    if !matches!(family, Family::Skyline | Family::DownTriangle | Family::Disk) {
        return Err(GeomError::Unsupported { family, op: "delaunay_graph" });
    }
    family.check_dim(set.dim())?;
    let queries: Vec<RationalPoint> = set.points().iter().map(RationalPoint::from).collect();
    let n = set.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut empty = true;
            for (k, q) in queries.iter().enumerate() {
                if k != i && k != j && contains(family, set.point(i), set.point(j), q)? {
                    empty = false;
                    break;
                }
            }
            if empty {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_disk_graph() {
        let p = PointSet::planar(&[(0, 0), (10, 1), (4, 9)]).unwrap();
        assert_eq!(delaunay_graph(&p, Family::Disk).unwrap().len(), 3);
    }

    #[test]
    fn chain_skyline_graph() {
        let p = PointSet::planar(&[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        assert_eq!(delaunay_graph(&p, Family::Skyline).unwrap(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn unsupported_family() {
        let p = PointSet::planar(&[(0, 0), (1, 1)]).unwrap();
        assert!(matches!(delaunay_graph(&p, Family::Rectangle), Err(GeomError::Unsupported { .. })));
    }
}
