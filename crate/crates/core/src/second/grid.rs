use alloc::vec;
use alloc::vec::Vec;

use super::InducedSubset;
use crate::{GeomError, PointSet, Result};

/// The grid `G` cut out by the horizontal and vertical lines through `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridIndex {
    /// Sorted distinct x-coordinates.
    pub xs: Vec<i64>,
    /// Sorted distinct y-coordinates.
    pub ys: Vec<i64>,
    x_rank: Vec<usize>,
    y_rank: Vec<usize>,
}

impl GridIndex {
    /// Builds the grid of a planar set.
    pub fn new(set: &PointSet) -> Result<Self> {
        if set.dim() != 2 {
            return Err(GeomError::DimensionMismatch { expected: 2, found: set.dim() });
        }
        let (xs, x_rank) = set.axis_ranks(0);
        let (ys, y_rank) = set.axis_ranks(1);
        Ok(GridIndex { xs, ys, x_rank, y_rank })
    }

    /// Number of grid points, `n^2` for a set in general position.
    pub fn len(&self) -> usize {
        self.xs.len() * self.ys.len()
    }

    /// Whether the grid is empty.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid indices `(gx, gy)` of point `i`.
    pub fn index_of(&self, i: usize) -> (usize, usize) {
        (self.x_rank[i], self.y_rank[i])
    }

    /// Closed index ranges `(x_lo, x_hi, y_lo, y_hi)` of the rectangle of a pair.
    pub fn span(&self, i: usize, j: usize) -> (usize, usize, usize, usize) {
        let (xi, yi) = self.index_of(i);
        let (xj, yj) = self.index_of(j);
        (xi.min(xj), xi.max(xj), yi.min(yj), yi.max(yj))
    }
}

/// `I_g` for every grid point under closed containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDepth {
    /// The grid.
    pub grid: GridIndex,
    /// `I_g`, row-major by x index: `depth[gx * ys.len() + gy]`.
    pub depth: Vec<u64>,
    /// Largest `I_g`.
    pub max: u64,
    /// Grid indices of the first grid point attaining the maximum.
    pub argmax: (usize, usize),
    /// Whether `max >= m^3 / (24 n^4)`.
    pub bound_holds: bool,
}

impl GridDepth {
    /// `I_g` at grid indices `(gx, gy)`.
    pub fn at(&self, gx: usize, gy: usize) -> u64 {
        self.depth[gx * self.grid.ys.len() + gy]
    }

    /// `sum_g I_g`.
    pub fn total(&self) -> u64 {
        self.depth.iter().sum()
    }
}

/// Whether `max >= m^3 / (24 n^4)`, exactly.
pub fn rectangle_bound_holds(n: usize, m: usize, max: u64) -> bool {
    let (n, m) = (n as u128, m as u128);
    24 * n.pow(4) * max as u128 >= m.pow(3)
}

/// Whether `m >= 3 n^(4/3)`, the regime in which the rectangle bound is asserted.
pub fn rectangle_threshold_met(n: usize, m: usize) -> bool {
    (m as u128).pow(3) >= 27 * (n as u128).pow(4)
}

/// `I_g` over the whole grid by a two-dimensional difference array in `O(m + n^2)`.
pub fn grid_depth_map(set: &PointSet, subset: &InducedSubset) -> Result<GridDepth> {
    subset.check_base(set)?;
    let grid = GridIndex::new(set)?;
    let (w, h) = (grid.xs.len(), grid.ys.len());
    let mut diff = vec![0i64; (w + 1) * (h + 1)];
    let at = |gx: usize, gy: usize| gx * (h + 1) + gy;
    for &(i, j) in subset.pairs() {
        let (x0, x1, y0, y1) = grid.span(i, j);
        diff[at(x0, y0)] += 1;
        diff[at(x1 + 1, y0)] -= 1;
        diff[at(x0, y1 + 1)] -= 1;
        diff[at(x1 + 1, y1 + 1)] += 1;
    }
    for gx in 0..=w {
        for gy in 1..=h {
            diff[at(gx, gy)] += diff[at(gx, gy - 1)];
        }
    }
    for gx in 1..=w {
        for gy in 0..=h {
            diff[at(gx, gy)] += diff[at(gx - 1, gy)];
        }
    }
    let depth: Vec<u64> =
        (0..w).flat_map(|gx| (0..h).map(move |gy| (gx, gy))).map(|(gx, gy)| diff[at(gx, gy)] as u64).collect();
    let (best, max) =
        depth.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).map_or((0, 0), |(i, &d)| (i, d));
    let argmax = best.checked_div(h).map_or((0, 0), |gx| (gx, best % h));
    let bound_holds = rectangle_bound_holds(set.len(), subset.len(), max);
    Ok(GridDepth { grid, depth, max, argmax, bound_holds })
}

/// `J_r` for every rectangle of the subset: the number of grid points it contains (closed).
pub fn rectangle_grid_counts(set: &PointSet, subset: &InducedSubset) -> Result<Vec<u64>> {
    subset.check_base(set)?;
    let grid = GridIndex::new(set)?;
    Ok(subset
        .pairs()
        .iter()
        .map(|&(i, j)| {
            let (x0, x1, y0, y1) = grid.span(i, j);
            ((x1 - x0 + 1) * (y1 - y0 + 1)) as u64
        })
        .collect())
}

/// Side of the partner of a rectangle relative to its lower endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Partner to the right (`X_i'`).
    Right,
    /// Partner to the left (`X_i''`).
    Left,
}

/// The rectangles assigned to one lower endpoint, split by partner side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RectanglePart {
    /// Subset indices of rectangles whose partner lies to the right, by decreasing partner y.
    pub right: Vec<usize>,
    /// Subset indices of rectangles whose partner lies to the left, by decreasing partner y.
    pub left: Vec<usize>,
}

impl RectanglePart {
    /// `m_i = m_i' + m_i''`.
    pub fn len(&self) -> usize {
        self.right.len() + self.left.len()
    }

    /// Whether the part is empty.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The rectangles on one side.
    pub fn side(&self, side: Side) -> &[usize] {
        match side {
            Side::Right => &self.right,
            Side::Left => &self.left,
        }
    }
}

/// Partition `X_1, ..., X_n` of a rectangle subset: every rectangle goes to
/// its lower endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionX {
    /// One part per point, in index order.
    pub parts: Vec<RectanglePart>,
}

/// Assigns every rectangle to the endpoint with the smaller y-coordinate and
/// splits by the side of the higher endpoint.
///
/// Within a side, rectangles are ordered by decreasing partner y, ties by
/// subset index. Endpoints with equal y go to the smaller index; a partner
/// with equal x counts as right.
pub fn partition_rectangles(set: &PointSet, subset: &InducedSubset) -> Result<PartitionX> {
    subset.check_base(set)?;
    if set.dim() != 2 {
        return Err(GeomError::DimensionMismatch { expected: 2, found: set.dim() });
    }
    let mut parts = vec![RectanglePart::default(); set.len()];
    let key = |i: usize| (set.point(i).coord(1), i);
    for (r, &(i, j)) in subset.pairs().iter().enumerate() {
        let (low, high) = if key(i) < key(j) { (i, j) } else { (j, i) };
        if set.point(high).coord(0) >= set.point(low).coord(0) {
            parts[low].right.push(r);
        } else {
            parts[low].left.push(r);
        }
    }
    let partner_y = |r: usize| {
        let (i, j) = subset.pairs()[r];
        set.point(i).coord(1).max(set.point(j).coord(1))
    };
    for part in parts.iter_mut() {
        for side in [&mut part.right, &mut part.left] {
            side.sort_by(|&a, &b| partner_y(b).cmp(&partner_y(a)).then(a.cmp(&b)));
        }
    }
    Ok(PartitionX { parts })
}

/// Result of the cubic lemma for one side of one part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionCheck {
    /// Index of the lower endpoint.
    pub base: usize,
    /// Partner side.
    pub side: Side,
    /// Number of rectangles `m_i'` or `m_i''`.
    pub m: usize,
    /// `sum J_r` over these rectangles.
    pub sum: u64,
    /// Whether `6 sum >= m^3`.
    pub holds: bool,
}

/// The cubic lemma over every part of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicReport {
    /// One entry per nonempty side of a part.
    pub checks: Vec<PartitionCheck>,
    /// Whether every entry holds.
    pub holds: bool,
}

/// Checks `sum_{r in X_i'} J_r >= (m_i')^3 / 6` and the same for `X_i''`, for every `i`.
pub fn check_cubic_lemma(set: &PointSet, subset: &InducedSubset) -> Result<CubicReport> {
    let partition = partition_rectangles(set, subset)?;
    let counts = rectangle_grid_counts(set, subset)?;
    let mut checks = Vec::new();
    for (base, part) in partition.parts.iter().enumerate() {
        for side in [Side::Right, Side::Left] {
            let members = part.side(side);
            if members.is_empty() {
                continue;
            }
            let sum: u64 = members.iter().map(|&r| counts[r]).sum();
            let m = members.len();
            checks.push(PartitionCheck { base, side, m, sum, holds: 6 * sum as u128 >= (m as u128).pow(3) });
        }
    }
    let holds = checks.iter().all(|c| c.holds);
    Ok(CubicReport { checks, holds })
}
