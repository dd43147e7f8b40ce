//! Second selection lemma: arbitrary subsets of the induced objects.
//!
//! Counting in this module uses *closed* containment: an object contains the
//! points on its boundary, including its own endpoints.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Family, GeomError, PointSet, Result};

mod delaunay;
mod grid;
mod intervals;
mod planarity;

pub use delaunay::delaunay_graph;
pub use grid::{
    check_cubic_lemma, grid_depth_map, partition_rectangles, rectangle_bound_holds, rectangle_grid_counts,
    rectangle_threshold_met, CubicReport, GridDepth, GridIndex, PartitionCheck, PartitionX, RectanglePart, Side,
};
pub use intervals::{
    gen_interval_upper, interval_bound_holds, interval_depth_profile, interval_partition_holds, open_depth_profile,
    IntervalProfile,
};
pub use planarity::{is_planar, planarity_check, PlanarityReport};

/// A subset `S` of the objects induced by a point set, given by index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubset {
    n: usize,
    family: Family,
    pairs: Vec<(usize, usize)>,
}

impl InducedSubset {
    /// Validates the pairs against a set of `n` points.
    ///
    /// Fails with [`GeomError::InvalidPair`] for an index out of range, a pair
    /// repeating a point, or a pair listed twice (in either order).
    pub fn new(n: usize, family: Family, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(i, j) in &pairs {
            if i == j || i >= n || j >= n {
                return Err(GeomError::InvalidPair(i, j));
            }
            seen.push((i.min(j), i.max(j)));
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeomError::InvalidPair(w[0].0, w[0].1));
        }
        Ok(InducedSubset { n, family, pairs })
    }

    /// Every pair of a set of `n` points, in lexicographic order.
    pub fn all(n: usize, family: Family) -> Self {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        InducedSubset { n, family, pairs }
    }

    /// Size of the point set the indices refer to.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The family of the objects.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The index pairs.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of objects `m`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Whether the subset is empty.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub(crate) fn check_base(&self, set: &PointSet) -> Result<()> {
        if set.len() != self.n {
            return Err(GeomError::InvalidSpec(alloc::format!(
                "subset refers to {} points but the set has {}",
                self.n,
                set.len()
            )));
        }
        Ok(())
    }
}

/// `m` distinct unordered pairs drawn uniformly, deterministic in `seed`.
///
/// Pairs are returned as `(i, j)` with `i < j`, in lexicographic order.
/// Fails with [`GeomError::MTooLarge`] when `m > C(n, 2)`.
pub fn sample_subset(set: &PointSet, family: Family, m: usize, seed: u64) -> Result<InducedSubset> {
    let n = set.len();
    let available = n * n.saturating_sub(1) / 2;
    if m > available {
        return Err(GeomError::MTooLarge { m, available });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = rand::seq::index::sample(&mut rng, available, m).into_vec();
    chosen.sort_unstable();
    let pairs = chosen.into_iter().map(|k| decode_pair(n, k)).collect();
    Ok(InducedSubset { n, family, pairs })
}

/// The `k`-th pair `(i, j)`, `i < j`, in lexicographic order.
fn decode_pair(n: usize, mut k: usize) -> (usize, usize) {
    let mut i = 0;
    while k >= n - 1 - i {
        k -= n - 1 - i;
        i += 1;
    }
    (i, i + 1 + k)
}
