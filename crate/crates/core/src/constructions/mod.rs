//! Generators for the extremal point sets behind the upper bounds, and
//! verifiers for the structure those bounds rely on.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{GeomError, Point, PointSet, Result};

mod obtuse;
mod random;
mod three_arc;

pub use obtuse::{verify_obtuse_pattern, ObtuseReport, TriangleShape};
pub use random::random_point_set;
pub use three_arc::{three_arc, three_arc_labels, ThreeArcParams};

/// Default radius of circle-based constructions.
pub const DEFAULT_SCALE: i64 = 1_000_000;

/// Kinds of generated point sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `n` points evenly spaced on a circle, centrally symmetric for even `n`.
    Circle,
    /// `n` points evenly spaced on the upper half of a circle.
    Semicircle,
    /// `(i, n - 1 - i)` for `i < n`.
    DecreasingChain,
    /// `(i + 1, ..., i + 1)` in `d` dimensions.
    IncreasingLine,
    /// The `2^k x ... x 2^k` lattice with `n = 2^(d k)` points.
    UniformGrid,
    /// Three arcs of `n / 3` points with a prescribed pattern of obtuse triangles.
    ThreeArc,
    /// Uniform random points with distinct coordinates.
    RandomGeneral,
    /// Random `+-p` pairs with distinct coordinates and distinct norms.
    RandomSymmetric,
}

impl Kind {
    /// Every kind, in declaration order.
    pub const ALL: [Kind; 8] = [
        Kind::Circle,
        Kind::Semicircle,
        Kind::DecreasingChain,
        Kind::IncreasingLine,
        Kind::UniformGrid,
        Kind::ThreeArc,
        Kind::RandomGeneral,
        Kind::RandomSymmetric,
    ];

    /// Lowercase name used by file headers and the command line.
    pub fn name(self) -> &'static str {
        match self {
            Kind::Circle => "circle",
            Kind::Semicircle => "semicircle",
            Kind::DecreasingChain => "chain",
            Kind::IncreasingLine => "line",
            Kind::UniformGrid => "grid",
            Kind::ThreeArc => "threearc",
            Kind::RandomGeneral => "random",
            Kind::RandomSymmetric => "symmetric",
        }
    }

    /// Inverse of [`Kind::name`].
    pub fn from_name(name: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// Everything needed to regenerate a point set.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionSpec {
    /// What to generate.
    pub kind: Kind,
    /// Number of points.
    pub n: usize,
    /// Dimension; only lines, grids and random sets use values other than 2.
    pub d: usize,
    /// Radius for circles and arcs, coordinate range for random sets, lattice
    /// step for chains, lines and grids. `None` selects the per-kind default.
    pub scale: Option<i64>,
    /// Seed of the random kinds.
    pub seed: u64,
    /// Shape parameters of [`Kind::ThreeArc`].
    pub three_arc: ThreeArcParams,
}

impl ConstructionSpec {
    /// A planar spec with default scale, seed 0 and default arc parameters.
    pub fn new(kind: Kind, n: usize) -> Self {
        ConstructionSpec { kind, n, d: 2, scale: None, seed: 0, three_arc: ThreeArcParams::default() }
    }

    /// Sets the dimension.
    pub fn with_dim(mut self, d: usize) -> Self {
        self.d = d;
        self
    }

    /// Sets the scale.
    pub fn with_scale(mut self, scale: i64) -> Self {
        self.scale = Some(scale);
        self
    }

    /// Sets the seed.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(GeomError::InvalidSpec(format!("{}: {msg}", self.kind.name())));
        if self.n == 0 {
            return bad("n must be positive");
        }
        if self.d == 0 {
            return bad("d must be positive");
        }
        if matches!(self.scale, Some(s) if s <= 0) {
            return bad("scale must be positive");
        }
        let planar = matches!(self.kind, Kind::Circle | Kind::Semicircle | Kind::DecreasingChain | Kind::ThreeArc);
        if planar && self.d != 2 {
            return bad("only defined for d = 2");
        }
        match self.kind {
            Kind::ThreeArc if !self.n.is_multiple_of(3) => bad("n must be divisible by 3"),
            Kind::RandomSymmetric if !self.n.is_multiple_of(2) => bad("n must be even"),
            Kind::UniformGrid if grid_side(self.n, self.d).is_none() => bad("n must equal 2^(d k)"),
            _ => Ok(()),
        }
    }
}

/// Side length `2^k` with `side^d = n`, if it exists.
fn grid_side(n: usize, d: usize) -> Option<usize> {
    (0..=20u32).map(|k| 1usize << k).find(|side| side.checked_pow(d as u32) == Some(n))
}

/// Generates the point set described by `spec`.
///
/// Circle and arc points are rounded to integers at the given radius. If two
/// points end up sharing a coordinate, later points (in sorted order) are
/// moved by `+1` steps, which keeps the order along that axis. Lattice kinds
/// (grid) keep their shared coordinates by design.
pub fn generate(spec: &ConstructionSpec) -> Result<PointSet> {
    spec.validate()?;
    let n = spec.n;
    let step = spec.scale.unwrap_or(1);
    let radius = spec.scale.unwrap_or(DEFAULT_SCALE) as f64;
    let mut rows: Vec<Vec<i64>> = match spec.kind {
        Kind::Circle => {
            let half = n / 2;
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                if n.is_multiple_of(2) && i >= half {
                    let p: &Vec<i64> = &rows[i - half];
                    let neg = p.iter().map(|c: &i64| -c).collect();
                    rows.push(neg);
                } else {
                    let t = 2.0 * PI * i as f64 / n as f64 + PI / (2.0 * n as f64);
                    rows.push(alloc::vec![round(radius * libm::cos(t)), round(radius * libm::sin(t))]);
                }
            }
            rows
        }
        Kind::Semicircle => (0..n)
            .map(|i| {
                let t = PI * (i as f64 + 0.5) / n as f64;
                alloc::vec![round(radius * libm::cos(t)), round(radius * libm::sin(t))]
            })
            .collect(),
        Kind::DecreasingChain => (0..n as i64).map(|i| alloc::vec![i * step, (n as i64 - 1 - i) * step]).collect(),
        Kind::IncreasingLine => (0..n as i64).map(|i| alloc::vec![(i + 1) * step; spec.d]).collect(),
        Kind::UniformGrid => {
            let side = grid_side(n, spec.d).expect("validated");
            (0..n)
                .map(|i| {
                    let mut rest = i;
                    let mut row = alloc::vec![0i64; spec.d];
                    for k in (0..spec.d).rev() {
                        row[k] = (rest % side) as i64 * step;
                        rest /= side;
                    }
                    row
                })
                .collect()
        }
        Kind::ThreeArc => return three_arc(n, spec.scale, &spec.three_arc),
        Kind::RandomGeneral | Kind::RandomSymmetric => {
            let range = spec.scale.unwrap_or(default_random_range(n));
            return random_point_set(n, spec.d, spec.seed, spec.kind == Kind::RandomSymmetric, range);
        }
    };
    if matches!(spec.kind, Kind::Circle | Kind::Semicircle) {
        separate_coordinates(&mut rows);
    }
    let points = rows.into_iter().map(Point::new).collect::<Result<Vec<_>>>()?;
    PointSet::new(spec.d, points)
}

/// Default coordinate range of random sets: at least `4 n^2`.
pub fn default_random_range(n: usize) -> i64 {
    (4 * n * n).max(1 << 10) as i64
}

fn round(x: f64) -> i64 {
    libm::round(x) as i64
}

/// Makes the values on every axis pairwise distinct by `+1` nudges that keep
/// the sorted order (ties ordered by index).
pub(crate) fn separate_coordinates(rows: &mut [Vec<i64>]) {
    let d = rows.first().map_or(0, Vec::len);
    for k in 0..d {
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&i| (rows[i][k], i));
        for w in 1..order.len() {
            let prev = rows[order[w - 1]][k];
            if rows[order[w]][k] <= prev {
                rows[order[w]][k] = prev + 1;
            }
        }
    }
}
