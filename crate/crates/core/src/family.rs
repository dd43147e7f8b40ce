use core::fmt;

use crate::{GeomError, Result};

/// Families of objects induced by a pair of points.
///
/// Containment is strict for every family; see [`contains`](crate::contains).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Axis-parallel rectangle with the pair as opposite corners (`d = 2`).
    Rectangle,
    /// Quadrant opening toward `+x, +y` with apex at the componentwise minimum of the pair (`d = 2`).
    Quadrant,
    /// Vertical slab spanned by the x-coordinates of the pair (`d = 2`).
    VSlab,
    /// Horizontal slab spanned by the y-coordinates of the pair (`d = 2`).
    HSlab,
    /// Both slabs of the pair; each pair counts up to twice (`d = 2`).
    SlabBoth,
    /// Rectangle with the pair's x-range, unbounded toward `-y` and capped at the higher point (`d = 2`).
    Skyline,
    /// Axis-parallel box with the pair as opposite corners (`d >= 2`).
    Box,
    /// Disk with the pair as a diameter (`d = 2`).
    Disk,
    /// Ball with the pair as a diameter (`d >= 2`).
    Hypersphere,
    /// Smallest downward triangle through the pair, in sheared coordinates (`d = 2`).
    DownTriangle,
    /// Interval with the pair as endpoints (`d = 1`).
    Interval,
}

impl Family {
    /// Every family, in declaration order.
    pub const ALL: [Family; 11] = [
        Family::Rectangle,
        Family::Quadrant,
        Family::VSlab,
        Family::HSlab,
        Family::SlabBoth,
        Family::Skyline,
        Family::Box,
        Family::Disk,
        Family::Hypersphere,
        Family::DownTriangle,
        Family::Interval,
    ];

    /// Whether the family is defined in dimension `d`.
    pub fn supports_dim(self, d: usize) -> bool {
        match self {
            Family::Box | Family::Hypersphere => d >= 2,
            Family::Interval => d == 1,
            _ => d == 2,
        }
    }

    /// Returns an error unless the family is defined in dimension `d`.
    pub fn check_dim(self, d: usize) -> Result<()> {
        if self.supports_dim(d) {
            Ok(())
        } else {
            Err(GeomError::FamilyDimension { family: self, dim: d })
        }
    }

    /// Largest number of objects a single pair induces (2 for [`Family::SlabBoth`]).
    pub fn objects_per_pair(self) -> u64 {
        match self {
            Family::SlabBoth => 2,
            _ => 1,
        }
    }

    /// Number of objects induced by `n` points.
    pub fn object_count(self, n: usize) -> u64 {
        let n = n as u64;
        self.objects_per_pair() * (n * n.saturating_sub(1) / 2)
    }

    /// Whether the family is bounded by axis-parallel hyperplanes.
    pub fn is_axis_parallel(self) -> bool {
        !matches!(self, Family::Disk | Family::Hypersphere | Family::DownTriangle)
    }

    /// Short lowercase name used by file formats and the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::Rectangle => "rect",
            Family::Quadrant => "quadrant",
            Family::VSlab => "vslab",
            Family::HSlab => "hslab",
            Family::SlabBoth => "slab",
            Family::Skyline => "skyline",
            Family::Box => "box",
            Family::Disk => "disk",
            Family::Hypersphere => "hypersphere",
            Family::DownTriangle => "downtri",
            Family::Interval => "interval",
        }
    }

    /// Inverse of [`Family::name`]; also accepts a few long spellings.
    pub fn from_name(name: &str) -> Option<Family> {
        let family = match name {
            "rect" | "rectangle" => Family::Rectangle,
            "quadrant" => Family::Quadrant,
            "vslab" => Family::VSlab,
            "hslab" => Family::HSlab,
            "slab" | "slabboth" => Family::SlabBoth,
            "skyline" => Family::Skyline,
            "box" => Family::Box,
            "disk" => Family::Disk,
            "hypersphere" | "sphere" => Family::Hypersphere,
            "downtri" | "downtriangle" => Family::DownTriangle,
            "interval" => Family::Interval,
            _ => return None,
        };
        Some(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether the piercing point must be a member of `P` or may be any point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// The piercing point is a member of `P`.
    Strong,
    /// The piercing point may be any rational point.
    Weak,
}

impl Variant {
    /// Lowercase name used by reports and the command line.
    pub fn name(self) -> &'static str {
        match self {
            Variant::Strong => "strong",
            Variant::Weak => "weak",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
