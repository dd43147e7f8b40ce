//! JSON report types.
//!
//! Every report carries `"schema": 1`. Exact quantities are written as
//! rational strings `"p/q"` (or `"p"` for integers) next to a float field
//! that is only a reading aid.

use induced_core::first::{BoundCheck, BoundKind};
use induced_core::{PointSet, RationalPoint};
use num_rational::Ratio;
use serde::Serialize;

/// Version of the report layout.
pub const SCHEMA: u32 = 1;

/// An exact rational with a float companion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Exact {
    /// `"p/q"` in lowest terms, or `"p"` when the denominator is one.
    pub exact: String,
    /// Nearest float.
    pub approx: f64,
}

impl From<Ratio<i128>> for Exact {
    fn from(r: Ratio<i128>) -> Self {
        Exact { exact: r.to_string(), approx: *r.numer() as f64 / *r.denom() as f64 }
    }
}

/// A rational point with a float companion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointJson {
    /// Coordinates as exact strings.
    pub exact: Vec<String>,
    /// Coordinates as floats.
    pub approx: Vec<f64>,
    /// Index in the point set when the point is a member.
    pub index: Option<usize>,
}

impl PointJson {
    /// Converts a rational point with its optional member index.
    pub fn new(p: &RationalPoint, index: Option<usize>) -> Self {
        let exact = (0..p.dim()).map(|k| Ratio::new(p.coord(k).0, p.coord(k).1).to_string()).collect();
        PointJson { exact, approx: p.to_f64(), index }
    }
}

/// Integer rows of a point set, enough to replay a failing instance.
pub fn rows(set: &PointSet) -> Vec<Vec<i64>> {
    set.points().iter().map(|p| p.coords().to_vec()).collect()
}

/// A first-selection bound check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    /// Family name.
    pub family: String,
    /// `strong` or `weak`.
    pub variant: String,
    /// `lower` or `upper`.
    pub kind: String,
    /// Number of points.
    pub n: usize,
    /// Dimension.
    pub d: usize,
    /// Coefficient of `n^2`.
    pub coefficient: Exact,
    /// Linear slack.
    pub slack: Exact,
    /// Additive constant.
    pub constant: Exact,
    /// Depth at the selected point.
    pub observed: u64,
    /// Bound evaluated at `n`.
    pub required: Exact,
    /// Whether the observed depth satisfies the bound.
    pub holds: bool,
    /// The selected point.
    pub point: PointJson,
    /// How the point was found.
    pub certificate: String,
    /// Seed of the generated set, if it was generated.
    pub seed: Option<u64>,
}

impl BoundReport {
    /// Converts a core check, recording the seed of its input.
    pub fn new(check: &BoundCheck, seed: Option<u64>) -> Self {
        let spec = &check.spec;
        BoundReport {
            family: spec.family.name().to_owned(),
            variant: spec.variant.name().to_owned(),
            kind: match spec.kind {
                BoundKind::Lower => "lower",
                BoundKind::Upper => "upper",
            }
            .to_owned(),
            n: check.n,
            d: check.d,
            coefficient: spec.coefficient.into(),
            slack: spec.slack.into(),
            constant: spec.constant.into(),
            observed: check.observed,
            required: check.required.into(),
            holds: check.holds,
            point: PointJson::new(&check.point, check.index),
            certificate: check.certificate.clone(),
            seed,
        }
    }
}

/// Top-level envelope written by every command.
///
/// The payload's fields follow `schema`, `command` and `holds`. A payload
/// field named like one of these is dropped in favour of the envelope's.
#[derive(Debug, Clone)]
pub struct Envelope<T: Serialize> {
    /// Always [`SCHEMA`].
    pub schema: u32,
    /// Subcommand name.
    pub command: &'static str,
    /// Whether every asserted property held.
    pub holds: bool,
    /// Command-specific payload.
    pub body: T,
}

impl<T: Serialize> Envelope<T> {
    /// Wraps a payload.
    pub fn new(command: &'static str, holds: bool, body: T) -> Self {
        Envelope { schema: SCHEMA, command, holds, body }
    }

    /// The envelope as a JSON object.
    pub fn to_value(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("schema".into(), self.schema.into());
        map.insert("command".into(), self.command.into());
        map.insert("holds".into(), self.holds.into());
        match serde_json::to_value(&self.body).expect("report types serialize") {
            serde_json::Value::Object(fields) => {
                for (key, value) in fields {
                    map.entry(key).or_insert(value);
                }
            }
            other => {
                map.insert("body".into(), other);
            }
        }
        serde_json::Value::Object(map)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report types serialize");
        s.push('\n');
        s
    }
}
