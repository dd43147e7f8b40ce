//! Text formats: point sets, pair subsets and grid depth dumps.
//!
//! A point-set file starts with `dim <d>` and then lists one point per line
//! as `d` whitespace-separated integers. Blank lines and lines starting
//! with `#` are ignored; a `# frame=sheared` comment marks down-triangle
//! inputs given in the sheared `(u, v)` frame. A subset file starts with
//! `pairs <m>` and then lists `m` lines `i j` of 0-based point indices.

use std::fmt::Write as _;

use induced_core::second::{GridDepth, InducedSubset};
use induced_core::{Family, Point, PointSet};

/// A parse failure with its 1-based line number.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    /// The text violates the grammar.
    #[error("line {line}: {message}")]
    Syntax {
        /// 1-based line number.
        line: usize,
        /// What was expected.
        message: String,
    },
    /// The values parse but do not form a valid object.
    #[error(transparent)]
    Geometry(#[from] induced_core::GeomError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Coordinate frame of a point-set file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Frame {
    /// Ordinary Cartesian coordinates.
    #[default]
    Cartesian,
    /// The sheared `(u, v)` frame of down-triangles.
    Sheared,
}

/// Content lines with their 1-based numbers, and whether a sheared-frame marker was seen.
fn content_lines(text: &str) -> (Vec<(usize, &str)>, Frame) {
    let mut frame = Frame::Cartesian;
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if comment.trim().replace(' ', "") == "frame=sheared" {
                frame = Frame::Sheared;
            }
            continue;
        }
        if !line.is_empty() {
            lines.push((k + 1, line));
        }
    }
    (lines, frame)
}

fn header(lines: &[(usize, &str)], keyword: &str) -> Result<usize, FormatError> {
    let &(line, text) = lines.first().ok_or_else(|| syntax(1, format!("missing `{keyword} <count>` header")))?;
    let mut words = text.split_whitespace();
    match (words.next(), words.next().map(str::parse::<usize>), words.next()) {
        (Some(w), Some(Ok(v)), None) if w == keyword => Ok(v),
        _ => Err(syntax(line, format!("expected `{keyword} <count>`"))),
    }
}

/// Parses a point-set file.
pub fn parse_point_set(text: &str) -> Result<(PointSet, Frame), FormatError> {
    let (lines, frame) = content_lines(text);
    let d = header(&lines, "dim")?;
    if d == 0 {
        return Err(syntax(lines[0].0, "dimension must be positive"));
    }
    let mut points = Vec::with_capacity(lines.len() - 1);
    for &(line, text) in &lines[1..] {
        let coords = text
            .split_whitespace()
            .map(|w| w.parse::<i64>().map_err(|e| syntax(line, format!("`{w}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != d {
            return Err(syntax(line, format!("expected {d} coordinates, found {}", coords.len())));
        }
        points.push(Point::new(coords)?);
    }
    Ok((PointSet::new(d, points)?, frame))
}

/// Writes a point-set file.
pub fn write_point_set(set: &PointSet, frame: Frame) -> String {
    let mut out = String::new();
    if frame == Frame::Sheared {
        out.push_str("# frame=sheared\n");
    }
    writeln!(out, "dim {}", set.dim()).expect("writing to a string");
    for p in set.points() {
        let words: Vec<String> = p.coords().iter().map(i64::to_string).collect();
        writeln!(out, "{}", words.join(" ")).expect("writing to a string");
    }
    out
}

/// Parses a subset file against a set of `n` points.
pub fn parse_subset(text: &str, n: usize, family: Family) -> Result<InducedSubset, FormatError> {
    let (lines, _) = content_lines(text);
    let m = header(&lines, "pairs")?;
    if lines.len() - 1 != m {
        let line = lines.last().map_or(1, |l| l.0);
        return Err(syntax(line, format!("header announces {m} pairs, found {}", lines.len() - 1)));
    }
    let mut pairs = Vec::with_capacity(m);
    for &(line, text) in &lines[1..] {
        let idx = text
            .split_whitespace()
            .map(|w| w.parse::<usize>().map_err(|e| syntax(line, format!("`{w}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        match idx[..] {
            [i, j] => pairs.push((i, j)),
            _ => return Err(syntax(line, "expected two indices")),
        }
    }
    Ok(InducedSubset::new(n, family, pairs)?)
}

/// Writes a subset file.
pub fn write_subset(subset: &InducedSubset) -> String {
    let mut out = format!("pairs {}\n", subset.len());
    for &(i, j) in subset.pairs() {
        writeln!(out, "{i} {j}").expect("writing to a string");
    }
    out
}

/// Dumps a grid depth map as CSV with columns `gx,gy,depth`, where `gx` and
/// `gy` are the coordinates of the grid point.
pub fn write_grid_csv(map: &GridDepth) -> String {
    let mut out = String::from("gx,gy,depth\n");
    for (a, &x) in map.grid.xs.iter().enumerate() {
        for (b, &y) in map.grid.ys.iter().enumerate() {
            writeln!(out, "{x},{y},{}", map.at(a, b)).expect("writing to a string");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_set_round_trip() {
        let text = "# sample\ndim 2\n0 0\n\n1 3\n2 1\n";
        let (set, frame) = parse_point_set(text).unwrap();
        assert_eq!(frame, Frame::Cartesian);
        assert_eq!(set.len(), 3);
        assert_eq!(parse_point_set(&write_point_set(&set, frame)).unwrap().0, set);
    }

    #[test]
    fn sheared_marker() {
        let (set, frame) = parse_point_set("# frame=sheared\ndim 2\n1 2\n").unwrap();
        assert_eq!(frame, Frame::Sheared);
        assert!(write_point_set(&set, frame).starts_with("# frame=sheared\n"));
    }

    #[test]
    fn point_set_errors() {
        assert!(matches!(parse_point_set("2\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_point_set("dim 2\n1 2 3\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_point_set("dim 2\n1 x\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_point_set("dim 1\n4\n4\n"), Err(FormatError::Geometry(_))));
    }

    #[test]
    fn subset_round_trip() {
        let s = parse_subset("pairs 2\n0 1\n2 0\n", 3, Family::Rectangle).unwrap();
        assert_eq!(s.pairs(), &[(0, 1), (2, 0)]);
        assert_eq!(parse_subset(&write_subset(&s), 3, Family::Rectangle).unwrap(), s);
        assert!(parse_subset("pairs 2\n0 1\n", 3, Family::Rectangle).is_err());
        assert!(parse_subset("pairs 1\n0 5\n", 3, Family::Rectangle).is_err());
    }
}
