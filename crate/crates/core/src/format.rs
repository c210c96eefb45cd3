//! The line-oriented `polgraph 1` text format.
//!
//! ```text
//! polgraph 1
//! vertices 1
//! edges 2
//! v 0: 0+ 1+ 0- 1-
//! ```
//!
//! Lines starting with `#` are comments. Serialization starts each rotation
//! at the smallest dart of its vertex.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Dart, PolarizedGraph};

pub fn serialize(g: &PolarizedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "polgraph 1").unwrap();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    writeln!(out, "edges {}", g.edge_count()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "v {v}:").unwrap();
        for d in g.rotation(v) {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn header_value(line: Option<(usize, &str)>, key: &str) -> Result<usize> {
    let (no, line) = line.ok_or_else(|| Error::Input(format!("missing `{key}` line")))?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(key) {
        return Err(Error::Input(format!("line {}: expected `{key} <n>`", no + 1)));
    }
    let value = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Input(format!("line {}: bad `{key}` value", no + 1)))?;
    if parts.next().is_some() {
        return Err(Error::Input(format!("line {}: trailing tokens", no + 1)));
    }
    Ok(value)
}

pub fn parse(text: &str) -> Result<PolarizedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, "polgraph 1")) => {}
        Some((no, other)) => {
            return Err(Error::Input(format!("line {}: expected `polgraph 1`, got `{other}`", no + 1)))
        }
        None => return Err(Error::Input("empty input".into())),
    }
    let s = header_value(lines.next(), "vertices")?;
    let a = header_value(lines.next(), "edges")?;
    let mut rotations: Vec<Option<Vec<Dart>>> = vec![None; s];
    for (no, line) in lines {
        let rest = line
            .strip_prefix("v ")
            .ok_or_else(|| Error::Input(format!("line {}: expected a vertex line", no + 1)))?;
        let (idx, darts) = rest
            .split_once(':')
            .ok_or_else(|| Error::Input(format!("line {}: missing `:`", no + 1)))?;
        let v: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("line {}: bad vertex index", no + 1)))?;
        if v >= s {
            return Err(Error::Input(format!("line {}: vertex {v} out of range", no + 1)));
        }
        if rotations[v].is_some() {
            return Err(Error::Input(format!("line {}: vertex {v} listed twice", no + 1)));
        }
        let rot = darts
            .split_whitespace()
            .map(|t| {
                let d: Dart = t.parse()?;
                if d.edge() >= a {
                    return Err(Error::Input(format!("line {}: dart {d} exceeds edge count", no + 1)));
                }
                Ok(d)
            })
            .collect::<Result<Vec<_>>>()?;
        rotations[v] = Some(rot);
    }
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::Input(format!("vertex {v} has no line"))))
        .collect::<Result<Vec<_>>>()?;
    let total: usize = rotations.iter().map(Vec::len).sum();
    if total != 2 * a {
        return Err(Error::Input(format!("{total} darts listed, expected {}", 2 * a)));
    }
    PolarizedGraph::from_rotations(s, &rotations)
}
