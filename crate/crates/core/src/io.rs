//! Edge-list text format.
//!
//! One edge per line, `u v w`, separated by any run of whitespace and/or
//! commas. Blank lines and lines starting with `#` are ignored. Labels are
//! mapped to dense indices in order of first appearance.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// What to do when the same unordered pair appears on more than one line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergePolicy {
    #[default]
    Error,
    Sum,
    Max,
    First,
}

impl FromStr for MergePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "error" => Ok(Self::Error),
            "sum" => Ok(Self::Sum),
            "max" => Ok(Self::Max),
            "first" => Ok(Self::First),
            other => Err(Error::InvalidParameter(format!("unknown merge policy {other:?}"))),
        }
    }
}

impl fmt::Display for MergePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Error => "error",
            Self::Sum => "sum",
            Self::Max => "max",
            Self::First => "first",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    pub merge: MergePolicy,
}

/// Lines that were accepted but altered on the way in.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub self_loops: usize,
    pub merged_duplicates: usize,
}

pub fn parse_edge_list<R: BufRead>(reader: R, options: &ParseOptions) -> Result<(WeightedGraph, ParseReport)> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut pair_slot: HashMap<(usize, usize), usize> = HashMap::new();
    let mut report = ParseReport::default();

    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&i) = index.get(label) {
            return i;
        }
        let i = labels.len();
        labels.push(label.to_owned());
        index.insert(label.to_owned(), i);
        i
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> =
            trimmed.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()).collect();
        let [u, v, w] = fields[..] else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 fields `u v w`, found {}", fields.len()),
            });
        };
        let weight: f64 =
            w.parse().map_err(|_| Error::Parse { line: lineno, message: format!("weight {w:?} is not a number") })?;
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::Parse { line: lineno, message: format!("weight {w:?} must be positive and finite") });
        }

        let a = intern(u, &mut labels);
        let b = intern(v, &mut labels);
        if a == b {
            report.self_loops += 1;
            continue;
        }
        let key = (a.min(b), a.max(b));
        match pair_slot.get(&key) {
            None => {
                pair_slot.insert(key, edges.len());
                edges.push((key.0, key.1, weight));
            }
            Some(&slot) => {
                let existing = &mut edges[slot].2;
                match options.merge {
                    MergePolicy::Error => {
                        return Err(Error::DuplicateEdge { line: lineno, u: u.to_owned(), v: v.to_owned() })
                    }
                    MergePolicy::Sum => *existing += weight,
                    MergePolicy::Max => *existing = existing.max(weight),
                    MergePolicy::First => {}
                }
                report.merged_duplicates += 1;
            }
        }
    }

    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let graph = WeightedGraph::new(labels, edges)?;
    Ok((graph, report))
}

pub fn parse_edge_list_str(text: &str, options: &ParseOptions) -> Result<(WeightedGraph, ParseReport)> {
    parse_edge_list(text.as_bytes(), options)
}

/// Writes `label_u label_v weight`, one edge per line. Weights use the
/// shortest representation that parses back to the same `f64`.
pub fn write_edge_list<W: Write>(g: &WeightedGraph, mut out: W) -> Result<()> {
    for e in g.edges() {
        writeln!(out, "{} {} {}", g.label(e.u), g.label(e.v), e.weight)?;
    }
    Ok(())
}
