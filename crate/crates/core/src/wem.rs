//! Weighted expected method (WEM).
//!
//! Edge weights are squeezed into the open interval (0, 1) and read as
//! independent edge-existence probabilities. For every node the
//! distribution of its degree over all possible worlds is obtained by a
//! dynamic program over the incident edges, and the node score is
//!
//! ```text
//! C_i = sum_{c=1..deg(i)} c * Pr(deg(i) >= c)
//! ```
//!
//! Scoring node `i` costs `O(deg(i)^2)`, so a whole graph costs
//! `O(sum_i deg(i)^2) <= O(d_max * m)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::ranking::{Algorithm, ImportanceRanking};

/// Largest degree [`brute_force_tail`] will enumerate.
pub const ENUMERATION_LIMIT: usize = 20;

/// Whether a heavier edge means a stronger (`Positive`) or weaker
/// (`Negative`) tie between its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorrelationMode {
    #[default]
    Positive,
    Negative,
}

impl FromStr for CorrelationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Self::Positive),
            "negative" => Ok(Self::Negative),
            other => Err(Error::InvalidParameter(format!("unknown correlation mode {other:?}"))),
        }
    }
}

impl fmt::Display for CorrelationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Positive => "positive",
            Self::Negative => "negative",
        })
    }
}

/// Edge probabilities, indexed by edge id of the graph they were built from.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedWeightMap {
    probs: Vec<f64>,
    pub mode: CorrelationMode,
    pub w_min: f64,
    pub w_max: f64,
    /// Average edge weight; also the margin kept between the extreme
    /// weights and the interval boundaries.
    pub avg_weight: f64,
}

impl NormalizedWeightMap {
    pub fn get(&self, edge: usize) -> f64 {
        self.probs[edge]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Probabilities of the edges incident to `node`, in ascending neighbor order.
    pub fn incident(&self, g: &WeightedGraph, node: usize) -> Vec<f64> {
        g.neighbors(node).iter().map(|nb| self.probs[nb.edge]).collect()
    }
}

/// Maps every edge weight into (0, 1).
///
/// With `l` the mean weight, a weight `w` becomes
/// `(w - (w_min - l)) / ((w_max + l) - (w_min - l))` in positive mode and
/// one minus that in negative mode. A graph whose weights are all equal
/// maps every edge to exactly 1/2.
pub fn normalize_weights(g: &WeightedGraph, mode: CorrelationMode) -> Result<NormalizedWeightMap> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let stats = crate::graph::graph_stats(g)?;
    let (w_min, w_max, l) = (stats.w_min, stats.w_max, stats.avg_weight);

    let probs = if w_min == w_max {
        vec![0.5; g.edge_count()]
    } else {
        let lower = w_min - l;
        let span = (w_max + l) - lower;
        g.edges()
            .iter()
            .map(|e| {
                let p = (e.weight - lower) / span;
                match mode {
                    CorrelationMode::Positive => p,
                    CorrelationMode::Negative => 1.0 - p,
                }
            })
            .collect()
    };
    Ok(NormalizedWeightMap { probs, mode, w_min, w_max, avg_weight: l })
}

/// `tail[c - 1] = Pr(deg(node) >= c)` for `c = 1..=deg(node)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeTailDistribution {
    pub node: usize,
    pub tail: Vec<f64>,
}

impl DegreeTailDistribution {
    pub fn degree(&self) -> usize {
        self.tail.len()
    }

    /// Expected number of surviving incident edges.
    pub fn expected_degree(&self) -> f64 {
        self.tail.iter().sum()
    }
}

fn check_probabilities(probs: &[f64]) -> Result<()> {
    match probs.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
        Some(&value) => Err(Error::ProbabilityOutOfRange { value }),
        None => Ok(()),
    }
}

/// Distribution of the number of surviving edges among `probs`:
/// `out[q] = Pr(exactly q edges survive)` for `q = 0..=probs.len()`.
///
/// Runs the recurrence `X(p, q) = w_p X(p-1, q-1) + (1 - w_p) X(p-1, q)`
/// from `X(0, 0) = 1`, one edge at a time, keeping two rows.
pub fn degree_distribution(probs: &[f64]) -> Result<Vec<f64>> {
    check_probabilities(probs)?;
    let d = probs.len();
    let mut prev = vec![0.0; d + 1];
    let mut next = vec![0.0; d + 1];
    prev[0] = 1.0;
    for (p, &w) in probs.iter().enumerate() {
        let keep = 1.0 - w;
        next[0] = keep * prev[0];
        for q in 1..=p + 1 {
            // prev[p + 1] is still zero: at most p edges among the first p
            next[q] = w * prev[q - 1] + keep * prev[q];
        }
        std::mem::swap(&mut prev, &mut next);
    }
    Ok(prev)
}

/// Degree tail of `node` via the degree-distribution dynamic program.
pub fn degree_tail_dp(node: usize, incident_probs: &[f64]) -> Result<DegreeTailDistribution> {
    let dist = degree_distribution(incident_probs)?;
    Ok(DegreeTailDistribution { node, tail: tail_from_distribution(&dist) })
}

fn tail_from_distribution(dist: &[f64]) -> Vec<f64> {
    let d = dist.len() - 1;
    let mut tail = vec![0.0; d];
    let mut acc = 0.0;
    for c in (1..=d).rev() {
        acc += dist[c];
        tail[c - 1] = acc.min(1.0);
    }
    tail
}

/// Degree tail of `node` by enumerating every subset of its incident edges.
///
/// Exponential in the degree; refuses degrees above [`ENUMERATION_LIMIT`].
pub fn brute_force_tail(node: usize, incident_probs: &[f64]) -> Result<DegreeTailDistribution> {
    let d = incident_probs.len();
    if d > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge { degree: d, limit: ENUMERATION_LIMIT });
    }
    check_probabilities(incident_probs)?;

    let mut exact = vec![0.0; d + 1];
    for world in 0u32..(1u32 << d) {
        let mut pr = 1.0;
        for (bit, &w) in incident_probs.iter().enumerate() {
            pr *= if world & (1 << bit) != 0 { w } else { 1.0 - w };
        }
        exact[world.count_ones() as usize] += pr;
    }
    let tail = (1..=d).map(|c| exact[c..].iter().sum::<f64>()).collect();
    Ok(DegreeTailDistribution { node, tail })
}

/// `sum_c c * Pr(deg >= c)`; zero for an isolated node.
pub fn wem_score(tail: &DegreeTailDistribution) -> f64 {
    tail.tail.iter().enumerate().map(|(i, &p)| (i + 1) as f64 * p).sum()
}

/// WEM score of every node, indexed by node. Nodes are scored in parallel;
/// each score depends only on its own incident edges, so the result does
/// not depend on the number of worker threads.
pub fn wem_scores(g: &WeightedGraph, mode: CorrelationMode) -> Result<Vec<f64>> {
    let weights = normalize_weights(g, mode)?;
    (0..g.node_count())
        .into_par_iter()
        .map(|i| degree_tail_dp(i, &weights.incident(g, i)).map(|t| wem_score(&t)))
        .collect()
}

pub fn wem_rank_all(g: &WeightedGraph, mode: CorrelationMode) -> Result<ImportanceRanking> {
    ImportanceRanking::from_scores(Algorithm::Wem, &wem_scores(g, mode)?)
}

/// `sum_i deg(i)^2`, the number of inner-loop steps [`wem_scores`] performs
/// up to a constant.
pub fn scoring_work(g: &WeightedGraph) -> u64 {
    (0..g.node_count()).map(|i| (g.degree(i) as u64).pow(2)).sum()
}
