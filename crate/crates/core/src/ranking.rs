//! Tie-aware importance rankings and their CSV / JSON emission.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Which scoring procedure produced a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Wem,
    Bt,
    Cl,
    Ec,
    Wc,
    Hi,
    Sir,
}

impl Algorithm {
    /// The six node-importance algorithms, in reporting order.
    pub const RANKERS: [Algorithm; 6] = [Self::Wem, Self::Bt, Self::Cl, Self::Ec, Self::Wc, Self::Hi];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Wem => "wem",
            Self::Bt => "bt",
            Self::Cl => "cl",
            Self::Ec => "ec",
            Self::Wc => "wc",
            Self::Hi => "hi",
            Self::Sir => "sir",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "wem" => Self::Wem,
            "bt" => Self::Bt,
            "cl" => Self::Cl,
            "ec" => Self::Ec,
            "wc" => Self::Wc,
            "hi" => Self::Hi,
            "sir" => Self::Sir,
            other => return Err(Error::InvalidParameter(format!("unknown algorithm {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankEntry {
    pub node: usize,
    pub score: f64,
    pub rank: usize,
}

/// Nodes sorted by score, highest first, with competition ranks.
///
/// Nodes whose sort keys are equal share a rank and appear in ascending
/// index order; the next distinct key gets `rank + group size`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImportanceRanking {
    pub algorithm: Algorithm,
    entries: Vec<RankEntry>,
}

impl ImportanceRanking {
    pub fn from_scores(algorithm: Algorithm, scores: &[f64]) -> Result<Self> {
        Self::build(algorithm, scores, None)
    }

    /// Like [`from_scores`](Self::from_scores), but equal scores are ordered
    /// by `tiebreak` (descending) before falling back to node index.
    /// Only nodes equal on both keys share a rank.
    pub fn with_tiebreak(algorithm: Algorithm, scores: &[f64], tiebreak: &[f64]) -> Result<Self> {
        if scores.len() != tiebreak.len() {
            return Err(Error::LengthMismatch { left: scores.len(), right: tiebreak.len() });
        }
        Self::build(algorithm, scores, Some(tiebreak))
    }

    fn build(algorithm: Algorithm, scores: &[f64], tiebreak: Option<&[f64]>) -> Result<Self> {
        if scores.iter().chain(tiebreak.unwrap_or(&[])).any(|s| s.is_nan()) {
            return Err(Error::NanScore);
        }
        let secondary = |i: usize| tiebreak.map_or(0.0, |t| t[i]);
        let mut order: Vec<usize> = (0..scores.len()).collect();
        order.sort_by(|&a, &b| {
            scores[b].total_cmp(&scores[a]).then(secondary(b).total_cmp(&secondary(a))).then(a.cmp(&b))
        });

        let mut entries: Vec<RankEntry> = Vec::with_capacity(order.len());
        for (pos, &node) in order.iter().enumerate() {
            let rank = match entries.last() {
                Some(prev) if prev.score == scores[node] && secondary(prev.node) == secondary(node) => prev.rank,
                _ => pos + 1,
            };
            entries.push(RankEntry { node, score: scores[node], rank });
        }
        Ok(Self { algorithm, entries })
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Node indices in removal order.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.node)
    }

    /// Score of each node, indexed by node.
    pub fn scores_by_node(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.entries.len()];
        for e in &self.entries {
            out[e.node] = e.score;
        }
        out
    }

    /// Rank of each node, indexed by node.
    pub fn ranks_by_node(&self) -> Vec<usize> {
        let mut out = vec![0; self.entries.len()];
        for e in &self.entries {
            out[e.node] = e.rank;
        }
        out
    }

    /// Per-node value that orders nodes exactly like this ranking, ties
    /// included: the negated competition rank. Equal to the score order
    /// whenever no tiebreak key was used.
    pub fn standing_by_node(&self) -> Vec<f64> {
        self.ranks_by_node().into_iter().map(|r| -(r as f64)).collect()
    }

    pub fn top(&self) -> Option<&RankEntry> {
        self.entries.first()
    }

    /// CSV with header `node,score,rank`; nodes are written by label.
    pub fn write_csv<W: Write>(&self, g: &WeightedGraph, mut out: W) -> Result<()> {
        writeln!(out, "node,score,rank")?;
        for e in &self.entries {
            writeln!(out, "{},{},{}", g.label(e.node), e.score, e.rank)?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, g: &WeightedGraph, out: W) -> Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            node: &'a str,
            score: f64,
            rank: usize,
            algorithm: Algorithm,
        }
        let rows: Vec<Row> = self
            .entries
            .iter()
            .map(|e| Row { node: g.label(e.node), score: e.score, rank: e.rank, algorithm: self.algorithm })
            .collect();
        serde_json::to_writer_pretty(out, &rows)?;
        Ok(())
    }
}
