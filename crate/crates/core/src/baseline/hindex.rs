use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::ranking::{Algorithm, ImportanceRanking};

/// Largest integer `h` such that at least `h` of `values` are `>= h`.
pub fn h_operator(values: &[f64]) -> usize {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    sorted.iter().enumerate().take_while(|&(i, &v)| v >= (i + 1) as f64).count()
}

/// H-operator applied to the strengths of each node's neighbors, strengths
/// measured in units of the smallest edge weight.
pub fn weighted_h_index_scores(g: &WeightedGraph) -> Vec<usize> {
    let unit = super::wcore::min_weight(g);
    let strength: Vec<f64> = g.strengths().into_iter().map(|s| s / unit).collect();
    (0..g.node_count())
        .map(|i| {
            let around: Vec<f64> = g.neighbors(i).iter().map(|nb| strength[nb.node]).collect();
            h_operator(&around)
        })
        .collect()
}

/// Ranks by weighted H-index, then strength, then node index.
pub fn weighted_h_index(g: &WeightedGraph) -> Result<ImportanceRanking> {
    let scores: Vec<f64> = weighted_h_index_scores(g).into_iter().map(|h| h as f64).collect();
    ImportanceRanking::with_tiebreak(Algorithm::Hi, &scores, &g.strengths())
}
