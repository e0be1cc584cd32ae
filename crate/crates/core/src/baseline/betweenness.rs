use super::{chunked_sum, DistanceTransform, ShortestPaths};
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::ranking::{Algorithm, ImportanceRanking};

/// Unnormalized shortest-path betweenness over lengths `1 / w`, each
/// unordered endpoint pair counted once.
///
/// Brandes accumulation from every source; equal-length paths share the
/// dependency fractionally.
pub fn betweenness_scores(g: &WeightedGraph) -> Vec<f64> {
    let n = g.node_count();
    let totals = chunked_sum(n, |s, acc| {
        let sp = ShortestPaths::dijkstra(g, s, DistanceTransform);
        let mut delta = vec![0.0; n];
        for &w in sp.settled.iter().rev() {
            for &v in &sp.preds[w] {
                delta[v] += sp.sigma[v] / sp.sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                acc[w] += delta[w];
            }
        }
    });
    totals.into_iter().map(|x| x / 2.0).collect()
}

pub fn betweenness(g: &WeightedGraph) -> Result<ImportanceRanking> {
    ImportanceRanking::from_scores(Algorithm::Bt, &betweenness_scores(g))
}
