use rayon::prelude::*;

use super::{DistanceTransform, ShortestPaths};
use crate::error::{Error, Result};
use crate::graph::{connected_components, WeightedGraph};
use crate::ranking::{Algorithm, ImportanceRanking};

/// `(n - 1) / sum_j dist(i, j)` with lengths `1 / w`.
pub fn closeness_scores(g: &WeightedGraph) -> Result<Vec<f64>> {
    let components = connected_components(g).len();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let n = g.node_count();
    if n < 2 {
        return Ok(vec![0.0; n]);
    }
    Ok((0..n)
        .into_par_iter()
        .map(|s| {
            let sp = ShortestPaths::dijkstra(g, s, DistanceTransform);
            // summed in settle order, which is independent of scheduling
            let total: f64 = sp.settled.iter().map(|&v| sp.dist[v]).sum();
            (n - 1) as f64 / total
        })
        .collect())
}

pub fn closeness(g: &WeightedGraph) -> Result<ImportanceRanking> {
    ImportanceRanking::from_scores(Algorithm::Cl, &closeness_scores(g)?)
}
