//! Comparison centralities: weighted betweenness (BT), weighted closeness
//! (CL), eigenvector centrality (EC), w-core shells (WC) and the weighted
//! H-index (HI).

mod betweenness;
mod closeness;
mod eigenvector;
mod hindex;
mod shortest_path;
mod wcore;

pub use betweenness::{betweenness, betweenness_scores};
pub use closeness::{closeness, closeness_scores};
pub use eigenvector::{eigenvector, eigenvector_scores, EigenvectorResult, DEFAULT_MAX_ITER, DEFAULT_TOL};
pub use hindex::{h_operator, weighted_h_index, weighted_h_index_scores};
pub use shortest_path::{DistanceTransform, ShortestPaths};
pub use wcore::{w_core, w_core_shells};

use crate::graph::WeightedGraph;

/// Per-node strength `s_i = sum_j w_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeStrength(pub Vec<f64>);

impl NodeStrength {
    pub fn of(g: &WeightedGraph) -> Self {
        Self(g.strengths())
    }

    pub fn get(&self, node: usize) -> f64 {
        self.0[node]
    }
}

/// Sources are handed to the thread pool in fixed-size chunks; partial sums
/// are combined in chunk order so floating-point results do not depend on
/// the number of threads.
const SOURCE_CHUNK: usize = 32;

fn chunked_sum<F>(n: usize, per_source: F) -> Vec<f64>
where
    F: Fn(usize, &mut Vec<f64>) + Sync,
{
    use rayon::prelude::*;

    let chunks: Vec<Vec<f64>> = (0..n.div_ceil(SOURCE_CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = vec![0.0; n];
            for s in c * SOURCE_CHUNK..((c + 1) * SOURCE_CHUNK).min(n) {
                per_source(s, &mut acc);
            }
            acc
        })
        .collect();
    let mut total = vec![0.0; n];
    for chunk in chunks {
        for (t, x) in total.iter_mut().zip(chunk) {
            *t += x;
        }
    }
    total
}
