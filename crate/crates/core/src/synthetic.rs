//! Small graph generators for tests and benchmarks.

use std::collections::HashSet;

use rand::Rng;

use crate::graph::WeightedGraph;

/// Uniform weight in `(0, max]`.
pub fn uniform_weight<R: Rng>(rng: &mut R, max: f64) -> f64 {
    max * (1.0 - rng.random::<f64>())
}

/// Ring lattice where node `i` links to `i+1, ..., i+half_degree` (mod `n`):
/// every node has degree `2 * half_degree`.
pub fn circulant<R: Rng>(n: usize, half_degree: usize, rng: &mut R, max_weight: f64) -> WeightedGraph {
    assert!(n > 2 * half_degree, "ring too small for the requested degree");
    let mut edges = Vec::with_capacity(n * half_degree);
    for i in 0..n {
        for k in 1..=half_degree {
            edges.push((i, (i + k) % n, uniform_weight(rng, max_weight)));
        }
    }
    WeightedGraph::from_triples(n, &edges).expect("circulant edges are distinct")
}

/// Random simple graph with every degree at most `max_degree`: `attempts`
/// uniformly random pairs are proposed and kept when they respect the cap.
pub fn bounded_degree<R: Rng>(
    n: usize,
    attempts: usize,
    max_degree: usize,
    rng: &mut R,
    max_weight: f64,
) -> WeightedGraph {
    let mut degree = vec![0usize; n];
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u == v || degree[u] >= max_degree || degree[v] >= max_degree {
                continue;
            }
            if seen.insert((u.min(v), u.max(v))) {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v, uniform_weight(rng, max_weight)));
            }
        }
    }
    WeightedGraph::from_triples(n, &edges).expect("generated edges are distinct")
}

/// Erdős–Rényi `G(n, p)` with uniform weights.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R, max_weight: f64) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v, uniform_weight(rng, max_weight)));
            }
        }
    }
    WeightedGraph::from_triples(n, &edges).expect("generated edges are distinct")
}
