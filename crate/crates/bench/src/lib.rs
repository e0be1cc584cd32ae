//! Shared fixtures for the benchmarks.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wem_core::io::{parse_edge_list_str, ParseOptions};
use wem_core::{largest_connected_component, synthetic, WeightedGraph};

/// The bundled Les Misérables co-appearance network (77 nodes, 254 edges).
pub fn lesmis() -> WeightedGraph {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/lesmis.edges");
    let text = std::fs::read_to_string(path).expect("bundled dataset");
    let (g, _) = parse_edge_list_str(&text, &ParseOptions::default()).expect("dataset parses");
    largest_connected_component(&g).expect("nonempty")
}

/// Ring lattice with `n * half_degree` edges and weights in (0, 10].
pub fn circulant(n: usize, half_degree: usize) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64 ^ (half_degree as u64) << 32);
    synthetic::circulant(n, half_degree, &mut rng, 10.0)
}

/// Connected sparse random graph with mean degree close to `mean_degree`.
pub fn random_connected(n: usize, mean_degree: f64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let g = synthetic::gnp(n, mean_degree / (n - 1) as f64, &mut rng, 10.0);
    largest_connected_component(&g).expect("nonempty")
}
