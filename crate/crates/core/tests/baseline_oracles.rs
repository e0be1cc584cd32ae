//! Betweenness and closeness against an all-pairs Floyd–Warshall oracle,
//! plus scale-invariance and structural properties of every baseline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wem_core::baseline::{
    betweenness_scores, closeness_scores, eigenvector_scores, w_core_shells, DistanceTransform, DEFAULT_MAX_ITER,
    DEFAULT_TOL,
};
use wem_core::graph::is_connected;
use wem_core::{rank_with, synthetic, Algorithm, CorrelationMode, WeightedGraph};

/// Connected random graph whose lengths `1 / w` are dyadic, so path sums are exact.
fn dyadic_graph(rng: &mut ChaCha8Rng, n: usize) -> WeightedGraph {
    const WEIGHTS: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        seen.insert((u, v));
        edges.push((u, v, WEIGHTS[rng.random_range(0..5)]));
    }
    for _ in 0..n {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v), WEIGHTS[rng.random_range(0..5)]));
        }
    }
    WeightedGraph::from_triples(n, &edges).unwrap()
}

struct AllPairs {
    dist: Vec<Vec<f64>>,
    sigma: Vec<Vec<f64>>,
}

fn floyd_warshall(g: &WeightedGraph) -> AllPairs {
    let n = g.node_count();
    let t = DistanceTransform;
    let mut dist = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for e in g.edges() {
        dist[e.u][e.v] = t.length(e.weight);
        dist[e.v][e.u] = t.length(e.weight);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let alt = dist[i][k] + dist[k][j];
                if alt < dist[i][j] {
                    dist[i][j] = alt;
                }
            }
        }
    }
    // shortest-path counts: sigma[s][v] = sum of sigma[s][u] over tight edges u -> v
    let mut sigma = vec![vec![0.0; n]; n];
    for s in 0..n {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| dist[s][a].total_cmp(&dist[s][b]));
        sigma[s][s] = 1.0;
        for &v in order.iter().skip(1) {
            sigma[s][v] = g
                .neighbors(v)
                .iter()
                .filter(|nb| dist[s][nb.node] + t.length(nb.weight) == dist[s][v])
                .map(|nb| sigma[s][nb.node])
                .sum();
        }
    }
    AllPairs { dist, sigma }
}

#[test]
fn betweenness_and_closeness_match_floyd_warshall() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..25 {
        let n = rng.random_range(2..=50);
        let g = dyadic_graph(&mut rng, n);
        let ap = floyd_warshall(&g);

        let mut bt = vec![0.0; n];
        for s in 0..n {
            for t in s + 1..n {
                for (v, acc) in bt.iter_mut().enumerate() {
                    if v != s && v != t && ap.dist[s][v] + ap.dist[v][t] == ap.dist[s][t] {
                        *acc += ap.sigma[s][v] * ap.sigma[v][t] / ap.sigma[s][t];
                    }
                }
            }
        }
        for (v, (a, b)) in betweenness_scores(&g).iter().zip(&bt).enumerate() {
            assert!((a - b).abs() < 1e-9, "trial {trial} node {v}: {a} vs {b}");
        }

        let cl: Vec<f64> = (0..n).map(|i| (n - 1) as f64 / ap.dist[i].iter().sum::<f64>()).collect();
        for (a, b) in closeness_scores(&g).unwrap().iter().zip(&cl) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn eigenvector_residual_is_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 20 {
        let g = synthetic::gnp(30, 0.15, &mut rng, 1.0);
        if !is_connected(&g) {
            continue;
        }
        let r = eigenvector_scores(&g, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let mut worst: f64 = 0.0;
        for i in 0..g.node_count() {
            let av: f64 = g.neighbors(i).iter().map(|nb| nb.weight * r.vector[nb.node]).sum();
            worst = worst.max((av - r.eigenvalue * r.vector[i]).abs());
        }
        assert!(worst < 10.0 * DEFAULT_TOL, "residual {worst}");
        checked += 1;
    }
}

#[test]
fn rankings_survive_uniform_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut checked = 0;
    while checked < 10 {
        let g = synthetic::gnp(25, 0.2, &mut rng, 4.0);
        if !is_connected(&g) {
            continue;
        }
        let scaled = WeightedGraph::from_triples(
            g.node_count(),
            &g.edges().iter().map(|e| (e.u, e.v, e.weight * 8.0)).collect::<Vec<_>>(),
        )
        .unwrap();
        // power-of-two scaling keeps every float operation exact except inside power iteration
        for algo in Algorithm::RANKERS {
            let a = rank_with(&g, algo, CorrelationMode::Positive).unwrap();
            let b = rank_with(&scaled, algo, CorrelationMode::Positive).unwrap();
            if algo == Algorithm::Ec {
                assert_eq!(a.top().unwrap().node, b.top().unwrap().node);
                let (sa, sb) = (a.scores_by_node(), b.scores_by_node());
                assert!(sa.iter().zip(&sb).all(|(x, y)| (x - y).abs() < 1e-8), "{algo}");
            } else {
                assert_eq!(a.ranks_by_node(), b.ranks_by_node(), "{algo}");
            }
        }
        checked += 1;
    }
}

#[test]
fn w_core_is_monotone_under_edge_addition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let g = synthetic::gnp(20, 0.2, &mut rng, 3.0);
        let before = w_core_shells(&g);
        let (u, v) = loop {
            let u = rng.random_range(0..20);
            let v = rng.random_range(0..20);
            if u != v && !g.neighbors(u).iter().any(|nb| nb.node == v) {
                break (u, v);
            }
        };
        let mut edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
        edges.push((u, v, 1.0 + rng.random::<f64>()));
        let after = w_core_shells(&WeightedGraph::from_triples(20, &edges).unwrap());
        for (a, b) in before.iter().zip(&after) {
            assert!(b >= a, "shell dropped from {a} to {b}");
        }
    }
}

#[test]
fn every_algorithm_picks_the_path_center() {
    let g = WeightedGraph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
    for algo in Algorithm::RANKERS {
        let r = rank_with(&g, algo, CorrelationMode::Positive).unwrap();
        let top = r.top().unwrap();
        assert_eq!(top.node, 1, "{algo}");
        assert_eq!(top.rank, 1);
        assert!(r.entries()[1].rank > 1, "{algo} ties the center with a leaf");
    }
}
