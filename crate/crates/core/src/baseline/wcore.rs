use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::ranking::{Algorithm, ImportanceRanking};

fn weighted_degree(degree: usize, strength: f64) -> u64 {
    (degree as f64 * strength.max(0.0)).sqrt().round() as u64
}

pub(super) fn min_weight(g: &WeightedGraph) -> f64 {
    g.edges().iter().map(|e| e.weight).reduce(f64::min).unwrap_or(1.0)
}

/// Shell index of every node under w-core decomposition.
///
/// The weighted degree of a node in the remaining graph is
/// `round(sqrt(k * s))` with `k` its current degree and `s` its current
/// strength measured in units of the smallest edge weight. Starting from the smallest weighted degree, every node whose
/// weighted degree is at most the current shell is peeled and assigned that
/// shell; peeling repeats until no such node remains, then the shell advances
/// to the smallest remaining weighted degree.
pub fn w_core_shells(g: &WeightedGraph) -> Vec<u64> {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let unit = min_weight(g);
    let mut strength: Vec<f64> = g.strengths().into_iter().map(|s| s / unit).collect();
    let mut alive = vec![true; n];
    let mut shell = vec![0u64; n];
    let mut remaining = n;
    let mut current = 0u64;

    while remaining > 0 {
        let floor = (0..n)
            .filter(|&i| alive[i])
            .map(|i| weighted_degree(degree[i], strength[i]))
            .min()
            .expect("some node remains");
        current = current.max(floor);
        loop {
            let peel: Vec<usize> =
                (0..n).filter(|&i| alive[i] && weighted_degree(degree[i], strength[i]) <= current).collect();
            if peel.is_empty() {
                break;
            }
            for &i in &peel {
                alive[i] = false;
                shell[i] = current;
                remaining -= 1;
            }
            for &i in &peel {
                for nb in g.neighbors(i) {
                    if alive[nb.node] {
                        degree[nb.node] -= 1;
                        strength[nb.node] -= nb.weight / unit;
                    }
                }
            }
        }
    }
    shell
}

/// Ranks by shell index, then by strength, then by node index.
pub fn w_core(g: &WeightedGraph) -> Result<ImportanceRanking> {
    let shells: Vec<f64> = w_core_shells(g).into_iter().map(|s| s as f64).collect();
    ImportanceRanking::with_tiebreak(Algorithm::Wc, &shells, &g.strengths())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_single_shell() {
        let k4: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j, 1.0))).collect();
        let g = WeightedGraph::from_triples(4, &k4).unwrap();
        assert_eq!(w_core_shells(&g), vec![3; 4]);
        assert!(w_core(&g).unwrap().entries().iter().all(|e| e.rank == 1));
    }

    #[test]
    fn star_peels_in_one_shell() {
        // leaves: round(sqrt(1*1)) = 1; center: round(sqrt(5*5)) = 5, drops to 0 once leaves go
        let edges: Vec<_> = (1..6).map(|j| (0, j, 1.0)).collect();
        let g = WeightedGraph::from_triples(6, &edges).unwrap();
        assert_eq!(w_core_shells(&g), vec![1; 6]);
        let r = w_core(&g).unwrap();
        assert_eq!(r.top().unwrap().node, 0);
        assert_eq!(r.top().unwrap().rank, 1);
        assert!(r.entries()[1..].iter().all(|e| e.rank == 2));
    }

    #[test]
    fn path_interior_first() {
        let g = WeightedGraph::from_triples(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        assert_eq!(w_core_shells(&g), vec![1; 4]);
        assert_eq!(w_core(&g).unwrap().ranks_by_node(), vec![3, 1, 1, 3]);
    }

    #[test]
    fn shells_ignore_weight_scale() {
        let edges = [(0, 1, 1.0), (1, 2, 3.0), (2, 0, 2.0), (2, 3, 1.0), (3, 4, 5.0)];
        let scaled: Vec<_> = edges.iter().map(|&(u, v, w)| (u, v, w * 0.3)).collect();
        assert_eq!(
            w_core_shells(&WeightedGraph::from_triples(5, &edges).unwrap()),
            w_core_shells(&WeightedGraph::from_triples(5, &scaled).unwrap())
        );
    }

    #[test]
    fn weights_raise_shells() {
        // heavy triangle: each node k=2, s=8 (unit weight 1) -> round(sqrt(16)) = 4
        let g = WeightedGraph::from_triples(4, &[(0, 1, 4.0), (1, 2, 4.0), (0, 2, 4.0), (2, 3, 1.0)]).unwrap();
        let shells = w_core_shells(&g);
        assert_eq!(shells[3], 1);
        assert_eq!(&shells[..3], &[4, 4, 4]);
    }
}
