use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::graph::WeightedGraph;

/// Rule turning a tie strength into a traversal length. Heavier edges are
/// shorter: length is `1 / w`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DistanceTransform;

impl DistanceTransform {
    pub fn length(self, weight: f64) -> f64 {
        1.0 / weight
    }
}

/// Single-source shortest-path DAG, as needed by Brandes accumulation.
#[derive(Debug, Clone)]
pub struct ShortestPaths {
    pub dist: Vec<f64>,
    /// Number of shortest paths from the source.
    pub sigma: Vec<f64>,
    /// Shortest-path predecessors of each node.
    pub preds: Vec<Vec<usize>>,
    /// Settled nodes in nondecreasing distance order.
    pub settled: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq)]
struct Frontier {
    dist: f64,
    node: usize,
}

impl Eq for Frontier {}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        other.dist.total_cmp(&self.dist).then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl ShortestPaths {
    pub fn dijkstra(g: &WeightedGraph, source: usize, transform: DistanceTransform) -> Self {
        let n = g.node_count();
        let mut dist = vec![f64::INFINITY; n];
        let mut sigma = vec![0.0; n];
        let mut preds = vec![Vec::new(); n];
        let mut settled = Vec::with_capacity(n);
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();

        dist[source] = 0.0;
        sigma[source] = 1.0;
        heap.push(Frontier { dist: 0.0, node: source });
        while let Some(Frontier { dist: d, node: u }) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            settled.push(u);
            for nb in g.neighbors(u) {
                let v = nb.node;
                if done[v] {
                    continue;
                }
                let alt = d + transform.length(nb.weight);
                if alt < dist[v] {
                    dist[v] = alt;
                    sigma[v] = sigma[u];
                    preds[v].clear();
                    preds[v].push(u);
                    heap.push(Frontier { dist: alt, node: v });
                } else if alt == dist[v] {
                    sigma[v] += sigma[u];
                    preds[v].push(u);
                }
            }
        }
        Self { dist, sigma, preds, settled }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_equal_paths() {
        // square 0-1-3 and 0-2-3, unit weights
        let g = WeightedGraph::from_triples(4, &[(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)]).unwrap();
        let sp = ShortestPaths::dijkstra(&g, 0, DistanceTransform);
        assert_eq!(sp.dist, vec![0.0, 1.0, 1.0, 2.0]);
        assert_eq!(sp.sigma[3], 2.0);
        assert_eq!(sp.preds[3], vec![1, 2]);
        assert_eq!(sp.settled[0], 0);
    }

    #[test]
    fn heavy_edges_are_short() {
        let g = WeightedGraph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 0.25)]).unwrap();
        let sp = ShortestPaths::dijkstra(&g, 0, DistanceTransform);
        assert_eq!(sp.dist[2], 2.0);
        assert_eq!(sp.preds[2], vec![1]);
    }
}
