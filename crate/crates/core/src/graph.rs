//! Undirected weighted graph, connected components, and summary statistics.
//!
//! Nodes are dense indices `0..node_count`. Every node also carries the
//! string label it had in the input, and the two are kept in bijection.
//! Each unordered pair is stored once in the edge list; adjacency lists
//! reference that edge by id and are sorted by neighbor index so that
//! every per-node traversal happens in a fixed order.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// One adjacency entry: the neighbor, the weight of the shared edge and its id.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub node: usize,
    pub weight: f64,
    pub edge: usize,
}

#[derive(Debug, Clone)]
pub struct WeightedGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Neighbor>>,
}

impl WeightedGraph {
    /// Builds a graph from labels and `(u, v, weight)` triples.
    ///
    /// Rejects self-loops, repeated unordered pairs, out-of-range indices,
    /// duplicate labels and weights that are not strictly positive and finite.
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let n = labels.len();
        let mut seen_labels = HashSet::with_capacity(n);
        for label in &labels {
            if !seen_labels.insert(label.as_str()) {
                return Err(Error::InvalidGraph(format!("label {label:?} appears twice")));
            }
        }

        let mut adjacency: Vec<Vec<Neighbor>> = vec![Vec::new(); n];
        let mut stored = Vec::new();
        let mut pairs = HashSet::new();
        for (u, v, weight) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) references a node outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on node {u}")));
            }
            if !(weight.is_finite() && weight > 0.0) {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has non-positive weight {weight}")));
            }
            let key = (u.min(v), u.max(v));
            if !pairs.insert(key) {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) appears twice")));
            }
            let id = stored.len();
            stored.push(Edge { u: key.0, v: key.1, weight });
            adjacency[u].push(Neighbor { node: v, weight, edge: id });
            adjacency[v].push(Neighbor { node: u, weight, edge: id });
        }
        for list in &mut adjacency {
            list.sort_unstable_by_key(|nb| nb.node);
        }

        Ok(Self { labels, edges: stored, adjacency })
    }

    /// Graph whose labels are the decimal node indices.
    pub fn from_triples(node_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let labels = (0..node_count).map(|i| i.to_string()).collect();
        Self::new(labels, edges.iter().copied())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[Neighbor] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    /// Sum of incident edge weights.
    pub fn strength(&self, node: usize) -> f64 {
        self.adjacency[node].iter().map(|nb| nb.weight).sum()
    }

    pub fn strengths(&self) -> Vec<f64> {
        (0..self.node_count()).map(|i| self.strength(i)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
    }

    /// Subgraph induced by `nodes`, re-indexed in ascending original index order.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Self {
        let mut keep: Vec<usize> = nodes.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut remap = vec![usize::MAX; self.node_count()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| remap[e.u] != usize::MAX && remap[e.v] != usize::MAX)
            .map(|e| (remap[e.u], remap[e.v], e.weight));
        Self::new(labels, edges).expect("induced subgraph of a valid graph is valid")
    }
}

/// Connected components, each sorted ascending, listed in order of their smallest node.
pub fn connected_components(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for nb in g.neighbors(u) {
                if !seen[nb.node] {
                    seen[nb.node] = true;
                    queue.push_back(nb.node);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

pub fn is_connected(g: &WeightedGraph) -> bool {
    connected_components(g).len() <= 1
}

/// Induced subgraph on the largest connected node set.
///
/// Equal-size components are resolved in favor of the one holding the
/// smallest original index.
pub fn largest_connected_component(g: &WeightedGraph) -> Result<WeightedGraph> {
    if g.is_empty() {
        return Err(Error::InvalidGraph("cannot take the largest component of an empty graph".into()));
    }
    let components = connected_components(g);
    if components.len() == 1 {
        return Ok(g.clone());
    }
    let mut best = &components[0];
    for c in &components[1..] {
        if c.len() > best.len() {
            best = c;
        }
    }
    Ok(g.induced_subgraph(best))
}

/// Basic topology characteristics of a weighted network.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub avg_degree: f64,
    pub w_min: f64,
    pub w_max: f64,
    /// Mean edge weight.
    pub avg_weight: f64,
    /// First moment of the degree sequence.
    pub k_mean: f64,
    /// Second moment of the degree sequence.
    pub k2_mean: f64,
}

pub fn graph_stats(g: &WeightedGraph) -> Result<GraphStats> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.node_count();
    let m = g.edge_count();
    let (mut w_min, mut w_max, mut w_sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
    for e in g.edges() {
        w_min = w_min.min(e.weight);
        w_max = w_max.max(e.weight);
        w_sum += e.weight;
    }
    let k2_sum: f64 = (0..n).map(|i| (g.degree(i) * g.degree(i)) as f64).sum();
    let k_mean = 2.0 * m as f64 / n as f64;
    Ok(GraphStats {
        n,
        m,
        avg_degree: k_mean,
        w_min,
        w_max,
        // clamp guards the mean against rounding outside the observed range
        avg_weight: (w_sum / m as f64).clamp(w_min, w_max),
        k_mean,
        k2_mean: k2_sum / n as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3(w1: f64, w2: f64) -> WeightedGraph {
        WeightedGraph::from_triples(3, &[(0, 1, w1), (1, 2, w2)]).unwrap()
    }

    #[test]
    fn rejects_invalid_edges() {
        assert!(WeightedGraph::from_triples(2, &[(0, 0, 1.0)]).is_err());
        assert!(WeightedGraph::from_triples(2, &[(0, 1, 0.0)]).is_err());
        assert!(WeightedGraph::from_triples(2, &[(0, 1, f64::NAN)]).is_err());
        assert!(WeightedGraph::from_triples(2, &[(0, 1, 1.0), (1, 0, 2.0)]).is_err());
        assert!(WeightedGraph::from_triples(2, &[(0, 2, 1.0)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = WeightedGraph::from_triples(4, &[(3, 0, 1.0), (0, 1, 2.0), (2, 0, 3.0)]).unwrap();
        let order: Vec<usize> = g.neighbors(0).iter().map(|nb| nb.node).collect();
        assert_eq!(order, vec![1, 2, 3]);
        assert_eq!(g.neighbors(3)[0].node, 0);
        assert_eq!(g.strength(0), 6.0);
        assert_eq!(g.edges()[0], Edge { u: 0, v: 3, weight: 1.0 });
    }

    #[test]
    fn lcc_prefers_larger_component() {
        let g = WeightedGraph::from_triples(5, &[(3, 4, 1.0), (0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.edge_count(), 3);
        assert_eq!(lcc.labels(), &["0", "1", "2"]);
    }

    #[test]
    fn lcc_of_connected_graph_is_identity() {
        let g = path3(1.0, 3.0);
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.edges(), g.edges());
    }

    #[test]
    fn lcc_tie_goes_to_smallest_index() {
        let g = WeightedGraph::from_triples(4, &[(2, 3, 1.0), (0, 1, 1.0)]).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.labels(), &["0", "1"]);
    }

    #[test]
    fn lcc_reindexes_densely() {
        let g = WeightedGraph::from_triples(6, &[(0, 5, 1.0), (1, 3, 1.0), (3, 4, 2.0)]).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.labels(), &["1", "3", "4"]);
        assert_eq!(lcc.edges()[1], Edge { u: 1, v: 2, weight: 2.0 });
    }

    #[test]
    fn stats_on_weighted_path() {
        let s = graph_stats(&path3(1.0, 3.0)).unwrap();
        assert_eq!((s.n, s.m), (3, 2));
        assert_eq!(s.avg_weight, 2.0);
        assert_eq!((s.w_min, s.w_max), (1.0, 3.0));
        assert!((s.k_mean - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(s.k2_mean, 2.0);
    }

    #[test]
    fn stats_on_k4_and_single_edge() {
        let k4: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j, 1.0))).collect();
        let s = graph_stats(&WeightedGraph::from_triples(4, &k4).unwrap()).unwrap();
        assert_eq!((s.k_mean, s.k2_mean, s.avg_weight), (3.0, 9.0, 1.0));

        let s = graph_stats(&WeightedGraph::from_triples(2, &[(0, 1, 5.0)]).unwrap()).unwrap();
        assert_eq!((s.w_min, s.w_max, s.avg_weight), (5.0, 5.0, 5.0));
    }

    #[test]
    fn stats_need_edges() {
        let g = WeightedGraph::from_triples(1, &[]).unwrap();
        assert!(matches!(graph_stats(&g), Err(Error::EmptyGraph)));
    }
}
