use std::collections::VecDeque;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::ranking::ImportanceRanking;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RemovalStep {
    pub removed_node: usize,
    /// Largest surviving component size over the initial largest component size.
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RobustnessCurve {
    pub steps: Vec<RemovalStep>,
    /// Mean of `r` over all removal steps.
    pub robustness: f64,
}

impl RobustnessCurve {
    pub fn write_csv<W: Write>(&self, g: &WeightedGraph, mut out: W) -> Result<()> {
        writeln!(out, "step,removed_node,r")?;
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(out, "{},{},{}", i + 1, g.label(s.removed_node), s.r)?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, g: &WeightedGraph, out: W) -> Result<()> {
        #[derive(Serialize)]
        struct Step<'a> {
            step: usize,
            removed_node: &'a str,
            r: f64,
        }
        #[derive(Serialize)]
        #[allow(non_snake_case)]
        struct Doc<'a> {
            R: f64,
            steps: Vec<Step<'a>>,
        }
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| Step { step: i + 1, removed_node: g.label(s.removed_node), r: s.r })
            .collect();
        serde_json::to_writer_pretty(out, &Doc { R: self.robustness, steps })?;
        Ok(())
    }
}

fn largest_alive_component(g: &WeightedGraph, alive: &[bool], mark: &mut [bool], queue: &mut VecDeque<usize>) -> usize {
    mark.copy_from_slice(alive);
    let mut best = 0;
    for start in 0..g.node_count() {
        if !mark[start] {
            continue;
        }
        mark[start] = false;
        queue.push_back(start);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for nb in g.neighbors(u) {
                if mark[nb.node] {
                    mark[nb.node] = false;
                    queue.push_back(nb.node);
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Removes nodes one by one in ranking order, recording after each removal
/// the size of the largest remaining component relative to the initial one.
pub fn connectivity_curve(g: &WeightedGraph, ranking: &ImportanceRanking) -> Result<RobustnessCurve> {
    let n = g.node_count();
    if ranking.len() != n {
        return Err(Error::RankingMismatch(format!("ranking has {} nodes, graph has {n}", ranking.len())));
    }
    let mut alive = vec![true; n];
    for node in ranking.order() {
        if node >= n || !alive[node] {
            return Err(Error::RankingMismatch(format!("node {node} is missing or repeated")));
        }
        alive[node] = false;
    }
    alive.fill(true);

    let mut mark = vec![false; n];
    let mut queue = VecDeque::new();
    let initial = largest_alive_component(g, &alive, &mut mark, &mut queue);
    let mut steps = Vec::with_capacity(n);
    for node in ranking.order() {
        alive[node] = false;
        let size = largest_alive_component(g, &alive, &mut mark, &mut queue);
        steps.push(RemovalStep { removed_node: node, r: size as f64 / initial as f64 });
    }
    let robustness = robustness_r(&steps, n);
    Ok(RobustnessCurve { steps, robustness })
}

/// `R = (1/N) sum_n r_n` with `N` the node count of the analyzed graph.
pub fn robustness_r(steps: &[RemovalStep], node_count: usize) -> f64 {
    if node_count == 0 {
        return 0.0;
    }
    steps.iter().map(|s| s.r).sum::<f64>() / node_count as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranking::Algorithm;

    fn ranking_in_order(order: &[usize]) -> ImportanceRanking {
        let mut scores = vec![0.0; order.len()];
        for (pos, &node) in order.iter().enumerate() {
            scores[node] = (order.len() - pos) as f64;
        }
        ImportanceRanking::from_scores(Algorithm::Wem, &scores).unwrap()
    }

    fn rs(curve: &RobustnessCurve) -> Vec<f64> {
        curve.steps.iter().map(|s| s.r).collect()
    }

    #[test]
    fn complete_graph() {
        let k4: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j, 1.0))).collect();
        let g = WeightedGraph::from_triples(4, &k4).unwrap();
        let curve = connectivity_curve(&g, &ranking_in_order(&[2, 0, 3, 1])).unwrap();
        assert_eq!(rs(&curve), vec![0.75, 0.5, 0.25, 0.0]);
        assert_eq!(curve.robustness, 0.375);
    }

    #[test]
    fn path_center_first() {
        let g = WeightedGraph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let curve = connectivity_curve(&g, &ranking_in_order(&[1, 0, 2])).unwrap();
        assert_eq!(rs(&curve), vec![1.0 / 3.0, 1.0 / 3.0, 0.0]);
        assert!((curve.robustness - 2.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn single_node() {
        let g = WeightedGraph::from_triples(1, &[]).unwrap();
        let curve = connectivity_curve(&g, &ranking_in_order(&[0])).unwrap();
        assert_eq!(rs(&curve), vec![0.0]);
        assert_eq!(curve.robustness, 0.0);
    }

    #[test]
    fn mismatched_ranking() {
        let g = WeightedGraph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert!(matches!(connectivity_curve(&g, &ranking_in_order(&[1, 0])), Err(Error::RankingMismatch(_))));
    }

    #[test]
    fn csv_uses_labels() {
        let g = WeightedGraph::new(vec!["a".into(), "b".into()], [(0, 1, 1.0)]).unwrap();
        let curve = connectivity_curve(&g, &ranking_in_order(&[1, 0])).unwrap();
        let mut buf = Vec::new();
        curve.write_csv(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "step,removed_node,r\n1,b,0.5\n2,a,0\n");
    }
}
