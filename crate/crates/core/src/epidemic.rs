//! Weighted SIR spreading used as ground truth for node influence.
//!
//! Discrete generations: every infected node tries once per step to infect
//! each susceptible neighbor `j` with probability `min(1, beta * w_ij)`;
//! afterwards every node that was infectious at the start of the step
//! recovers with probability `recovery_prob`. A run ends when nobody is
//! infected and reports how many nodes ever caught the infection.
//!
//! Every run draws from its own ChaCha stream keyed by
//! `(rng_seed, seed_node, run_index)`, so results do not depend on how runs
//! are spread across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{GraphStats, WeightedGraph};
use crate::ranking::{Algorithm, ImportanceRanking};

#[derive(Debug, Clone, PartialEq)]
pub struct SirParams {
    /// Transmission rate per unit of edge weight.
    pub beta: f64,
    pub recovery_prob: f64,
    pub runs: usize,
    /// Factor applied to the weighted epidemic threshold by [`SirParams::calibrated`].
    pub threshold_multiplier: f64,
    pub rng_seed: u64,
}

impl Default for SirParams {
    fn default() -> Self {
        Self { beta: 0.0, recovery_prob: 1.0, runs: 1000, threshold_multiplier: 10.0, rng_seed: 0 }
    }
}

impl SirParams {
    /// Sets `beta = threshold_multiplier * weighted_threshold(stats)`.
    pub fn calibrated(mut self, stats: &GraphStats) -> Result<Self> {
        self.beta = self.threshold_multiplier * weighted_threshold(stats)?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta >= 0.0 && self.beta.is_finite()) {
            return Err(Error::InvalidParameter(format!("beta must be finite and >= 0, got {}", self.beta)));
        }
        if !(self.recovery_prob > 0.0 && self.recovery_prob <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "recovery probability must lie in (0, 1], got {}",
                self.recovery_prob
            )));
        }
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be at least 1".into()));
        }
        if !(self.threshold_multiplier >= 0.0 && self.threshold_multiplier.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "threshold multiplier must be finite and >= 0, got {}",
                self.threshold_multiplier
            )));
        }
        Ok(())
    }
}

/// Mean-field threshold `<k> / (<k^2> - <k>)` of unweighted SIR.
pub fn unweighted_threshold(stats: &GraphStats) -> Result<f64> {
    let gap = stats.k2_mean - stats.k_mean;
    if gap.is_nan() || gap <= 0.0 {
        return Err(Error::DegenerateThreshold { k_mean: stats.k_mean, k2_mean: stats.k2_mean });
    }
    Ok(stats.k_mean / gap)
}

/// Weighted threshold `<k> / (alpha (<k^2> - <k>))` with `alpha` the mean edge weight.
pub fn weighted_threshold(stats: &GraphStats) -> Result<f64> {
    if stats.avg_weight.is_nan() || stats.avg_weight <= 0.0 {
        return Err(Error::InvalidParameter(format!("average weight must be positive, got {}", stats.avg_weight)));
    }
    Ok(unweighted_threshold(stats)? / stats.avg_weight)
}

/// Source of the uniform `[0, 1)` variates a run consumes.
pub trait SpreadDraws {
    /// Variate deciding whether `from` infects `to` in the current step.
    fn exposure(&mut self, from: usize, to: usize) -> f64;
    /// Variate deciding whether `node` recovers at the end of the current step.
    fn recovery(&mut self, node: usize) -> f64;
}

/// Sequential draws from a random number generator.
pub struct RngDraws<R>(pub R);

impl<R: Rng> SpreadDraws for RngDraws<R> {
    fn exposure(&mut self, _from: usize, _to: usize) -> f64 {
        self.0.random()
    }

    fn recovery(&mut self, _node: usize) -> f64 {
        self.0.random()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Susceptible,
    Infected,
    Recovered,
}

/// One outbreak from `seed_node`; returns the number of nodes ever infected.
pub fn spread_with<D: SpreadDraws>(
    g: &WeightedGraph,
    seed_node: usize,
    beta: f64,
    recovery_prob: f64,
    draws: &mut D,
) -> usize {
    let mut state = vec![State::Susceptible; g.node_count()];
    state[seed_node] = State::Infected;
    let mut infected = vec![seed_node];
    let mut ever = 1;

    while !infected.is_empty() {
        let mut newly = Vec::new();
        for &i in &infected {
            for nb in g.neighbors(i) {
                if state[nb.node] != State::Susceptible {
                    continue;
                }
                let p = (beta * nb.weight).min(1.0);
                if draws.exposure(i, nb.node) < p {
                    state[nb.node] = State::Infected;
                    newly.push(nb.node);
                }
            }
        }
        ever += newly.len();
        infected.retain(|&i| {
            if recovery_prob >= 1.0 || draws.recovery(i) < recovery_prob {
                state[i] = State::Recovered;
                false
            } else {
                true
            }
        });
        infected.extend(newly);
    }
    ever
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Generator for one `(rng_seed, seed_node, run_index)` triple.
pub fn run_rng(rng_seed: u64, seed_node: usize, run_index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(rng_seed ^ splitmix64(run_index as u64)));
    rng.set_stream(seed_node as u64);
    rng
}

/// Outbreak size of run `run_index` seeded at `seed_node`, using `params.beta` as is.
pub fn simulate_wsir(g: &WeightedGraph, seed_node: usize, params: &SirParams, run_index: usize) -> Result<usize> {
    if seed_node >= g.node_count() {
        return Err(Error::InvalidParameter(format!("seed node {seed_node} is not in the graph")));
    }
    params.validate()?;
    let mut draws = RngDraws(run_rng(params.rng_seed, seed_node, run_index));
    Ok(spread_with(g, seed_node, params.beta, params.recovery_prob, &mut draws))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SirOutcome {
    pub seed_node: usize,
    pub outbreak_sizes: Vec<usize>,
    pub mean_outbreak: f64,
}

/// `params.runs` outbreaks from every node.
pub fn sir_outcomes(g: &WeightedGraph, params: &SirParams) -> Result<Vec<SirOutcome>> {
    params.validate()?;
    Ok((0..g.node_count())
        .into_par_iter()
        .map(|node| {
            let outbreak_sizes: Vec<usize> = (0..params.runs)
                .map(|run| {
                    let mut draws = RngDraws(run_rng(params.rng_seed, node, run));
                    spread_with(g, node, params.beta, params.recovery_prob, &mut draws)
                })
                .collect();
            let total: usize = outbreak_sizes.iter().sum();
            SirOutcome { seed_node: node, mean_outbreak: total as f64 / params.runs as f64, outbreak_sizes }
        })
        .collect())
}

pub fn ranking_from_outcomes(outcomes: &[SirOutcome]) -> Result<ImportanceRanking> {
    let mut scores = vec![0.0; outcomes.len()];
    for o in outcomes {
        scores[o.seed_node] = o.mean_outbreak;
    }
    ImportanceRanking::from_scores(Algorithm::Sir, &scores)
}

/// Nodes ranked by mean outbreak size.
pub fn sir_ground_truth(g: &WeightedGraph, params: &SirParams) -> Result<ImportanceRanking> {
    ranking_from_outcomes(&sir_outcomes(g, params)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_stats;

    fn ring(n: usize, w: f64) -> WeightedGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, w)).collect();
        WeightedGraph::from_triples(n, &edges).unwrap()
    }

    /// 4-regular circulant: i ~ i+1, i+2.
    fn four_regular(n: usize, w: f64) -> WeightedGraph {
        let edges: Vec<_> = (0..n).flat_map(|i| [(i, (i + 1) % n, w), (i, (i + 2) % n, w)]).collect();
        WeightedGraph::from_triples(n, &edges).unwrap()
    }

    fn star(leaves: usize, w: f64) -> WeightedGraph {
        let edges: Vec<_> = (1..=leaves).map(|j| (0, j, w)).collect();
        WeightedGraph::from_triples(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn unweighted_thresholds() {
        let t = |g: &WeightedGraph| unweighted_threshold(&graph_stats(g).unwrap()).unwrap();
        assert!((t(&four_regular(9, 1.0)) - 1.0 / 3.0).abs() < 1e-15);
        assert!((t(&ring(6, 1.0)) - 1.0).abs() < 1e-15);
        assert!((t(&star(5, 1.0)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn weighted_thresholds() {
        let t = |g: &WeightedGraph| weighted_threshold(&graph_stats(g).unwrap()).unwrap();
        assert!((t(&four_regular(9, 2.0)) - 1.0 / 6.0).abs() < 1e-15);
        assert!((t(&ring(6, 0.5)) - 2.0).abs() < 1e-15);
        let s = graph_stats(&star(5, 1.0)).unwrap();
        assert_eq!(weighted_threshold(&s).unwrap(), unweighted_threshold(&s).unwrap());
    }

    #[test]
    fn single_edge_threshold_is_degenerate() {
        let g = WeightedGraph::from_triples(2, &[(0, 1, 1.0)]).unwrap();
        let s = graph_stats(&g).unwrap();
        assert!(matches!(unweighted_threshold(&s), Err(Error::DegenerateThreshold { .. })));
        assert!(matches!(weighted_threshold(&s), Err(Error::DegenerateThreshold { .. })));
    }

    #[test]
    fn no_transmission() {
        let g = star(4, 3.0);
        let params = SirParams { beta: 0.0, runs: 20, ..SirParams::default() };
        for node in 0..g.node_count() {
            assert_eq!(simulate_wsir(&g, node, &params, 0).unwrap(), 1);
        }
        assert!(sir_ground_truth(&g, &params).unwrap().entries().iter().all(|e| e.score == 1.0 && e.rank == 1));
    }

    #[test]
    fn saturating_transmission() {
        let g = ring(7, 0.5);
        let params = SirParams { beta: 2.0, runs: 5, ..SirParams::default() };
        for o in sir_outcomes(&g, &params).unwrap() {
            assert!(o.outbreak_sizes.iter().all(|&s| s == 7));
        }
    }

    #[test]
    fn lingering_infection_still_terminates() {
        let g = four_regular(10, 1.0);
        let params = SirParams { beta: 0.2, recovery_prob: 0.3, runs: 50, ..SirParams::default() };
        for o in sir_outcomes(&g, &params).unwrap() {
            assert!(o.outbreak_sizes.iter().all(|&s| (1..=10).contains(&s)));
        }
    }

    #[test]
    fn runs_are_keyed_not_sequential() {
        let g = four_regular(12, 1.0);
        let params = SirParams { beta: 0.3, runs: 30, rng_seed: 99, ..SirParams::default() };
        let all = sir_outcomes(&g, &params).unwrap();
        for (run, &size) in all[5].outbreak_sizes.iter().enumerate() {
            assert_eq!(simulate_wsir(&g, 5, &params, run).unwrap(), size);
        }
    }

    #[test]
    fn rejects_bad_params() {
        let g = ring(4, 1.0);
        for bad in [
            SirParams { beta: -1.0, ..SirParams::default() },
            SirParams { recovery_prob: 0.0, ..SirParams::default() },
            SirParams { recovery_prob: 1.5, ..SirParams::default() },
            SirParams { runs: 0, ..SirParams::default() },
        ] {
            assert!(sir_outcomes(&g, &bad).is_err());
        }
        assert!(simulate_wsir(&g, 4, &SirParams::default(), 0).is_err());
    }
}
