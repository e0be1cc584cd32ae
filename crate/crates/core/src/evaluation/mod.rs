//! Ranking quality measures: robustness under ranked node removal and
//! Kendall correlation against a reference ranking.

mod kendall;
mod robustness;

pub use kendall::{kendall_tau_a, kendall_tau_b, pair_counts, PairCounts, RankSequencePair};
pub use robustness::{connectivity_curve, robustness_r, RemovalStep, RobustnessCurve};

use crate::error::Result;
use crate::ranking::ImportanceRanking;

/// Which Kendall coefficient to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TauVariant {
    A,
    #[default]
    B,
}

/// Kendall correlation between two rankings of the same node set.
///
/// Each ranking contributes its per-node standing, so tied nodes stay tied
/// and any tiebreak key a ranking used is respected.
pub fn ranking_correlation(a: &ImportanceRanking, b: &ImportanceRanking, variant: TauVariant) -> Result<f64> {
    let pair = RankSequencePair::new(a.standing_by_node(), b.standing_by_node())?;
    match variant {
        TauVariant::A => Ok(kendall_tau_a(&pair)),
        TauVariant::B => kendall_tau_b(&pair),
    }
}
