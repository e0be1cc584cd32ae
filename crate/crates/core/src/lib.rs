//! Node importance in weighted networks.
//!
//! The centerpiece is [`wem`], which treats normalized edge weights as
//! independent edge probabilities and scores every node by the expected
//! aggregate of its attainable degrees. Around it sit the pieces needed to
//! evaluate any ranking:
//!
//! - [`graph`] and [`io`]: the weighted graph, edge-list ingestion, largest
//!   component extraction and summary statistics.
//! - [`baseline`]: betweenness, closeness, eigenvector, w-core and
//!   weighted H-index rankings for comparison.
//! - [`epidemic`]: weighted SIR simulation producing a spreading-power
//!   ground truth.
//! - [`evaluation`]: robustness under targeted removal and Kendall rank
//!   correlation.

pub mod baseline;
pub mod epidemic;
pub mod error;
pub mod evaluation;
pub mod graph;
pub mod io;
pub mod ranking;
pub mod synthetic;
pub mod wem;

pub use error::{Error, Result};
pub use graph::{graph_stats, largest_connected_component, GraphStats, WeightedGraph};
pub use ranking::{Algorithm, ImportanceRanking, RankEntry};
pub use wem::{wem_rank_all, CorrelationMode};

/// Runs one of the node-importance algorithms with its default settings.
///
/// `mode` only affects [`Algorithm::Wem`]. [`Algorithm::Sir`] is not a
/// ranker on its own; use [`epidemic::sir_ground_truth`].
pub fn rank_with(g: &WeightedGraph, algorithm: Algorithm, mode: CorrelationMode) -> Result<ImportanceRanking> {
    match algorithm {
        Algorithm::Wem => wem::wem_rank_all(g, mode),
        Algorithm::Bt => baseline::betweenness(g),
        Algorithm::Cl => baseline::closeness(g),
        Algorithm::Ec => baseline::eigenvector(g, baseline::DEFAULT_TOL, baseline::DEFAULT_MAX_ITER),
        Algorithm::Wc => baseline::w_core(g),
        Algorithm::Hi => baseline::weighted_h_index(g),
        Algorithm::Sir => Err(Error::InvalidParameter(
            "the SIR ranking needs simulation parameters; use epidemic::sir_ground_truth".into(),
        )),
    }
}
