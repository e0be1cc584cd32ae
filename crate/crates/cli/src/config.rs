use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use wem_core::epidemic::SirParams;
use wem_core::evaluation::TauVariant;
use wem_core::io::MergePolicy;
use wem_core::{Algorithm, CorrelationMode};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("no such input: {}", .0.display())]
    NoSuchInput(PathBuf),

    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: wem_core::Error },

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Algorithm(#[from] wem_core::Error),
}

impl CliError {
    /// 0 success, 1 algorithm/runtime failure, 2 usage or I/O problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Algorithm(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io { path: path.to_owned(), source }
    }
}

#[derive(Debug, Parser)]
#[command(name = "wem", version, about = "Node importance ranking and evaluation for weighted networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank nodes with one or more algorithms and write a ranking file per algorithm.
    Rank(CommonArgs),
    /// Remove nodes in ranked order and report the robustness R of each ranking.
    Robustness(CommonArgs),
    /// Correlate each ranking with a weighted SIR spreading ground truth.
    SirEval {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sir: SirArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MergeArg {
    Error,
    Sum,
    Max,
    First,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TauArg {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Edge-list files (`u v w` per line).
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,

    /// Comma-separated subset of wem,bt,cl,ec,wc,hi, or `all`.
    #[arg(long, env = "WEM_ALGO", default_value = "all")]
    pub algo: String,

    /// Whether heavier edges mean stronger (positive) or weaker (negative) ties.
    #[arg(long, env = "WEM_MODE", value_enum, default_value = "positive")]
    pub mode: ModeArg,

    /// Output file format.
    #[arg(long, env = "WEM_FORMAT", value_enum, default_value = "csv")]
    pub format: FormatArg,

    /// Directory for result files (created if missing).
    #[arg(long, env = "WEM_OUT_DIR", default_value = "wem-out")]
    pub out_dir: PathBuf,

    /// How repeated node pairs in the input are combined.
    #[arg(long, env = "WEM_MERGE_POLICY", value_enum, default_value = "error")]
    pub merge_policy: MergeArg,

    /// Analyze the input as is instead of its largest connected component.
    #[arg(long, env = "WEM_NO_LCC")]
    pub no_lcc: bool,

    /// Worker threads (0 = one per core). Results do not depend on this.
    #[arg(long, env = "WEM_THREADS", default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SirArgs {
    /// Simulations per seed node.
    #[arg(long, env = "WEM_RUNS", default_value_t = 1000)]
    pub runs: usize,

    /// Transmission rate as a multiple of the weighted epidemic threshold.
    #[arg(long, env = "WEM_BETA_MULTIPLIER", default_value_t = 10.0)]
    pub beta_multiplier: f64,

    /// Probability that an infected node recovers after each step.
    #[arg(long, env = "WEM_RECOVERY_PROB", default_value_t = 1.0)]
    pub recovery_prob: f64,

    /// Base seed; every (node, run) pair draws from its own stream.
    #[arg(long, env = "WEM_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Kendall coefficient(s) to report.
    #[arg(long, env = "WEM_TAU", value_enum, default_value = "b")]
    pub tau: TauArg,

    /// Also write every simulated outbreak size (`node,run,size`).
    #[arg(long)]
    pub dump_runs: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Json => "json",
        }
    }
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub mode: CorrelationMode,
    pub algorithms: Vec<Algorithm>,
    pub sir: SirParams,
    pub tau: Vec<TauVariant>,
    pub dump_runs: bool,
    pub out_dir: PathBuf,
    pub format: OutputFormat,
    pub merge: MergePolicy,
    pub use_lcc: bool,
    pub threads: usize,
}

pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>, CliError> {
    let mut out = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if token.eq_ignore_ascii_case("all") {
            out.extend(Algorithm::RANKERS);
            continue;
        }
        let algo: Algorithm = token.parse().map_err(|_| CliError::Usage(format!("unknown algorithm {token:?}")))?;
        if algo == Algorithm::Sir {
            return Err(CliError::Usage("sir is the ground truth, not a ranking algorithm".into()));
        }
        out.push(algo);
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|a| seen.insert(*a));
    if out.is_empty() {
        return Err(CliError::Usage("the algorithm set is empty".into()));
    }
    Ok(out)
}

impl RunConfig {
    pub fn from_args(common: &CommonArgs, sir: Option<&SirArgs>) -> Result<Self, CliError> {
        let algorithms = parse_algorithms(&common.algo)?;
        let mut params = SirParams::default();
        let mut tau = vec![TauVariant::B];
        let mut dump_runs = false;
        if let Some(s) = sir {
            if s.runs == 0 {
                return Err(CliError::Usage("--runs must be at least 1".into()));
            }
            if !(s.beta_multiplier > 0.0 && s.beta_multiplier.is_finite()) {
                return Err(CliError::Usage(format!("--beta-multiplier must be positive, got {}", s.beta_multiplier)));
            }
            if !(s.recovery_prob > 0.0 && s.recovery_prob <= 1.0) {
                return Err(CliError::Usage(format!("--recovery-prob must lie in (0, 1], got {}", s.recovery_prob)));
            }
            params = SirParams {
                beta: 0.0,
                recovery_prob: s.recovery_prob,
                runs: s.runs,
                threshold_multiplier: s.beta_multiplier,
                rng_seed: s.seed,
            };
            tau = match s.tau {
                TauArg::A => vec![TauVariant::A],
                TauArg::B => vec![TauVariant::B],
                TauArg::Both => vec![TauVariant::B, TauVariant::A],
            };
            dump_runs = s.dump_runs;
        }
        Ok(Self {
            inputs: common.inputs.clone(),
            mode: match common.mode {
                ModeArg::Positive => CorrelationMode::Positive,
                ModeArg::Negative => CorrelationMode::Negative,
            },
            algorithms,
            sir: params,
            tau,
            dump_runs,
            out_dir: common.out_dir.clone(),
            format: match common.format {
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Json => OutputFormat::Json,
            },
            merge: match common.merge_policy {
                MergeArg::Error => MergePolicy::Error,
                MergeArg::Sum => MergePolicy::Sum,
                MergeArg::Max => MergePolicy::Max,
                MergeArg::First => MergePolicy::First,
            },
            use_lcc: !common.no_lcc,
            threads: common.threads,
        })
    }
}
