use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Map, Value};

use wem_core::epidemic::{ranking_from_outcomes, sir_outcomes, SirOutcome, SirParams};
use wem_core::evaluation::{connectivity_curve, ranking_correlation, TauVariant};
use wem_core::graph::is_connected;
use wem_core::io::{parse_edge_list, ParseOptions, ParseReport};
use wem_core::{graph_stats, largest_connected_component, rank_with, Algorithm, GraphStats, WeightedGraph};

use crate::config::{CliError, OutputFormat, RunConfig};

pub const AVERAGE_ROW: &str = "Average value";

/// One parsed input, reduced to its largest connected component unless disabled.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub name: String,
    pub graph: WeightedGraph,
    pub report: ParseReport,
    pub input_nodes: usize,
    pub input_edges: usize,
}

pub fn load_graph(path: &Path, config: &RunConfig) -> Result<LoadedGraph, CliError> {
    let file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CliError::NoSuchInput(path.to_owned()),
        _ => CliError::io(path, e),
    })?;
    let options = ParseOptions { merge: config.merge };
    let (graph, report) = parse_edge_list(BufReader::new(file), &options).map_err(|source| match source {
        wem_core::Error::Io(e) => CliError::io(path, e),
        source => CliError::Input { path: path.to_owned(), source },
    })?;
    let (input_nodes, input_edges) = (graph.node_count(), graph.edge_count());
    let graph = if config.use_lcc { largest_connected_component(&graph)? } else { graph };
    let name = path.file_stem().map_or_else(|| "input".to_owned(), |s| s.to_string_lossy().into_owned());

    if report.self_loops > 0 {
        eprintln!("{}: dropped {} self-loop(s)", path.display(), report.self_loops);
    }
    if report.merged_duplicates > 0 {
        eprintln!("{}: merged {} repeated edge(s)", path.display(), report.merged_duplicates);
    }
    if graph.node_count() < input_nodes {
        eprintln!(
            "{}: analyzing largest connected component ({} of {} nodes)",
            path.display(),
            graph.node_count(),
            input_nodes
        );
    }
    Ok(LoadedGraph { name, graph, report, input_nodes, input_edges })
}

fn write_file<F>(path: &Path, body: F) -> Result<(), CliError>
where
    F: FnOnce(&mut BufWriter<File>) -> wem_core::Result<()>,
{
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut out = BufWriter::new(file);
    body(&mut out).map_err(|e| match e {
        wem_core::Error::Io(e) => CliError::io(path, e),
        e => CliError::Algorithm(e),
    })?;
    out.flush().map_err(|e| CliError::io(path, e))
}

fn write_json_value(out: &mut impl Write, value: &impl Serialize) -> wem_core::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn prepare_out_dir(config: &RunConfig) -> Result<(), CliError> {
    std::fs::create_dir_all(&config.out_dir).map_err(|e| CliError::io(&config.out_dir, e))
}

fn out_path(config: &RunConfig, stem: &str) -> PathBuf {
    config.out_dir.join(format!("{stem}.{}", config.format.extension()))
}

fn load_all(config: &RunConfig) -> Result<Vec<LoadedGraph>, CliError> {
    config.inputs.iter().map(|p| load_graph(p, config)).collect()
}

pub fn write_stats(path: &Path, stats: &GraphStats, format: OutputFormat) -> Result<(), CliError> {
    write_file(path, |out| match format {
        OutputFormat::Csv => {
            writeln!(out, "n,m,avg_degree,w_min,w_max,avg_weight,k_mean,k2_mean")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                stats.n,
                stats.m,
                stats.avg_degree,
                stats.w_min,
                stats.w_max,
                stats.avg_weight,
                stats.k_mean,
                stats.k2_mean
            )?;
            Ok(())
        }
        OutputFormat::Json => write_json_value(out, stats),
    })
}

/// Writes `{name}_{algo}` ranking files and `{name}_stats` for every input.
pub fn cmd_rank(config: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let inputs = load_all(config)?;
    prepare_out_dir(config)?;
    let mut written = Vec::new();
    for input in &inputs {
        let g = &input.graph;
        let stats = graph_stats(g)?;
        let path = out_path(config, &format!("{}_stats", input.name));
        write_stats(&path, &stats, config.format)?;
        written.push(path);

        for &algo in &config.algorithms {
            let ranking = rank_with(g, algo, config.mode)?;
            let path = out_path(config, &format!("{}_{algo}", input.name));
            write_file(&path, |out| match config.format {
                OutputFormat::Csv => ranking.write_csv(g, out),
                OutputFormat::Json => ranking.write_json(g, out),
            })?;
            written.push(path);
        }
    }
    Ok(written)
}

/// Datasets as rows, algorithms as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub algorithms: Vec<Algorithm>,
    pub rows: Vec<(String, Vec<Option<f64>>)>,
}

impl ResultTable {
    fn new(algorithms: &[Algorithm]) -> Self {
        Self { algorithms: algorithms.to_vec(), rows: Vec::new() }
    }

    pub fn get(&self, dataset: &str, algo: Algorithm) -> Option<f64> {
        let col = self.algorithms.iter().position(|&a| a == algo)?;
        self.rows.iter().find(|(name, _)| name == dataset)?.1[col]
    }

    /// Column means over the rows where a value exists.
    pub fn column_means(&self) -> Vec<Option<f64>> {
        (0..self.algorithms.len())
            .map(|col| {
                let present: Vec<f64> = self.rows.iter().filter_map(|(_, vals)| vals[col]).collect();
                (!present.is_empty()).then(|| present.iter().sum::<f64>() / present.len() as f64)
            })
            .collect()
    }

    fn with_average(&self) -> Vec<(String, Vec<Option<f64>>)> {
        let mut rows = self.rows.clone();
        rows.push((AVERAGE_ROW.to_owned(), self.column_means()));
        rows
    }

    fn write_csv(&self, out: &mut impl Write, include_average: bool) -> std::io::Result<()> {
        write!(out, "dataset")?;
        for a in &self.algorithms {
            write!(out, ",{a}")?;
        }
        writeln!(out)?;
        let rows = if include_average { self.with_average() } else { self.rows.clone() };
        for (name, values) in rows {
            write!(out, "{name}")?;
            for v in values {
                match v {
                    Some(v) => write!(out, ",{v}")?,
                    None => write!(out, ",")?,
                }
            }
            writeln!(out)?;
        }
        Ok(())
    }

    fn row_json(&self, values: &[Option<f64>]) -> Value {
        let mut map = Map::new();
        for (a, v) in self.algorithms.iter().zip(values) {
            map.insert(a.to_string(), v.map_or(Value::Null, |v| json!(v)));
        }
        Value::Object(map)
    }

    pub fn render(&self, include_average: bool) -> String {
        let mut text = format!("{:<16}", "dataset");
        for a in &self.algorithms {
            text.push_str(&format!(" {:>8}", a.as_str()));
        }
        text.push('\n');
        let rows = if include_average { self.with_average() } else { self.rows.clone() };
        for (name, values) in rows {
            text.push_str(&format!("{name:<16}"));
            for v in values {
                match v {
                    Some(v) => text.push_str(&format!(" {v:>8.4}")),
                    None => text.push_str(&format!(" {:>8}", "n/a")),
                }
            }
            text.push('\n');
        }
        text
    }
}

/// Robustness R per dataset and algorithm; also writes each removal curve.
pub fn cmd_robustness(config: &RunConfig) -> Result<ResultTable, CliError> {
    let inputs = load_all(config)?;
    prepare_out_dir(config)?;
    let mut table = ResultTable::new(&config.algorithms);
    for input in &inputs {
        let g = &input.graph;
        if !is_connected(g) {
            return Err(CliError::Algorithm(wem_core::Error::Disconnected {
                components: wem_core::graph::connected_components(g).len(),
            }));
        }
        let mut values = Vec::with_capacity(config.algorithms.len());
        for &algo in &config.algorithms {
            let ranking = rank_with(g, algo, config.mode)?;
            let curve = connectivity_curve(g, &ranking)?;
            let path = out_path(config, &format!("{}_robustness_{algo}", input.name));
            write_file(&path, |out| match config.format {
                OutputFormat::Csv => curve.write_csv(g, out),
                OutputFormat::Json => curve.write_json(g, out),
            })?;
            values.push(Some(curve.robustness));
        }
        table.rows.push((input.name.clone(), values));
    }

    let path = out_path(config, "robustness_summary");
    write_file(&path, |out| match config.format {
        OutputFormat::Csv => Ok(table.write_csv(out, false)?),
        OutputFormat::Json => {
            let datasets: Vec<Value> =
                table.rows.iter().map(|(name, vals)| json!({ "dataset": name, "R": table.row_json(vals) })).collect();
            write_json_value(out, &json!({ "datasets": datasets }))
        }
    })?;
    Ok(table)
}

/// Kendall correlations against the SIR ground truth, one table per requested variant.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub variant: TauVariant,
    pub table: ResultTable,
    /// Transmission rate used for each dataset, in row order.
    pub betas: Vec<f64>,
}

pub fn variant_name(variant: TauVariant) -> &'static str {
    match variant {
        TauVariant::A => "tau_a",
        TauVariant::B => "tau_b",
    }
}

fn write_sir_scores(
    path: &Path,
    g: &WeightedGraph,
    outcomes: &[SirOutcome],
    format: OutputFormat,
) -> Result<(), CliError> {
    let ranking = ranking_from_outcomes(outcomes)?;
    write_file(path, |out| match format {
        OutputFormat::Csv => {
            writeln!(out, "node,mean_outbreak,rank")?;
            for e in ranking.entries() {
                writeln!(out, "{},{},{}", g.label(e.node), e.score, e.rank)?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = ranking
                .entries()
                .iter()
                .map(|e| json!({ "node": g.label(e.node), "mean_outbreak": e.score, "rank": e.rank }))
                .collect();
            write_json_value(out, &rows)
        }
    })
}

fn write_sir_runs(path: &Path, g: &WeightedGraph, outcomes: &[SirOutcome]) -> Result<(), CliError> {
    write_file(path, |out| {
        writeln!(out, "node,run,size")?;
        for o in outcomes {
            for (run, size) in o.outbreak_sizes.iter().enumerate() {
                writeln!(out, "{},{run},{size}", g.label(o.seed_node))?;
            }
        }
        Ok(())
    })
}

pub fn cmd_sir_eval(config: &RunConfig) -> Result<Vec<CorrelationReport>, CliError> {
    let inputs = load_all(config)?;
    prepare_out_dir(config)?;
    let mut reports: Vec<CorrelationReport> = config
        .tau
        .iter()
        .map(|&variant| CorrelationReport { variant, table: ResultTable::new(&config.algorithms), betas: Vec::new() })
        .collect();

    for input in &inputs {
        let g = &input.graph;
        let stats = graph_stats(g)?;
        let params: SirParams = config.sir.clone().calibrated(&stats)?;
        let outcomes = sir_outcomes(g, &params)?;
        let truth = ranking_from_outcomes(&outcomes)?;

        write_sir_scores(&out_path(config, &format!("{}_sir", input.name)), g, &outcomes, config.format)?;
        if config.dump_runs {
            write_sir_runs(&config.out_dir.join(format!("{}_sir_runs.csv", input.name)), g, &outcomes)?;
        }

        let rankings = config
            .algorithms
            .iter()
            .map(|&algo| rank_with(g, algo, config.mode))
            .collect::<wem_core::Result<Vec<_>>>()?;
        for report in &mut reports {
            // an all-tied ranking has no defined tau_b; it is reported as missing
            let values = rankings.iter().map(|r| ranking_correlation(r, &truth, report.variant).ok()).collect();
            report.table.rows.push((input.name.clone(), values));
            report.betas.push(params.beta);
        }
    }

    for report in &reports {
        let path = out_path(config, &format!("correlation_{}", variant_name(report.variant)));
        write_file(&path, |out| match config.format {
            OutputFormat::Csv => Ok(report.table.write_csv(out, true)?),
            OutputFormat::Json => {
                let datasets: Vec<Value> = report
                    .table
                    .rows
                    .iter()
                    .zip(&report.betas)
                    .map(|((name, vals), beta)| {
                        json!({ "dataset": name, "beta": beta, "values": report.table.row_json(vals) })
                    })
                    .collect();
                let value = json!({
                    "variant": variant_name(report.variant),
                    "runs": config.sir.runs,
                    "beta_multiplier": config.sir.threshold_multiplier,
                    "recovery_prob": config.sir.recovery_prob,
                    "seed": config.sir.rng_seed,
                    "datasets": datasets,
                    "average": report.table.row_json(&report.table.column_means()),
                });
                write_json_value(out, &value)
            }
        })?;
    }
    Ok(reports)
}
