//! Command-line harness: `run`, `sweep` and `list`.
//!
//! Every run is computed before anything is written. Each output file is
//! written to a temporary file in the output directory and renamed into
//! place, so a failed invocation leaves no partial artifacts.
//!
//! Exit codes: 0 success, 2 usage error, 3 validation error, 4 runtime failure.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithms::Technique;
use crate::benchmarks::{catalog, lookup, Objective, SuggestedBounds};
use crate::error::Error;
use crate::hypercomplex::{self, HypercomplexConfig};
use crate::modelfile::{parse_model_file, schema_for, ModelFile};
use crate::search::{optimize, RunResult, SearchSpace};

#[derive(Debug, Parser)]
#[command(
    name = "natopt",
    version,
    about = "Nature-inspired metaheuristic optimization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one technique on one function from a model file.
    Run(RunArgs),
    /// Run every technique × function × seed combination.
    Sweep(SweepArgs),
    /// List techniques, their model-file schemas, and the function catalog.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Seeds as a list and/or inclusive ranges, e.g. `1..25` or `1,2,5..7`.
    #[arg(long, default_value = "1")]
    pub seeds: String,
    /// Search over k-coefficient hypercomplex tensors.
    #[arg(long)]
    pub hypercomplex_k: Option<usize>,
    #[arg(long, default_value = "natopt-out")]
    pub out: PathBuf,
    /// Summary file format; traces are always CSV.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub model: PathBuf,
    #[arg(long)]
    pub function: String,
    #[arg(long, default_value = "pso")]
    pub technique: String,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated technique ids, or `all`.
    #[arg(long)]
    pub techniques: String,
    /// Comma-separated function names.
    #[arg(long)]
    pub functions: String,
    #[arg(long, default_value_t = 20)]
    pub agents: usize,
    /// Decision variables; defaults to each function's own default.
    #[arg(long)]
    pub dimension: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub iterations: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// One fully resolved job list: a model per technique/function pair plus
/// the seeds to run it with.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub models: Vec<(ModelFile, &'static str)>,
    pub seeds: Vec<u64>,
    pub hypercomplex_k: Option<usize>,
    pub out: PathBuf,
    pub format: Format,
    pub jobs: usize,
}

/// Aggregate over the seeds of one technique/function/k combination.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub technique: Technique,
    pub function: String,
    /// `real` or the hypercomplex dimension.
    pub k: String,
    pub seeds: usize,
    pub best: f64,
    pub median: f64,
    pub worst: f64,
    pub mean_evaluations: f64,
    pub mean_elapsed: f64,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownFunction { .. } | Error::UnknownTechnique(_) => 2,
            Error::Io(_) => 4,
            _ => 3,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `1..25`, `1,2,5` or mixtures such as `1..3,9`.
pub fn parse_seeds(spec: &str) -> Result<Vec<u64>, String> {
    let mut seeds = Vec::new();
    for part in spec.split(',').map(str::trim) {
        let bad = || format!("invalid seed spec `{part}`");
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            seeds.extend(a..=b);
        } else {
            seeds.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(seeds)
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// Summarizes the runs of one combination.
pub fn summarize(results: &[RunResult]) -> SummaryRow {
    let mut fits: Vec<f64> = results.iter().map(|r| r.best_fitness).collect();
    fits.sort_by(f64::total_cmp);
    let n = results.len() as f64;
    SummaryRow {
        technique: results[0].technique,
        function: results[0].function.clone(),
        k: k_label(results[0].hypercomplex_k),
        seeds: results.len(),
        best: fits[0],
        median: median(&fits),
        worst: fits[fits.len() - 1],
        mean_evaluations: results.iter().map(|r| r.evaluations as f64).sum::<f64>() / n,
        mean_elapsed: results.iter().map(|r| r.elapsed).sum::<f64>() / n,
    }
}

fn k_label(k: Option<usize>) -> String {
    k.map_or_else(|| "real".to_string(), |k| k.to_string())
}

/// File name of one run's convergence trace.
pub fn trace_file_name(r: &RunResult) -> String {
    let k = r
        .hypercomplex_k
        .map_or_else(String::new, |k| format!("_k{k}"));
    format!("{}{k}_{}_seed{}.csv", r.technique, r.function, r.seed)
}

pub fn trace_csv(r: &RunResult) -> String {
    let mut s = String::from("iteration,gfit\n");
    for (i, g) in r.trace.iter().enumerate() {
        let _ = writeln!(s, "{},{g}", i + 1);
    }
    s
}

pub fn summary_text(rows: &[SummaryRow], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("summary rows serialize") + "\n",
        Format::Csv => {
            let mut s = String::from(
                "technique,function,k,seeds,best,median,worst,mean_evaluations,mean_elapsed\n",
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    r.technique,
                    r.function,
                    r.k,
                    r.seeds,
                    r.best,
                    r.median,
                    r.worst,
                    r.mean_evaluations,
                    r.mean_elapsed
                );
            }
            s
        }
    }
}

fn run_one(
    model: &ModelFile,
    f: &dyn Objective,
    k: Option<usize>,
    seed: u64,
) -> crate::Result<RunResult> {
    let space = SearchSpace::from_model(model)?;
    match k {
        Some(k) => hypercomplex::lift(space, f, k, seed),
        None => optimize(space, f, seed),
    }
}

/// Validates every job, then runs them all. Nothing is written.
pub fn execute(spec: &RunSpec) -> Result<(Vec<RunResult>, Vec<SummaryRow>), CliError> {
    if spec.seeds.is_empty() {
        return Err(CliError::usage("seed list is empty"));
    }
    if let Some(k) = spec.hypercomplex_k {
        HypercomplexConfig::new(k)?;
    }
    for (model, function) in &spec.models {
        if spec.hypercomplex_k.is_some() {
            hypercomplex::check_roster(model.technique)?;
        }
        let f = lookup(function)?;
        if !f.arity().accepts(model.n) {
            return Err(Error::Arity {
                function: function.to_string(),
                expected: f.default_dimension(),
                got: model.n,
            }
            .into());
        }
        let v = SearchSpace::from_model(model)?.check();
        if !v.is_valid() {
            return Err(Error::Validation(v).into());
        }
    }

    let jobs: Vec<(usize, u64)> = (0..spec.models.len())
        .flat_map(|i| spec.seeds.iter().map(move |&s| (i, s)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| CliError {
            code: 4,
            message: e.to_string(),
        })?;
    let results: Vec<RunResult> = pool.install(|| {
        jobs.par_iter()
            .map(|&(i, seed)| {
                let (model, function) = &spec.models[i];
                run_one(model, lookup(function)?, spec.hypercomplex_k, seed)
            })
            .collect::<crate::Result<_>>()
    })?;
    let rows = results.chunks(spec.seeds.len()).map(summarize).collect();
    Ok((results, rows))
}

fn write_atomic(dir: &Path, name: &str, contents: &str) -> std::io::Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(dir.join(name)).map_err(|e| e.error)?;
    Ok(())
}

/// Writes every trace and the summary file.
pub fn write_outputs(
    spec: &RunSpec,
    results: &[RunResult],
    rows: &[SummaryRow],
) -> std::io::Result<()> {
    fs::create_dir_all(&spec.out)?;
    for r in results {
        write_atomic(&spec.out, &trace_file_name(r), &trace_csv(r))?;
    }
    let name = match spec.format {
        Format::Csv => "summary.csv",
        Format::Json => "summary.json",
    };
    write_atomic(&spec.out, name, &summary_text(rows, spec.format))
}

fn common_spec(
    models: Vec<(ModelFile, &'static str)>,
    c: &CommonArgs,
) -> Result<RunSpec, CliError> {
    Ok(RunSpec {
        models,
        seeds: parse_seeds(&c.seeds).map_err(CliError::usage)?,
        hypercomplex_k: c.hypercomplex_k,
        out: c.out.clone(),
        format: c.format,
        jobs: c.jobs,
    })
}

fn technique(name: &str) -> Result<Technique, CliError> {
    name.parse::<Technique>()
        .map_err(|_| Error::UnknownTechnique(name.to_string()).into())
}

fn function_name(name: &str) -> Result<&'static str, CliError> {
    Ok(lookup(name)?.name())
}

pub fn run_spec(args: &RunArgs) -> Result<RunSpec, CliError> {
    let t = technique(&args.technique)?;
    let function = function_name(&args.function)?;
    let text = fs::read_to_string(&args.model).map_err(|e| CliError {
        code: 3,
        message: format!("cannot read {}: {e}", args.model.display()),
    })?;
    let model = parse_model_file(&text, t).map_err(Error::from)?;
    common_spec(vec![(model, function)], &args.common)
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect()
}

pub fn sweep_spec(args: &SweepArgs) -> Result<RunSpec, CliError> {
    let techniques: Vec<Technique> = if args.techniques.trim() == "all" {
        Technique::ALL.to_vec()
    } else {
        split_list(&args.techniques)
            .into_iter()
            .map(technique)
            .collect::<Result<_, _>>()?
    };
    let functions: Vec<&'static str> = split_list(&args.functions)
        .into_iter()
        .map(function_name)
        .collect::<Result<_, _>>()?;
    if techniques.is_empty() {
        return Err(CliError::usage("technique list is empty"));
    }
    if functions.is_empty() {
        return Err(CliError::usage("function list is empty"));
    }
    let mut models = Vec::new();
    for &t in &techniques {
        for &name in &functions {
            let f = lookup(name)?;
            let n = args.dimension.unwrap_or_else(|| f.default_dimension());
            let mut model = ModelFile::new(t, args.agents, n, args.iterations, 0.0, 1.0);
            model.bounds = f.suggested_bounds(n);
            models.push((model, name));
        }
    }
    common_spec(models, &args.common)
}

/// Human-readable catalog of techniques and functions.
pub fn list_text() -> String {
    let mut s = String::from("techniques:\n");
    for t in Technique::ALL {
        let lift = if t.supports_hypercomplex() {
            "hypercomplex"
        } else {
            "real only"
        };
        let _ = writeln!(s, "  {:<7} {:<52} [{lift}]", t.as_str(), t.full_name());
        let _ = writeln!(s, "          model file: {}", schema_for(t));
    }
    s.push_str("\nfunctions:\n");
    for b in catalog() {
        let bounds = match b.bounds() {
            SuggestedBounds::Uniform(lo, hi) if lo == -hi => format!("±{hi}"),
            SuggestedBounds::Uniform(lo, hi) => format!("[{lo}, {hi}]"),
            SuggestedBounds::PerVariable(v) => v
                .iter()
                .map(|(lo, hi)| format!("[{lo}, {hi}]"))
                .collect::<Vec<_>>()
                .join(" × "),
        };
        let n = b.default_dimension();
        let optimum = b
            .known_optimum(n)
            .map_or_else(|| "unknown".to_string(), |(_, f)| format!("{f} (n={n})"));
        let _ = writeln!(
            s,
            "  {:<16} arity {:<4} bounds {:<28} optimum {optimum}",
            b.name(),
            b.arity().to_string(),
            bounds
        );
    }
    s
}

/// Runs a parsed command line; returns the text for standard output.
pub fn dispatch(cli: &Cli) -> Result<String, CliError> {
    let spec = match &cli.command {
        Command::List => return Ok(list_text()),
        Command::Run(a) => run_spec(a)?,
        Command::Sweep(a) => sweep_spec(a)?,
    };
    let (results, rows) = execute(&spec)?;
    write_outputs(&spec, &results, &rows).map_err(|e| CliError::from(Error::Io(e)))?;
    Ok(summary_text(&rows, Format::Csv))
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
