//! Command-line front end: `run`, `decompose` and `report`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::experiments::{error_traces, heatmap, median_band, run_ensemble, RunConfig, RunRecord};
use crate::pauli_algebra::{decompose_hermitian, hermitian_split, DenseHermitian};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "vme", version, about = "Variational matrix elements in a Hamiltonian eigenbasis")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run an ensemble and write runs, summaries and a manifest.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long = "bin-width")]
        bin_width: Option<f64>,
    },
    /// Print the Pauli decomposition and real/imaginary split of a matrix.
    Decompose {
        #[arg(long)]
        config: PathBuf,
    },
    /// Recompute summaries from an existing runs.json.
    Report {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long = "bin-width")]
        bin_width: Option<f64>,
    },
}

fn default_bin_width() -> f64 {
    0.2
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportOptions {
    #[serde(default)]
    pub heatmap: bool,
    #[serde(default = "default_bin_width")]
    pub bin_width: f64,
    #[serde(default)]
    pub heatmap_range: Option<(f64, f64)>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { heatmap: false, bin_width: default_bin_width(), heatmap_range: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfig {
    pub run: RunConfig,
    #[serde(default)]
    pub report: ReportOptions,
}

/// Contents of `runs.json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunsFile {
    pub targets: Vec<f64>,
    pub tolerance: f64,
    pub iterations: usize,
    pub records: Vec<RunRecord>,
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Config(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I: IntoIterator<Item = T>, T: Into<OsString> + Clone>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let res = match cli.cmd {
        Cmd::Run { config, out, seed, tolerance, bin_width } => cmd_run(&config, &out, seed, tolerance, bin_width),
        Cmd::Decompose { config } => cmd_decompose(&config).map(|s| print!("{s}")),
        Cmd::Report { config, out, tolerance, bin_width } => cmd_report(&config, out.as_deref(), tolerance, bin_width),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(e) => {
            match &e {
                CliError::Config(m) => eprintln!("error: {m}"),
                CliError::Io(m) => eprintln!("i/o error: {m}"),
            }
            e.code()
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("VME_THREADS") {
        let n: usize = v.parse().map_err(|_| CliError::Config(format!("VME_THREADS must be a positive integer, got {v:?}")))?;
        if n == 0 {
            return Err(CliError::Config("VME_THREADS must be positive".into()));
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Config(e.to_string()))
}

pub fn cmd_run(config: &Path, out: &Path, seed: Option<u64>, tolerance: Option<f64>, bin_width: Option<f64>) -> Result<(), CliError> {
    let mut cfg: CliConfig = parse(config)?;
    if let Some(s) = seed {
        cfg.run.seed = s;
    }
    if let Some(t) = tolerance {
        cfg.run.tolerance = t;
    }
    if let Some(w) = bin_width {
        cfg.report.bin_width = w;
        cfg.report.heatmap = true;
    }
    let ctx_targets = cfg.run.targets.clone();
    let records = thread_pool()?.install(|| run_ensemble(&cfg.run))?;
    let targets = match ctx_targets {
        Some(t) => t,
        None => crate::experiments::default_targets(&cfg.run.model, cfg.run.part)?,
    };
    fs::create_dir_all(out).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    let runs = RunsFile { targets, tolerance: cfg.run.tolerance, iterations: cfg.run.iterations, records };
    write(&out.join("runs.json"), &to_json(&runs))?;
    let mut files = vec!["runs.json".to_string()];
    let extra = write_reports(&runs, out, &cfg.report, &mut files)?;
    let manifest = serde_json::json!({
        "tool": "vme",
        "version": env!("CARGO_PKG_VERSION"),
        "created_unix": std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        "seed": cfg.run.seed,
        "config": cfg,
        "files": files,
        "n_runs": runs.records.len(),
        "unassigned": extra.unassigned,
        "failed": extra.failed,
        "heatmap_dropped": extra.dropped,
    });
    write(&out.join("manifest.json"), &to_json(&manifest))?;
    Ok(())
}

struct ReportStats {
    unassigned: usize,
    failed: usize,
    dropped: Option<Vec<u32>>,
}

fn fmt_target(t: f64) -> String {
    format!("{t}")
}

fn write_reports(runs: &RunsFile, out: &Path, opts: &ReportOptions, files: &mut Vec<String>) -> Result<ReportStats, CliError> {
    let summary = median_band(&runs.records, &runs.targets, runs.tolerance)?;
    let mut csv = String::from("iteration,group,median,p04,p96,count\n");
    for g in &summary.groups {
        for t in 0..g.f_value.median.len() {
            let _ = writeln!(csv, "{t},{},{},{},{},{}", fmt_target(g.target), g.f_value.median[t], g.f_value.low[t], g.f_value.high[t], g.count);
        }
    }
    write(&out.join("summary.csv"), &csv)?;
    write(&out.join("summary.json"), &to_json(&summary))?;
    let errors = error_traces(&runs.records, &runs.targets, runs.tolerance)?;
    let mut csv = String::from("iteration,group,median,p25,p75,count\n");
    for e in &errors {
        for t in 0..e.median.len() {
            let _ = writeln!(csv, "{t},{},{},{},{},{}", fmt_target(e.target), e.median[t], e.p25[t], e.p75[t], e.count);
        }
    }
    write(&out.join("errors.csv"), &csv)?;
    files.extend(["summary.csv", "summary.json", "errors.csv"].map(String::from));
    let mut dropped = None;
    if opts.heatmap {
        let hm = heatmap(&runs.records, opts.bin_width, opts.heatmap_range, runs.iterations + 1)?;
        let mut csv = String::from("iteration,bin_lo,bin_hi,count\n");
        for (t, row) in hm.counts.iter().enumerate() {
            for (b, n) in row.iter().enumerate() {
                let (lo, hi) = hm.bin_edges(b);
                let _ = writeln!(csv, "{t},{lo},{hi},{n}");
            }
        }
        write(&out.join("heatmap.csv"), &csv)?;
        files.push("heatmap.csv".into());
        dropped = Some(hm.dropped);
    }
    Ok(ReportStats { unassigned: summary.unassigned_count, failed: summary.failed_count, dropped })
}

#[derive(Serialize)]
struct DecomposeOutput {
    pauli_sum: crate::pauli_algebra::PauliSum,
    w_real: DenseHermitian,
    w_imag: DenseHermitian,
}

pub fn cmd_decompose(matrix: &Path) -> Result<String, CliError> {
    let m: DenseHermitian = parse(matrix)?;
    let pauli_sum = decompose_hermitian(&m)?;
    let (w_real, w_imag) = hermitian_split(&m)?;
    Ok(to_json(&DecomposeOutput { pauli_sum, w_real, w_imag }))
}

pub fn cmd_report(runs_path: &Path, out: Option<&Path>, tolerance: Option<f64>, bin_width: Option<f64>) -> Result<(), CliError> {
    let mut runs: RunsFile = parse(runs_path)?;
    if let Some(t) = tolerance {
        runs.tolerance = t;
    }
    let dir = match out {
        Some(d) => d.to_path_buf(),
        None => runs_path.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    fs::create_dir_all(&dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let opts = ReportOptions { heatmap: bin_width.is_some(), bin_width: bin_width.unwrap_or_else(default_bin_width), heatmap_range: None };
    let mut files = Vec::new();
    write_reports(&runs, &dir, &opts, &mut files)?;
    Ok(())
}
