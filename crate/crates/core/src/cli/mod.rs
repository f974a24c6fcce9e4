//! Command-line front end: config parsing, dispatch and report emission.
//!
//! Exit codes: 0 on success, 1 when a computation fails, 2 on configuration
//! errors, 3 when a check is violated (the engine, not the input, is wrong).

pub mod config;
pub mod modspec;
pub mod sweep;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::homology::{minimal_resolution, Resolution};
use crate::koszul::{build_periodicity_tower, gap_check, nakayama_report, symmetry_scan, GapVerdict};
use crate::rep::QuiverModule;
use config::{parse_algebra, RunConfig, SweepRanges, Validated};
use modspec::ModuleSpec;

#[derive(Debug, Parser)]
#[command(name = "nakayama-ext", version, about = "Exact Ext tables, syzygies and vanishing checks for bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// JSON config file; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Algebra as inline JSON or `@file`, e.g. {"kind":"circular_nakayama","t":3,"n":2}.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    #[arg(long = "field-p", global = true)]
    pub field_p: Option<u32>,
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<usize>,
    /// Source module specifier.
    #[arg(long, global = true)]
    pub module: Option<String>,
    /// Second module specifier.
    #[arg(long, global = true)]
    pub target: Option<String>,
    /// Number of top degrees inspected by the symmetry checks.
    #[arg(long, global = true)]
    pub tail: Option<usize>,
    /// Largest period searched for when building towers.
    #[arg(long, global = true)]
    pub window: Option<usize>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Inclusive range `lo..hi` of cycle lengths for `sweep`.
    #[arg(long = "t-range", global = true)]
    pub t_range: Option<String>,
    /// Inclusive range `lo..hi` of Loewy lengths minus one for `sweep`.
    #[arg(long = "n-range", global = true)]
    pub n_range: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Betti rows `degree,projective_index,multiplicity` of a minimal resolution.
    Resolve,
    /// `Ext^i(module, target)` for `1 <= i <= max-degree` as CSV.
    Ext,
    /// Vanishing-gap check for a pair, driven by the periodicity tower of `module`.
    Gaps,
    /// Tail vanishing of Ext in both directions.
    Symmetry,
    /// Full simple-module report for one circular Nakayama algebra.
    Report,
    /// `report` over a grid of `(t, n)`.
    Sweep,
}

#[derive(Debug)]
pub enum Failure {
    Config(String),
    Runtime(String),
    Violation(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Runtime(_) => 1,
            Failure::Config(_) => 2,
            Failure::Violation(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Runtime(m) | Failure::Violation(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::BadVertex { .. } => Failure::Config(e.to_string()),
            Error::Falsified(_) => Failure::Violation(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn read_arg(text: &str, what: &str) -> Result<String, Failure> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Config(format!("{what} {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Config(format!("bad range `{text}`, expected lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?))
}

impl Cli {
    /// Config file merged with flag overrides, then validated.
    pub fn resolve_config(&self) -> Result<Validated, Failure> {
        let file = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Config(format!("config {}: {e}", path.display())))?;
                RunConfig::from_json(&text)?
            }
            None => RunConfig::default(),
        };
        let sweep = match (&self.t_range, &self.n_range) {
            (None, None) => None,
            (Some(t), Some(n)) => Some(SweepRanges { t: parse_range(t)?, n: parse_range(n)? }),
            _ => return Err(Failure::Config("--t-range and --n-range go together".into())),
        };
        let flags = RunConfig {
            field_p: self.field_p,
            algebra: self.algebra.as_deref().map(|a| read_arg(a, "algebra").and_then(|t| Ok(parse_algebra(&t)?))).transpose()?,
            max_degree: self.max_degree,
            module: self.module.clone(),
            target: self.target.clone(),
            tail: self.tail,
            window: self.window,
            out: self.out.clone(),
            workers: self.workers,
            sweep,
        };
        Ok(file.merge(flags).validate()?)
    }
}

fn require_module(cfg: &Validated, spec: &Option<ModuleSpec>, flag: &str) -> Result<(String, QuiverModule), Failure> {
    let algebra = cfg.algebra.as_ref().ok_or_else(|| Failure::Config("--algebra is required".into()))?;
    let spec = spec.as_ref().ok_or_else(|| Failure::Config(format!("--{flag} is required; {}", modspec::GRAMMAR)))?;
    Ok((spec.to_string(), spec.build(algebra)?))
}

fn betti_csv(res: &Resolution) -> String {
    let mut out = String::from("degree,projective_index,multiplicity\n");
    for row in res.betti_rows() {
        writeln!(out, "{},{},{}", row.degree, row.projective_index, row.multiplicity).unwrap();
    }
    out
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

/// Output text for a command, plus a violation that should still fail the run.
struct Output {
    body: String,
    violation: Option<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, violation: None }
    }
}

fn execute(command: Command, cfg: &Validated) -> Result<Output, Failure> {
    let b = cfg.max_degree;
    match command {
        Command::Resolve => {
            let (_, m) = require_module(cfg, &cfg.module, "module")?;
            Ok(Output::ok(betti_csv(&minimal_resolution(&m, b))))
        }
        Command::Ext => {
            let (_, m) = require_module(cfg, &cfg.module, "module")?;
            let (_, n) = require_module(cfg, &cfg.target, "target")?;
            Ok(Output::ok(minimal_resolution(&m, b + 1).ext_table(&n, b)?.to_csv()))
        }
        Command::Gaps => {
            let (ml, m) = require_module(cfg, &cfg.module, "module")?;
            let (nl, n) = require_module(cfg, &cfg.target, "target")?;
            let window = cfg.window.unwrap_or(2 * m.algebra().vertex_count());
            let tower = build_periodicity_tower(&m, window)?.ok_or_else(|| {
                Failure::Runtime(format!("{ml} has no period within {window}; no tower to check against"))
            })?;
            let table = minimal_resolution(&m, b + 1).ext_table(&n, b)?;
            let report = gap_check(&table, &tower)?.labelled(&ml, &nl);
            let violation = (report.verdict == GapVerdict::Violation)
                .then(|| format!("gap violation for ({ml}, {nl})"));
            Ok(Output { body: to_json(&report), violation })
        }
        Command::Symmetry => {
            let (ml, m) = require_module(cfg, &cfg.module, "module")?;
            let (nl, n) = require_module(cfg, &cfg.target, "target")?;
            let tail = cfg.tail.unwrap_or((2 * m.algebra().vertex_count()).min(b));
            Ok(Output::ok(to_json(&symmetry_scan(&m, &n, b, tail)?.labelled(&ml, &nl))))
        }
        Command::Report => {
            let (t, n) = nakayama_cell(cfg)?;
            let report = nakayama_report(t, n, b, cfg.field, cfg.tail)?;
            let violation = (!report.violations.is_empty()).then(|| report.violations.join("; "));
            Ok(Output { body: to_json(&report), violation })
        }
        Command::Sweep => {
            let ranges = cfg.sweep.ok_or_else(|| {
                Failure::Config("sweep needs ranges: --t-range lo..hi --n-range lo..hi or a `sweep` config entry".into())
            })?;
            let report = sweep::run_sweep(ranges, b, cfg.field, cfg.tail, cfg.workers)?;
            let violations: Vec<String> = report.violations().collect();
            let violation = (!violations.is_empty()).then(|| violations.join("; "));
            Ok(Output { body: to_json(&report), violation })
        }
    }
}

fn nakayama_cell(cfg: &Validated) -> Result<(usize, usize), Failure> {
    cfg.algebra_spec
        .as_ref()
        .and_then(|a| a.nakayama_params())
        .ok_or_else(|| Failure::Config("report needs a circular_nakayama algebra".into()))
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_cli(&cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.exit_code()
        }
    }
}

pub fn run_cli(cli: &Cli) -> Result<(), Failure> {
    let cfg = cli.resolve_config()?;
    let output = execute(cli.command, &cfg)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, &output.body)
            .map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))?,
        None => print!("{}", output.body),
    }
    match output.violation {
        Some(v) => Err(Failure::Violation(v)),
        None => Ok(()),
    }
}
