//! Command-line orchestration: `isocx verify <suite>` runs cases in parallel,
//! gathers them in a fixed order, and writes a JSON or CSV report.

pub mod config;
pub mod report;
pub mod suites;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

pub use config::{Format, Suite, SuiteConfig, MAX_RMAX};
pub use report::{CaseRecord, Report};
pub use suites::{cases, closure_rings, Case, Outcome};

use crate::error::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "isocx", version, about = "Exact verification suites for isogeny complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one verification suite, or all of them.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Main,
    Gamma,
    Bar,
    Groups,
    Appendix,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    /// Prime to test; repeatable.
    #[arg(long = "p", value_name = "PRIME")]
    pub primes: Vec<u32>,
    #[arg(long, default_value_t = 4)]
    pub rmax: u32,
    /// Truncation order for power-series pairings.
    #[arg(long, default_value_t = 16)]
    pub trunc: usize,
    /// Sweep fields F_{p^d} for d = 1..=ext.
    #[arg(long, default_value_t = 2)]
    pub ext: u32,
    /// Torsion level M of the ambient group (ℤ/p^M)^2.
    #[arg(long)]
    pub torsion: Option<u32>,
    #[arg(long, default_value_t = 6)]
    pub mmax: u64,
    #[arg(long, env = "ISOCX_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0x150c)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Record elapsed milliseconds per case (reports are then not reproducible).
    #[arg(long)]
    pub timings: bool,
}

impl VerifyArgs {
    pub fn to_config(&self) -> SuiteConfig {
        let defaults = SuiteConfig::default();
        let suites = match self.suite {
            SuiteArg::Main => vec![Suite::Main],
            SuiteArg::Gamma => vec![Suite::Gamma],
            SuiteArg::Bar => vec![Suite::Bar],
            SuiteArg::Groups => vec![Suite::Groups],
            SuiteArg::Appendix => vec![Suite::Appendix],
            SuiteArg::All => Suite::ALL.to_vec(),
        };
        SuiteConfig {
            suites,
            primes: if self.primes.is_empty() { defaults.primes } else { self.primes.clone() },
            r_max: self.rmax,
            trunc: self.trunc,
            ext: self.ext,
            torsion: self.torsion,
            m_max: self.mmax,
            jobs: self.jobs,
            seed: self.seed,
            out: self.out.clone(),
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            },
            timings: self.timings,
        }
    }
}

fn run_case(c: &Case, timings: bool) -> CaseRecord {
    let start = Instant::now();
    let outcome = (c.run)();
    let millis = if timings { start.elapsed().as_millis() as u64 } else { 0 };
    let (dims, expected, computed, detail) = match outcome {
        Ok(o) => (o.dims, o.expected, o.computed, o.detail),
        Err(e) => (vec![], json!("no error"), json!({ "error": e.to_string() }), serde_json::Value::Null),
    };
    CaseRecord {
        suite: c.suite.name().to_string(),
        case: c.name.to_string(),
        params: c.params.clone(),
        dims,
        pass: expected == computed,
        expected,
        computed,
        millis,
        detail,
    }
}

/// Validates, then runs every selected case. Record order follows case order
/// whatever the number of workers.
pub fn run(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let all = cases(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let records = pool.install(|| all.par_iter().map(|c| run_case(c, config.timings)).collect());
    Ok(Report { records })
}

/// Full CLI behavior; returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let Command::Verify(args) = cli.command;
    let config = args.to_config();
    if let Err(e) = config.validate() {
        eprintln!("configuration error: {e}");
        return EXIT_CONFIG;
    }
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return EXIT_CONFIG;
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::File::create(path)
            .map_err(Error::from)
            .and_then(|f| report.write_to(config.format, std::io::BufWriter::new(f))),
        None => report.write_to(config.format, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("cannot write report: {e}");
        return EXIT_FAIL;
    }
    let failed: Vec<_> = report.failures().collect();
    for f in &failed {
        eprintln!("FAIL {} {} {}", f.suite, f.case, f.params);
    }
    eprintln!("{} cases, {} failed", report.records.len(), failed.len());
    if failed.is_empty() { EXIT_PASS } else { EXIT_FAIL }
}
