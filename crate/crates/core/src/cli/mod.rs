//! The `lehmerk` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure or oracle
//! mismatch, 3 I/O error.

pub mod config;
pub mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classify::{classify_range, ClassifyOptions};
use crate::error::Error;
use crate::field::QuadraticField;
use crate::rational::RationalValue;
use crate::residue::{phi_oracle, TotientEngine};
use crate::splitting::splitting_type;
use crate::theorems::{crt_suite, ratio_scan, run_suite, zeta_bounds, Suite, SuiteOptions};

pub use config::{OutputFormat, RunConfig, ORACLE_CAP_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lehmerk",
    version,
    about = "Generalized Euler totient over quadratic fields"
)]
pub struct Cli {
    /// key=value config file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print phi_K(d)
    Phi(PhiArgs),
    /// Classify every d in [2, max]
    Classify(ClassifyArgs),
    /// Splitting type of a prime, or of every prime up to --max
    Split(SplitArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Exhaustively check the CRT decomposition for one coprime pair
    Crt(CrtArgs),
    /// Squarefree multiples d of w with (d - 1) / phi(d) = l
    ScanRatio(ScanRatioArgs),
    /// Rational bracket for zeta(s)
    Zeta(ZetaArgs),
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<i64>,
    #[arg(long)]
    pub d: u64,
    /// Confirm against exhaustive enumeration when d is within the oracle cap
    #[arg(long)]
    pub check: bool,
    #[arg(long)]
    pub oracle_cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<i64>,
    #[arg(long = "max")]
    pub d_max: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub squarefree_only: bool,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<i64>,
    #[arg(long, conflicts_with = "max", required_unless_present = "max")]
    pub p: Option<u64>,
    #[arg(long)]
    pub max: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`
    #[arg(long)]
    pub suite: String,
    /// Field radicand, or `all` for every whitelisted field
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<String>,
    #[arg(long = "max")]
    pub bound: Option<u64>,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub oracle_cap: Option<u64>,
    /// Largest modulus for exhaustive sub-checks inside mixed suites
    #[arg(long, default_value_t = 60)]
    pub oracle_bound: u64,
}

#[derive(Debug, Args)]
pub struct CrtArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<i64>,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub oracle_cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ScanRatioArgs {
    #[arg(long)]
    pub w: u64,
    /// Target ratio as num/den
    #[arg(long, allow_hyphen_values = true)]
    pub l: RationalValue,
    #[arg(long = "max")]
    pub bound: u64,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long, default_value_t = 2)]
    pub s: u32,
    #[arg(long, default_value = "1/100")]
    pub tol: RationalValue,
    /// Print the exact rational endpoints
    #[arg(long)]
    pub exact: bool,
}

enum Failure {
    Usage(String),
    Mismatch,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let cfg = match RunConfig::load(cli.config.as_deref()) {
        Ok(cfg) => cfg,
        Err(config::ConfigError::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_IO;
        }
        Err(config::ConfigError::Invalid(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Phi(a) => cmd_phi(a, &cfg, out),
        Command::Classify(a) => cmd_classify(a, cfg, out),
        Command::Split(a) => cmd_split(a, &cfg, out),
        Command::Verify(a) => cmd_verify(a, &cfg, out),
        Command::Crt(a) => cmd_crt(a, &cfg, out),
        Command::ScanRatio(a) => cmd_scan_ratio(a, &cfg, out),
        Command::Zeta(a) => cmd_zeta(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn resolve_field(
    flag: Option<i64>,
    cfg: &RunConfig,
) -> std::result::Result<QuadraticField, Failure> {
    let m = flag
        .or(cfg.field_m)
        .ok_or_else(|| Failure::Usage("--field is required".into()))?;
    Ok(QuadraticField::new(m)?)
}

fn cmd_phi(a: PhiArgs, cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let field = resolve_field(a.field, cfg)?;
    let value = TotientEngine::new(field).phi_fast(a.d)?;
    writeln!(out, "{value}")?;
    if a.check {
        let cap = a.oracle_cap.unwrap_or(cfg.oracle_cap);
        if a.d > cap {
            writeln!(out, "oracle skipped: d = {} exceeds cap {cap}", a.d)?;
        } else {
            let oracle = phi_oracle(field, a.d, cap)?;
            if oracle != value {
                writeln!(out, "oracle MISMATCH: enumeration gives {oracle}")?;
                return Err(Failure::Mismatch);
            }
            writeln!(out, "oracle OK")?;
        }
    }
    Ok(())
}

fn cmd_classify(a: ClassifyArgs, mut cfg: RunConfig, out: &mut dyn Write) -> CmdResult {
    let field = resolve_field(a.field, &cfg)?;
    let d_max = a
        .d_max
        .or(cfg.d_max)
        .ok_or_else(|| Failure::Usage("--max is required".into()))?;
    if let Some(f) = a.format {
        cfg.output_format = f;
    }
    if let Some(p) = a.out {
        cfg.output_path = Some(p);
    }
    if let Some(t) = a.threads {
        cfg.threads = t;
    }
    cfg.squarefree_only |= a.squarefree_only;
    if cfg.threads == 0 {
        return Err(Failure::Usage("--threads must be positive".into()));
    }
    let opts = ClassifyOptions {
        squarefree_only: cfg.squarefree_only,
        threads: cfg.threads,
    };
    let records = classify_range(field, d_max, &opts)?;
    match &cfg.output_path {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            output::write_records(&mut w, cfg.output_format, &records)?;
            w.flush()?;
        }
        None => output::write_records(out, cfg.output_format, &records)?,
    }
    Ok(())
}

fn cmd_split(a: SplitArgs, cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let field = resolve_field(a.field, cfg)?;
    match (a.p, a.max) {
        (Some(p), _) => writeln!(out, "{}", splitting_type(field, p)?)?,
        (None, Some(max)) => {
            for p in (2..=max).filter(|&p| crate::arith::is_prime(p)) {
                writeln!(out, "{p},{}", splitting_type(field, p)?)?;
            }
        }
        (None, None) => unreachable!("clap requires one of --p / --max"),
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs, cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse()?]
    };
    let fields: Vec<QuadraticField> = match a.field.as_deref() {
        Some("all") => QuadraticField::whitelist().collect(),
        Some(m) => {
            let m: i64 = m
                .parse()
                .map_err(|_| Failure::Usage(format!("bad field `{m}`")))?;
            vec![QuadraticField::new(m)?]
        }
        None => vec![resolve_field(None, cfg)?],
    };
    let bound = a
        .bound
        .or(cfg.d_max)
        .ok_or_else(|| Failure::Usage("--max is required".into()))?;
    let opts = SuiteOptions {
        threads: a.threads.unwrap_or(cfg.threads).max(1),
        oracle_cap: a.oracle_cap.unwrap_or(cfg.oracle_cap),
        oracle_bound: a.oracle_bound,
    };
    let mut failed = false;
    for suite in &suites {
        for &field in &fields {
            let report = match run_suite(*suite, field, bound, &opts) {
                Err(Error::DegreeOne) if fields.len() > 1 || suites.len() > 1 => continue,
                r => r?,
            };
            write!(out, "{report}")?;
            failed |= !report.passed();
        }
    }
    if failed {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn cmd_crt(a: CrtArgs, cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let field = resolve_field(a.field, cfg)?;
    let opts = SuiteOptions {
        oracle_cap: a.oracle_cap.unwrap_or(cfg.oracle_cap),
        ..SuiteOptions::default()
    };
    let report = crt_suite(field, a.m, a.n, &opts)?;
    write!(out, "{report}")?;
    if !report.passed() {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn cmd_scan_ratio(a: ScanRatioArgs, cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let threads = a.threads.unwrap_or(cfg.threads).max(1);
    let scan = ratio_scan(a.w, &a.l, a.bound, threads)?;
    for d in &scan.matches {
        writeln!(out, "{d}")?;
    }
    writeln!(out, "hypothesis l < w/phi(w): {}", scan.hypothesis_holds)?;
    Ok(())
}

fn cmd_zeta(a: ZetaArgs, out: &mut dyn Write) -> CmdResult {
    let z = zeta_bounds(a.s, &a.tol)?;
    writeln!(
        out,
        "zeta({}) in [{:.10}, {:.10}] from {} terms",
        z.s,
        z.lower.to_f64(),
        z.upper.to_f64(),
        z.terms
    )?;
    if a.exact {
        writeln!(out, "lower = {}", z.lower)?;
        writeln!(out, "upper = {}", z.upper)?;
    }
    writeln!(
        out,
        "certified < 2: {}",
        z.upper < RationalValue::integer(2)
    )?;
    Ok(())
}
