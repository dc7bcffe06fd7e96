//! Batch front end behind the `betabound` binary.
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid configuration,
//! 3 output could not be written. Every flag can also be set through an
//! environment variable with the `BETABOUND_` prefix.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::catalogue::catalogue;
use crate::digits::PrintedPrefix;
use crate::exact::{format_rational, int, parse_rational, rat, Rational};
use crate::proof::{
    self, big_g, g, new_bound, positivity_status, remark_sandwich, ProofReport, ReplayConfig, Status,
    SweepSummary, CSV_HEADER,
};
use crate::sign::{self, Interval, SignError};
use crate::special::{self, Constants, Hp, Precision};

pub const ENV_PREFIX: &str = "BETABOUND_";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "betabound", version, about = "Replay and audit a sharp lower bound for the beta function on (0,1]^2")]
pub struct Cli {
    /// Working precision in decimal digits (at least 30).
    #[arg(long, global = true, env = "BETABOUND_PRECISION", default_value_t = 50)]
    pub precision: u32,
    /// Grid size n for `sweep`: cells (i/n, j/n), 1 <= i, j <= n.
    #[arg(long, global = true, env = "BETABOUND_GRID", default_value_t = 1000, allow_negative_numbers = true)]
    pub grid: i64,
    /// Width of the root enclosures, as a decimal or a fraction.
    #[arg(long, global = true, env = "BETABOUND_WIDTH", default_value = "1e-6")]
    pub width: String,
    /// Write the output here instead of standard output.
    #[arg(long, global = true, env = "BETABOUND_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "BETABOUND_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Replay every step of the proof.
    Replay,
    /// Isolate the roots x1..x5 of q1..q5 and check the quoted digits.
    Roots,
    /// Reproduce the quoted constants.
    Constants,
    /// Compare B(x, y) with the new bound and the earlier bounds at one point.
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        x: String,
        #[arg(long, allow_negative_numbers = true)]
        y: String,
    },
    /// Evaluate all bounds on the n x n grid.
    Sweep,
}

/// Validated run settings.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub precision_digits: u32,
    pub grid_n: i64,
    #[serde(serialize_with = "as_fraction")]
    pub enclosure_width: Rational,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

fn as_fraction<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_digits: 50,
            grid_n: 1000,
            enclosure_width: sign::default_width(),
            output_path: None,
            format: Format::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.precision_digits < 30 {
            return Err(CliError::Config("precision must be >= 30".into()));
        }
        if self.grid_n < 2 {
            return Err(CliError::Config("grid_n must be >= 2".into()));
        }
        if self.enclosure_width <= int(0) {
            return Err(CliError::Config("enclosure width must be > 0".into()));
        }
        Ok(())
    }

    pub fn precision(&self) -> Precision {
        Precision::digits(self.precision_digits)
    }

    fn replay(&self) -> ReplayConfig {
        ReplayConfig { prec: self.precision(), width: self.enclosure_width.clone() }
    }
}

impl TryFrom<&Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: &Cli) -> Result<Self, CliError> {
        let width = parse_rational(&cli.width).map_err(|e| CliError::Config(format!("--width: {e}")))?;
        let config = RunConfig {
            precision_digits: cli.precision,
            grid_n: cli.grid,
            enclosure_width: width,
            output_path: cli.out.clone(),
            format: cli.format,
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io(_) => EXIT_IO,
            CliError::Failed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl From<proof::ProofError> for CliError {
    fn from(e: proof::ProofError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<special::SpecialError> for CliError {
    fn from(e: special::SpecialError) -> Self {
        CliError::Failed(e.to_string())
    }
}

/// Parse arguments, run the command and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let result = RunConfig::try_from(&cli).and_then(|config| dispatch(&cli.command, &config));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("betabound: {e}");
            e.exit_code()
        }
    }
}

pub fn dispatch(command: &Command, config: &RunConfig) -> Result<i32, CliError> {
    match command {
        Command::Replay => cmd_replay(config),
        Command::Roots => cmd_roots(config),
        Command::Constants => cmd_constants(config),
        Command::Bounds { x, y } => cmd_bounds(config, x, y),
        Command::Sweep => cmd_sweep(config),
    }
}

fn open_output(config: &RunConfig) -> Result<Box<dyn Write>, CliError> {
    Ok(match &config.output_path {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Wrap a report in the metadata envelope. The envelope carries no clock
/// readings, so identical runs produce identical bytes.
fn envelope(command: &str, config: &RunConfig, report: impl Serialize) -> serde_json::Value {
    json!({
        "metadata": {
            "tool": "betabound",
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "config": config,
        },
        "report": report,
    })
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn code_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn cmd_replay(config: &RunConfig) -> Result<i32, CliError> {
    let steps = proof::replay_all(&config.replay());
    let report = ProofReport::new(config.precision(), config.enclosure_width.clone(), steps);
    let mut out = open_output(config)?;
    match config.format {
        Format::Json => write_json(&mut out, &envelope("replay", config, &report))?,
        Format::Csv => {
            writeln!(out, "id,method,status")?;
            for s in &report.steps {
                let method = serde_json::to_value(s.method).map_err(io::Error::from)?;
                writeln!(out, "{},{},{}", s.id, method.as_str().unwrap_or_default(), s.status)?;
            }
        }
        Format::Text => {
            for s in &report.steps {
                writeln!(out, "{:<13} {}", s.status, s.id)?;
                if let (Some(v), Some(p)) = (s.evidence.get("value"), s.evidence.get("printed")) {
                    writeln!(out, "              computed {v}  printed {p}")?;
                }
                if let Some(note) = s.evidence.get("note") {
                    writeln!(out, "              {note}")?;
                }
            }
            let sm = &report.summary;
            writeln!(out, "verified {}, failed {}, inconclusive {}", sm.verified, sm.failed, sm.inconclusive)?;
        }
    }
    out.flush()?;
    let bad = report.not_verified();
    if !bad.is_empty() {
        let ids: Vec<_> = bad.iter().map(|s| format!("{} ({})", s.id, s.status)).collect();
        eprintln!("betabound: steps not verified: {}", ids.join(", "));
    }
    Ok(code_for(report.all_verified()))
}

/// Enclosure of one root together with the digit check.
#[derive(Clone, Debug, Serialize)]
pub struct RootEnclosure {
    pub index: usize,
    #[serde(serialize_with = "as_fraction")]
    pub lo: Rational,
    #[serde(serialize_with = "as_fraction")]
    pub hi: Rational,
    pub lo_decimal: f64,
    pub hi_decimal: f64,
    pub printed: String,
    pub prefix_consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootsReport {
    pub roots: Vec<RootEnclosure>,
    /// `None` when the enclosures are too wide to decide.
    pub ordering_verified: Option<bool>,
}

pub const ROOT_PREFIXES: [&str; 5] = ["0.03733", "0.2114", "0.3085", "0.3822", "0.4439"];

pub fn isolate_roots(width: &Rational) -> Result<RootsReport, SignError> {
    let cat = catalogue();
    let (lo, hi) = (int(0), rat(1, 2));
    let mut roots = Vec::new();
    for (k, printed) in ROOT_PREFIXES.iter().enumerate() {
        let enc: Interval = sign::isolate_crossing(&cat.q[k + 1], &lo, &hi, width)?;
        let prefix = PrintedPrefix::parse(printed).expect("literal prefix");
        roots.push(RootEnclosure {
            index: k + 1,
            lo_decimal: crate::exact::to_f64(&enc.lo),
            hi_decimal: crate::exact::to_f64(&enc.hi),
            prefix_consistent: prefix.consistent_with_interval(&enc),
            lo: enc.lo,
            hi: enc.hi,
            printed: format!("{printed}..."),
        });
    }
    let ordering_verified = match sign::verify_root_ordering(&cat.q[1..], &lo, &hi, width) {
        Ok(ok) => Some(ok),
        Err(SignError::RefineWidth(..)) => None,
        Err(e) => return Err(e),
    };
    Ok(RootsReport { roots, ordering_verified })
}

pub fn cmd_roots(config: &RunConfig) -> Result<i32, CliError> {
    let report = isolate_roots(&config.enclosure_width).map_err(|e| CliError::Failed(e.to_string()))?;
    let mut out = open_output(config)?;
    match config.format {
        Format::Json => write_json(&mut out, &envelope("roots", config, &report))?,
        Format::Csv => {
            writeln!(out, "root,lo,hi,printed,prefix_consistent")?;
            for r in &report.roots {
                writeln!(out, "x{},{},{},{},{}", r.index, format_rational(&r.lo), format_rational(&r.hi), r.printed, r.prefix_consistent)?;
            }
        }
        Format::Text => {
            for r in &report.roots {
                writeln!(
                    out,
                    "x{} in [{:.10}, {:.10}]  printed {}  {}",
                    r.index,
                    r.lo_decimal,
                    r.hi_decimal,
                    r.printed,
                    if r.prefix_consistent { "ok" } else { "MISMATCH" }
                )?;
            }
            match report.ordering_verified {
                Some(true) => writeln!(out, "x1 < x2 < x3 < x4 < x5 verified")?,
                Some(false) => writeln!(out, "root ordering FAILED")?,
                None => writeln!(out, "ordering unverified at this width")?,
            }
        }
    }
    out.flush()?;
    if report.ordering_verified.is_none() {
        eprintln!("betabound: warning: ordering unverified at this width");
    }
    let digits_ok = report.roots.iter().all(|r| r.prefix_consistent);
    Ok(code_for(digits_ok && report.ordering_verified != Some(false)))
}

/// A computed constant next to its quoted prefix.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantCheck {
    pub name: &'static str,
    pub value: String,
    pub printed: String,
    pub truncation_matches: bool,
    pub within_one_ulp: bool,
}

impl ConstantCheck {
    /// `sig` is the number of significant digits worth showing.
    fn new(name: &'static str, printed: &str, value: &Hp, sig: usize) -> Self {
        let prefix = PrintedPrefix::parse(printed).expect("literal prefix");
        ConstantCheck {
            name,
            value: value.to_sci_string(sig),
            printed: prefix.to_string(),
            truncation_matches: prefix.truncation_matches(value),
            within_one_ulp: prefix.within_one_ulp(value),
        }
    }
}

/// Digits shown for constants computed to the working precision.
const SHOWN_DIGITS: usize = 25;
/// `a3` comes from a bisection stopped at width `1e-15`.
const A3_DIGITS: usize = 15;

/// Every quoted transcendental constant, recomputed at `prec`.
pub fn printed_constants(prec: Precision) -> Result<Vec<ConstantCheck>, CliError> {
    let c = Constants::compute(prec)?;
    let fifth = Hp::from_ratio(1, 5, prec);
    let nine = Hp::from_ratio(9, 25, prec);
    let zero = Hp::zero(prec);
    Ok(vec![
        ConstantCheck::new("alpha", "2.57973", &c.alpha, SHOWN_DIGITS),
        ConstantCheck::new("a1", "0.79003", &c.a1, SHOWN_DIGITS),
        ConstantCheck::new("a2", "0.47053", &c.a2, SHOWN_DIGITS),
        ConstantCheck::new("a3", "0.43218", &c.a3, A3_DIGITS),
        ConstantCheck::new("alzer_max", "0.08731", &c.alzer_max, SHOWN_DIGITS),
        ConstantCheck::new("g(1/5)", "0.001914", &g(&fifth)?, SHOWN_DIGITS),
        ConstantCheck::new("G(0,9/25)", "0.0554", &big_g(&zero, &nine)?, SHOWN_DIGITS),
        ConstantCheck::new("G(1/5,9/25)", "0.04015", &big_g(&fifth, &nine)?, SHOWN_DIGITS),
    ])
}

pub fn cmd_constants(config: &RunConfig) -> Result<i32, CliError> {
    let checks = printed_constants(config.precision())?;
    let mut out = open_output(config)?;
    match config.format {
        Format::Json => write_json(&mut out, &envelope("constants", config, &checks))?,
        Format::Csv => {
            writeln!(out, "name,value,printed,truncation_matches,within_one_ulp")?;
            for c in &checks {
                writeln!(out, "{},{},{},{},{}", c.name, c.value, c.printed, c.truncation_matches, c.within_one_ulp)?;
            }
        }
        Format::Text => {
            for c in &checks {
                let mark = if c.within_one_ulp { "ok" } else { "MISMATCH" };
                writeln!(out, "{:<12} {}  printed {}  {}", c.name, c.value, c.printed, mark)?;
            }
        }
    }
    out.flush()?;
    Ok(code_for(checks.iter().all(|c| c.within_one_ulp)))
}

#[derive(Clone, Debug, Serialize)]
pub struct PointBounds {
    pub x: String,
    pub y: String,
    pub beta: String,
    pub new_bound: String,
    pub ivady_lower: String,
    pub ivady_upper: String,
    pub alzer_lower: String,
    pub alzer_upper: String,
    pub margin_new: String,
    pub margin_status: Status,
    pub remark_holds: bool,
}

pub fn point_bounds(x: &Rational, y: &Rational, prec: Precision) -> Result<PointBounds, CliError> {
    let zero = int(0);
    let one = int(1);
    if *x <= zero || *x > one || *y <= zero || *y > one {
        return Err(CliError::Config("x and y must lie in (0, 1]".into()));
    }
    let (hx, hy) = (Hp::from_rational(x, prec), Hp::from_rational(y, prec));
    let remark = remark_sandwich(&hx, &hy)?;
    let p = &hx * &hy;
    let s = &hx + &hy;
    let damp = (Hp::one(prec) - &hx) * (Hp::one(prec) - &hy) / ((&hx + 1) * (&hy + 1));
    let alpha = special::alpha(prec);
    let alzer_lower = (Hp::one(prec) - &alpha * &damp) / &p;
    let alzer_upper = (Hp::one(prec) - &damp) / &p;
    let ivady_upper = &s / (&p * (&p + 1));
    let margin = &remark.beta - new_bound(&hx, &hy);
    let fmt = |v: &Hp| v.to_sci_string(25);
    Ok(PointBounds {
        x: format_rational(x),
        y: format_rational(y),
        beta: fmt(&remark.beta),
        new_bound: fmt(&remark.new_bound),
        ivady_lower: fmt(&remark.ivady_lower),
        ivady_upper: fmt(&ivady_upper),
        alzer_lower: fmt(&alzer_lower),
        alzer_upper: fmt(&alzer_upper),
        margin_new: fmt(&margin),
        margin_status: positivity_status(&margin),
        remark_holds: remark.holds,
    })
}

pub fn cmd_bounds(config: &RunConfig, x: &str, y: &str) -> Result<i32, CliError> {
    let parse = |flag: &str, s: &str| parse_rational(s).map_err(|e| CliError::Config(format!("--{flag}: {e}")));
    let b = point_bounds(&parse("x", x)?, &parse("y", y)?, config.precision())?;
    let mut out = open_output(config)?;
    let rows = [
        ("beta", &b.beta),
        ("new_bound", &b.new_bound),
        ("ivady_lower", &b.ivady_lower),
        ("ivady_upper", &b.ivady_upper),
        ("alzer_lower", &b.alzer_lower),
        ("alzer_upper", &b.alzer_upper),
        ("margin_new", &b.margin_new),
    ];
    match config.format {
        Format::Json => write_json(&mut out, &envelope("bounds", config, &b))?,
        Format::Csv => {
            writeln!(out, "quantity,value")?;
            for (k, v) in rows {
                writeln!(out, "{k},{v}")?;
            }
        }
        Format::Text => {
            writeln!(out, "x = {}, y = {}", b.x, b.y)?;
            for (k, v) in rows {
                writeln!(out, "{k:<12} {v}")?;
            }
            writeln!(out, "margin {}; remark ordering {}", b.margin_status, if b.remark_holds { "holds" } else { "FAILS" })?;
        }
    }
    out.flush()?;
    Ok(code_for(b.margin_status == Status::Verified && b.remark_holds))
}

fn summary_text(s: &SweepSummary) -> String {
    let line = |name: &str, m: &proof::MarginMin| {
        format!("{name:<22} {}  at ({}, {})\n", m.value.to_sci_string(20), format_rational(&m.x), format_rational(&m.y))
    };
    let mut text = format!("grid {} x {} ({} cells), alpha = {}\n", s.grid_n, s.grid_n, s.cells, s.alpha.to_sci_string(20));
    text += &line("min margin new", &s.min_margin_new);
    text += &line("min margin ivady low", &s.min_margin_ivady_lower);
    text += &line("min margin ivady up", &s.min_margin_ivady_upper);
    text += &line("min margin alzer low", &s.min_margin_alzer_lower);
    text += &line("min margin alzer up", &s.min_margin_alzer_upper);
    text += &format!("new bound above the ivady lower bound in {} cells\n", s.new_beats_ivady);
    text
}

pub fn cmd_sweep(config: &RunConfig) -> Result<i32, CliError> {
    let prec = config.precision();
    let mut out = open_output(config)?;
    let mut write_error: Option<io::Error> = None;
    let summary = if config.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
        proof::sweep_theorem(config.grid_n, prec, |row| {
            if write_error.is_none() {
                if let Err(e) = writeln!(out, "{}", row.csv_line()) {
                    write_error = Some(e);
                }
            }
        })?
    } else {
        proof::sweep_theorem(config.grid_n, prec, |_| {})?
    };
    if let Some(e) = write_error {
        return Err(e.into());
    }
    match config.format {
        Format::Json => write_json(&mut out, &envelope("sweep", config, &summary))?,
        Format::Csv => eprint!("{}", summary_text(&summary)),
        Format::Text => write!(out, "{}", summary_text(&summary))?,
    }
    out.flush()?;
    Ok(code_for(positivity_status(&summary.min_margin_new.value) == Status::Verified))
}
