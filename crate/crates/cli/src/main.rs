//! `cswigner`: point evaluation, figure grids, verification suites and zero-ellipse tables
//! for two-particle Calogero–Sutherland Wigner functions.
//!
//! Exit codes: 0 on success, 1 on flag misuse or I/O failure, 2 on numerical failure
//! (imaginary residue or quadrature non-convergence) or a failed verification suite.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cswigner::csm::omega_bar_from_pair;
use cswigner::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use cswigner::wigner::{grid_eval, zero_ellipses};
use cswigner::{Error, GridSpec64, Kind, Method, PhasePoint64, Preset, WignerSpec64};

use output::{write_csv, write_json, OutputDoc, ParamsEcho};

#[derive(Parser, Debug)]
#[command(name = "cswigner", version, about = "Wigner functions of the two-particle Calogero-Sutherland model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one Wigner function at a single phase-space point.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Sample a Wigner function on a rectangular grid and write CSV or JSON.
    #[command(allow_negative_numbers = true)]
    Grid(GridArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Tabulate the zero ellipses of the large-order form.
    #[command(allow_negative_numbers = true)]
    Zeros(ZerosArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    Cm,
    Rel,
    Total,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cm => Kind::Cm,
            KindArg::Rel => Kind::Relative,
            KindArg::Total => Kind::Total,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Operator,
    Series,
    Quadrature,
    ClosedG0,
    Asymptotic,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Operator => Method::Operator,
            MethodArg::Series => Method::Series,
            MethodArg::Quadrature => Method::Quadrature,
            MethodArg::ClosedG0 => Method::ClosedG0,
            MethodArg::Asymptotic => Method::Asymptotic,
        }
    }
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Relative quantum number.
    #[arg(long)]
    n: Option<usize>,
    /// Centre-of-mass quantum number.
    #[arg(long)]
    l: Option<usize>,
    /// Sector parameter alpha = beta + 1/2.
    #[arg(long)]
    alpha: Option<f64>,
    /// Dimensionless hybrid frequency.
    #[arg(long)]
    omega_bar: Option<f64>,
    /// Dimensionless pair frequency; sets omega-bar = sqrt(1 + 2 omega0-bar^2).
    #[arg(long, conflicts_with = "omega_bar")]
    omega0_bar: Option<f64>,
    #[arg(long, value_enum, default_value = "operator")]
    method: MethodArg,
}

impl ModelArgs {
    fn omega_bar(&self) -> f64 {
        match (self.omega_bar, self.omega0_bar) {
            (Some(w), _) => w,
            (None, Some(w0)) => omega_bar_from_pair(w0),
            (None, None) => 1.0,
        }
    }

    fn spec(&self, default_kind: KindArg, cm_point: PhasePoint64) -> WignerSpec64 {
        WignerSpec64 {
            kind: self.kind.unwrap_or(default_kind).into(),
            l: self.l.unwrap_or(0),
            cm_point,
            ..WignerSpec64::relative(
                self.n.unwrap_or(0),
                self.alpha.unwrap_or(0.0),
                self.omega_bar(),
                self.method.into(),
            )
        }
    }
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 0.0)]
    q: f64,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Centre-of-mass position.
    #[arg(long = "Q", default_value_t = 0.0)]
    cm_q: f64,
    /// Centre-of-mass momentum.
    #[arg(long = "P", default_value_t = 0.0)]
    cm_p: f64,
    /// Print a JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct GridArgs {
    /// Figure preset; fixes n, alpha, omega-bar and the [-4, 4]^2 121x121 grid.
    #[arg(long, value_parser = parse_preset,
          conflicts_with_all = ["kind", "n", "l", "alpha", "omega_bar", "omega0_bar", "q_min", "q_max", "p_min", "p_max", "n_q", "n_p"])]
    preset: Option<Preset>,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = -4.0)]
    q_min: f64,
    #[arg(long, default_value_t = 4.0)]
    q_max: f64,
    #[arg(long, default_value_t = -4.0)]
    p_min: f64,
    #[arg(long, default_value_t = 4.0)]
    p_max: f64,
    #[arg(long, default_value_t = 121)]
    n_q: usize,
    #[arg(long, default_value_t = 121)]
    n_p: usize,
    /// Fixed centre-of-mass position for `--kind total`.
    #[arg(long = "Q", default_value_t = 0.0)]
    cm_q: f64,
    /// Fixed centre-of-mass momentum for `--kind total`.
    #[arg(long = "P", default_value_t = 0.0)]
    cm_p: f64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Defaults to the extension of `--out`, else CSV.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    Identities,
    Oracles,
    Marginals,
    Normalization,
    Zeros,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Largest quantum number swept (suite default when omitted).
    #[arg(long)]
    n_max: Option<usize>,
    /// Replaces the default tolerance of every check.
    #[arg(long)]
    tol: Option<f64>,
    /// Write the JSON summary here instead of printing it after the report.
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    /// Relative quantum number.
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Sector, 0 or 1; the oscillator index is 2n + alpha.
    #[arg(long, default_value_t = 0)]
    alpha: usize,
    #[arg(long)]
    omega_bar: Option<f64>,
    #[arg(long, conflicts_with = "omega_bar")]
    omega0_bar: Option<f64>,
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
    Numeric(Error),
    Verify,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Numeric(_) | Failure::Verify => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NumericResidue { .. } | Error::NoConvergence { .. } => Failure::Numeric(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Io(e) => write!(f, "I/O error: {e}"),
            Failure::Numeric(e) => write!(f, "numerical failure: {e}"),
            Failure::Verify => write!(f, "verification failed"),
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("CSWIGNER_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("CSWIGNER_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(format!("cannot configure {n} threads: {e}")))
}

#[derive(Serialize)]
struct EvalOutput {
    kind: Kind,
    value: f64,
    method: Method,
    imag_residue: f64,
    quad_error: f64,
    convention_dependent: bool,
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let spec = args.model.spec(KindArg::Rel, PhasePoint64::new(args.cm_q, args.cm_p));
    let pt = match spec.kind {
        Kind::Cm => PhasePoint64::new(args.cm_q, args.cm_p),
        _ => PhasePoint64::new(args.q, args.p),
    };
    let r = spec.prepare()?.eval(pt)?;
    let mut out = io::stdout().lock();
    if args.json {
        let doc = EvalOutput {
            kind: spec.kind,
            value: r.value,
            method: r.method,
            imag_residue: r.imag_residue,
            quad_error: r.quad_error,
            convention_dependent: r.convention_dependent,
        };
        serde_json::to_writer(&mut out, &doc)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", r.value)?;
        writeln!(out, "method: {}", r.method)?;
        writeln!(out, "imag_residue: {:e}", r.imag_residue)?;
        writeln!(out, "quad_error: {:e}", r.quad_error)?;
        if r.convention_dependent {
            writeln!(out, "note: non-integer alpha; value depends on the |q|^alpha extension to q < 0")?;
        }
    }
    Ok(())
}

fn cmd_grid(args: GridArgs) -> Result<(), Failure> {
    let (spec, grid, preset) = match args.preset {
        Some(p) => {
            let spec = WignerSpec64 { method: args.model.method.into(), ..p.spec() };
            (spec, p.grid(), Some(p.name().to_string()))
        }
        None => {
            let spec = args.model.spec(KindArg::Rel, PhasePoint64::new(args.cm_q, args.cm_p));
            let grid = GridSpec64::new(args.q_min, args.q_max, args.p_min, args.p_max, args.n_q, args.n_p)?;
            (spec, grid, None)
        }
    };
    let values = grid_eval(&spec, &grid)?;

    let format = args.format.unwrap_or_else(|| match &args.out {
        Some(p) if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) => Format::Json,
        _ => Format::Csv,
    });
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => write_csv(sink, &values)?,
        Format::Json => {
            let params = ParamsEcho {
                kind: spec.kind,
                n: spec.n,
                l: spec.l,
                alpha: spec.alpha,
                omega_bar: spec.omega_bar,
                cm_point: (spec.kind == Kind::Total).then_some(spec.cm_point),
                preset,
            };
            write_json(sink, &OutputDoc::new(params, spec.method, &values))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    passed: bool,
    suites: &'a [SuiteReport],
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Oracles => vec![Suite::Oracles],
        SuiteArg::Marginals => vec![Suite::Marginals],
        SuiteArg::Normalization => vec![Suite::Normalization],
        SuiteArg::Zeros => vec![Suite::Zeros],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    if let Some(t) = args.tol {
        if !(t > 0.0) {
            return Err(Failure::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    let opts = VerifyOptions { n_max: args.n_max, tol: args.tol };
    let mut out = io::stdout().lock();
    let mut reports = Vec::with_capacity(suites.len());
    for s in suites {
        let r = run_suite(s, &opts);
        for c in &r.checks {
            writeln!(out, "{c}")?;
        }
        let tag = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} suite {} ({} checks, max deviation {:.3e})", s.name(), r.checks.len(), r.max_deviation())?;
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed);
    let summary = VerifySummary { passed, suites: &reports };
    match &args.summary {
        Some(path) => write_json_file(path, &summary)?,
        None => {
            serde_json::to_writer(&mut out, &summary)?;
            writeln!(out)?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn write_json_file<T: Serialize>(path: &PathBuf, v: &T) -> Result<(), Failure> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, v)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn cmd_zeros(args: ZerosArgs) -> Result<(), Failure> {
    if args.k_max < 1 {
        return Err(Failure::Usage("--k-max must be at least 1".into()));
    }
    if args.alpha > 1 {
        return Err(Failure::Usage(format!("--alpha must be 0 or 1, got {}", args.alpha)));
    }
    let w = match (args.omega_bar, args.omega0_bar) {
        (Some(w), _) => w,
        (None, Some(w0)) => omega_bar_from_pair(w0),
        (None, None) => 1.0,
    };
    if !(w > 0.0) || !w.is_finite() {
        return Err(Failure::Usage(format!("omega-bar must be positive, got {w}")));
    }
    let j = 2 * args.n + args.alpha;
    let rows = zero_ellipses(j, w, args.k_max);
    let mut out = io::stdout().lock();
    if args.json {
        serde_json::to_writer_pretty(&mut out, &rows)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "# j = {j}, omega_bar = {w}")?;
    writeln!(
        out,
        "{:>4} {:>22} {:>22} {:>22} {:>22} {:>7}",
        "k", "r_k", "semi_axis_q", "semi_axis_p", "area", "gromov"
    )?;
    for e in rows {
        writeln!(
            out,
            "{:>4} {:>22.15e} {:>22.15e} {:>22.15e} {:>22.15e} {:>7}",
            e.k, e.radial_value, e.semi_axes.0, e.semi_axes.1, e.symplectic_area, e.satisfies_gromov
        )?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Grid(a) => cmd_grid(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Zeros(a) => cmd_zeros(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help and version requests are not misuse
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(2),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
