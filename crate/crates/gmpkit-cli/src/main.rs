//! `gmpkit`: construct and analyze generalized matrix product codes.

/// Writes one line to stdout, exiting quietly when the reader has
/// closed the pipe (e.g. output piped into `head`).
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gmpkit::bounds::{self, BoundMethod, BoundReport};
use gmpkit::code::{LinearCode, DEFAULT_DISTANCE_CAP};
use gmpkit::gmp::GmpSpec;
use gmpkit::io;
use gmpkit::qt::{self, QtSpec};
use gmpkit::registry::Registry;
use gmpkit::Error;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "gmpkit",
    version,
    about = "Generalized matrix product codes: construction, analysis, distance bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap on exhaustive codeword enumeration (number of messages).
    #[arg(
        long,
        global = true,
        value_name = "N",
        default_value_t = DEFAULT_DISTANCE_CAP,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    cap: u64,

    /// Best-known-parameters CSV (overrides GMPKIT_BKP and the bundled table).
    #[arg(long, global = true, value_name = "FILE")]
    bkp: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generalized matrix product specs.
    Gmp {
        #[command(subcommand)]
        command: GmpCommand,
    },
    /// Minimum-distance lower bounds for a GMP spec.
    Bounds(BoundsArgs),
    /// Quasi-twisted code conversions and expansion.
    Qt {
        #[command(subcommand)]
        command: QtCommand,
    },
    /// Single linear codes.
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Best-known-parameters store.
    Bkp {
        #[command(subcommand)]
        command: BkpCommand,
    },
    /// Replay the bundled worked examples and report PASS/FAIL.
    VerifyPaper(VerifyArgs),
}

#[derive(Subcommand)]
enum GmpCommand {
    /// Report length, sigma rank, rank-condition verdict and dimension.
    Analyze {
        /// GMP spec file (JSON).
        spec: PathBuf,
        /// Also compute the exact minimum distance and the store verdict.
        #[arg(long)]
        distance: bool,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// GMP spec file (JSON).
    spec: PathBuf,
    /// Which bound to compute.
    #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
    method: MethodChoice,
    /// Also compute the true minimum distance and report TIGHT/SLACK.
    #[arg(long)]
    actual: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodChoice {
    Thm61,
    Thm62,
    Both,
}

#[derive(Subcommand)]
enum QtCommand {
    /// Decompose a quasi-twisted code into an equivalent GMP spec.
    ToGmp {
        /// QT spec file (JSON).
        spec: PathBuf,
        /// Write the GMP spec here instead of stdout.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Rebuild the generator polynomial matrix of a shift-form GMP spec.
    FromGmp {
        /// GMP spec file (JSON).
        spec: PathBuf,
        /// Write the QT spec here instead of stdout.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Expand to the full linear code: [n, k, d] and shift invariance.
    Expand {
        /// QT spec file (JSON).
        spec: PathBuf,
    },
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Report [n, k, d] and the constacyclic description if present.
    Info {
        /// Code file (JSON): {"field": ..., "code": ...}.
        spec: PathBuf,
    },
}

#[derive(Subcommand)]
enum BkpCommand {
    /// Classify a computed [n, k, d]_q against the store.
    Check { q: u64, n: usize, k: usize, d: u32 },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only examples whose id contains this substring (e.g. "ex4.1").
    #[arg(long, value_name = "SUBSTR")]
    filter: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// 2 = input error, 3 = conversion precondition, 4 = enumeration cap.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::NotShiftForm
            | Error::NoConstacyclicGenerator(_)
            | Error::ZeroGpmRow(_)
            | Error::DegreeTooHigh { .. }
            | Error::RingMismatch,
        ) => 3,
        Some(Error::CapExceeded { .. }) => 4,
        _ => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::Gmp {
            command: GmpCommand::Analyze { spec, distance },
        } => cmd_analyze(&spec, distance, cli.cap, cli.bkp.as_deref(), format)?,
        Command::Bounds(args) => cmd_bounds(&args, cli.cap, format)?,
        Command::Qt { command } => match command {
            QtCommand::ToGmp { spec, output } => cmd_qt_to_gmp(&spec, output.as_deref())?,
            QtCommand::FromGmp { spec, output } => cmd_qt_from_gmp(&spec, output.as_deref())?,
            QtCommand::Expand { spec } => cmd_qt_expand(&spec, cli.cap, format)?,
        },
        Command::Code {
            command: CodeCommand::Info { spec },
        } => cmd_code_info(&spec, cli.cap, format)?,
        Command::Bkp {
            command: BkpCommand::Check { q, n, k, d },
        } => cmd_bkp_check(q, n, k, d, cli.bkp.as_deref(), format)?,
        Command::VerifyPaper(args) => {
            return verify::run(args.filter.as_deref(), cli.cap, format);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_gmp(path: &Path) -> anyhow::Result<GmpSpec> {
    io::read_gmp_spec(&read_file(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_qt(path: &Path) -> anyhow::Result<QtSpec> {
    io::read_qt_spec(&read_file(path)?).with_context(|| format!("in {}", path.display()))
}

fn emit_json(value: &serde_json::Value) -> anyhow::Result<()> {
    outln!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_analyze(
    path: &Path,
    distance: bool,
    cap: u64,
    bkp: Option<&Path>,
    format: Format,
) -> anyhow::Result<()> {
    let spec = load_gmp(path)?;
    let analysis = spec.analyze()?;
    let n = spec.length();
    let dim = analysis.dim();
    let (d, verdict) = if distance {
        let d = analysis.code.min_distance(cap)?;
        let store = Registry::resolve(bkp)?;
        (Some(d), Some(store.classify(spec.field().q(), n, dim, d)))
    } else {
        (None, None)
    };
    match format {
        Format::Text => {
            outln!(
                "sigma_rank={} rank_condition={} predicted_dim={}",
                analysis.sigma_rank,
                if analysis.rank_condition_met {
                    "met"
                } else {
                    "not-met"
                },
                analysis
                    .predicted_dim
                    .map_or_else(|| "-".to_string(), |k| k.to_string())
            );
            let mut line = format!("n={n} dim={dim}");
            if let Some(d) = d {
                line.push_str(&format!(" d={d}"));
            }
            if let Some(v) = &verdict {
                line.push_str(&format!(" bkp={v}"));
            }
            outln!("{line}");
        }
        Format::Json => emit_json(&json!({
            "n": n,
            "q": spec.field().q(),
            "m": spec.m(),
            "sigma_rank": analysis.sigma_rank,
            "rank_condition_met": analysis.rank_condition_met,
            "predicted_dim": analysis.predicted_dim,
            "dim": dim,
            "d": d,
            "bkp": verdict,
        }))?,
    }
    Ok(())
}

fn param_label(method: BoundMethod) -> &'static str {
    match method {
        BoundMethod::Thm61 | BoundMethod::MpBound2 => "D_t",
        BoundMethod::Thm62 => "tau_t",
        BoundMethod::MpBound1 => "t",
    }
}

fn print_report(report: &BoundReport) {
    if !report.applicable {
        outln!("method={} applicable=no", report.method);
        if let Some(reason) = &report.reason {
            outln!("reason={reason}");
        }
        return;
    }
    outln!("method={} applicable=yes", report.method);
    let label = param_label(report.method);
    for row in &report.per_t {
        outln!(
            "t={} {label}={} d(C_t)={} term={}",
            row.t, row.param, row.code_dist, row.term
        );
    }
    let mut line = format!("bound={}", report.bound.expect("applicable report has a bound"));
    if let Some(actual) = report.actual {
        let verdict = if u64::from(actual) == report.bound.unwrap_or(0) {
            "TIGHT"
        } else {
            "SLACK"
        };
        line.push_str(&format!(" actual={actual} verdict={verdict}"));
    }
    outln!("{line}");
}

fn cmd_bounds(args: &BoundsArgs, cap: u64, format: Format) -> anyhow::Result<()> {
    let spec = load_gmp(&args.spec)?;
    let methods: &[BoundMethod] = match args.method {
        MethodChoice::Thm61 => &[BoundMethod::Thm61],
        MethodChoice::Thm62 => &[BoundMethod::Thm62],
        MethodChoice::Both => &[BoundMethod::Thm61, BoundMethod::Thm62],
    };
    let actual = if args.actual {
        Some(spec.analyze()?.code.min_distance(cap)?)
    } else {
        None
    };
    let mut reports = Vec::new();
    for &method in methods {
        let mut report = bounds::bound_by_method(&spec, method, cap)?;
        report.actual = actual;
        reports.push(report);
    }
    match format {
        Format::Text => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    outln!();
                }
                print_report(report);
            }
        }
        Format::Json => emit_json(&json!({ "reports": reports }))?,
    }
    Ok(())
}

fn write_converted(text: &str, output: Option<&Path>, what: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => {
            fs::write(path, format!("{text}\n"))
                .with_context(|| format!("writing {}", path.display()))?;
            outln!("wrote {what} to {}", path.display());
        }
        None => outln!("{text}"),
    }
    Ok(())
}

fn cmd_qt_to_gmp(path: &Path, output: Option<&Path>) -> anyhow::Result<()> {
    let spec = load_qt(path)?;
    let (_, gmp) = spec.to_gmp()?;
    write_converted(&io::write_gmp_spec(&gmp)?, output, "GMP spec")
}

fn cmd_qt_from_gmp(path: &Path, output: Option<&Path>) -> anyhow::Result<()> {
    let spec = load_gmp(path)?;
    let qt = qt::gmp_to_qt(&spec)?;
    write_converted(&io::write_qt_spec(&qt)?, output, "QT spec")
}

fn cmd_qt_expand(path: &Path, cap: u64, format: Format) -> anyhow::Result<()> {
    let spec = load_qt(path)?;
    let code = spec.expand()?;
    let d = code.min_distance(cap)?;
    let invariant = qt::invariance_check(&code, spec.ring())?;
    match format {
        Format::Text => outln!(
            "n={} k={} d={d} invariant={invariant}",
            code.length(),
            code.dim()
        ),
        Format::Json => emit_json(&json!({
            "n": code.length(),
            "k": code.dim(),
            "d": d,
            "invariant": invariant,
        }))?,
    }
    Ok(())
}

fn cmd_code_info(path: &Path, cap: u64, format: Format) -> anyhow::Result<()> {
    let code: LinearCode =
        io::read_code_spec(&read_file(path)?).with_context(|| format!("in {}", path.display()))?;
    let d = code.min_distance(cap)?;
    match format {
        Format::Text => {
            outln!("n={} k={} d={d}", code.length(), code.dim());
            if let Some((ring, g)) = code.constacyclic_info() {
                outln!(
                    "constacyclic m={} lambda={} g={g}",
                    ring.m(),
                    ring.lambda()
                );
            }
        }
        Format::Json => {
            let constacyclic = code.constacyclic_info().map(|(ring, g)| {
                json!({
                    "m": ring.m(),
                    "lambda": ring.lambda().to_string(),
                    "g": g.to_string(),
                })
            });
            emit_json(&json!({
                "n": code.length(),
                "k": code.dim(),
                "d": d,
                "constacyclic": constacyclic,
            }))?;
        }
    }
    Ok(())
}

fn cmd_bkp_check(
    q: u64,
    n: usize,
    k: usize,
    d: u32,
    bkp: Option<&Path>,
    format: Format,
) -> anyhow::Result<()> {
    let store = Registry::resolve(bkp)?;
    let verdict = store.classify(q, n, k, d);
    let entry = store.lookup(q, n, k);
    match format {
        Format::Text => {
            let mut line = format!("[{n},{k},{d}]_{q} verdict={verdict}");
            if let Some(entry) = entry {
                line.push_str(&format!(" d_best={} source={}", entry.d_best, entry.source));
            }
            outln!("{line}");
        }
        Format::Json => emit_json(&json!({
            "q": q,
            "n": n,
            "k": k,
            "d": d,
            "classification": verdict,
            "entry": entry,
        }))?,
    }
    Ok(())
}
