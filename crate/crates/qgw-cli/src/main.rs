//! `qgw` — build finite-dimensional quantum groups and verify the relation
//! catalog from the command line.
//!
//! Exit codes: 0 all requested entries pass, 1 suite failures, 2 invalid
//! input or configuration (with diagnostics on stderr).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgw_core::pipeline::T_GRID;
use qgw_core::report::VerificationReport;
use qgw_core::{examples, io, relations, QuantumGroup};

#[derive(Parser)]
#[command(
    name = "qgw",
    version,
    about = "Finite-dimensional quantum group workbench",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a quantum group and run the relation suite on it.
    Check(CheckArgs),
    /// Write a shipped specimen as algebra JSON.
    Export(ExportArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Name of a shipped specimen (see `export --list` for the catalog).
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    example: Option<String>,
    /// Path to an algebra JSON file; must include a coproduct.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Catalog selection: "all" or comma-separated entry ids.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Residual tolerance for pass/fail.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Name of a shipped specimen.
    #[arg(long, required_unless_present = "list")]
    example: Option<String>,
    /// Write the JSON to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// List the shipped specimen names and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    configure_threads();
    match Cli::parse().command {
        Command::Check(args) => match cmd_check(&args) {
            Ok(all_pass) => {
                if all_pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Command::Export(args) => match cmd_export(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
    }
}

/// QGW_THREADS bounds suite parallelism; 0 or unset leaves the default.
fn configure_threads() {
    if let Ok(v) = std::env::var("QGW_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(0) => {}
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => eprintln!("warning: ignoring non-numeric QGW_THREADS={v}"),
        }
    }
}

fn cmd_check(args: &CheckArgs) -> Result<bool, String> {
    if !(args.tol > 0.0) {
        return Err(format!("tol must be positive, got {}", args.tol));
    }
    let ids = parse_suite(&args.suite)?;
    let (label, alg, cop) = load_specimen(args)?;
    let started = Instant::now();
    let qg = QuantumGroup::build(alg, cop, args.tol).map_err(|e| e.to_string())?;
    let build_time = started.elapsed();
    let suite_started = Instant::now();
    let report = relations::run_suite(&qg, &label, ids.as_deref()).map_err(|e| e.to_string())?;
    let suite_time = suite_started.elapsed();
    let body = match args.format {
        Format::Json => report.to_json(),
        Format::Text => render_text(
            &report,
            &qg,
            build_time.as_secs_f64() * 1e3,
            suite_time.as_secs_f64() * 1e3,
        ),
    };
    emit(&body, args.out.as_deref())?;
    Ok(report.all_pass())
}

fn cmd_export(args: &ExportArgs) -> Result<(), String> {
    if args.list {
        emit(&examples::catalog().join("\n"), args.out.as_deref())?;
        return Ok(());
    }
    let name = args.example.as_deref().expect("clap enforces example unless --list");
    let (alg, cop) = examples::build(name)
        .ok_or_else(|| format!("unknown example {name:?}; known: {}", examples::catalog().join(", ")))?;
    emit(&io::algebra_to_json(&alg, Some(&cop)), args.out.as_deref())
}

fn parse_suite(spec: &str) -> Result<Option<Vec<String>>, String> {
    if spec.trim() == "all" {
        return Ok(None);
    }
    let known: Vec<&str> = relations::catalog().iter().map(|e| e.id).collect();
    let mut ids = Vec::new();
    for raw in spec.split(',') {
        let id = raw.trim();
        if id.is_empty() {
            continue;
        }
        if !known.contains(&id) {
            return Err(format!("unknown relation id: {id}; known ids: {}", known.join(", ")));
        }
        ids.push(id.to_string());
    }
    if ids.is_empty() {
        return Err("empty suite selection".to_string());
    }
    Ok(Some(ids))
}

fn load_specimen(args: &CheckArgs) -> Result<(String, qgw_core::AlgebraSpec, qgw_core::Coproduct), String> {
    if let Some(name) = &args.example {
        let (alg, cop) = examples::build(name).ok_or_else(|| {
            format!("unknown example {name:?}; known: {}", examples::catalog().join(", "))
        })?;
        return Ok((name.clone(), alg, cop));
    }
    let path = args.input.as_ref().expect("clap enforces example xor input");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (alg, cop) = io::algebra_from_json(&text).map_err(|e| e.to_string())?;
    let cop = cop.ok_or_else(|| format!("{}: input has no coproduct", path.display()))?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok((label, alg, cop))
}

/// Human-readable report: dimensions and timings up top (these never enter
/// the JSON form, which is schema-exact), one line per entry, the worst
/// residuals, and full diagnostics for each failing entry.
fn render_text(report: &VerificationReport, qg: &QuantumGroup, build_ms: f64, suite_ms: f64) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "specimen: {}", report.example);
    let _ = writeln!(
        s,
        "algebra dim {}, GNS dim {}, dual dim {}",
        qg.alg.dim(),
        qg.gns.hilbert_dim(),
        qg.dual.alg.dim()
    );
    let _ = writeln!(
        s,
        "tol {:.1e}; t grid {:?}; build {:.1} ms, suite {:.1} ms",
        report.tol, T_GRID, build_ms, suite_ms
    );
    let passed = report.entries.iter().filter(|e| e.pass).count();
    let _ = writeln!(s, "{passed}/{} entries pass", report.entries.len());
    let _ = writeln!(s);
    for e in &report.entries {
        let status = if e.pass { "pass" } else { "FAIL" };
        let _ = writeln!(s, "  {status}  {:<11} {:.3e}", e.id, e.residual);
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "worst residuals:");
    for e in report.worst(5) {
        let _ = writeln!(s, "  {:<11} {:.3e}  {}", e.id, e.residual, e.note);
    }
    let failures = report.failures();
    if !failures.is_empty() {
        let _ = writeln!(s);
        let _ = writeln!(s, "failing entries:");
        for e in failures {
            let _ = writeln!(s, "  {}  residual {:.3e}", e.id, e.residual);
            let _ = writeln!(s, "    identity: {}", e.paper_ref);
            let _ = writeln!(s, "    note: {}", e.note);
        }
    }
    s
}

fn emit(body: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        None => {
            println!("{body}");
            Ok(())
        }
        Some(path) => {
            let mut owned = body.to_string();
            owned.push('\n');
            std::fs::write(path, owned).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}
