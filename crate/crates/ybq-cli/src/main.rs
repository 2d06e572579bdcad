//! Command line front end: verify single identities, run the whole battery,
//! benchmark scaling, or print a family's entries.
//!
//! Exit codes: 0 all checks matched their expectation, 1 at least one check
//! failed, 2 usage or configuration error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use ybq_core::cnum::{format_complex, parse_complex};
use ybq_core::op::estimate_product_nnz;
use ybq_core::report::{BenchReport, BenchSize, ConfigReport, Report};
use ybq_core::verify::{self, Expectation, Identity, RunConfig};
use ybq_core::{families, Family, GradedOp, Superspace};

/// Rough bytes per stored entry, including map overhead.
const BYTES_PER_ENTRY: u64 = 64;

#[derive(Parser)]
#[command(
    name = "ybq",
    version,
    about = "Residual checks for graded Yang-Baxter solution families on C^(N|N)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check one identity for one family at sampled points
    Verify(VerifyArgs),
    /// Run the full battery of identity checks, including the documented
    /// break-by-design entries
    Suite(SuiteArgs),
    /// Time family construction and three-leg products over a size sweep
    Bench(BenchArgs),
    /// Print the nonzero entries of a family at a fixed point
    Describe(DescribeArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Half-dimension N of the graded space C^(N|N)
    #[arg(long = "N", value_name = "N", default_value_t = verify::DEFAULT_N)]
    n: u32,
    /// Random spectral points per check
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: u32,
    /// Seed for the admissible-point sampler
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Override the per-identity residual tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Minimum distance of every denominator from its pole set
    #[arg(long, default_value_t = verify::DEFAULT_POLE_MARGIN)]
    pole_margin: f64,
    /// Record wall-clock timings (off by default so identical runs produce
    /// byte-identical reports)
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout; relative paths resolve
    /// against $YBQ_OUT_DIR when that is set
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check (e.g. aybe, qybe, unitarity, twist-rel, fay)
    #[arg(long)]
    identity: String,
    /// Solution family (e.g. rational, trig, rcal, s-const); omit for the
    /// self-contained checks
    #[arg(long)]
    family: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct SuiteArgs {
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct BenchArgs {
    /// Sizes N to sweep
    #[arg(long, value_delimiter = ',', default_value = "2,4,8,16,32")]
    sizes: Vec<u32>,
    /// Skip the three-leg product when its estimated footprint exceeds this
    #[arg(long, default_value_t = 2048)]
    budget_mib: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DescribeArgs {
    /// Solution family to evaluate
    #[arg(long)]
    family: String,
    #[arg(long = "N", value_name = "N", default_value_t = verify::DEFAULT_N)]
    n: u32,
    /// Planck-like argument, as "re+imi"
    #[arg(long, default_value = "0.31+0.11i")]
    hbar: String,
    /// First spectral argument
    #[arg(long, default_value = "0.4+0.1i")]
    u: String,
    /// Second spectral argument
    #[arg(long, default_value = "-0.2+0.3i")]
    v: String,
    /// Maximum number of entries to list (0 = all)
    #[arg(long, default_value_t = 16)]
    limit: usize,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Suite(args) => cmd_suite(args),
        Cmd::Bench(args) => cmd_bench(args),
        Cmd::Describe(args) => cmd_describe(args),
    }
}

fn run_config(args: &RunArgs) -> RunConfig {
    RunConfig {
        n: args.n,
        samples: args.samples,
        seed: args.seed,
        pole_margin: args.pole_margin,
        tol: args.tol,
    }
}

fn config_report(args: &RunArgs) -> ConfigReport {
    ConfigReport {
        n: args.n,
        samples: args.samples,
        seed: args.seed,
        pole_margin: args.pole_margin,
        tolerance_override: args.tol,
        parallel: cfg!(feature = "parallel"),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let identity: Identity = args.identity.parse()?;
    let family: Option<Family> = args.family.as_deref().map(str::parse).transpose()?;
    verify::validate_pair(family, identity)?;
    // the perturbation control is a break-check by construction
    let expectation = if identity == Identity::NegativeControl {
        Expectation::Break
    } else {
        Expectation::Hold
    };
    let started = Instant::now();
    let entry = verify::run_entry(family, identity, expectation, &run_config(&args.run))?;
    let mut report = Report::new("verify", config_report(&args.run), &[entry]);
    if args.run.timings {
        report.summary.elapsed_ms = started.elapsed().as_millis() as u64;
    }
    let ok = report.all_passed();
    emit_report(&report, &args.run.output)?;
    Ok(exit_for(ok))
}

fn cmd_suite(args: SuiteArgs) -> Result<ExitCode> {
    let started = Instant::now();
    let entries = verify::run_suite(&run_config(&args.run))?;
    let mut report = Report::new("suite", config_report(&args.run), &entries);
    if args.run.timings {
        report.summary.elapsed_ms = started.elapsed().as_millis() as u64;
    }
    let ok = report.all_passed();
    emit_report(&report, &args.run.output)?;
    Ok(exit_for(ok))
}

fn emit_report(report: &Report, output: &OutputArgs) -> Result<()> {
    let body = match output.format {
        Format::Json => report.to_json(),
        Format::Text => report.render_text(),
    };
    emit(&body, output.out.as_deref())
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    if args.sizes.is_empty() {
        anyhow::bail!("--sizes must name at least one size");
    }
    let h = Complex64::new(0.31, 0.05);
    let u = Complex64::new(0.4, 0.1);
    let v = Complex64::new(-0.2, 0.3);
    let w = Complex64::new(0.15, -0.36);
    let mut sizes = Vec::new();
    for &n in &args.sizes {
        let sp = Superspace::new(n)?;
        let t0 = Instant::now();
        let r = families::r_trig(sp, h, u, v)?;
        let build_ms = t0.elapsed().as_secs_f64() * 1e3;
        let nnz = r.nnz() as u64;
        let nnz_expected = (12 * n * n - 4 * n) as u64;

        let r12 = r.embed(&[1, 2], 3)?;
        let r13 = families::r_trig(sp, h, u, w)?.embed(&[1, 3], 3)?;
        let est_entries = estimate_product_nnz(&r12, &r13);
        let estimated_product_mib =
            (est_entries * BYTES_PER_ENTRY) as f64 / (1024.0 * 1024.0);
        let (residual_ms, note) = if estimated_product_mib > args.budget_mib as f64 {
            (
                None,
                Some(format!(
                    "three-leg product skipped: estimated {estimated_product_mib:.0} MiB \
                     exceeds --budget-mib {}",
                    args.budget_mib
                )),
            )
        } else {
            let r23 = families::r_trig(sp, h, v, w)?.embed(&[2, 3], 3)?;
            let t1 = Instant::now();
            let lhs = r12.compose(&r13)?.compose(&r23)?;
            let rhs = r23.compose(&r13)?.compose(&r12)?;
            let mut diff = lhs;
            diff.add_scaled(&rhs, Complex64::new(-1.0, 0.0))?;
            let _ = diff.max_abs();
            (Some(t1.elapsed().as_secs_f64() * 1e3), None)
        };
        sizes.push(BenchSize {
            n,
            nnz,
            nnz_expected,
            estimated_product_mib,
            build_ms,
            residual_ms,
            note,
            passed: nnz == nnz_expected,
        });
    }
    let report = BenchReport::new(sizes);
    let body = match args.output.format {
        Format::Json => report.to_json(),
        Format::Text => report.render_text(),
    };
    let ok = report.passed;
    emit(&body, args.output.out.as_deref())?;
    Ok(exit_for(ok))
}

fn cmd_describe(args: DescribeArgs) -> Result<ExitCode> {
    let family: Family = args.family.parse()?;
    let sp = Superspace::new(args.n)?;
    let h = parse_complex(&args.hbar)?;
    let u = parse_complex(&args.u)?;
    let v = parse_complex(&args.v)?;
    let op = family.op(sp, h, u, v)?;
    let body = match args.output.format {
        Format::Json => describe_json(family, &args, &op),
        Format::Text => describe_text(family, &args, &op),
    };
    emit(&body, args.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

type EntryRow = (Vec<i32>, Vec<i32>, Complex64);

fn shown_entries(op: &GradedOp, limit: usize) -> (Vec<EntryRow>, bool) {
    let all: Vec<_> = op.entries().collect();
    if limit == 0 || all.len() <= limit {
        (all, false)
    } else {
        (all.into_iter().take(limit).collect(), true)
    }
}

fn describe_json(family: Family, args: &DescribeArgs, op: &GradedOp) -> String {
    let (shown, truncated) = shown_entries(op, args.limit);
    let entries: Vec<serde_json::Value> = shown
        .into_iter()
        .map(|(rows, cols, val)| {
            serde_json::json!({
                "row": rows,
                "col": cols,
                "value": format_complex(val),
            })
        })
        .collect();
    let mut doc = serde_json::json!({
        "schema": "ybq-describe/1",
        "family": family.name(),
        "n": args.n,
        "args": { "hbar": args.hbar, "u": args.u, "v": args.v },
        "nnz": op.nnz(),
        "max_abs": op.max_abs(),
        "entries": entries,
    });
    if truncated {
        doc["truncated"] = serde_json::Value::Bool(true);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("describe serializes");
    s.push('\n');
    s
}

fn describe_text(family: Family, args: &DescribeArgs, op: &GradedOp) -> String {
    let (shown, truncated) = shown_entries(op, args.limit);
    let mut out = format!(
        "{} at N={}, hbar={}, u={}, v={}: {} nonzero entries, max |entry| {:.6}\n",
        family.name(),
        args.n,
        args.hbar,
        args.u,
        args.v,
        op.nnz(),
        op.max_abs()
    );
    for (rows, cols, val) in shown {
        out.push_str(&format!(
            "  {:?} <- {:?}  {}\n",
            rows,
            cols,
            format_complex(val)
        ));
    }
    if truncated {
        out.push_str(&format!("  ... ({} entries total)\n", op.nnz()));
    }
    out
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("YBQ_OUT_DIR") {
            if !dir.is_empty() {
                return Path::new(&dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

fn emit(body: &str, out: Option<&Path>) -> Result<()> {
    match out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => {
            let target = resolve_out(path);
            if let Some(parent) = target.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)
                        .with_context(|| format!("creating {}", parent.display()))?;
                }
            }
            std::fs::write(&target, body)
                .with_context(|| format!("writing {}", target.display()))?;
            eprintln!("wrote {}", target.display());
            Ok(())
        }
    }
}
