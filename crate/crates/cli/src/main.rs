//! Command-line verification harness: run catalog identities over seeded
//! random rational parameters and exhaustive small grids, evaluate single
//! functions, enumerate index sets, and check the floating-point limits.
//!
//! Exit codes: 0 when every comparison is exactly equal (and every limit
//! passes), 1 on any mismatch, 2 on configuration errors or pole-budget
//! exhaustion.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use finhyp::harness::{
    all_passed, default_config, emit_limit_report, emit_report, redact_timing, run_all,
    run_identity, run_limits, Identity, ReportFormat, RunConfig, VerificationReport, DEFAULT_TOL,
};
use finhyp::hyperfun::{
    chain_sum_pfp, disc_beta_sum, multivariate_disc_beta, t1f0_closed_form, terminating_pfq_at_1,
    trunc_2f1_paren, trunc_pfq_bracket, truncated_beta, BetaParams, HyperParams,
};
use finhyp::polylog::{
    arakawa_kaneko_truncated, enumerate_i0, enumerate_i0_tilde, hms_lhs, hms_rhs, msw_rhs,
    tilde_zeta, truncated_mpl, truncated_mzv, truncated_zeta, ExtendedIndex, Index,
};
use finhyp::Rational;

#[derive(Parser)]
#[command(
    name = "finhyp",
    version,
    about = "Exact verification of truncated-series / discretized-integral identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity from the catalog and emit per-instance reports
    Verify(VerifyArgs),
    /// Evaluate a single function at explicit parameters
    Eval(EvalArgs),
    /// Enumerate admissible or extended index sets
    Enumerate(EnumerateArgs),
    /// Check the floating-point limit suite
    Limits(LimitsArgs),
    /// Run the full identity catalog plus the limit suite
    All(AllArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id (msw, hms, disc-beta, multivar-beta, t1f0, gen-thg-int,
    /// thg-int, chain-sum, 3f2-transform, finite-gauss, finite-pfaff,
    /// finite-euler, toz-threeway, toz-special, prop54, symmetry,
    /// reconstruct-p, ak-congruence)
    identity: String,
    #[arg(long)]
    n_min: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    trials: Option<u32>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Total-degree bound for series identities
    #[arg(long)]
    degree: Option<u32>,
    /// Maximum index weight for sweeps over compositions
    #[arg(long)]
    weight_max: Option<u32>,
    /// Output format: json, csv or md
    #[arg(long, default_value = "md")]
    format: String,
    /// Tolerance; accepted for interface uniformity, exact identities ignore it
    #[arg(long)]
    tol: Option<f64>,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock milliseconds (breaks byte reproducibility)
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// One of: mzv, msw, mpl, hms-lhs, hms-rhs, zeta, tilde-zeta, ak, beta,
    /// disc-beta, multivar-beta, pfq, 2f1-paren, terminating, t1f0, chain-sum
    function: String,
    /// Index such as `1,2` (append `;l` where an extension is needed)
    #[arg(long)]
    index: Option<String>,
    /// Comma-separated rational parameters, e.g. `1/2,3,-1/4`
    #[arg(long)]
    params: Option<String>,
    /// Upper parameter list for hypergeometric evaluations
    #[arg(long)]
    upper: Option<String>,
    /// Lower parameter list for hypergeometric evaluations
    #[arg(long)]
    lower: Option<String>,
    /// Weight vector for the weighted discretization identity
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    /// Argument as an exact rational, e.g. `1/2`
    #[arg(long)]
    z: Option<String>,
    /// Zeta exponent
    #[arg(long)]
    k: Option<u32>,
    /// Prime cutoff
    #[arg(long)]
    p: Option<u32>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// `i0` (indices by weight/depth/height) or `i0tilde` (extended set)
    set: String,
    #[arg(long)]
    k: u32,
    /// Depth (for i0)
    #[arg(long)]
    r: Option<u32>,
    /// Depth-plus-extension (for i0tilde)
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    h: u32,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Comma-separated N grid, e.g. `100,1000,10000`
    #[arg(long, default_value = "100,1000,10000")]
    n_grid: String,
    #[arg(long, default_value = "md")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AllArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value = "json")]
    format: String,
    /// Write identity reports to a file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write limit reports to a file
    #[arg(long)]
    limits_out: Option<PathBuf>,
    /// Include wall-clock milliseconds (breaks byte reproducibility)
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Limits(args) => cmd_limits(args),
        Command::All(args) => cmd_all(args),
    }
}

fn write_or_print(bytes: &[u8], out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes).context("writing to stdout")?;
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let identity = Identity::parse(&args.identity)?;
    let mut config = default_config(identity);
    config.seed = args.seed;
    apply_overrides(&mut config, &args);

    let mut reports = run_identity(identity.id(), &config)?;
    if !args.timing {
        redact_timing(&mut reports);
    }
    let format = ReportFormat::from_str(&args.format).map_err(|e| anyhow!(e))?;
    write_or_print(&emit_report(&reports, format), args.out.as_ref())?;

    summarize(identity.id(), &reports);
    Ok(if reports.iter().all(|r| r.equal) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn apply_overrides(config: &mut RunConfig, args: &VerifyArgs) {
    if let Some(v) = args.n_min {
        config.n_min = v;
    }
    if let Some(v) = args.n_max {
        config.n_max = v;
    }
    if let Some(v) = args.trials {
        config.trials = v;
    }
    if let Some(v) = args.degree {
        config.degree = v;
    }
    if let Some(v) = args.weight_max {
        config.weight_max = v;
    }
}

fn summarize(label: &str, reports: &[VerificationReport]) {
    let total = reports.len();
    let equal = reports.iter().filter(|r| r.equal).count();
    let rejected: u64 = reports.iter().map(|r| r.rejected).sum();
    eprintln!("{label}: {equal}/{total} equal, {rejected} rejected samples");
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| anyhow!("{e}"))
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode> {
    let need_n = || args.n.ok_or_else(|| anyhow!("--n is required"));
    let need_z = || {
        args.z
            .as_deref()
            .ok_or_else(|| anyhow!("--z is required"))
            .and_then(parse_rational)
    };
    let need_index = || -> Result<Index> {
        args.index
            .as_deref()
            .ok_or_else(|| anyhow!("--index is required"))?
            .parse()
            .map_err(|e| anyhow!("{e}"))
    };
    let need_extended = || -> Result<ExtendedIndex> {
        args.index
            .as_deref()
            .ok_or_else(|| anyhow!("--index is required"))?
            .parse()
            .map_err(|e| anyhow!("{e}"))
    };
    let need_params = || -> Result<Vec<Rational>> {
        parse_rational_list(
            args.params.as_deref().ok_or_else(|| anyhow!("--params is required"))?,
        )
    };
    let list_or_empty = |value: &Option<String>| -> Result<Vec<Rational>> {
        value.as_deref().map(parse_rational_list).unwrap_or_else(|| Ok(Vec::new()))
    };

    let output = match args.function.as_str() {
        "mzv" => truncated_mzv(&need_index()?, need_n()?).to_string(),
        "msw" => msw_rhs(&need_index()?, need_n()?).to_string(),
        "mpl" => truncated_mpl(&need_index()?, &need_z()?, need_n()?)?.to_string(),
        "hms-lhs" | "hms-rhs" => {
            let index = need_index()?;
            let x = parse_rational_list(
                args.x.as_deref().ok_or_else(|| anyhow!("--x is required"))?,
            )?;
            let n = need_n()?;
            if args.function == "hms-lhs" {
                hms_lhs(&index, &x, n)?.to_string()
            } else {
                hms_rhs(&index, &x, n)?.to_string()
            }
        }
        "zeta" => {
            let k = args.k.ok_or_else(|| anyhow!("--k is required"))?;
            truncated_zeta(k, need_n()?).to_string()
        }
        "tilde-zeta" => {
            let e = need_extended()?;
            tilde_zeta(&e.index, e.l, need_n()?).to_string()
        }
        "ak" => {
            let e = need_extended()?;
            let p = args.p.ok_or_else(|| anyhow!("--p is required"))?;
            arakawa_kaneko_truncated(&e.index, e.l, p).to_string()
        }
        "beta" | "disc-beta" => {
            let params = need_params()?;
            if params.len() != 2 {
                bail!("--params must list exactly a,b");
            }
            let p = BetaParams::new(params[0].clone(), params[1].clone(), need_n()?)?;
            if args.function == "beta" {
                truncated_beta(&p)?.to_string()
            } else {
                disc_beta_sum(&p)?.to_string()
            }
        }
        "multivar-beta" => {
            let params = need_params()?;
            let (closed, sum) = multivariate_disc_beta(&params, need_n()?)?;
            format!("closed = {closed}\nsum = {sum}")
        }
        "pfq" => {
            let upper = list_or_empty(&args.upper)?;
            let lower = list_or_empty(&args.lower)?;
            let p = HyperParams::new(upper, lower, need_z()?, need_n()?)?;
            trunc_pfq_bracket(&p)?.to_string()
        }
        "2f1-paren" => {
            let upper = list_or_empty(&args.upper)?;
            let lower = list_or_empty(&args.lower)?;
            if upper.len() != 2 || lower.len() != 1 {
                bail!("--upper must list a,b and --lower must list c");
            }
            trunc_2f1_paren(&upper[0], &upper[1], &lower[0], &need_z()?, need_n()?)?.to_string()
        }
        "terminating" => {
            let upper = list_or_empty(&args.upper)?;
            let lower = list_or_empty(&args.lower)?;
            terminating_pfq_at_1(&upper, &lower)?.to_string()
        }
        "t1f0" => {
            let params = need_params()?;
            if params.len() != 1 {
                bail!("--params must list exactly a");
            }
            t1f0_closed_form(&params[0], &need_z()?, need_n()?)?.to_string()
        }
        "chain-sum" => {
            let upper = list_or_empty(&args.upper)?;
            let lower = list_or_empty(&args.lower)?;
            chain_sum_pfp(&upper, &lower, need_n()?)?.to_string()
        }
        other => bail!("unknown function `{other}`"),
    };
    println!("{output}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode> {
    match args.set.as_str() {
        "i0" => {
            let r = args.r.ok_or_else(|| anyhow!("--r is required for i0"))?;
            for index in enumerate_i0(args.k, r, args.h) {
                println!("{index}");
            }
        }
        "i0tilde" => {
            let q = args.q.ok_or_else(|| anyhow!("--q is required for i0tilde"))?;
            for entry in enumerate_i0_tilde(args.k, q, args.h) {
                println!("{entry}");
            }
        }
        other => bail!("unknown set `{other}` (expected i0 or i0tilde)"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_grid(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| anyhow!("bad grid entry `{p}`: {e}")))
        .collect()
}

fn cmd_limits(args: LimitsArgs) -> Result<ExitCode> {
    let grid = parse_grid(&args.n_grid)?;
    if grid.is_empty() {
        bail!("empty N grid");
    }
    let reports = run_limits(&grid, args.tol);
    let format = ReportFormat::from_str(&args.format).map_err(|e| anyhow!(e))?;
    write_or_print(&emit_limit_report(&reports, format), args.out.as_ref())?;
    let passed = reports.iter().filter(|r| r.pass).count();
    eprintln!("limits: {passed}/{} passed", reports.len());
    Ok(if passed == reports.len() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_all(args: AllArgs) -> Result<ExitCode> {
    let (mut reports, limits) = run_all(args.seed)?;
    if !args.timing {
        redact_timing(&mut reports);
    }
    let format = ReportFormat::from_str(&args.format).map_err(|e| anyhow!(e))?;
    if let Some(out) = &args.out {
        write_or_print(&emit_report(&reports, format), Some(out))?;
    }
    if let Some(out) = &args.limits_out {
        write_or_print(&emit_limit_report(&limits, format), Some(out))?;
    }

    let mut by_identity: BTreeMap<&str, (usize, usize, u64)> = BTreeMap::new();
    for r in &reports {
        let entry = by_identity.entry(r.identity.as_str()).or_default();
        entry.0 += usize::from(r.equal);
        entry.1 += 1;
        entry.2 += r.rejected;
    }
    println!("identity                 equal/total  rejected");
    for (id, (equal, total, rejected)) in &by_identity {
        println!("{id:<24} {equal:>5}/{total:<6} {rejected:>8}");
    }
    let limit_passed = limits.iter().filter(|l| l.pass).count();
    println!("limits                   {limit_passed:>5}/{:<6}", limits.len());

    Ok(if all_passed(&reports, &limits) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
