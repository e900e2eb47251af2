mod checks;
mod report;
mod scan;

use anyhow::Context;
use checks::{registry, run_checks, SuiteConfig};
use clap::{Parser, Subcommand};
use report::to_jsonl;
use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

/// Verification harness for the exotic-sphere geometry library.
///
/// Flags are mirrored by environment variables with the GMLAB_ prefix
/// (GMLAB_SEED, GMLAB_SAMPLES, GMLAB_FILTER, GMLAB_OUT, GMLAB_MU, GMLAB_NU,
/// GMLAB_TOL); command-line flags win.
#[derive(Parser)]
#[command(name = "gmlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered checks and write a JSON-lines report.
    Verify {
        /// Base seed of the per-check random streams.
        #[arg(long)]
        seed: Option<u64>,
        /// Sample budget per check.
        #[arg(long)]
        samples: Option<usize>,
        /// Metric parameter mu (repeatable, paired with --nu in order).
        #[arg(long = "mu")]
        mu: Vec<f64>,
        /// Metric parameter nu (repeatable, paired with --mu in order).
        #[arg(long = "nu")]
        nu: Vec<f64>,
        /// Glob over check ids (e.g. 'diffeo.*').
        #[arg(long)]
        filter: Option<String>,
        /// Report path (JSON lines; stdout table is always printed).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Tolerance override check=value (repeatable).
        #[arg(long = "tol")]
        tol: Vec<String>,
        /// Run everything (default when no filter is given).
        #[arg(long)]
        all: bool,
    },
    /// Emit a curvature scan as CSV.
    Scan {
        /// One of sigma2, sigma31, sigma32, l3, sigma30, p3, hemisphere.
        #[arg(long)]
        metric: String,
        #[arg(long, default_value_t = 0.5)]
        mu: f64,
        #[arg(long, default_value_t = 0.5)]
        nu: f64,
        /// Grid resolution per axis.
        #[arg(long, default_value_t = 20)]
        grid: usize,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every registered check with its anchor.
    List,
}

fn env_var<T: std::str::FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn env_list(name: &str) -> Vec<f64> {
    std::env::var(name)
        .ok()
        .map(|v| v.split(',').filter_map(|s| s.trim().parse().ok()).collect())
        .unwrap_or_default()
}

fn parse_tols(args: &[String]) -> anyhow::Result<HashMap<String, f64>> {
    let mut map = HashMap::new();
    let mut all: Vec<String> = args.to_vec();
    if let Ok(env) = std::env::var("GMLAB_TOL") {
        for part in env.split(',').filter(|s| !s.trim().is_empty()) {
            all.push(part.trim().to_string());
        }
    }
    for spec in all {
        let (k, v) = spec
            .split_once('=')
            .with_context(|| format!("tolerance override '{spec}' is not check=value"))?;
        let value: f64 = v
            .parse()
            .with_context(|| format!("tolerance '{v}' is not a number"))?;
        map.insert(k.to_string(), value);
    }
    Ok(map)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    seed: Option<u64>,
    samples: Option<usize>,
    mu: Vec<f64>,
    nu: Vec<f64>,
    filter: Option<String>,
    out: Option<PathBuf>,
    tol: Vec<String>,
) -> anyhow::Result<ExitCode> {
    let mut cfg = SuiteConfig::default();
    cfg.seed = seed.or_else(|| env_var("GMLAB_SEED")).unwrap_or(cfg.seed);
    cfg.samples = samples
        .or_else(|| env_var("GMLAB_SAMPLES"))
        .unwrap_or(cfg.samples);
    let (mu, nu) = if mu.is_empty() && nu.is_empty() {
        (env_list("GMLAB_MU"), env_list("GMLAB_NU"))
    } else {
        (mu, nu)
    };
    if !mu.is_empty() || !nu.is_empty() {
        if mu.len() != nu.len() {
            anyhow::bail!("--mu and --nu must be given the same number of times");
        }
        cfg.mu_nu = mu.into_iter().zip(nu).collect();
    }
    cfg.tol_overrides = parse_tols(&tol)?;
    let filter = filter.or_else(|| std::env::var("GMLAB_FILTER").ok());
    let out = out.or_else(|| std::env::var("GMLAB_OUT").ok().map(PathBuf::from));

    let entries = match run_checks(&cfg, filter.as_deref()) {
        Ok(entries) => entries,
        Err(msg) => {
            eprintln!("usage error: {msg}");
            return Ok(ExitCode::from(2));
        }
    };

    let mut failed = 0;
    for e in &entries {
        let status = if e.passed() { "pass" } else { "FAIL" };
        if !e.passed() {
            failed += 1;
        }
        let rel = match e.bound {
            report::BoundKind::Upper => "<",
            report::BoundKind::Lower => ">",
        };
        println!(
            "{status}  {:<34} residual {:>10.3e} {rel} {:>8.1e}  n={:<6} {:>7.1} ms  {}",
            e.check, e.residual, e.threshold, e.samples, e.wall_ms, e.anchor
        );
    }
    println!(
        "{} checks, {} failed (seed {}, samples {})",
        entries.len(),
        failed,
        cfg.seed,
        cfg.samples
    );
    if let Some(path) = out {
        std::fs::write(&path, to_jsonl(&entries))
            .with_context(|| format!("cannot write report to {}", path.display()))?;
        println!("report written to {}", path.display());
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> anyhow::Result<ExitCode> {
    match Cli::parse().command {
        Command::Verify {
            seed,
            samples,
            mu,
            nu,
            filter,
            out,
            tol,
            all: _,
        } => verify(seed, samples, mu, nu, filter, out, tol),
        Command::Scan {
            metric,
            mu,
            nu,
            grid,
            out,
        } => {
            let spec = scan::ScanSpec {
                metric_id: metric,
                mu,
                nu,
                grid,
            };
            match scan::curvature_scan(&spec) {
                Ok(csv) => {
                    match out {
                        Some(path) => {
                            std::fs::write(&path, csv)
                                .with_context(|| format!("cannot write {}", path.display()))?;
                            if let Ok((lo, hi)) = scan::scan_extremes(&spec) {
                                println!(
                                    "scan written to {} (global K range [{lo:.6}, {hi:.6}])",
                                    path.display()
                                );
                            }
                        }
                        None => print!("{csv}"),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(msg) => {
                    eprintln!("usage error: {msg}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::List => {
            for def in registry() {
                println!("{:<34} {}", def.id, def.anchor);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
