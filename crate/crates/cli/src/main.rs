use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hooktrace::exactmath::{parse_rational, rat, Rational};
use hooktrace::hookschur::hs_evaluate;
use hooktrace::partitions::Partition;
use hooktrace::superalgebra::{schur_rank, SuperSpace};
use hooktrace::symgroup::character;
use hooktrace::tracepoly::{p_polynomial, p_specialized};
use hooktrace::verify::{run_sweep, Suite, Summary, SweepConfig};
use hooktrace::Var;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hooktrace",
    version,
    about = "Exact trace polynomials of super Schur functors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single value.
    #[command(subcommand)]
    Compute(Compute),
    /// Run a verification sweep.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum Compute {
    /// Irreducible character value χ_λ(ρ).
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        rho: Partition,
    },
    /// Dimension of the irreducible Σ_n-module V_λ.
    Dimv {
        #[arg(long)]
        lambda: Partition,
    },
    /// Content polynomial ∏ (t + c), as a polynomial in t0 or evaluated at --t.
    Cp {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = rational)]
        t: Option<Rational>,
    },
    /// Hook Schur function HS_λ(x; y).
    Hs {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        d0: usize,
        #[arg(long)]
        d1: usize,
        /// Comma-separated even variables (default: all 1).
        #[arg(long, value_parser = rational, value_delimiter = ',')]
        x: Option<Vec<Rational>>,
        /// Comma-separated odd variables (default: all 1).
        #[arg(long, value_parser = rational, value_delimiter = ',')]
        y: Option<Vec<Rational>>,
    },
    /// Trace polynomial P(δ) in a0, a1, t0, t1.
    Ppoly {
        #[arg(long)]
        delta: Partition,
    },
    /// P(δ) at t0 = d0, t1 = -d1.
    Pspec {
        #[arg(long)]
        delta: Partition,
        #[arg(long)]
        d0: usize,
        #[arg(long)]
        d1: usize,
    },
    /// Rank of the Schur functor image on (d0|d1)^{⊗|λ|}.
    Rank {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        d0: usize,
        #[arg(long)]
        d1: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = suite)]
    suite: Suite,
    /// Largest |δ| in the sweep.
    #[arg(long, visible_alias = "max-n")]
    max_size: Option<usize>,
    /// Bound on d0 and d1 (on d0 + d1 for razmyslov).
    #[arg(long, default_value_t = 2)]
    max_d: usize,
    /// Restrict to a single partition.
    #[arg(long)]
    delta: Option<Partition>,
    #[arg(long)]
    d0: Option<usize>,
    #[arg(long)]
    d1: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: hooktrace::Error| e.to_string())
}

fn compute(cmd: Compute) -> anyhow::Result<String> {
    Ok(match cmd {
        Compute::Char { lambda, rho } => character(&lambda, &rho)?.to_string(),
        Compute::Dimv { lambda } => lambda.dim_irrep().to_string(),
        Compute::Cp { lambda, t: None } => lambda.content_polynomial(Var::T0).to_string(),
        Compute::Cp { lambda, t: Some(t) } => render(&lambda.content_polynomial_at(&t)),
        Compute::Hs {
            lambda,
            d0,
            d1,
            x,
            y,
        } => {
            let x = x.unwrap_or_else(|| vec![rat(1); d0]);
            let y = y.unwrap_or_else(|| vec![rat(1); d1]);
            if x.len() != d0 || y.len() != d1 {
                bail!(
                    "expected {d0} x values and {d1} y values, got {} and {}",
                    x.len(),
                    y.len()
                );
            }
            render(&hs_evaluate(&lambda, &x, &y))
        }
        Compute::Ppoly { delta } => p_polynomial(&delta)?.to_string(),
        Compute::Pspec { delta, d0, d1 } => p_specialized(&delta, d0, d1)?.to_string(),
        Compute::Rank { lambda, d0, d1 } => {
            let r = schur_rank(&lambda, SuperSpace::new(d0, d1))?;
            format!("total={} even={} odd={}", r.total, r.even_dim, r.odd_dim)
        }
    })
}

fn render(q: &Rational) -> String {
    hooktrace::exactmath::render_rational(q)
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

/// Returns whether every record passed.
fn verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let mut cfg = SweepConfig::new(args.suite);
    if let Some(n) = args.max_size {
        cfg.max_size = n;
    }
    if let Some(t) = args.trials {
        cfg.trials = t;
    }
    cfg.max_d = args.max_d;
    cfg.delta = args.delta;
    cfg.d0 = args.d0;
    cfg.d1 = args.d1;
    cfg.seed = args.seed;
    cfg.inject_fault = args.inject_fault;

    let records = run_sweep(&cfg)?;
    let summary = Summary::of(args.suite, args.seed, &records);
    let mut out = BufWriter::new(io::stdout().lock());
    for r in &records {
        match args.format {
            Format::Text => writeln!(out, "{r}")?,
            Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
        }
    }
    match args.format {
        Format::Text => writeln!(out, "{summary}")?,
        Format::Json => {
            let line = SummaryLine { summary: &summary };
            writeln!(out, "{}", serde_json::to_string(&line)?)?
        }
    }
    out.flush().context("writing report")?;
    Ok(summary.failed == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(cmd) => compute(cmd).map(|s| {
            println!("{s}");
            true
        }),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
