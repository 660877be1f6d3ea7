//! Command-line front end.
//!
//! ```text
//! adomian zpoly <m> <k>
//! adomian apoly <m>
//! adomian count <m> [k]
//! adomian pendulum --a <angle> [--b <b>] --components <M> [--order <N>] [--eval t1,t2,…]
//! ```
//!
//! Every subcommand takes `--format text|json` and `--output <path>`.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::adm_series::{pendulum_solve_in, Domain, PendulumOutput, PendulumProblem};
use crate::adomian::{adomian, monomial_count, Format};
use crate::diophantine;
use crate::reduced::reduced_polynomial;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Invalid(#[from] crate::Error),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "adomian",
    version,
    about = "Reduced and Adomian polynomials, and a pendulum series solver"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    Rational,
    Float,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the reduced polynomial Z_{m,k}.
    Zpoly { m: usize, k: usize },
    /// Print the Adomian polynomial A_m.
    Apoly { m: usize },
    /// Print the number of monomials in Z_{m,k}, or per-k counts of A_m.
    Count { m: usize, k: Option<usize> },
    /// Solve u'' + b sin u = 0, u(0) = a, u'(0) = 0 as a truncated series.
    Pendulum {
        /// Initial angle: a number, or a multiple of pi such as `pi/2` or `-3pi/4`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        /// Number of components M beyond u_0.
        #[arg(long)]
        components: usize,
        /// Truncation degree N (default 2M).
        #[arg(long)]
        order: Option<usize>,
        /// Coefficient domain; by default rational when a is a multiple of pi/2.
        #[arg(long, value_enum)]
        domain: Option<DomainArg>,
        /// Comma-separated t values at which to sample u(t).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        eval: Vec<f64>,
    },
}

/// Parses a float, or `[±][c][*]pi[/d]`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let lower = t.to_ascii_lowercase();
    let Some(pos) = lower.find("pi") else {
        return Err(format!("cannot parse angle {s:?}"));
    };
    let (head, tail) = (&lower[..pos], &lower[pos + 2..]);
    let head = head.trim_end_matches('*');
    let factor = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h
            .parse::<f64>()
            .map_err(|_| format!("cannot parse angle {s:?}"))?,
    };
    let divisor = match tail {
        "" => 1.0,
        t => t
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(|| format!("cannot parse angle {s:?}"))?,
    };
    Ok(factor * PI / divisor)
}

/// Executes `cli`, writing to `--output` if given and to `out` otherwise.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let text = render(cli)?;
    match &cli.output {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Produces the full output of a command.
pub fn render(cli: &Cli) -> Result<String, CliError> {
    let format = Format::from(cli.format);
    let body = match &cli.command {
        Command::Zpoly { m, k } => {
            let z = reduced_polynomial(*m, *k)?;
            match format {
                Format::Text => z.to_string(),
                Format::Json => z.to_json(),
            }
        }
        Command::Apoly { m } => adomian(*m).render(format),
        Command::Count { m, k: Some(k) } => {
            if k > m {
                return Err(crate::Error::PowerExceedsSubscript { m: *m, k: *k }.into());
            }
            let n = diophantine::count(*m, *k)?;
            match format {
                Format::Text => n.to_string(),
                Format::Json => json!({ "m": m, "k": k, "count": n as u64 }).to_string(),
            }
        }
        Command::Count { m, k: None } => {
            let counts = (1..=*m)
                .map(|k| diophantine::count(*m, k))
                .collect::<crate::Result<Vec<_>>>()?;
            let total = monomial_count(*m)?;
            match format {
                Format::Text => {
                    let mut s: String = counts
                        .iter()
                        .enumerate()
                        .map(|(i, c)| format!("k={}: {c}\n", i + 1))
                        .collect();
                    s.push_str(&format!("total: {total}"));
                    s
                }
                Format::Json => {
                    let counts: Vec<u64> = counts.iter().map(|&c| c as u64).collect();
                    json!({ "m": m, "counts": counts, "total": total as u64 }).to_string()
                }
            }
        }
        Command::Pendulum {
            a,
            b,
            components,
            order,
            domain,
            eval,
        } => {
            let p = PendulumProblem::new(*a, *b, *components).with_order(order.unwrap_or(2 * components));
            let domain = domain.map(|d| match d {
                DomainArg::Rational => Domain::Rational,
                DomainArg::Float => Domain::Float,
            });
            let solved = pendulum_solve_in(&p, domain)?;
            match format {
                Format::Text => pendulum_text(&solved, eval),
                Format::Json => pendulum_json(&solved, eval),
            }
        }
    };
    Ok(body + "\n")
}

fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

fn pendulum_text(s: &PendulumOutput, eval: &[f64]) -> String {
    let p = s.problem();
    let mut lines = vec![
        format!("a = {}", float17(p.a)),
        format!("b = {}", float17(p.b)),
        format!("M = {}", p.components),
        format!("N = {}", p.order),
        format!(
            "domain = {}",
            match s.domain() {
                Domain::Rational => "rational",
                Domain::Float => "float",
            }
        ),
        "u(t) - a:".to_string(),
    ];
    for (n, c) in s.deviation_coefficients().iter().enumerate() {
        let c = match c {
            serde_json::Value::String(r) => r.clone(),
            v => float17(v.as_f64().unwrap_or(f64::NAN)),
        };
        lines.push(format!("t^{n}: {c}"));
    }
    if !eval.is_empty() {
        lines.push("# t u(t)".to_string());
        for &t in eval {
            lines.push(format!("{} {}", float17(t), float17(s.evaluate(t))));
        }
    }
    lines.join("\n")
}

fn pendulum_json(s: &PendulumOutput, eval: &[f64]) -> String {
    let mut v = serde_json::to_value(s.record()).expect("record serializes");
    if !eval.is_empty() {
        let samples: Vec<[f64; 2]> = eval.iter().map(|&t| [t, s.evaluate(t)]).collect();
        v["samples"] = json!(samples);
    }
    v.to_string()
}
