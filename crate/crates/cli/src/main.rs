//! `verify`: runs the exact-arithmetic checks and reports the outcome.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use v22_core::catalog::Catalog;
use v22_core::checks::{self, RunConfig, UChoice};
use v22_core::exactalg::parse::parse_poly_in;
use v22_core::exactalg::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Parser, Debug)]
#[command(name = "verify", version, about = "Exact verification of the computations for the quadric family Q_u")]
struct Cli {
    /// Run only these checks (repeatable); see --list.
    #[arg(long = "check", value_name = "ID")]
    checks: Vec<String>,
    /// Specialize to u = P/Q (repeatable); without it u stays a formal parameter.
    #[arg(long = "u", value_name = "P/Q", value_parser = parse_rat, allow_hyphen_values = true)]
    u: Vec<Rat>,
    /// Accept u = 1, skipping every check that depends on the quadric family.
    #[arg(long)]
    allow_singular: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Normalize a polynomial in x, y, z, t, w, mu and u; `{name}` inserts a catalog entry.
    #[arg(long, value_name = "EXPR")]
    eval: Option<String>,
    /// List check ids with descriptions.
    #[arg(long)]
    list: bool,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|e| format!("`{s}` is not a rational number P/Q: {e}"))
}

#[derive(Serialize)]
struct EvalOut {
    u: String,
    value: String,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        std::process::exit(0);
    }
}

fn print_json<T: Serialize>(v: &T) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn eval(cli: &Cli, config: &RunConfig, expr: &str) -> ExitCode {
    let cat = Catalog::standard();
    let text = match cat.expand_refs(expr) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    let vars = cat.varset("P4MU").expect("shipped variable set").clone();
    let p = match parse_poly_in(&text, &vars) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let mut outs = Vec::new();
    for u in config.u_choices() {
        let v = match &u {
            UChoice::Generic => Ok(p.clone()),
            UChoice::Value(r) => p.subst_u(&v22_core::exactalg::Scalar::Rat(r.clone())),
        };
        match v {
            Ok(v) => outs.push(EvalOut { u: u.label(), value: v.to_string() }),
            Err(e) => return usage(format!("at u = {}: {e}", u.label())),
        }
    }
    match cli.format {
        Format::Text => {
            for o in &outs {
                emit(&format!("[u = {}] {}\n", o.u, o.value));
            }
        }
        Format::Structured => print_json(&outs),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list {
        match cli.format {
            Format::Text => {
                for c in checks::list_checks() {
                    emit(&format!("{:<32} {}\n", c.id, c.description));
                }
            }
            Format::Structured => print_json(&checks::list_checks()),
        }
        return ExitCode::SUCCESS;
    }
    let config = RunConfig { ids: cli.checks.clone(), u: cli.u.clone(), allow_singular: cli.allow_singular };
    if let Err(e) = config.validate() {
        return usage(e);
    }
    if let Some(expr) = &cli.eval {
        return eval(&cli, &config, expr);
    }
    let tasks = match checks::plan(&config) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let results = pool.install(|| tasks.par_iter().map(|t| t.run()).collect::<Vec<_>>());
    let report = checks::assemble(&config, &tasks, results);
    match cli.format {
        Format::Text => emit(&report.to_text()),
        Format::Structured => print_json(&report),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
