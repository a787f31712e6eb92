//! `qci verify | scan | lift`: run the verification suites and print reports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qci_core::algebra::{make_qci, parameter_grid};
use qci_core::lift::{coefficient_strings, normalized_f, verify_lift};
use qci_core::report::{sort_keys, Report};
use qci_core::verify::{scan_row, verify_qci, ScanRow};
use qci_core::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

const DEFAULT_P_LIMIT: u64 = 13;
const LARGE_P_LIMIT: u64 = 31;

#[derive(Parser)]
#[command(name = "qci", version, about = "Exact checks for quantum complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check for one algebra
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u64,
        /// q of multiplicative order e; default g^((p-1)/e) for the least primitive root g
        #[arg(long)]
        q: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Summary table over all (p, e) with p <= p-max
    Scan {
        #[arg(long = "p-max")]
        p_max: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Chebyshev polynomial and lifted algebra checks
    Lift {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write sorted-key JSON to PATH, or to stdout when PATH is omitted or "-"
    #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    json: Option<PathBuf>,
    /// Raise the prime limit from 13 to 31 (slow)
    #[arg(long)]
    allow_large: bool,
}

enum Failure {
    Invalid(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(m) => Failure::Invalid(m),
            other => Failure::Io(other.to_string()),
        }
    }
}

fn check_limit(p: u64, out: &Output) -> Result<(), Failure> {
    let limit = if out.allow_large { LARGE_P_LIMIT } else { DEFAULT_P_LIMIT };
    if p > limit {
        let hint = if out.allow_large { "" } else { " (use --allow-large to go up to 31)" };
        return Err(Failure::Invalid(format!("p = {p} exceeds the limit {limit}{hint}")));
    }
    if p > DEFAULT_P_LIMIT {
        eprintln!("warning: p = {p} is above {DEFAULT_P_LIMIT}; expect long runtimes and large memory use");
    }
    Ok(())
}

fn emit(out: &Output, value: &Value, text: &str) -> Result<(), Failure> {
    match out.json.as_deref() {
        None => print!("{text}"),
        Some(path) => {
            let body = serde_json::to_string_pretty(&sort_keys(value.clone())).expect("serializable") + "\n";
            if path.as_os_str() == "-" {
                print!("{body}");
            } else {
                fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                print!("{text}");
            }
        }
    }
    Ok(())
}

fn verdict(r: &Report) -> ExitCode {
    if r.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn summary_line(r: &Report) -> String {
    let failed = r.failures().count();
    format!("{} checks, {} passed, {} failed\n", r.checks.len(), r.checks.len() - failed, failed)
}

fn run_verify(p: u64, e: u64, q: Option<u64>, out: &Output) -> Result<ExitCode, Failure> {
    let a = make_qci(p, e, q)?;
    check_limit(p, out)?;
    let r = verify_qci(&a)?;
    emit(out, &r.to_value(), &(r.to_text() + &summary_line(&r)))?;
    Ok(verdict(&r))
}

fn scan_table(rows: &[ScanRow]) -> String {
    let mut s = format!(
        "{:>3} {:>3} {:>3} {:>6} {:>6} {:>7} {:>4} {:>7} {:>7} {:>8}\n",
        "p", "e", "q", "dim L", "dim L'", "Z(L')", "soc", "brandt", "socle", "abelian"
    );
    for r in rows {
        s.push_str(&format!(
            "{:>3} {:>3} {:>3} {:>6} {:>6} {:>7} {:>4} {:>7} {:>7} {:>8}\n",
            r.p, r.e, r.q, r.dim_l, r.dim_l_prime, r.dim_center_l_prime, r.dim_soc, r.brandt_bound, r.socle_bound, r.abelian
        ));
    }
    s
}

fn run_scan(p_max: u64, out: &Output) -> Result<ExitCode, Failure> {
    if p_max < 3 {
        return Err(Failure::Invalid(format!("p-max = {p_max} must be at least 3")));
    }
    check_limit(p_max, out)?;
    // rayon keeps the input order when collecting
    let rows = parameter_grid(p_max)
        .into_par_iter()
        .map(|(p, e)| scan_row(p, e))
        .collect::<Result<Vec<_>, _>>()?;
    let value = json!({"p_max": p_max, "rows": rows});
    emit(out, &value, &scan_table(&rows))?;
    Ok(ExitCode::SUCCESS)
}

fn run_lift(p: u64, out: &Output) -> Result<ExitCode, Failure> {
    let r = verify_lift(p)?;
    let f = normalized_f(p as usize);
    let computed = |id: &str| r.get(id).map(|c| c.computed.clone()).unwrap_or(Value::Null);
    let not_symmetric = r.get("lift.d_not_symmetric").is_some_and(|c| c.pass);
    let mut value = r.to_value();
    let obj = value.as_object_mut().expect("report is an object");
    obj.insert("f_p".into(), json!({"coefficients": coefficient_strings(&f), "polynomial": f.to_string()}));
    obj.insert("commutator_dim".into(), computed("lift.commutator_dim"));
    obj.insert("quotient_rank".into(), computed("lift.quotient_rank"));
    obj.insert("not_symmetric".into(), json!(not_symmetric));
    let text = format!(
        "f_{p} = {f}\ncoefficients (constant term first): {}\ncommutator dim: {}\nquotient rank: {}\nk⊗D symmetric: {}\n{}{}",
        coefficient_strings(&f).join(", "),
        computed("lift.commutator_dim"),
        computed("lift.quotient_rank"),
        if not_symmetric { "no" } else { "undetermined" },
        r.to_text(),
        summary_line(&r)
    );
    emit(out, &value, &text)?;
    Ok(verdict(&r))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { p, e, q, out } => run_verify(*p, *e, *q, out),
        Command::Scan { p_max, out } => run_scan(*p_max, out),
        Command::Lift { p, out } => run_lift(*p, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
