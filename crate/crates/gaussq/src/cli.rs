//! The `gaussq` command line. Deterministic output goes to `out`; timings
//! and diagnostics go to `err`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gaussq_core::qpolyx::{theta_alpha_zero, theta_solve};
use gaussq_core::{Error as CoreError, HalfInt, RationalFunction};
use serde_json::json;

use crate::expr::{eval, parse};
use crate::format::{expr_latex, rational_json, xpoly_json, xpoly_latex};
use crate::identities::{run, run_all, IdentityReport, Overrides, Scale, Status};
use crate::tables::{alpha2_of, build, TableKind};
use crate::AppError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gaussq", version, about = "Exact checks of Gaussian-binomial and q-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EvalFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Latex,
    Json,
}

fn parse_scale(s: &str) -> Result<Scale, String> {
    s.parse().map_err(|e: AppError| e.to_string())
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

fn parse_table(s: &str) -> Result<TableKind, String> {
    s.parse().map_err(|e: AppError| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one identity over its parameter grid.
    Verify {
        name: String,
        /// Upper end of every ranged parameter.
        #[arg(long)]
        n_max: Option<i64>,
        /// Truncation order for series checks.
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, env = "QSERIES_SCALE", default_value = "default", value_parser = parse_scale)]
        scale: Scale,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Corrupt the first comparison at every point (harness self-test).
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Check every registered identity.
    VerifyAll {
        #[arg(long, env = "QSERIES_SCALE", default_value = "default", value_parser = parse_scale)]
        scale: Scale,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate an expression exactly.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: EvalFormat,
    },
    /// Print a table: s, sigma, ccoef, theta or gauss.
    Table {
        #[arg(value_parser = parse_table)]
        kind: TableKind,
        #[arg(long)]
        n_max: Option<usize>,
        /// Integer or n/2; the r of s_{N|r} or the alpha of theta.
        #[arg(long, default_value = "0", value_parser = parse_half)]
        alpha: HalfInt,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Solve for the connection coefficients theta_k and check the residuals.
    Theta {
        #[arg(long, value_parser = parse_half)]
        alpha: HalfInt,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), AppError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn print_report(out: &mut dyn Write, r: &IdentityReport) -> Result<(), AppError> {
    write!(out, "{} {}", r.status, r.key())?;
    if let Some(note) = &r.note {
        write!(out, " ({note})")?;
    }
    writeln!(out)?;
    if let Some(w) = &r.witness {
        writeln!(out, "  witness: {}", w.label)?;
        writeln!(out, "    lhs = {}", w.lhs)?;
        writeln!(out, "    rhs = {}", w.rhs)?;
    }
    Ok(())
}

fn verify(
    out: &mut dyn Write,
    err: &mut dyn Write,
    name: &str,
    scale: Scale,
    ov: Overrides,
    json: Option<&Path>,
) -> Result<i32, AppError> {
    let start = Instant::now();
    let reports = run(name, scale, &ov)?;
    for r in &reports {
        print_report(out, r)?;
    }
    if let Some(path) = json {
        write_json(path, &reports)?;
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    writeln!(err, "{name}: {} points, {failed} failed, {:.3}s", reports.len(), start.elapsed().as_secs_f64())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn verify_all(out: &mut dyn Write, err: &mut dyn Write, scale: Scale, json: Option<&Path>) -> Result<i32, AppError> {
    let start = Instant::now();
    let summary = run_all(scale, None);
    let mut i = 0;
    while i < summary.reports.len() {
        let name = &summary.reports[i].name;
        let group: Vec<&IdentityReport> = summary.reports[i..].iter().take_while(|r| &r.name == name).collect();
        i += group.len();
        let failed: Vec<_> = group.iter().filter(|r| r.status == Status::Fail).collect();
        let skipped = group.iter().filter(|r| r.status == Status::Skipped).count();
        let status = if failed.is_empty() { "pass" } else { "fail" };
        write!(out, "{status} {name} ({} points", group.len())?;
        if skipped > 0 {
            write!(out, ", {skipped} skipped")?;
        }
        writeln!(out, ")")?;
        for r in failed {
            print_report(out, r)?;
        }
    }
    writeln!(
        out,
        "{} identities at scale {}: {} points passed, {} failed, {} skipped",
        summary.identities, summary.scale, summary.passed, summary.failed, summary.skipped
    )?;
    if let Some(path) = json {
        write_json(path, &summary.reports)?;
    }
    writeln!(err, "verify-all: {:.3}s; slowest points:", start.elapsed().as_secs_f64())?;
    for r in summary.slowest(5) {
        writeln!(err, "  {:>9.3}s  {}", r.elapsed.as_secs_f64(), r.key())?;
    }
    Ok(if summary.ok() { EXIT_OK } else { EXIT_FAILED })
}

fn eval_cmd(out: &mut dyn Write, src: &str, format: EvalFormat) -> Result<i32, AppError> {
    let ast = parse(src)?;
    let value = eval(&ast)?;
    match format {
        EvalFormat::Text => writeln!(out, "{value}")?,
        EvalFormat::Json => writeln!(out, "{}", serde_json::to_string(&xpoly_json(&value))?)?,
        EvalFormat::Latex => writeln!(out, "{} = {}", expr_latex(&ast), xpoly_latex(&value))?,
    }
    Ok(EXIT_OK)
}

fn table_cmd(out: &mut dyn Write, kind: TableKind, n_max: Option<usize>, alpha: HalfInt, format: TableFormat) -> Result<i32, AppError> {
    let table = build(kind, n_max.unwrap_or(kind.default_n_max()), alpha)?;
    match format {
        TableFormat::Csv => write!(out, "{}", table.to_csv()?)?,
        TableFormat::Latex => write!(out, "{}", table.to_latex())?,
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&table.to_json())?)?,
    }
    Ok(EXIT_OK)
}

fn theta_cmd(out: &mut dyn Write, err: &mut dyn Write, alpha: HalfInt, n_max: usize, json: Option<&Path>) -> Result<i32, AppError> {
    let alpha2 = alpha2_of(alpha)?;
    let start = Instant::now();
    let (status, thetas, message) = match theta_solve(n_max, alpha2) {
        Ok(t) => ("pass", t, None),
        Err(e @ CoreError::ThetaInconsistent { .. }) => ("fail", Vec::new(), Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let thetas: Vec<RationalFunction> = thetas.into_iter().map(RationalFunction::reduced).collect();
    for (k, t) in thetas.iter().enumerate() {
        writeln!(out, "theta_{k} = {t}")?;
    }
    match &message {
        None => writeln!(out, "pass: residuals vanish for all N <= {n_max}; theta_k agree for every N <= {n_max}")?,
        Some(m) => writeln!(out, "fail: {m}")?,
    }
    let alpha_zero_match = (alpha2 == 0 && message.is_none())
        .then(|| thetas.iter().enumerate().all(|(k, t)| *t == RationalFunction::from_poly(theta_alpha_zero(k))));
    if let Some(m) = alpha_zero_match {
        writeln!(out, "theta_k = (-1)^k G_k for k <= {n_max}: {}", if m { "yes" } else { "no" })?;
    }
    if let Some(path) = json {
        let body = json!({
            "alpha": alpha.to_string(),
            "n_max": n_max,
            "status": status,
            "message": message,
            "thetas": thetas.iter().enumerate().map(|(k, t)| json!({
                "k": k,
                "text": t.to_string(),
                "value": rational_json(t),
            })).collect::<Vec<_>>(),
            "matches_alpha_zero_closed_form": alpha_zero_match,
        });
        write_json(path, &body)?;
    }
    writeln!(err, "theta: {:.3}s", start.elapsed().as_secs_f64())?;
    let ok = message.is_none() && alpha_zero_match != Some(false);
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, AppError> {
    match cli.command {
        Command::Verify { name, n_max, order, scale, json, mutate } => {
            let ov = Overrides { n_max, order, mutate, ..Overrides::default() };
            verify(out, err, &name, scale, ov, json.as_deref())
        }
        Command::VerifyAll { scale, json } => verify_all(out, err, scale, json.as_deref()),
        Command::Eval { expr, format } => eval_cmd(out, &expr, format),
        Command::Table { kind, n_max, alpha, format } => table_cmd(out, kind, n_max, alpha, format),
        Command::Theta { alpha, n_max, json } => theta_cmd(out, err, alpha, n_max, json.as_deref()),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                AppError::Io(_) | AppError::Json(_) | AppError::Csv(_) => EXIT_FAILED,
                AppError::Core(CoreError::ThetaInconsistent { .. }) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with(std::iter::once("gaussq").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_formats() {
        assert_eq!(run_cli(&["eval", "qbinom(3,5)"]), (0, "0\n".into(), String::new()));
        let (code, out, _) = run_cli(&["eval", "qbinom(2,1)", "--format", "json"]);
        assert_eq!((code, out.as_str()), (0, "[[[0,\"1\"],[2,\"1\"]]]\n"));
        let (_, out, _) = run_cli(&["eval", "qbinom(2,1)", "--format", "latex"]);
        assert_eq!(out, "\\begin{bmatrix} 2 \\\\ 1 \\end{bmatrix}_{q} = 1 + q\n");
    }

    #[test]
    fn usage_and_parse_errors_exit_2() {
        assert_eq!(run_cli(&["eval", "qint(2"]).0, 2);
        assert_eq!(run_cli(&["eval", "x^(-1)"]).0, 2);
        assert_eq!(run_cli(&["verify", "no-such-identity"]).0, 2);
        assert_eq!(run_cli(&["frobnicate"]).0, 2);
        assert_eq!(run_cli(&["table", "nope"]).0, 2);
        assert_eq!(run_cli(&["theta", "--alpha", "1/3", "--n-max", "3"]).0, 2);
    }

    #[test]
    fn verify_prints_one_line_per_point() {
        let (code, out, err) = run_cli(&["verify", "gauss-1.7", "--n-max", "20"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 20);
        assert!(out.lines().all(|l| l.starts_with("pass gauss-1.7 N=")));
        assert!(err.contains("20 points"));
    }

    #[test]
    fn theta_alpha_zero() {
        let (code, out, _) = run_cli(&["theta", "--alpha", "0", "--n-max", "6"]);
        assert_eq!(code, 0);
        assert!(out.contains("theta_2 = 1 - 1*q^1\n"));
        assert!(out.ends_with("(-1)^k G_k for k <= 6: yes\n"));
    }
}
