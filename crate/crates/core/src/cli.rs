//! Command-line front end.
//!
//! Exit codes: 0 success, 1 an asserted claim or identity failed, 2 usage or
//! domain error, 3 numerical failure.

use crate::bounds::{self, bound, list_bounds, Side, Target};
use crate::certify::{self, linspace, logspace, CertificateReport, GridSpec, Status};
use crate::compare::compare_bounds;
use crate::error::Error;
use crate::identities::{self, run_identities};
use crate::ptrig::{eval, EvalMethod, FnId, PtrigInput};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ptrig", version, about = "Generalized inverse trigonometric functions and their inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[arg(long = "fn")]
        func: String,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value = "auto")]
        method: String,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate a registered bound, or list the registry.
    Bound {
        #[arg(long, required_unless_present = "list")]
        id: Option<String>,
        #[arg(long, required_unless_present = "list")]
        p: Option<f64>,
        #[arg(long, required_unless_present = "list")]
        x: Option<f64>,
        #[arg(long, conflicts_with = "id")]
        list: bool,
        #[arg(long, requires = "list")]
        target: Option<String>,
        #[arg(long, requires = "list")]
        side: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Certify one claim, or `all`.
    Certify {
        #[arg(long)]
        claim: String,
        /// `lo:hi:n[:log]` or a comma-separated list.
        #[arg(long)]
        p_grid: Option<String>,
        #[arg(long)]
        x_grid: Option<String>,
        /// Per-axis grid for two-variable claims.
        #[arg(long)]
        pair_grid: Option<String>,
        #[arg(long, default_value_t = certify::DEFAULT_MARGIN_FACTOR)]
        margin_factor: f64,
        #[arg(long, default_value_t = certify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = certify::DEFAULT_SAMPLES)]
        samples: usize,
        /// Skip the quadrature cross-check of every function value.
        #[arg(long)]
        no_dual_route: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate which of several same-side bounds is tightest.
    Compare {
        #[arg(long)]
        target: String,
        /// Comma-separated bound ids.
        #[arg(long, value_delimiter = ',', required = true)]
        bounds: Vec<String>,
        #[arg(long, default_value = "1.5,2,3")]
        p_grid: String,
        #[arg(long, default_value = "0.01:0.99:99")]
        x_grid: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run the identity self-test suite.
    Identities {
        #[arg(long, default_value_t = identities::DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
}

/// A failure with its exit code and one-line message.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_usage() { EXIT_USAGE } else { EXIT_NUMERICAL };
        CliError { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: message.into() }
}

/// Parses `lo:hi:n[:log]` or a comma-separated list of numbers.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = || usage(format!("bad grid `{s}`: expected lo:hi:n[:log] or a comma-separated list"));
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let log = match parts.as_slice() {
            [_, _, _] => false,
            [_, _, _, "log"] => true,
            _ => return Err(bad()),
        };
        let (lo, hi) = (num(parts[0])?, num(parts[1])?);
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if n == 0 || !(lo.is_finite() && hi.is_finite()) || (n > 1 && lo >= hi) || (log && lo <= 0.0) {
            return Err(bad());
        }
        Ok(match (n, log) {
            (1, _) => vec![lo],
            (_, true) => logspace(lo, hi, n),
            (_, false) => linspace(lo, hi, n),
        })
    } else {
        let v = s.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
        if v.is_empty() || v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(usage(format!("grid `{s}` must be strictly increasing")));
        }
        Ok(v)
    }
}

/// Writes through a temporary file in the destination directory, so a
/// failed run never leaves a partial file behind.
fn emit(out: &Option<PathBuf>, content: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError { code: EXIT_NUMERICAL, message: format!("write failed: {e}") };
    match out {
        None => stdout.write_all(content.as_bytes()).map_err(io),
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(content.as_bytes()).map_err(io)?;
            tmp.persist(path).map_err(|e| io(e.error))?;
            Ok(())
        }
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn num(v: f64) -> String {
    format!("{v:?}")
}

fn cmd_eval(
    func: &str,
    p: f64,
    x: f64,
    method: &str,
    output: &Output,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let func: FnId = func.parse()?;
    let method: EvalMethod = method.parse()?;
    let r = eval(PtrigInput::new(func, p, x)?, method)?;
    let content = match output.format.unwrap_or(Format::Text) {
        Format::Json => json(&r),
        Format::Csv => format!(
            "fn,p,x,value,abs_err,method,work\n{func},{},{},{},{},{},{}\n",
            num(p),
            num(x),
            num(r.value),
            num(r.abs_err),
            r.method,
            r.work
        ),
        Format::Text => format!(
            "{func}(p={p}, x={x}) = {}\nabs_err = {:e}\nmethod = {}\nwork = {}\n",
            num(r.value),
            r.abs_err,
            r.method,
            r.work
        ),
    };
    emit(&output.out, &content, stdout)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BoundValue<'a> {
    id: &'a str,
    target: Target,
    side: Side,
    p: f64,
    x: f64,
    value: f64,
    abs_err: f64,
}

fn cmd_bound(
    id: Option<&str>,
    p: Option<f64>,
    x: Option<f64>,
    target: Option<&str>,
    side: Option<&str>,
    output: &Output,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let format = output.format.unwrap_or(Format::Text);
    let content = if let (Some(id), Some(p), Some(x)) = (id, p, x) {
        let spec = bound(id)?;
        let v = spec.eval(p, x)?;
        let row = BoundValue { id, target: spec.target, side: spec.side, p, x, value: v.value, abs_err: v.err };
        match format {
            Format::Json => json(&row),
            Format::Csv => format!(
                "id,target,side,p,x,value,abs_err\n{id},{},{},{},{},{},{}\n",
                row.target,
                row.side,
                num(p),
                num(x),
                num(v.value),
                num(v.err)
            ),
            Format::Text => format!("{id}(p={p}, x={x}) = {}\nabs_err = {:e}\n", num(v.value), v.err),
        }
    } else {
        let target = target.map(str::parse::<Target>).transpose()?;
        let side = side.map(str::parse::<Side>).transpose()?;
        let specs = list_bounds(target, side);
        match format {
            Format::Json => json(&specs),
            Format::Csv => {
                let mut s = String::from("id,target,side,p_domain,formula\n");
                for b in &specs {
                    s.push_str(&format!("{},{},{},\"{}\",\"{}\"\n", b.id, b.target, b.side, b.p_domain, b.formula));
                }
                s
            }
            Format::Text => {
                let quarantined = bounds::quarantined();
                let mut s = String::new();
                for b in &specs {
                    let flag = if quarantined.contains(&b.id) { "  [wrong side on pre-check]" } else { "" };
                    s.push_str(&format!(
                        "{:<24} {:<8} {:<6} p in {:<12} {}{flag}\n",
                        b.id, b.target, b.side, b.p_domain, b.formula
                    ));
                }
                s
            }
        }
    };
    emit(&output.out, &content, stdout)?;
    Ok(EXIT_OK)
}

fn report_csv(reports: &[CertificateReport]) -> String {
    let mut s = String::from(
        "claim_id,policy,status,points_checked,skipped,unresolved,min_margin,max_error_budget,violations_total\n",
    );
    for r in reports {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.claim_id,
            json_name(&r.policy),
            json_name(&r.status),
            r.points_checked,
            r.skipped,
            r.unresolved,
            r.min_margin.map(num).unwrap_or_default(),
            num(r.max_error_budget),
            r.violations_total
        ));
    }
    s
}

fn json_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn report_text(reports: &[CertificateReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let margin = r.min_margin.map(|m| format!("{m:.3e}")).unwrap_or_else(|| "-".into());
        s.push_str(&format!(
            "{:<28} {:<9} points={:<7} skipped={:<4} min_margin={:<11} budget={:.1e} violations={}\n",
            r.claim_id,
            json_name(&r.status),
            r.points_checked,
            r.skipped,
            margin,
            r.max_error_budget,
            r.violations_total
        ));
        for n in &r.notes {
            s.push_str(&format!("    note: {n}\n"));
        }
        if r.status == Status::Reported && r.outcome == certify::Outcome::Violated {
            s.push_str("    reported claim does not hold on this grid\n");
        }
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_certify(
    claim: &str,
    p_grid: Option<&str>,
    x_grid: Option<&str>,
    pair_grid: Option<&str>,
    margin_factor: f64,
    seed: u64,
    samples: usize,
    dual: bool,
    output: &Output,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let grid = GridSpec {
        p_values: p_grid.map(parse_grid).transpose()?,
        x_values: x_grid.map(parse_grid).transpose()?,
        pair_values: pair_grid.map(parse_grid).transpose()?,
        margin_factor,
        seed,
        samples,
        dual_route: dual,
    };
    grid.validate()?;
    let all = claim == "all";
    let reports = if all { certify::certify_all(&grid)? } else { vec![certify::certify(claim, &grid)?] };
    let content = match output.format.unwrap_or(Format::Json) {
        Format::Json if all => json(&reports),
        Format::Json => json(&reports[0]),
        Format::Csv => report_csv(&reports),
        Format::Text => report_text(&reports),
    };
    emit(&output.out, &content, stdout)?;
    Ok(if reports.iter().any(CertificateReport::fails) { EXIT_FAILED } else { EXIT_OK })
}

fn cmd_compare(
    target: &str,
    ids: &[String],
    p_grid: &str,
    x_grid: &str,
    output: &Output,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let target: Target = target.parse()?;
    let p = parse_grid(p_grid)?;
    let x = parse_grid(x_grid)?;
    if x.iter().any(|&v| !(v > 0.0 && v < 1.0)) {
        return Err(usage("x grid must lie in (0, 1)"));
    }
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    let table = compare_bounds(target, &ids, &p, &x)?;
    let content = match output.format.unwrap_or(Format::Csv) {
        Format::Csv => table.to_csv(),
        Format::Json => json(&table),
        Format::Text => {
            let mut s = format!("{} {} bounds: {}\n", table.target, table.side, table.bound_ids.join(", "));
            for row in &table.summary {
                let wins: Vec<String> = row.wins.iter().map(|(id, w)| format!("{id} {:.0}%", 100.0 * w)).collect();
                s.push_str(&format!("p = {:<8} {}\n", row.p, wins.join("  ")));
            }
            s
        }
    };
    emit(&output.out, &content, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_identities(tol: f64, output: &Output, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(usage(format!("tolerance must be a non-negative number, got {tol}")));
    }
    let report = run_identities(tol);
    let content = match output.format.unwrap_or(Format::Text) {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = String::from("name,p,x,residual,budget,passed\n");
            for c in &report.checks {
                let x = c.x.map(num).unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{x},{},{},{}\n",
                    c.name,
                    num(c.p),
                    num(c.residual),
                    num(c.budget),
                    c.passed
                ));
            }
            s
        }
        Format::Text => format!("{} identity checks, {} failed (tol {:e})\n", report.checks.len(), report.failed, tol),
    };
    emit(&output.out, &content, stdout)?;
    for c in report.failures().take(10) {
        let at = c.x.map(|x| format!(", x={x}")).unwrap_or_default();
        let why = c.error.clone().unwrap_or_else(|| format!("residual {:e} + budget {:e}", c.residual, c.budget));
        let _ = writeln!(stderr, "identity failed: {} (p={}{at}): {why}", c.name, c.p);
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval { func, p, x, method, output } => cmd_eval(func, *p, *x, method, output, stdout),
        Command::Bound { id, p, x, target, side, output, .. } => {
            cmd_bound(id.as_deref(), *p, *x, target.as_deref(), side.as_deref(), output, stdout)
        }
        Command::Certify { claim, p_grid, x_grid, pair_grid, margin_factor, seed, samples, no_dual_route, output } => {
            cmd_certify(
                claim,
                p_grid.as_deref(),
                x_grid.as_deref(),
                pair_grid.as_deref(),
                *margin_factor,
                *seed,
                *samples,
                !no_dual_route,
                output,
                stdout,
            )
        }
        Command::Compare { target, bounds, p_grid, x_grid, output } => {
            cmd_compare(target, bounds, p_grid, x_grid, output, stdout)
        }
        Command::Identities { tol, output } => cmd_identities(*tol, output, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_syntax() {
        assert_eq!(parse_grid("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        let g = parse_grid("1:100:3:log").unwrap();
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(parse_grid("1.5,2,3").unwrap(), vec![1.5, 2.0, 3.0]);
        assert_eq!(parse_grid("2").unwrap(), vec![2.0]);
        for bad in ["1:0:3", "0:1:3:lin", "a:1:2", "0:1:0", "3,2", "0:1:3:log"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
