//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL line;
//! the process exits non-zero if any fails.

use ptrig::bounds::{clausen_target_value, Clausen3F2Tag};
use ptrig::certify::{default_x_grid, lemma_ratio, linspace};
use ptrig::cli::{run, EXIT_OK};
use ptrig::ptrig::{eval, value, EvalMethod, FnId, PtrigInput};
use ptrig::special::{b_p, beta, c_p, pi_p, BpRoute, PiRoute};
use serde_json::Value;
use std::f64::consts::{LN_2, PI};
use std::time::{Duration, Instant};

type Check = Result<String, String>;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("ptrig").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn within(e: Duration, limit: Duration) -> Result<(), String> {
    if e < limit {
        Ok(())
    } else {
        Err(format!("took {e:.2?}, limit {limit:?}"))
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn elementary_reductions() -> Check {
    let t = Instant::now();
    let pairs = [
        (FnId::Arcsin, f64::asin as fn(f64) -> f64),
        (FnId::Arctan, f64::atan),
        (FnId::Arcsinh, f64::asinh),
        (FnId::Arctanh, f64::atanh),
    ];
    let mut worst = 0.0f64;
    for x in linspace(0.01, 0.99, 100) {
        for (f, g) in pairs {
            let d = (value(f, 2.0, x).map_err(err)? - g(x)).abs();
            if d > 1e-12 {
                return Err(format!("{f}(2, {x}) off by {d:e}"));
            }
            worst = worst.max(d);
        }
    }
    within(t.elapsed(), Duration::from_secs(1))?;
    Ok(format!("max deviation {worst:.1e} in {:.2?}", t.elapsed()))
}

fn oracle_equivalence() -> Check {
    let t = Instant::now();
    let mut n = 0;
    let mut worst = 0.0f64;
    for p in [0.5, 1.0, 1.5, 2.0, 3.0, 10.0] {
        for f in FnId::ALL {
            if p <= f.min_p_exclusive() {
                continue;
            }
            for x in linspace(0.01, 0.99, 50) {
                let input = PtrigInput::new(f, p, x).map_err(err)?;
                let s = eval(input, EvalMethod::Series).map_err(err)?;
                let q = eval(input, EvalMethod::Quadrature).map_err(err)?;
                let d = (s.value - q.value).abs();
                let tol = 1e-9f64.max(20.0 * (s.abs_err + q.abs_err));
                if d > tol {
                    return Err(format!("{f} p={p} x={x}: |series - quadrature| = {d:e} > {tol:e}"));
                }
                worst = worst.max(d);
                n += 1;
            }
        }
    }
    within(t.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{n} points, max difference {worst:.1e} in {:.2?}", t.elapsed()))
}

fn constants() -> Check {
    for p in [1.25, 1.5, 2.0, 3.0, 4.0, 7.0, 10.0] {
        let r = [PiRoute::Sine, PiRoute::Beta, PiRoute::Limit].map(|route| pi_p(p, route).unwrap());
        for i in 0..3 {
            for j in 0..i {
                let rel = (r[i] - r[j]).abs() / r[i];
                if rel > 1e-10 {
                    return Err(format!("pi_p routes disagree at p={p}: {rel:e}"));
                }
            }
        }
    }
    for route in [BpRoute::Digamma, BpRoute::Hyp] {
        let (b2, b1) = (b_p(2.0, route).map_err(err)?, b_p(1.0, route).map_err(err)?);
        if (b2 - PI / 4.0).abs() > 1e-12 || (b1 - LN_2).abs() > 1e-12 {
            return Err(format!("{route:?}: b_2 = {b2}, b_1 = {b1}"));
        }
    }
    for p in [0.5, 1.0, 2.0, 3.0, 7.0] {
        let at = eval(PtrigInput::new(FnId::Arctan, p, 1.0).map_err(err)?, EvalMethod::Quadrature).map_err(err)?;
        let ah = eval(PtrigInput::new(FnId::Arcsinh, p, 1.0).map_err(err)?, EvalMethod::Quadrature).map_err(err)?;
        let db = (b_p(p, BpRoute::Digamma).map_err(err)? - at.value).abs();
        let dc = (c_p(p).map_err(err)? - ah.value).abs();
        if db > 1e-9 || dc > 1e-9 {
            return Err(format!("p={p}: |b_p - arctan_p(1)| = {db:e}, |c_p - arcsinh_p(1)| = {dc:e}"));
        }
    }
    Ok("pi_p routes, b_1, b_2, b_p and c_p endpoints agree".into())
}

fn half_parameter_identity() -> Check {
    let mut worst = 0.0f64;
    for p in linspace(0.5, 10.0, 20) {
        for x in linspace(0.01, 0.99, 50) {
            let r = 2.0 * value(FnId::Arctanh, 2.0 * p, x).map_err(err)?
                - value(FnId::Arctanh, p, x).map_err(err)?
                - value(FnId::Arctan, p, x).map_err(err)?;
            if r.abs() > 1e-10 {
                return Err(format!("p={p} x={x}: residual {r:e}"));
            }
            worst = worst.max(r.abs());
        }
    }
    Ok(format!("1000 points, max residual {worst:.1e}"))
}

fn clausen_identities() -> Check {
    let mut worst = (0.0f64, 0.0f64);
    for p in [1.5, 2.0, 3.0, 5.0] {
        for x in linspace(0.01, 0.9, 50) {
            let s = value(FnId::Arcsin, p, x).map_err(err)?;
            let h = value(FnId::Arcsinh, p, x).map_err(err)?;
            let sum = clausen_target_value(Clausen3F2Tag::Sum3F2, p, x).map_err(err)?.value;
            let diff = clausen_target_value(Clausen3F2Tag::Diff3F2, p, x).map_err(err)?.value;
            let r_sum = (2.0 * x * sum - (s + h)).abs();
            let r_diff = (2.0 * x.powf(p + 1.0) / (p * (1.0 + p)) * diff - (s - h)).abs();
            if r_sum > 1e-9 || r_diff > 1e-9 {
                return Err(format!("p={p} x={x}: residuals {r_sum:e}, {r_diff:e}"));
            }
            worst = (worst.0.max(r_sum), worst.1.max(r_diff));
        }
    }
    Ok(format!("max residuals {:.1e} (sum), {:.1e} (difference)", worst.0, worst.1))
}

struct FullRun {
    code: i32,
    json: String,
    reports: Vec<Value>,
    elapsed: Duration,
}

fn full_run() -> FullRun {
    let t = Instant::now();
    let (code, json, _) = cli(&["certify", "--claim", "all", "--seed", "42"]);
    let elapsed = t.elapsed();
    let reports = serde_json::from_str::<Value>(&json).ok().and_then(|v| v.as_array().cloned()).unwrap_or_default();
    FullRun { code, json, reports, elapsed }
}

fn report<'a>(run: &'a FullRun, id: &str) -> Result<&'a Value, String> {
    run.reports.iter().find(|r| r["claim_id"] == id).ok_or(format!("no report for {id}"))
}

fn full_certification(run: &FullRun) -> Check {
    if run.code != EXIT_OK {
        return Err(format!("exit code {}", run.code));
    }
    let asserted: Vec<&Value> = run.reports.iter().filter(|r| r["policy"] == "assert").collect();
    for r in &asserted {
        let id = r["claim_id"].as_str().unwrap_or("?");
        if r["status"] != "holds" {
            return Err(format!("{id}: {}", r["status"]));
        }
        if r["skipped"] != 0 {
            return Err(format!("{id}: {} points skipped", r["skipped"]));
        }
        if r["margin_factor"].as_f64() != Some(10.0) {
            return Err(format!("{id}: margin factor {}", r["margin_factor"]));
        }
    }
    for prefix in ["T2.1", "T2.2", "T2.3", "T2.4", "T2.5", "T2.6", "T3.1", "T3.2", "L1.2"] {
        if !asserted.iter().any(|r| r["claim_id"].as_str().is_some_and(|id| id.starts_with(prefix))) {
            return Err(format!("no asserted claim for {prefix}"));
        }
    }
    within(run.elapsed, Duration::from_secs(300))?;
    let points: u64 = run.reports.iter().filter_map(|r| r["points_checked"].as_u64()).sum();
    Ok(format!(
        "{} asserted claims hold, {} reported, {points} points in {:.1?}",
        asserted.len(),
        run.reports.len() - asserted.len(),
        run.elapsed
    ))
}

fn gap_inequality(run: &FullRun) -> Check {
    let r = report(run, "T2.6_gap")?;
    if r["status"] != "holds" || r["skipped"] != 0 {
        return Err(format!("T2.6_gap: {}", r["status"]));
    }
    let literal = report(run, "T2.6_gap_literal")?;
    println!(
        "      info: literal form R_p - L_p > x^p/((1+p)(1+2p)) is {} at {} of {} points",
        literal["outcome"], literal["violations_total"], literal["points_checked"]
    );
    Ok(format!("holds at {} points, min margin {}", r["points_checked"], r["min_margin"]))
}

fn lemma_endpoints(run: &FullRun) -> Check {
    for p in [1.5, 2.0, 4.0] {
        let (a, b) = (1.0, 1.0 / p);
        let lo = a * b / (a + b);
        let hi = 1.0 / beta(a, b).map_err(err)?;
        let start = lemma_ratio(a, b, 1e-4).map_err(err)?;
        if (start.value - lo).abs() > 1e-3 {
            return Err(format!("p={p}: ratio at 1e-4 is {}, expected {lo}", start.value));
        }
        for x in default_x_grid() {
            let r = lemma_ratio(a, b, x).map_err(err)?;
            if !(r.value > lo - r.err && r.value < hi + r.err) {
                return Err(format!("p={p} x={x}: {} outside ({lo}, {hi})", r.value));
            }
        }
    }
    for id in ["L1.2", "L1.2_ab"] {
        let r = report(run, id)?;
        if r["status"] != "holds" {
            return Err(format!("{id}: {}", r["status"]));
        }
    }
    Ok("ratio starts at ab/(a+b) and stays inside (ab/(a+b), 1/B(a,b))".into())
}

fn compare_table(target: &str, bounds: &str) -> Result<Value, String> {
    let (code, out, e) = cli(&["compare", "--target", target, "--bounds", bounds, "--format", "json"]);
    if code != EXIT_OK {
        return Err(format!("compare {target} {bounds}: exit {code}: {e}"));
    }
    serde_json::from_str(&out).map_err(err)
}

fn print_summary(table: &Value) {
    for s in table["summary"].as_array().into_iter().flatten() {
        let wins: Vec<String> = s["wins"]
            .as_object()
            .into_iter()
            .flatten()
            .filter(|(_, w)| w.as_f64() > Some(0.0))
            .map(|(id, w)| format!("{id} {:.0}%", 100.0 * w.as_f64().unwrap_or(0.0)))
            .collect();
        println!(
            "      {} {} p={}: {}",
            table["target"].as_str().unwrap_or("?"),
            table["side"].as_str().unwrap_or("?"),
            s["p"],
            wins.join(", ")
        );
    }
}

fn comparison(run: &FullRun) -> Check {
    let atan = compare_table("arctan", "atan_ub_Mp,atan_ub_tilde")?;
    print_summary(&atan);
    let summaries = atan["summary"].as_array().cloned().unwrap_or_default();
    if summaries.is_empty() {
        return Err("empty arctan table".into());
    }
    for s in &summaries {
        if s["wins"]["atan_ub_tilde"].as_f64() != Some(1.0) {
            return Err(format!("tilde_u_p does not beat M_p everywhere at p={}", s["p"]));
        }
    }
    for (target, bounds) in [
        ("arctan", "atan_ub_Mp,atan_ub_Rp,atan_ub_tilde"),
        ("arcsinh", "asinh_ub_Tp,asinh_ub_hyp,asinh_ub_up,asinh_ub_up_corrected"),
        ("arcsinh", "asinh_lb_hyp,asinh_lb_lp,asinh_lb_tp"),
    ] {
        let t = compare_table(target, bounds)?;
        if t["rows"].as_array().is_none_or(|r| r.is_empty()) {
            return Err(format!("empty table for {bounds}"));
        }
        print_summary(&t);
    }
    let printed = report(run, "E2.10")?;
    let corrected = report(run, "E2.10c")?;
    println!("      info: printed arctan sandwich {}, corrected {}", printed["outcome"], corrected["status"]);
    if printed["outcome"] != "holds" && corrected["status"] != "holds" {
        return Err("neither the printed nor the corrected arctan sandwich certifies".into());
    }
    Ok("tilde_u_p beats M_p at every point".into())
}

fn determinism(first: &FullRun) -> Check {
    let second = full_run();
    if first.json.is_empty() || first.json != second.json {
        return Err("reports differ between runs".into());
    }
    Ok(format!("{} bytes identical", first.json.len()))
}

fn main() {
    let mut failed = 0;
    let mut report_line = |n: u32, name: &str, r: Check| match r {
        Ok(msg) => println!("criterion {n:>2} PASS  {name}: {msg}"),
        Err(msg) => {
            failed += 1;
            println!("criterion {n:>2} FAIL  {name}: {msg}");
        }
    };
    report_line(1, "elementary reductions", elementary_reductions());
    report_line(2, "series and quadrature agree", oracle_equivalence());
    report_line(3, "constants", constants());
    report_line(4, "half-parameter identity", half_parameter_identity());
    report_line(5, "Clausen identities", clausen_identities());
    let run = full_run();
    report_line(6, "full certification", full_certification(&run));
    report_line(7, "gap inequality", gap_inequality(&run));
    report_line(8, "ratio endpoints", lemma_endpoints(&run));
    report_line(9, "bound comparison", comparison(&run));
    report_line(10, "determinism", determinism(&run));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
