use ptrig::cli::{run, EXIT_FAILED, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE};
use serde_json::Value;
use std::f64::consts::{FRAC_PI_6, LN_2};

fn ptrig(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ptrig").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn value_of(json: &str) -> f64 {
    serde_json::from_str::<Value>(json).unwrap()["value"].as_f64().unwrap()
}

#[test]
fn eval_examples() {
    let (code, out, _) = ptrig(&["eval", "--fn", "arcsin", "--p", "2", "--x", "0.5", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!((value_of(&out) - FRAC_PI_6).abs() < 1e-15);

    let (code, out, _) = ptrig(&["eval", "--fn", "arctanh_p", "--p", "1", "--x", "0.5", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!((value_of(&out) - LN_2).abs() < 1e-15);

    let (code, out, _) =
        ptrig(&["eval", "--fn", "arcsinh", "--p", "3", "--x", "0.7", "--method", "quadrature", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["method"], "quadrature");
    // mpmath, 40 digits
    assert!((v["value"].as_f64().unwrap() - 0.682_204_537_906_661_1).abs() < 1e-13);

    let (code, out, _) = ptrig(&["eval", "--fn", "arctan", "--p", "2", "--x", "0.5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("arctan_p(p=2, x=0.5) = 0.4636476090008061"));
}

#[test]
fn eval_errors() {
    assert_eq!(ptrig(&["eval", "--fn", "arcsin", "--p", "0.5", "--x", "0.5"]).0, EXIT_USAGE);
    assert_eq!(ptrig(&["eval", "--fn", "sin", "--p", "2", "--x", "0.5"]).0, EXIT_USAGE);
    assert_eq!(ptrig(&["eval", "--fn", "arcsin", "--p", "2"]).0, EXIT_USAGE);
    let (code, _, err) = ptrig(&["eval", "--fn", "arctanh", "--p", "0.05", "--x", "0.999999999", "--method", "series"]);
    assert_eq!(code, EXIT_NUMERICAL);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn bound_lookup_and_listing() {
    let (code, out, _) = ptrig(&["bound", "--id", "atan_ub_Mp", "--p", "2", "--x", "0.5", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(value_of(&out) > 0.5f64.atan());
    let (code, out, _) = ptrig(&["bound", "--list", "--target", "arctan", "--side", "upper", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("id,target,side,p_domain,formula\n"));
    assert!(out.lines().skip(1).all(|l| l.contains(",arctan_p,upper,")));
    assert_eq!(ptrig(&["bound", "--id", "nope", "--p", "2", "--x", "0.5"]).0, EXIT_USAGE);
}

#[test]
fn certify_single_claims() {
    let (code, out, _) = ptrig(&["certify", "--claim", "T2.6_I1", "--p-grid", "1.5,3", "--x-grid", "0.001:0.999:50"]);
    assert_eq!(code, EXIT_OK);
    let r: Value = serde_json::from_str(&out).unwrap();
    for key in [
        "claim_id",
        "status",
        "points_checked",
        "skipped",
        "min_margin",
        "max_error_budget",
        "margin_factor",
        "grid",
        "seed",
        "violations",
        "tool_version",
    ] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["status"], "holds");
    assert_eq!(r["points_checked"], 100);
    assert_eq!(r["grid"]["p"], serde_json::json!([1.5, 3.0]));

    // Outside the claim's p-domain nothing is checked.
    let (code, out, _) = ptrig(&["certify", "--claim", "T2.1a", "--p-grid", "0.2:0.9:5"]);
    assert_eq!(code, EXIT_OK);
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((r["status"].as_str(), r["points_checked"].as_u64()), (Some("vacuous"), Some(0)));

    // A reported claim that fails does not fail the run.
    let (code, out, _) = ptrig(&["certify", "--claim", "E2.9", "--p-grid", "2", "--x-grid", "0.1:0.9:9"]);
    assert_eq!(code, EXIT_OK);
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((r["status"].as_str(), r["outcome"].as_str()), (Some("reported"), Some("violated")));

    assert_eq!(ptrig(&["certify", "--claim", "NOPE"]).0, EXIT_USAGE);
    assert_eq!(ptrig(&["certify", "--claim", "T2.1a", "--x-grid", "0:2:5"]).0, EXIT_USAGE);
    assert_eq!(ptrig(&["certify", "--claim", "T2.1a", "--p-grid", "1:2:3:lin"]).0, EXIT_USAGE);
    assert_eq!(ptrig(&["certify", "--claim", "T2.1a", "--margin-factor", "0.5"]).0, EXIT_USAGE);
}

#[test]
fn monotone_targets_via_cli() {
    let (code, out, _) =
        ptrig(&["certify", "--claim", "T2.2_ratio1", "--p-grid", "2", "--x-grid", "0.01:0.99:50", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let row = out.lines().nth(1).unwrap();
    assert!(row.starts_with("T2.2_ratio1,assert,holds,49,0,"));

    let (code, out, _) = ptrig(&["certify", "--claim", "L1.2", "--x-grid", "0.5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["status"], "vacuous");
}

#[test]
fn grunbaum_records_seed() {
    let args = ["certify", "--claim", "T2.5a", "--p-grid", "2", "--samples", "300", "--seed", "7"];
    let (code, a, _) = ptrig(&args);
    assert_eq!(code, EXIT_OK);
    let r: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(
        (r["seed"].as_u64(), r["samples"].as_u64(), r["points_checked"].as_u64()),
        (Some(7), Some(300), Some(300))
    );
    assert_eq!(a, ptrig(&args).1);
}

#[test]
fn compare_tables() {
    let (code, out, _) =
        ptrig(&["compare", "--target", "arctan", "--bounds", "atan_ub_Mp,atan_ub_tilde", "--p-grid", "2"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("target,side,p,x,best_bound_id,gap"));
    assert_eq!(lines.count(), 99);
    assert!(!out.contains('\r'));

    let (code, _, err) = ptrig(&["compare", "--target", "arctan", "--bounds", "atan_ub_Mp,atan_lb_mp"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("do not share"));
}

#[test]
fn identities_exit_codes() {
    let (code, out, _) = ptrig(&["identities"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _, err) = ptrig(&["identities", "--tol", "1e-30"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.starts_with("identity failed: "));
}

#[test]
fn out_file_is_written_only_on_success() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let code = ptrig(&[
        "eval",
        "--fn",
        "arctan",
        "--p",
        "2",
        "--x",
        "0.5",
        "--format",
        "json",
        "--out",
        good.to_str().unwrap(),
    ])
    .0;
    assert_eq!(code, EXIT_OK);
    assert!((value_of(&std::fs::read_to_string(&good).unwrap()) - 0.5f64.atan()).abs() < 1e-15);

    let bad = dir.path().join("bad.json");
    let code = ptrig(&["certify", "--claim", "NOPE", "--out", bad.to_str().unwrap()]).0;
    assert_eq!(code, EXIT_USAGE);
    assert!(!bad.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ptrig");
    let status = std::process::Command::new(bin).args(["certify", "--claim", "NOPE"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
    let ok =
        std::process::Command::new(bin).args(["eval", "--fn", "arcsin", "--p", "2", "--x", "0.5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
}
