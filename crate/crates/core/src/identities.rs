//! Self-test suite of exact identities between independently computed values.

use crate::bounds::clausen_target_value;
use crate::bounds::Clausen3F2Tag;
use crate::error::Result;
use crate::hypergeom::EvalResult;
use crate::ptrig::{self, eval, pfaff_form, EvalMethod, FnId, PtrigInput};
use crate::special::{b_p, c_p, pi_p, BpRoute, PiRoute};
use serde::Serialize;

pub const DEFAULT_TOL: f64 = 1e-9;
/// Multiplier on the summed error estimates of the two sides.
pub const BUDGET_FACTOR: f64 = 20.0;

const ROUTE_P: [f64; 6] = [0.5, 1.0, 1.5, 2.0, 3.0, 10.0];
const I5_P: [f64; 6] = [0.5, 1.0, 2.0, 3.0, 5.0, 10.0];
const J_P: [f64; 4] = [1.5, 2.0, 3.0, 5.0];
const CONST_P: [f64; 5] = [0.5, 1.0, 2.0, 3.0, 7.0];
const PI_P: [f64; 7] = [1.1, 1.5, 2.0, 3.0, 4.0, 7.0, 10.0];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub p: f64,
    pub x: Option<f64>,
    pub residual: f64,
    /// `BUDGET_FACTOR` times the summed error estimates.
    pub budget: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub tol: f64,
    pub checks: Vec<IdentityCheck>,
    pub failed: usize,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Run {
    tol: f64,
    checks: Vec<IdentityCheck>,
}

impl Run {
    /// Records `|lhs - rhs|`; passes when residual plus budget fit in `tol`.
    fn push(&mut self, name: &str, p: f64, x: Option<f64>, pair: Result<(f64, f64, f64)>) {
        let check = match pair {
            Ok((lhs, rhs, err)) => {
                let residual = (lhs - rhs).abs();
                let budget = BUDGET_FACTOR * err;
                IdentityCheck {
                    name: name.to_string(),
                    p,
                    x,
                    residual,
                    budget,
                    passed: residual + budget <= self.tol,
                    error: None,
                }
            }
            Err(e) => IdentityCheck {
                name: name.to_string(),
                p,
                x,
                residual: f64::NAN,
                budget: f64::NAN,
                passed: false,
                error: Some(e.to_string()),
            },
        };
        self.checks.push(check);
    }
}

fn pair(a: EvalResult, b: EvalResult) -> (f64, f64, f64) {
    (a.value, b.value, a.abs_err + b.abs_err)
}

fn x_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn route_pair(func: FnId, p: f64, x: f64) -> Result<(f64, f64, f64)> {
    let input = PtrigInput::new(func, p, x)?;
    Ok(pair(eval(input, EvalMethod::Series)?, eval(input, EvalMethod::Quadrature)?))
}

fn auto(func: FnId, p: f64, x: f64) -> Result<EvalResult> {
    eval(PtrigInput::new(func, p, x)?, EvalMethod::Auto)
}

fn elementary(func: FnId, x: f64) -> f64 {
    match func {
        FnId::Arcsin => x.asin(),
        FnId::Arccos => x.acos(),
        FnId::Arctan => x.atan(),
        FnId::Arcsinh => x.asinh(),
        FnId::Arctanh => x.atanh(),
    }
}

/// Runs every identity. A check passes when its residual plus
/// `BUDGET_FACTOR` times the error estimates of both sides is at most `tol`.
pub fn run_identities(tol: f64) -> IdentityReport {
    let mut run = Run { tol, checks: Vec::new() };

    for func in FnId::ALL {
        for &p in ROUTE_P.iter().filter(|&&p| p > func.min_p_exclusive()) {
            for x in x_grid(0.02, 0.98, 12) {
                run.push(&format!("route_agreement.{func}"), p, Some(x), route_pair(func, p, x));
            }
        }
    }

    for &p in &I5_P {
        for x in x_grid(0.05, 0.95, 10) {
            let r = ptrig::half_param_combine(p, x).map(|(two, atanh, atan)| {
                (two.value, atanh.value + atan.value, two.abs_err + atanh.abs_err + atan.abs_err)
            });
            run.push("half_parameter_sum", p, Some(x), r);
            let r = ptrig::compose_asinh_as_atanh(p, x).map(|(a, b)| pair(a, b));
            run.push("arcsinh_as_arctanh", p, Some(x), r);
            for func in [FnId::Arctan, FnId::Arcsinh] {
                let r = pfaff_form(func, p, x).and_then(|alt| Ok(pair(auto(func, p, x)?, alt)));
                run.push(&format!("pfaff_form.{func}"), p, Some(x), r);
            }
        }
    }

    for &p in &J_P {
        for x in x_grid(0.01, 0.9, 10) {
            let r = (|| {
                let s = clausen_target_value(Clausen3F2Tag::Sum3F2, p, x)?;
                let (a, h) = (auto(FnId::Arcsin, p, x)?, auto(FnId::Arcsinh, p, x)?);
                Ok((2.0 * x * s.value, a.value + h.value, 2.0 * x * s.abs_err + a.abs_err + h.abs_err))
            })();
            run.push("clausen_sum", p, Some(x), r);
            let r = (|| {
                let d = clausen_target_value(Clausen3F2Tag::Diff3F2, p, x)?;
                let (a, h) = (auto(FnId::Arcsin, p, x)?, auto(FnId::Arcsinh, p, x)?);
                let k = 2.0 * x.powf(p + 1.0) / (p * (1.0 + p));
                Ok((k * d.value, a.value - h.value, k * d.abs_err + a.abs_err + h.abs_err))
            })();
            run.push("clausen_diff", p, Some(x), r);
        }
    }

    for &p in &PI_P {
        let r = (|| {
            let (s, b, l) = (pi_p(p, PiRoute::Sine)?, pi_p(p, PiRoute::Beta)?, pi_p(p, PiRoute::Limit)?);
            let worst = (s - b).abs().max((s - l).abs()).max((b - l).abs());
            Ok((worst / s, 0.0, 4.0 * f64::EPSILON))
        })();
        run.push("pi_p_routes", p, None, r);
    }
    for &p in &CONST_P {
        let r = (|| {
            let (d, h) = (b_p(p, BpRoute::Digamma)?, b_p(p, BpRoute::Hyp)?);
            Ok((d, h, 4.0 * f64::EPSILON * d.abs()))
        })();
        run.push("b_p_routes", p, None, r);
        let r = (|| {
            let v = eval(PtrigInput::new(FnId::Arctan, p, 1.0)?, EvalMethod::Quadrature)?;
            Ok((b_p(p, BpRoute::Digamma)?, v.value, v.abs_err))
        })();
        run.push("b_p_endpoint", p, Some(1.0), r);
        let r = (|| {
            let v = eval(PtrigInput::new(FnId::Arcsinh, p, 1.0)?, EvalMethod::Quadrature)?;
            Ok((c_p(p)?, v.value, v.abs_err))
        })();
        run.push("c_p_endpoint", p, Some(1.0), r);
    }
    for p in [1.0, 2.0] {
        let r = b_p(p, BpRoute::Digamma).map(|b| {
            let exact = if p == 1.0 { std::f64::consts::LN_2 } else { std::f64::consts::FRAC_PI_4 };
            (b, exact, 0.0)
        });
        run.push("b_p_closed_form", p, None, r);
    }

    for func in FnId::ALL {
        for x in x_grid(0.01, 0.99, 25) {
            let r = auto(func, 2.0, x).map(|v| (v.value, elementary(func, x), v.abs_err));
            run.push(&format!("p2_reduction.{func}"), 2.0, Some(x), r);
        }
    }
    for x in x_grid(0.01, 0.99, 25) {
        let r = auto(FnId::Arctanh, 1.0, x).map(|v| (v.value, -(-x).ln_1p(), v.abs_err));
        run.push("p1_reduction.arctanh_p", 1.0, Some(x), r);
    }

    let failed = run.checks.iter().filter(|c| !c.passed).count();
    IdentityReport { tol, checks: run.checks, failed }
}
