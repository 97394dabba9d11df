//! The generalized inverse trigonometric and hyperbolic functions.
//!
//! Each function has two independent evaluation routes: a hypergeometric
//! series and adaptive quadrature of the defining integral. The defining
//! integrals are all of the form `∫₀^x g(t^p) dt`:
//!
//! | function    | integrand              |
//! |-------------|------------------------|
//! | `arcsin_p`  | `(1 - t^p)^{-1/p}`     |
//! | `arctan_p`  | `1 / (1 + t^p)`        |
//! | `arcsinh_p` | `(1 + t^p)^{-1/p}`     |
//! | `arctanh_p` | `1 / (1 - t^p)`        |
//!
//! and `arccos_p(x) = arcsin_p((1 - x^p)^{1/p})`.

use crate::error::{Error, Result};
use crate::hypergeom::{gauss_2f1, hyp2f1, series_2f1_signed, EvalResult, Hyp2F1Params, Method};
use crate::quad::{integrate, DEFAULT_TOL, MAX_PANELS};
use crate::special::{pi_p, PiRoute};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Closest approach to `x = 1` allowed for the functions singular there.
pub const EDGE: f64 = 1e-9;

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FnId {
    #[serde(rename = "arcsin_p")]
    Arcsin,
    #[serde(rename = "arccos_p")]
    Arccos,
    #[serde(rename = "arctan_p")]
    Arctan,
    #[serde(rename = "arcsinh_p")]
    Arcsinh,
    #[serde(rename = "arctanh_p")]
    Arctanh,
}

impl FnId {
    pub const ALL: [FnId; 5] = [FnId::Arcsin, FnId::Arccos, FnId::Arctan, FnId::Arcsinh, FnId::Arctanh];

    pub fn name(self) -> &'static str {
        match self {
            FnId::Arcsin => "arcsin_p",
            FnId::Arccos => "arccos_p",
            FnId::Arctan => "arctan_p",
            FnId::Arcsinh => "arcsinh_p",
            FnId::Arctanh => "arctanh_p",
        }
    }

    /// Whether the integrand blows up at `t = 1`.
    pub fn singular_at_one(self) -> bool {
        matches!(self, FnId::Arcsin | FnId::Arccos | FnId::Arctanh)
    }

    pub fn min_p_exclusive(self) -> f64 {
        match self {
            FnId::Arcsin | FnId::Arccos => 1.0,
            _ => 0.0,
        }
    }
}

impl fmt::Display for FnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FnId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let base = s.strip_suffix("_p").unwrap_or(s);
        match base {
            "arcsin" => Ok(FnId::Arcsin),
            "arccos" => Ok(FnId::Arccos),
            "arctan" => Ok(FnId::Arctan),
            "arcsinh" => Ok(FnId::Arcsinh),
            "arctanh" => Ok(FnId::Arctanh),
            _ => Err(Error::domain(format!("unknown function `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMethod {
    /// Series, falling back to quadrature when the series cap is hit.
    #[default]
    Auto,
    Series,
    Quadrature,
}

impl FromStr for EvalMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(EvalMethod::Auto),
            "series" => Ok(EvalMethod::Series),
            "quadrature" | "quad" => Ok(EvalMethod::Quadrature),
            _ => Err(Error::domain(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtrigInput {
    pub p: f64,
    pub x: f64,
    pub func: FnId,
}

impl PtrigInput {
    pub fn new(func: FnId, p: f64, x: f64) -> Result<Self> {
        let input = PtrigInput { p, x, func };
        input.validate()?;
        Ok(input)
    }

    pub fn validate(&self) -> Result<()> {
        let PtrigInput { p, x, func } = *self;
        if !(p.is_finite() && p > func.min_p_exclusive()) {
            return Err(Error::domain(format!("{func} requires p > {}, got {p}", func.min_p_exclusive())));
        }
        let hi = if func.singular_at_one() { 1.0 - EDGE } else { 1.0 };
        if !(x.is_finite() && x > 0.0 && x <= hi) {
            return Err(Error::domain(format!("{func} requires x in (0, {hi}], got {x}")));
        }
        Ok(())
    }
}

/// `x^p` with its relative error bound.
fn pow_p(p: f64, x: f64) -> (f64, f64) {
    let lx = x.ln();
    ((p * lx).exp(), (2.0 + (p * lx).abs()) * EPS)
}

/// `1 - x^p` computed without cancellation.
fn one_minus_pow(p: f64, x: f64) -> f64 {
    -(p * x.ln()).exp_m1()
}

/// Scales a series result for `F(z)` by `x` and accounts for the rounding in `z`.
fn finish_series(x: f64, z: f64, z_rel: f64, f: EvalResult) -> EvalResult {
    let mut r = f.scaled(x, EPS);
    // First-order sensitivity to the perturbation of z; the |z|/(1-z) factor
    // tracks the growth of F' near z = 1.
    let cond = if z >= 0.0 { 1.0 + z / (1.0 - z) } else { 1.0 };
    r.abs_err += z_rel * cond * r.value.abs();
    r
}

fn series_route(input: PtrigInput) -> Result<EvalResult> {
    let PtrigInput { p, x, func } = input;
    let q = 1.0 / p;
    let (xp, xp_rel) = pow_p(p, x);
    match func {
        FnId::Arcsin => {
            let f = gauss_2f1(Hyp2F1Params::new(q, q, 1.0 + q)?, xp)?;
            Ok(finish_series(x, xp, xp_rel, f))
        }
        FnId::Arctanh => {
            let f = gauss_2f1(Hyp2F1Params::new(1.0, q, 1.0 + q)?, xp)?;
            Ok(finish_series(x, xp, xp_rel, f))
        }
        FnId::Arctan | FnId::Arcsinh => {
            let a = if func == FnId::Arctan { 1.0 } else { q };
            let params = Hyp2F1Params::new(a, q, 1.0 + q)?;
            // The alternating series is quick while x^p ≤ 1/2; beyond that the
            // Pfaff image x^p/(1+x^p) ≤ 1/2 converges faster.
            let f = if xp <= 0.5 { series_2f1_signed(params, -xp)? } else { hyp2f1(params, -xp)? };
            Ok(finish_series(x, -xp, xp_rel, f))
        }
        FnId::Arccos => arccos_series(p, x),
    }
}

/// Threshold on `x^p` below which `arccos_p` is taken as `π_p/2` minus the
/// complementary integral, keeping the arcsin argument away from 1.
const ARCCOS_SPLIT: f64 = 0.5;

fn arccos_series(p: f64, x: f64) -> Result<EvalResult> {
    let (xp, xp_rel) = pow_p(p, x);
    if xp > ARCCOS_SPLIT {
        let y = (one_minus_pow(p, x).ln() / p).exp();
        let mut r = series_route(PtrigInput { p, x: y, func: FnId::Arcsin })?;
        // d arcsin_p(y)/dy = 1/x, and y carries a few ulps of relative error.
        r.abs_err += 4.0 * EPS * y / x;
        return Ok(r);
    }
    // ∫_y^1 (1-t^p)^{-1/p} dt = x^{p-1}/(p-1) · F(1-1/p, 1-1/p; 2-1/p; x^p)
    let s = 1.0 - 1.0 / p;
    let f = gauss_2f1(Hyp2F1Params::new(s, s, 1.0 + s)?, xp)?;
    let factor = ((p - 1.0) * x.ln()).exp() / (p - 1.0);
    let tail = finish_series(factor, xp, xp_rel, f);
    let half_pi = 0.5 * pi_p(p, PiRoute::Sine)?;
    let value = half_pi - tail.value;
    Ok(EvalResult {
        value,
        abs_err: tail.abs_err + 4.0 * EPS * half_pi + EPS * value.abs(),
        method: tail.method,
        work: tail.work,
    })
}

/// Adaptive quadrature of the defining integral, substituting `t = x s`.
pub fn integrate_defining(func: FnId, p: f64, x: f64) -> Result<EvalResult> {
    PtrigInput::new(func, p, x)?;
    let q = 1.0 / p;
    let lx = x.ln();
    // (x s)^p as exp(p (ln x + ln s)); s = 0 gives 0.
    let w = move |s: f64| if s > 0.0 { (p * (lx + s.ln())).exp() } else { 0.0 };
    let one_minus_w = move |s: f64| if s > 0.0 { -(p * (lx + s.ln())).exp_m1() } else { 1.0 };
    let r = match func {
        FnId::Arcsin => integrate(|s| (-q * one_minus_w(s).ln()).exp(), 0.0, 1.0, DEFAULT_TOL, MAX_PANELS)?,
        FnId::Arctanh => integrate(|s| 1.0 / one_minus_w(s), 0.0, 1.0, DEFAULT_TOL, MAX_PANELS)?,
        FnId::Arctan => integrate(|s| 1.0 / (1.0 + w(s)), 0.0, 1.0, DEFAULT_TOL, MAX_PANELS)?,
        FnId::Arcsinh => integrate(|s| (-q * w(s).ln_1p()).exp(), 0.0, 1.0, DEFAULT_TOL, MAX_PANELS)?,
        FnId::Arccos => return arccos_quadrature(p, x),
    };
    Ok(r.scaled(x, EPS))
}

fn arccos_quadrature(p: f64, x: f64) -> Result<EvalResult> {
    let (xp, _) = pow_p(p, x);
    if xp > ARCCOS_SPLIT {
        let y = (one_minus_pow(p, x).ln() / p).exp();
        let mut r = integrate_defining(FnId::Arcsin, p, y)?;
        r.abs_err += 4.0 * EPS * y / x;
        return Ok(r);
    }
    // Complementary piece ∫₀^x u^{p-2} (1-u^p)^{1/p-1} du. With u = x v^{1/(p-1)}
    // the u^{p-2} factor disappears and the integrand is bounded.
    let lx = x.ln();
    let e = p / (p - 1.0);
    let g = move |v: f64| {
        let w = if v > 0.0 { (p * lx + e * v.ln()).exp() } else { 0.0 };
        ((1.0 / p - 1.0) * (-w).ln_1p()).exp()
    };
    let inner = integrate(g, 0.0, 1.0, DEFAULT_TOL, MAX_PANELS)?;
    let factor = ((p - 1.0) * lx).exp() / (p - 1.0);
    let tail = inner.scaled(factor, 4.0 * EPS);
    let half_pi = 0.5 * pi_p(p, PiRoute::Sine)?;
    let value = half_pi - tail.value;
    Ok(EvalResult {
        value,
        abs_err: tail.abs_err + 4.0 * EPS * half_pi + EPS * value.abs(),
        method: Method::Quadrature,
        work: tail.work,
    })
}

/// Evaluates one of the five functions.
pub fn eval(input: PtrigInput, method: EvalMethod) -> Result<EvalResult> {
    input.validate()?;
    match method {
        EvalMethod::Series => series_route(input),
        EvalMethod::Quadrature => integrate_defining(input.func, input.p, input.x),
        EvalMethod::Auto => match series_route(input) {
            Err(Error::Convergence { .. }) => integrate_defining(input.func, input.p, input.x),
            other => other,
        },
    }
}

/// Value of `func` at `(p, x)` by the automatic route.
pub fn value(func: FnId, p: f64, x: f64) -> Result<f64> {
    Ok(eval(PtrigInput::new(func, p, x)?, EvalMethod::Auto)?.value)
}

pub fn arcsin_p(p: f64, x: f64) -> Result<f64> {
    value(FnId::Arcsin, p, x)
}

pub fn arccos_p(p: f64, x: f64) -> Result<f64> {
    value(FnId::Arccos, p, x)
}

pub fn arctan_p(p: f64, x: f64) -> Result<f64> {
    value(FnId::Arctan, p, x)
}

pub fn arcsinh_p(p: f64, x: f64) -> Result<f64> {
    value(FnId::Arcsinh, p, x)
}

pub fn arctanh_p(p: f64, x: f64) -> Result<f64> {
    value(FnId::Arctanh, p, x)
}

fn auto(func: FnId, p: f64, x: f64) -> Result<EvalResult> {
    eval(PtrigInput::new(func, p, x)?, EvalMethod::Auto)
}

fn require_open_unit(name: &str, p: f64, x: f64) -> Result<()> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::domain(format!("{name} requires p > 0, got {p}")));
    }
    if !(x.is_finite() && x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("{name} requires x in (0, 1), got {x}")));
    }
    Ok(())
}

/// `(2 arctanh_{2p}(x), arctanh_p(x), arctan_p(x))`; the first is the sum of the other two.
pub fn half_param_combine(p: f64, x: f64) -> Result<(EvalResult, EvalResult, EvalResult)> {
    require_open_unit("half_param_combine", p, x)?;
    let double = auto(FnId::Arctanh, 2.0 * p, x)?;
    let doubled = EvalResult { value: 2.0 * double.value, abs_err: 2.0 * double.abs_err, ..double };
    Ok((doubled, auto(FnId::Arctanh, p, x)?, auto(FnId::Arctan, p, x)?))
}

/// `(arcsinh_p(x), arctanh_p((x^p/(1+x^p))^{1/p}))`, which coincide.
pub fn compose_asinh_as_atanh(p: f64, x: f64) -> Result<(EvalResult, EvalResult)> {
    require_open_unit("compose_asinh_as_atanh", p, x)?;
    let (xp, _) = pow_p(p, x);
    let y = x / (xp.ln_1p() / p).exp();
    let mut inner = auto(FnId::Arctanh, p, y)?;
    // arctanh_p'(y) = 1/(1 - y^p) = 1 + x^p; y has a few ulps of error.
    inner.abs_err += 4.0 * EPS * y * (1.0 + xp);
    Ok((auto(FnId::Arcsinh, p, x)?, inner))
}

/// The alternative forms of `arctan_p` and `arcsinh_p` in the variable
/// `w = x^p/(1+x^p)`:
/// `arctan_p(x) = w^{1/p} F(1/p, 1/p; 1+1/p; w)` and
/// `arcsinh_p(x) = w^{1/p} F(1, 1/p; 1+1/p; w)`.
pub fn pfaff_form(func: FnId, p: f64, x: f64) -> Result<EvalResult> {
    PtrigInput::new(func, p, x)?;
    let q = 1.0 / p;
    let (xp, xp_rel) = pow_p(p, x);
    let w = xp / (1.0 + xp);
    let params = match func {
        FnId::Arctan => Hyp2F1Params::new(q, q, 1.0 + q)?,
        FnId::Arcsinh => Hyp2F1Params::new(1.0, q, 1.0 + q)?,
        _ => return Err(Error::domain(format!("no alternative form registered for {func}"))),
    };
    let f = gauss_2f1(params, w)?;
    let scale = x / (xp.ln_1p() * q).exp();
    Ok(finish_series(scale, w, xp_rel + 2.0 * EPS, f))
}
