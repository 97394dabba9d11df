//! Gauss `₂F₁` and Clausen `₃F₂` on the real line.
//!
//! All evaluators share one series engine: terms are produced by the ratio
//! recurrence `t_{n+1} = t_n · Π(a_i+n) / Π(b_j+n) · z/(n+1)`, accumulated with
//! compensated summation, and stopped once the estimated tail drops below
//! `1e-16` of the partial sum. The returned [`EvalResult`] carries that tail
//! bound plus a first-order bound on the rounding in the recurrence.

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;
use serde::Serialize;

/// Relative size of the tail at which summation stops.
pub const STOP_REL: f64 = 1e-16;
/// Maximum number of series terms before giving up.
pub const MAX_TERMS: usize = 1_000_000;
/// Distance from a non-positive integer at which a denominator parameter is rejected.
pub const POLE_TOL: f64 = 1e-12;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    SeriesPfaff,
    Quadrature,
    ClosedForm,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Series => "series",
            Method::SeriesPfaff => "series_pfaff",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed_form",
        })
    }
}

/// A computed value together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err: f64,
    pub method: Method,
    /// Series terms summed or integrand evaluations.
    pub work: u64,
}

impl EvalResult {
    pub fn exact(value: f64, method: Method) -> Self {
        EvalResult { value, abs_err: 0.0, method, work: 0 }
    }

    /// Multiplies by a factor known to relative accuracy `rel`.
    pub(crate) fn scaled(self, factor: f64, rel: f64) -> Self {
        let value = self.value * factor;
        EvalResult { value, abs_err: self.abs_err * factor.abs() + (rel + f64::EPSILON) * value.abs(), ..self }
    }
}

fn near_nonpositive_integer(c: f64) -> bool {
    c <= POLE_TOL && (c - c.round()).abs() <= POLE_TOL
}

/// Parameters `(a, b; c)` of `₂F₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Hyp2F1Params {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let params = Hyp2F1Params { a, b, c };
        params.validate()?;
        Ok(params)
    }

    fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::domain(format!("non-finite 2F1 parameters {self:?}")));
        }
        if near_nonpositive_integer(self.c) {
            return Err(Error::domain(format!("2F1 parameter c = {} is a non-positive integer", self.c)));
        }
        Ok(())
    }
}

/// Parameters `(a₁, a₂, a₃; b₁, b₂)` of `₃F₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp3F2Params {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub b1: f64,
    pub b2: f64,
}

impl Hyp3F2Params {
    pub fn new(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64) -> Result<Self> {
        let params = Hyp3F2Params { a1, a2, a3, b1, b2 };
        params.validate()?;
        Ok(params)
    }

    fn validate(&self) -> Result<()> {
        let all = [self.a1, self.a2, self.a3, self.b1, self.b2];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain(format!("non-finite 3F2 parameters {self:?}")));
        }
        for b in [self.b1, self.b2] {
            if near_nonpositive_integer(b) {
                return Err(Error::domain(format!("3F2 denominator parameter {b} is a non-positive integer")));
            }
        }
        Ok(())
    }
}

/// Sums `Σ Π(a_i,n)/Π(b_j,n) zⁿ/n!` for `|z| < 1`.
fn hyper_series(num: &[f64], den: &[f64], z: f64) -> Result<EvalResult> {
    debug_assert!(z.abs() < 1.0);
    let eps = f64::EPSILON;
    let mut acc = CompensatedSum::new();
    // Σ (n+1)|t_n|: each recurrence step contributes a few roundings relative to the term.
    let mut weighted_mag = 0.0;
    let mut term = 1.0f64;
    let mut n = 0usize;
    loop {
        acc += term;
        weighted_mag += (n as f64 + 1.0) * term.abs();

        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for &a in num {
            ratio *= a + nf;
        }
        for &b in den {
            ratio /= b + nf;
        }
        let next = term * ratio;
        n += 1;

        if !next.is_finite() {
            return Err(Error::Convergence { terms: n });
        }
        let sum = acc.value();
        if next == 0.0 {
            // Terminating series (a numerator hit zero) or z = 0.
            let abs_err = eps * sum.abs() + 4.0 * eps * weighted_mag;
            return Ok(EvalResult { value: sum, abs_err, method: Method::Series, work: n as u64 });
        }
        let rho = ratio.abs().max(z.abs());
        if rho < 1.0 {
            // Once the ratio is below one and heading monotonically towards |z|,
            // the remaining terms are dominated by a geometric series. With
            // alternating signs the first omitted term bounds the tail.
            let tail = if z < 0.0 && ratio < 0.0 { next.abs() } else { next.abs() / (1.0 - rho) };
            let eventually_decreasing = ratio.abs() <= 1.0 && n > 1;
            if eventually_decreasing && tail <= STOP_REL * sum.abs() {
                let abs_err = tail + eps * sum.abs() + 4.0 * eps * weighted_mag;
                return Ok(EvalResult { value: sum, abs_err, method: Method::Series, work: n as u64 });
            }
        }
        if n >= MAX_TERMS {
            return Err(Error::Convergence { terms: n });
        }
        term = next;
    }
}

fn check_unit_interval(z: f64) -> Result<()> {
    if z.is_finite() && (0.0..1.0).contains(&z) {
        Ok(())
    } else {
        Err(Error::domain(format!("argument z = {z} outside [0, 1)")))
    }
}

/// `₂F₁(a, b; c; z)` for `z ∈ [0, 1)` by direct summation.
///
/// On this interval the Pfaff image `z/(z-1)` is never smaller in modulus
/// than `z`, so the direct positive-term series is always the better route.
pub fn gauss_2f1(params: Hyp2F1Params, z: f64) -> Result<EvalResult> {
    params.validate()?;
    check_unit_interval(z)?;
    hyper_series(&[params.a, params.b], &[params.c], z)
}

/// `₂F₁(a, b; c; z)` for `z ∈ (-1, 1)` by the untransformed series.
///
/// Negative arguments give an alternating series; the tail bound is then the
/// first omitted term.
pub fn series_2f1_signed(params: Hyp2F1Params, z: f64) -> Result<EvalResult> {
    params.validate()?;
    if !(z.is_finite() && z.abs() < 1.0) {
        return Err(Error::domain(format!("argument z = {z} outside (-1, 1)")));
    }
    hyper_series(&[params.a, params.b], &[params.c], z)
}

/// Image of `₂F₁(a, b; c; z)` under the Pfaff transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PfaffImage {
    /// `(a, c - b; c)`.
    pub params: Hyp2F1Params,
    /// `z / (z - 1)`; non-positive for `z ∈ [0, 1)`.
    pub arg: f64,
    /// `(1 - z)^{-a}`.
    pub prefactor: f64,
}

fn pfaff(params: Hyp2F1Params, z: f64) -> Result<PfaffImage> {
    let Hyp2F1Params { a, b, c } = params;
    Ok(PfaffImage { params: Hyp2F1Params::new(a, c - b, c)?, arg: z / (z - 1.0), prefactor: (-a * (-z).ln_1p()).exp() })
}

/// `F(a, b; c; z) = (1 - z)^{-a} F(a, c - b; c; z/(z-1))` for `z ∈ [0, 1)`.
///
/// The transformed argument is negative; evaluate it with
/// [`series_2f1_signed`] (it lies in the unit disc for `z < 1/2`).
pub fn transform_pfaff(params: Hyp2F1Params, z: f64) -> Result<PfaffImage> {
    params.validate()?;
    check_unit_interval(z)?;
    pfaff(params, z)
}

/// `₂F₁(a, b; c; z)` for any real `z < 1`.
///
/// Non-negative arguments use [`gauss_2f1`]. Negative arguments are always
/// mapped by Pfaff onto `z/(z-1) ∈ (0, 1)`, which has smaller modulus and
/// turns the alternating series into a positive one.
pub fn hyp2f1(params: Hyp2F1Params, z: f64) -> Result<EvalResult> {
    params.validate()?;
    if !(z.is_finite() && z < 1.0) {
        return Err(Error::domain(format!("argument z = {z} must be finite and below 1")));
    }
    if z >= 0.0 {
        return gauss_2f1(params, z);
    }
    let image = pfaff(params, z)?;
    let inner = hyper_series(&[image.params.a, image.params.b], &[image.params.c], image.arg)?;
    // The prefactor comes from exp(-a·log1p(-z)): error ~ (|a·log1p(-z)| + 2)·ε relative.
    let rel = ((params.a * (-z).ln_1p()).abs() + 2.0) * f64::EPSILON;
    Ok(EvalResult { method: Method::SeriesPfaff, ..inner.scaled(image.prefactor, rel) })
}

/// Clausen `₃F₂(a₁, a₂, a₃; b₁, b₂; z)` for `z ∈ [0, 1)` by direct summation.
pub fn clausen_3f2(params: Hyp3F2Params, z: f64) -> Result<EvalResult> {
    params.validate()?;
    check_unit_interval(z)?;
    hyper_series(&[params.a1, params.a2, params.a3], &[params.b1, params.b2], z)
}
