//! Scalar special functions and the constants built from them.
//!
//! Everything here is real-valued and restricted to positive arguments:
//! log-gamma, digamma, beta, the log of the rising factorial, and the
//! constants `π_p`, `b_p`, `c_p` and `R(a, b)` that appear as normalisations
//! and limits of the generalized inverse functions.

use crate::error::{Error, Result};
use crate::hypergeom::{gauss_2f1, Hyp2F1Params};
use std::f64::consts::PI;

/// Euler–Mascheroni constant, correctly rounded to binary64.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Arguments below this are shifted upwards before the Stirling series.
const LN_GAMMA_SHIFT: f64 = 8.0;
/// Same for digamma. Below 10 the truncated tail exceeds 1e-13.
const DIGAMMA_SHIFT: f64 = 10.0;

/// `B_{2k} / (2k (2k-1))`, k = 1..7.
const STIRLING: [f64; 7] =
    [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360_360.0, 1.0 / 156.0];

/// `B_{2k} / (2k)`, k = 1..7.
const DIGAMMA_ASYMP: [f64; 7] =
    [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32_760.0, 1.0 / 12.0];

fn require_positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} requires a positive finite argument, got {x}")))
    }
}

/// `log Γ(x)` for `x > 0`.
///
/// Shifts the argument to `x ≥ 8` with the recurrence `Γ(x+1) = xΓ(x)` and
/// sums the Stirling series through the `B₁₄` term.
pub fn ln_gamma(x: f64) -> Result<f64> {
    require_positive("ln_gamma", x)?;
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    let mut shifted = x;
    let mut prod = 1.0;
    while shifted < LN_GAMMA_SHIFT {
        prod *= shifted;
        shifted += 1.0;
    }
    let inv = 1.0 / shifted;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    let stirling = (shifted - 0.5) * shifted.ln() - shifted + HALF_LN_2PI + series;
    Ok(stirling - prod.ln())
}

/// Digamma `ψ(x) = Γ'(x)/Γ(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    require_positive("digamma", x)?;
    let mut shifted = x;
    let mut acc = 0.0;
    while shifted < DIGAMMA_SHIFT {
        acc -= 1.0 / shifted;
        shifted += 1.0;
    }
    let inv2 = 1.0 / (shifted * shifted);
    let mut tail = 0.0;
    let mut pow = inv2;
    for c in DIGAMMA_ASYMP {
        tail += c * pow;
        pow *= inv2;
    }
    Ok(acc + shifted.ln() - 0.5 / shifted - tail)
}

/// Beta function `B(x, y) = Γ(x)Γ(y)/Γ(x+y)`.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    require_positive("beta", x)?;
    require_positive("beta", y)?;
    // Order the two ln_gamma terms so beta(x, y) and beta(y, x) round identically.
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    Ok((ln_gamma(lo)? + ln_gamma(hi)? - ln_gamma(x + y)?).exp())
}

/// `log (a, n)`, the logarithm of the rising factorial `a (a+1) ⋯ (a+n-1)`.
pub fn pochhammer_ln(a: f64, n: u64) -> Result<f64> {
    require_positive("pochhammer_ln", a)?;
    if n == 0 {
        return Ok(0.0);
    }
    if n <= 64 {
        let mut acc = 0.0;
        for i in 0..n {
            acc += (a + i as f64).ln();
        }
        return Ok(acc);
    }
    Ok(ln_gamma(a + n as f64)? - ln_gamma(a)?)
}

/// How [`pi_p`] is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PiRoute {
    /// `(2/p) B(1 - 1/p, 1/p)`.
    Beta,
    /// `2π / (p sin(π/p))`.
    #[default]
    Sine,
    /// Twice `arcsin_p` carried to its endpoint: the series up to `x^p = 1/2`
    /// plus the remaining endpoint piece as an incomplete beta integral.
    Limit,
}

/// Generalized π, twice the total integral of `(1 - t^p)^{-1/p}` on `[0, 1]`.
pub fn pi_p(p: f64, route: PiRoute) -> Result<f64> {
    if !(p.is_finite() && p > 1.0) {
        return Err(Error::domain(format!("pi_p requires p > 1, got {p}")));
    }
    let q = 1.0 / p;
    match route {
        PiRoute::Sine => Ok(2.0 * PI / (p * (PI * q).sin())),
        PiRoute::Beta => Ok(2.0 * q * beta(1.0 - q, q)?),
        PiRoute::Limit => {
            let head = 0.5f64.powf(q) * gauss_2f1(Hyp2F1Params::new(q, q, 1.0 + q)?, 0.5)?.value;
            let s = 1.0 - q;
            let tail = q * 0.5f64.powf(s) / s * gauss_2f1(Hyp2F1Params::new(s, s, 1.0 + s)?, 0.5)?.value;
            Ok(2.0 * (head + tail))
        }
    }
}

/// How [`b_p`] is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BpRoute {
    #[default]
    Digamma,
    Hyp,
}

/// `b_p = arctan_p(1)`.
pub fn b_p(p: f64, route: BpRoute) -> Result<f64> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::domain(format!("b_p requires p > 0, got {p}")));
    }
    let q = 1.0 / p;
    match route {
        BpRoute::Digamma => Ok((digamma(0.5 * (1.0 + q))? - digamma(0.5 * q)?) * 0.5 * q),
        BpRoute::Hyp => {
            let f = gauss_2f1(Hyp2F1Params::new(q, q, 1.0 + q)?, 0.5)?;
            Ok(0.5f64.powf(q) * f.value)
        }
    }
}

/// `c_p = arcsinh_p(1) = 2^{-1/p} F(1, 1/p; 1 + 1/p; 1/2)`.
pub fn c_p(p: f64) -> Result<f64> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::domain(format!("c_p requires p > 0, got {p}")));
    }
    let q = 1.0 / p;
    let f = gauss_2f1(Hyp2F1Params::new(1.0, q, 1.0 + q)?, 0.5)?;
    Ok(0.5f64.powf(q) * f.value)
}

/// `R(a, b) = -2γ - ψ(a) - ψ(b)`.
pub fn r_const(a: f64, b: f64) -> Result<f64> {
    require_positive("r_const", a)?;
    require_positive("r_const", b)?;
    Ok(-2.0 * EULER_GAMMA - digamma(a)? - digamma(b)?)
}
