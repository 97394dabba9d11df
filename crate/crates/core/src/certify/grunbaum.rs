//! Grünbaum-type inequalities on random `(x, y)` samples.

use super::{claim, Arity, ClaimKind, Ctx, GridRecord, GridSpec, Part, Point, ReportInput};
use crate::error::{Error, Result};
use crate::est::Est;
use crate::ptrig::FnId;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const LO: f64 = 1e-3;
const HI: f64 = 0.999;
/// Samples are accepted when `x² + y²` stays below this.
const Z2_MAX: f64 = 0.999;

/// `n` points `(x, y)` with `x² + y² ≤ 0.999`, drawn by rejection from a
/// ChaCha8 stream seeded with `seed`.
pub fn grunbaum_samples(seed: u64, n: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = rng.random_range(LO..HI);
        let y = rng.random_range(LO..HI);
        if x * x + y * y <= Z2_MAX {
            out.push((x, y));
        }
    }
    out
}

fn derivative(func: FnId, p: f64, t: f64) -> f64 {
    let u = t.powf(p);
    match func {
        FnId::Arcsin => (1.0 - u).powf(-1.0 / p),
        FnId::Arctanh => 1.0 / (1.0 - u),
        FnId::Arctan => 1.0 / (1.0 + u),
        FnId::Arcsinh => (1.0 + u).powf(-1.0 / p),
        FnId::Arccos => -(1.0 - u).powf(-1.0 / p),
    }
}

/// `func(t)/t` at a rounded argument.
fn ratio(ctx: &Ctx, func: FnId, p: f64, t: Est) -> Result<Est> {
    let v = match func {
        FnId::Arcsin => ctx.arcsin_any(p, t.value)?,
        _ => ctx.f(func, p, t.value)?,
    };
    let slope = derivative(func, p, t.value).abs() + v.value.abs() / t.value;
    let v = Est::new(v.value, v.err + t.err * slope);
    Ok(v / t)
}

fn parts(ctx: &Ctx, func: FnId, reversed: bool, p: f64, x: f64, y: f64) -> Result<Vec<Part>> {
    let x2 = Est::exact(x) * x;
    let y2 = Est::exact(y) * y;
    let z2 = x2 + y2;
    let left = 1.0 + ratio(ctx, func, p, z2)?;
    let right = ratio(ctx, func, p, x2)? + ratio(ctx, func, p, y2)?;
    Ok(vec![if reversed { Part::new(left, right) } else { Part::new(right, left) }])
}

/// Checks `1 + f(z²)` against `f(x²) + f(y²)` with `z² = x² + y²` and
/// `f(t) = fn(t)/t`, on the claim's `p` values and `samples` random points.
pub fn certify_grunbaum(
    claim_id: &str,
    samples: usize,
    seed: u64,
    grid: &GridSpec,
) -> Result<super::CertificateReport> {
    let spec = claim(claim_id)?;
    let ClaimKind::Grunbaum { func, reversed } = spec.kind else {
        return Err(Error::UnknownClaim(claim_id.to_string()));
    };
    if samples == 0 {
        return Err(Error::domain("sample count must be at least 1"));
    }
    let ctx = Ctx { dual: grid.dual_route };
    let k = grid.margin_factor;
    let p_values = spec.p_values(grid);
    let pts = grunbaum_samples(seed, samples);
    let rows: Vec<Vec<Point>> = p_values
        .par_iter()
        .map(|&p| {
            pts.iter()
                .map(|&(x, y)| {
                    let params = vec![("p", p), ("x", x), ("y", y)];
                    Point::from_parts(params, parts(&ctx, func, reversed, p, x, y), spec.strict, k)
                })
                .collect()
        })
        .collect();
    let input = ReportInput {
        claim_id: &spec.id,
        statement: &spec.statement,
        arity: Arity::Grunbaum,
        policy: spec.policy,
        margin_factor: k,
        grid: GridRecord { p: p_values, x: vec![], ab: vec![] },
        seed: Some(seed),
        samples: Some(samples),
        notes: spec.notes(),
    };
    Ok(super::assemble(input, rows))
}
