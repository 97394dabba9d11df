//! Monotonicity of ratio functions along `x`.

use super::{
    assemble, default_x_grid, restrict, Arity, Ctx, DefaultP, GridRecord, GridSpec, Part, Point, Policy, ReportInput,
};
use crate::bounds::{bound_est, Interval, P_BELOW_ONE, P_POSITIVE};
use crate::error::{Error, Result};
use crate::est::Est;
use crate::hypergeom::{clausen_3f2, Hyp3F2Params};
use crate::ptrig::FnId;
use crate::special::beta;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `(a, b) = (1, 1/p)` along the `p` grid.
    LemmaP,
    /// A fixed `(a, b)` grid.
    LemmaAb,
    Ratio1,
    Ratio2,
    Ratio3,
}

#[derive(Debug, Clone)]
pub struct MonotoneSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub increasing: bool,
    pub p_domain: Interval,
    kind: Kind,
}

const AB_VALUES: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

pub fn monotone_targets() -> Vec<MonotoneSpec> {
    vec![
        MonotoneSpec {
            id: "L1.2",
            statement: "(1 - F(a,b;a+b;x))/log(1-x) increases from ab/(a+b) to 1/B(a,b), (a,b) = (1,1/p)",
            increasing: true,
            p_domain: P_POSITIVE,
            kind: Kind::LemmaP,
        },
        MonotoneSpec {
            id: "L1.2_ab",
            statement: "(1 - F(a,b;a+b;x))/log(1-x) increases from ab/(a+b) to 1/B(a,b), a,b in {1/4,1/2,1,2,4}",
            increasing: true,
            p_domain: P_POSITIVE,
            kind: Kind::LemmaAb,
        },
        MonotoneSpec {
            id: "T2.2_ratio1",
            statement: "x F(1/p,1+1/p;2+1/p;-x^p) / arcsinh_p(x) decreases",
            increasing: false,
            p_domain: P_POSITIVE,
            kind: Kind::Ratio1,
        },
        MonotoneSpec {
            id: "T2.2_ratio2",
            statement: "x F(2,1/p;2+1/p;-x^p) / arctan_p(x) decreases",
            increasing: false,
            p_domain: P_POSITIVE,
            kind: Kind::Ratio2,
        },
        MonotoneSpec {
            id: "T2.2_ratio3",
            statement: "arcsinh_p(x) / (x F(-1+1/p,1/p;1/p;-x^p)) decreases",
            increasing: false,
            p_domain: P_BELOW_ONE,
            kind: Kind::Ratio3,
        },
    ]
}

/// `(1 - F(a,b;a+b;x)) / log(1-x)`, with `F - 1` taken from its
/// `₃F₂(a+1, b+1, 1; a+b+1, 2; x)` form so small `x` keeps full precision.
pub fn lemma_ratio(a: f64, b: f64, x: f64) -> Result<Est> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::domain(format!("lemma ratio needs a, b > 0, got a={a}, b={b}")));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("lemma ratio needs x in (0, 1), got {x}")));
    }
    let c = a + b;
    let g: Est = clausen_3f2(Hyp3F2Params::new(a + 1.0, b + 1.0, 1.0, c + 1.0, 2.0)?, x)?.into();
    let log = -(Est::exact(-x).ln_1p());
    Ok(a * b / c * x * g / log)
}

fn range(a: f64, b: f64) -> Result<(Est, Est)> {
    let hi = 1.0 / beta(a, b)?;
    Ok((Est::exact(a * b / (a + b)), Est::new(hi, 1e-13 * hi)))
}

fn value(ctx: &Ctx, kind: Kind, p: f64, x: f64) -> Result<Est> {
    match kind {
        Kind::LemmaP | Kind::LemmaAb => unreachable!("lemma values are computed per (a, b)"),
        Kind::Ratio1 => Ok(bound_est("asinh_lb_hyp", p, x)? / ctx.f(FnId::Arcsinh, p, x)?),
        Kind::Ratio2 => Ok(bound_est("atan_lb_hyp", p, x)? / ctx.f(FnId::Arctan, p, x)?),
        Kind::Ratio3 => Ok(ctx.f(FnId::Arcsinh, p, x)? / bound_est("asinh_ub_hyp", p, x)?),
    }
}

/// One row: consecutive differences along `xs`, plus range points when given.
fn row(
    values: Vec<Result<Est>>,
    xs: &[f64],
    head: &[(&'static str, f64)],
    increasing: bool,
    range: Option<(Est, Est)>,
    k: f64,
) -> Vec<Point> {
    let mut out = Vec::new();
    if xs.len() < 2 {
        return out;
    }
    let params = |x: f64| {
        let mut v = head.to_vec();
        v.push(("x", x));
        v
    };
    for (i, &x) in xs.iter().enumerate() {
        if let Some((lo, hi)) = range {
            let parts = match &values[i] {
                Ok(v) => Ok(vec![Part::new(lo, *v), Part::new(*v, hi)]),
                Err(e) => Err(e.clone()),
            };
            out.push(Point::from_parts(params(x), parts, false, k));
        }
        if i == 0 {
            continue;
        }
        let parts = match (&values[i - 1], &values[i]) {
            (Ok(prev), Ok(cur)) => Ok(vec![if increasing { Part::new(*prev, *cur) } else { Part::new(*cur, *prev) }]),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        out.push(Point::from_parts(params(x), parts, true, k));
    }
    out
}

/// Checks that a registered ratio is strictly monotone along the `x` grid.
/// Lemma targets also check every value against the open range
/// `(ab/(a+b), 1/B(a,b))`, widened by the error budget.
pub fn certify_monotonicity(id: &str, grid: &GridSpec) -> Result<super::CertificateReport> {
    grid.validate()?;
    let targets = monotone_targets();
    let spec = targets.iter().find(|m| m.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    let ctx = Ctx { dual: grid.dual_route };
    let k = grid.margin_factor;
    let xs = grid.x_values.clone().unwrap_or_else(default_x_grid);
    let default_p = match spec.kind {
        Kind::Ratio3 => DefaultP::BelowOne,
        _ => DefaultP::Positive,
    };
    let p_values = match &grid.p_values {
        Some(v) => restrict(v, &spec.p_domain),
        None => default_p.values(),
    };

    let (rows, record) = match spec.kind {
        Kind::LemmaAb => {
            let ab: Vec<[f64; 2]> = AB_VALUES.iter().flat_map(|&a| AB_VALUES.iter().map(move |&b| [a, b])).collect();
            let rows = ab
                .par_iter()
                .map(|&[a, b]| {
                    let values = xs.iter().map(|&x| lemma_ratio(a, b, x)).collect();
                    row(values, &xs, &[("a", a), ("b", b)], true, range(a, b).ok(), k)
                })
                .collect();
            (rows, GridRecord { p: vec![], x: xs, ab })
        }
        Kind::LemmaP => {
            let rows = p_values
                .par_iter()
                .map(|&p| {
                    let (a, b) = (1.0, 1.0 / p);
                    let values = xs.iter().map(|&x| lemma_ratio(a, b, x)).collect();
                    row(values, &xs, &[("p", p)], true, range(a, b).ok(), k)
                })
                .collect();
            (rows, GridRecord { p: p_values, x: xs, ab: vec![] })
        }
        kind => {
            let rows = p_values
                .par_iter()
                .map(|&p| {
                    let values = xs.iter().map(|&x| value(&ctx, kind, p, x)).collect();
                    row(values, &xs, &[("p", p)], spec.increasing, None, k)
                })
                .collect();
            (rows, GridRecord { p: p_values, x: xs, ab: vec![] })
        }
    };

    let input = ReportInput {
        claim_id: spec.id,
        statement: spec.statement,
        arity: Arity::Monotone,
        policy: Policy::Assert,
        margin_factor: k,
        grid: record,
        seed: None,
        samples: None,
        notes: vec![],
    };
    Ok(assemble(input, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::{gauss_2f1, Hyp2F1Params};

    #[test]
    fn lemma_ratio_matches_direct_form() {
        for &(a, b, x) in &[(1.0, 0.5, 0.3), (2.0, 0.25, 0.7), (0.5, 4.0, 0.95)] {
            let f = gauss_2f1(Hyp2F1Params::new(a, b, a + b).unwrap(), x).unwrap().value;
            let direct = (1.0 - f) / (1.0f64 - x).ln();
            let r = lemma_ratio(a, b, x).unwrap();
            assert!((r.value - direct).abs() < 1e-12 * direct.abs(), "{a} {b} {x}");
        }
    }

    #[test]
    fn lemma_ratio_endpoints() {
        let r = lemma_ratio(1.0, 0.5, 1e-6).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-5);
        assert!(lemma_ratio(0.0, 1.0, 0.5).is_err());
        assert!(lemma_ratio(1.0, 1.0, 1.0).is_err());
    }
}
