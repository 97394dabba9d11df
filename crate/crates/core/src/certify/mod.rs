//! Grid and sampler certification of inequality, monotonicity and
//! Grünbaum-type claims.
//!
//! Every comparison is made against the accumulated error budget of the
//! quantities involved. A point is *satisfied* when its margin exceeds
//! `margin_factor × budget`, *violated* when it is below minus that amount,
//! and a *tie* otherwise. Non-strict claims accept ties. Strict claims accept
//! ties only before the first satisfied point of each `p` row: as `x → 0`
//! both sides agree to high order and the margin drops below double
//! precision, which says nothing about the claim. A tie after the claim has
//! been resolved along the row is counted as a violation.

mod claims;
mod grunbaum;
mod monotone;

pub use claims::{claim, claims, ClaimKind, ClaimSpec, DefaultP};
pub use grunbaum::{certify_grunbaum, grunbaum_samples};
pub use monotone::{certify_monotonicity, lemma_ratio, monotone_targets, MonotoneSpec};

use crate::bounds::Interval;
use crate::error::{Error, Result};
use crate::est::Est;
use crate::hypergeom::gauss_2f1;
use crate::hypergeom::Hyp2F1Params;
use crate::ptrig::{eval, EvalMethod, FnId, PtrigInput};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

pub const TOOL_VERSION: &str = concat!("ptrig ", env!("CARGO_PKG_VERSION"));
pub const DEFAULT_MARGIN_FACTOR: f64 = 10.0;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_X_POINTS: usize = 200;
pub const DEFAULT_P_POINTS: usize = 40;
pub const DEFAULT_PAIR_POINTS: usize = 30;
pub const X_LO: f64 = 1e-3;
pub const X_HI: f64 = 0.999;
/// Stored violations per report; the total is always reported.
pub const MAX_LISTED_VIOLATIONS: usize = 50;

/// Whether a claim's outcome decides the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Policy {
    Assert,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Violated,
    Vacuous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Violated,
    Vacuous,
    Reported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arity {
    Pointwise,
    Pair,
    Grunbaum,
    Monotone,
}

/// Grid and sampling options. `None` fields fall back to each claim's defaults.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub p_values: Option<Vec<f64>>,
    pub x_values: Option<Vec<f64>>,
    pub pair_values: Option<Vec<f64>>,
    pub margin_factor: f64,
    pub seed: u64,
    pub samples: usize,
    /// Cross-check every function value against the quadrature route.
    pub dual_route: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            p_values: None,
            x_values: None,
            pair_values: None,
            margin_factor: DEFAULT_MARGIN_FACTOR,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            dual_route: true,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.margin_factor.is_finite() && self.margin_factor >= 1.0) {
            return Err(Error::domain(format!("margin factor must be >= 1, got {}", self.margin_factor)));
        }
        for (name, values) in [("p", &self.p_values), ("x", &self.x_values), ("pair", &self.pair_values)] {
            if let Some(v) = values {
                if v.is_empty() {
                    return Err(Error::domain(format!("{name} grid is empty")));
                }
                if v.iter().any(|t| !t.is_finite()) || v.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::domain(format!("{name} grid must be finite and strictly increasing")));
                }
            }
        }
        for (name, values) in [("x", &self.x_values), ("pair", &self.pair_values)] {
            if let Some(v) = values {
                if v.iter().any(|&t| !(t > 0.0 && t < 1.0)) {
                    return Err(Error::domain(format!("{name} grid must lie in (0, 1)")));
                }
            }
        }
        if self.samples == 0 {
            return Err(Error::domain("sample count must be at least 1"));
        }
        Ok(())
    }
}

/// `n` points evenly spaced on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// `n` points evenly spaced in `log` on `[lo, hi]`.
pub fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = linspace(lo.ln(), hi.ln(), n).into_iter().map(f64::exp).collect();
    if let [first, .., last] = v.as_mut_slice() {
        (*first, *last) = (lo, hi);
    }
    v
}

pub fn default_x_grid() -> Vec<f64> {
    linspace(X_LO, X_HI, DEFAULT_X_POINTS)
}

pub fn default_pair_grid() -> Vec<f64> {
    linspace(X_LO, X_HI, DEFAULT_PAIR_POINTS)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridRecord {
    pub p: Vec<f64>,
    pub x: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ab: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub claim_id: String,
    pub statement: String,
    pub arity: Arity,
    pub policy: Policy,
    pub status: Status,
    pub outcome: Outcome,
    pub points_checked: usize,
    pub skipped: usize,
    /// Ties accepted before a strict claim was resolved along its row.
    pub unresolved: usize,
    pub min_margin: Option<f64>,
    pub max_error_budget: f64,
    pub margin_factor: f64,
    pub grid: GridRecord,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub violations_total: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub tool_version: String,
}

impl CertificateReport {
    /// True when this report should fail a run.
    pub fn fails(&self) -> bool {
        self.policy == Policy::Assert && self.status == Status::Violated
    }
}

/// One side-by-side comparison `lhs < rhs` (or `≤`).
#[derive(Debug, Clone, Copy)]
pub struct Part {
    pub lhs: Est,
    pub rhs: Est,
}

impl Part {
    pub fn new(lhs: Est, rhs: Est) -> Self {
        Part { lhs, rhs }
    }

    fn margin(&self) -> f64 {
        self.rhs.value - self.lhs.value
    }

    fn budget(&self) -> f64 {
        self.lhs.err + self.rhs.err
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Class {
    Violated,
    Tie,
    Satisfied,
}

fn classify(margin: f64, budget: f64, k: f64) -> Class {
    if margin > k * budget {
        Class::Satisfied
    } else if margin < -k * budget {
        Class::Violated
    } else {
        Class::Tie
    }
}

/// One evaluated point, already reduced to its worst part.
#[derive(Debug, Clone)]
pub(crate) struct PointEval {
    params: Vec<(&'static str, f64)>,
    lhs: f64,
    rhs: f64,
    margin: f64,
    budget: f64,
    class: Class,
    strict: bool,
}

pub(crate) enum Point {
    Done(PointEval),
    Skipped(String),
}

impl Point {
    pub(crate) fn from_parts(
        params: Vec<(&'static str, f64)>,
        parts: Result<Vec<Part>>,
        strict: bool,
        k: f64,
    ) -> Point {
        let parts = match parts {
            Ok(p) => p,
            Err(e) => return Point::Skipped(e.to_string()),
        };
        let mut worst: Option<(Class, Part)> = None;
        for part in parts {
            let (m, b) = (part.margin(), part.budget());
            if !(m.is_finite() && b.is_finite()) {
                return Point::Skipped("non-finite value".into());
            }
            let class = classify(m, b, k);
            let replace = match &worst {
                None => true,
                Some((c, w)) => class < *c || (class == *c && m < w.margin()),
            };
            if replace {
                worst = Some((class, part));
            }
        }
        let Some((class, part)) = worst else {
            return Point::Skipped("no comparison".into());
        };
        Point::Done(PointEval {
            params,
            lhs: part.lhs.value,
            rhs: part.rhs.value,
            margin: part.margin(),
            budget: part.budget(),
            class,
            strict,
        })
    }
}

/// Shared evaluation context.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub dual: bool,
}

impl Ctx {
    /// Function value by the automatic route, optionally cross-checked
    /// against quadrature.
    pub fn f(&self, func: FnId, p: f64, x: f64) -> Result<Est> {
        let input = PtrigInput::new(func, p, x)?;
        let a = eval(input, EvalMethod::Auto)?;
        if self.dual && a.method != crate::hypergeom::Method::Quadrature {
            let q = eval(input, EvalMethod::Quadrature)?;
            let allowed = 1e-9f64.max(20.0 * (a.abs_err + q.abs_err));
            if (a.value - q.value).abs() > allowed {
                return Err(Error::RouteDisagreement {
                    what: format!("{func}(p={p}, x={x})"),
                    series: a.value,
                    quadrature: q.value,
                    allowed,
                });
            }
        }
        Ok(a.into())
    }

    /// `arcsin_p` including `p ∈ (0, 1]`, where only the series route exists.
    pub fn arcsin_any(&self, p: f64, x: f64) -> Result<Est> {
        if p > 1.0 {
            return self.f(FnId::Arcsin, p, x);
        }
        let q = 1.0 / p;
        let u = Est::pow_exact(x, p);
        let f: Est = gauss_2f1(Hyp2F1Params::new(q, q, 1.0 + q)?, u.value)?.into();
        // With y = u^{1/p}, F(u) = arcsin_p(y)/y, so
        // |dF/du| <= ((1-u)^{-1/p} + F) / (p u).
        let slope = (Est::one_minus_pow_exact(x, p).value.powf(-q) + f.value.abs()) / (p * u.value);
        Ok(x * Est::new(f.value, f.err + u.err * slope))
    }
}

/// Builds a report from rows of evaluated points, in row order.
pub(crate) struct ReportInput<'a> {
    pub claim_id: &'a str,
    pub statement: &'a str,
    pub arity: Arity,
    pub policy: Policy,
    pub margin_factor: f64,
    pub grid: GridRecord,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub notes: Vec<String>,
}

pub(crate) fn assemble(input: ReportInput<'_>, rows: Vec<Vec<Point>>) -> CertificateReport {
    let mut points_checked = 0;
    let mut skipped = 0;
    let mut unresolved = 0;
    let mut satisfied = 0;
    let mut min_margin: Option<f64> = None;
    let mut max_budget = 0.0f64;
    let mut violations = Vec::new();
    let mut violations_total = 0;
    let mut skip_reasons: BTreeMap<String, usize> = BTreeMap::new();
    let mut notes = input.notes;

    for row in rows {
        let mut resolved = false;
        for point in row {
            let pe = match point {
                Point::Skipped(reason) => {
                    skipped += 1;
                    *skip_reasons.entry(reason).or_default() += 1;
                    continue;
                }
                Point::Done(pe) => pe,
            };
            points_checked += 1;
            min_margin = Some(min_margin.map_or(pe.margin, |m| m.min(pe.margin)));
            max_budget = max_budget.max(pe.budget);
            let violated = match pe.class {
                Class::Satisfied => {
                    satisfied += 1;
                    if pe.strict {
                        resolved = true;
                    }
                    false
                }
                Class::Tie if !pe.strict => {
                    satisfied += 1;
                    false
                }
                Class::Tie if !resolved => {
                    unresolved += 1;
                    false
                }
                Class::Tie | Class::Violated => true,
            };
            if violated {
                violations_total += 1;
                if violations.len() < MAX_LISTED_VIOLATIONS {
                    violations.push(Violation {
                        params: pe.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                        lhs: pe.lhs,
                        rhs: pe.rhs,
                        margin: pe.margin,
                    });
                }
            }
        }
    }

    let outcome = if points_checked == 0 {
        Outcome::Vacuous
    } else if violations_total == 0 && satisfied > 0 {
        Outcome::Holds
    } else {
        Outcome::Violated
    };
    if unresolved > 0 {
        notes.push(format!(
            "{unresolved} points before the first resolved point of their row have |margin| within \
             {} x error budget",
            input.margin_factor
        ));
    }
    for (reason, count) in skip_reasons.iter().take(5) {
        notes.push(format!("skipped {count}: {reason}"));
    }
    let status = match (input.policy, outcome) {
        (Policy::Report, _) => Status::Reported,
        (Policy::Assert, Outcome::Holds) => Status::Holds,
        (Policy::Assert, Outcome::Violated) => Status::Violated,
        (Policy::Assert, Outcome::Vacuous) => Status::Vacuous,
    };
    CertificateReport {
        claim_id: input.claim_id.to_string(),
        statement: input.statement.to_string(),
        arity: input.arity,
        policy: input.policy,
        status,
        outcome,
        points_checked,
        skipped,
        unresolved,
        min_margin,
        max_error_budget: max_budget,
        margin_factor: input.margin_factor,
        grid: input.grid,
        seed: input.seed,
        samples: input.samples,
        violations_total,
        violations,
        notes,
        tool_version: TOOL_VERSION.to_string(),
    }
}

/// Points of `values` inside `domain`.
pub(crate) fn restrict(values: &[f64], domain: &Interval) -> Vec<f64> {
    values.iter().copied().filter(|&v| domain.contains(v)).collect()
}

/// Certifies one pointwise or pair claim.
pub fn certify_inequality(claim_id: &str, grid: &GridSpec) -> Result<CertificateReport> {
    grid.validate()?;
    let spec = claim(claim_id)?;
    let ctx = Ctx { dual: grid.dual_route };
    let k = grid.margin_factor;
    let p_values = spec.p_values(grid);
    let notes = spec.notes();
    match &spec.kind {
        ClaimKind::Pointwise(f) => {
            let xs = grid.x_values.clone().unwrap_or_else(default_x_grid);
            let rows: Vec<Vec<Point>> = p_values
                .par_iter()
                .map(|&p| {
                    xs.iter()
                        .map(|&x| Point::from_parts(vec![("p", p), ("x", x)], f(&ctx, p, x), spec.strict, k))
                        .collect()
                })
                .collect();
            Ok(assemble(spec.report_input(grid, p_values.clone(), xs, notes), rows))
        }
        ClaimKind::Pair(f) => {
            let ys = grid.pair_values.clone().unwrap_or_else(default_pair_grid);
            let rows: Vec<Vec<Point>> = p_values
                .par_iter()
                .map(|&p| {
                    let mut row = Vec::with_capacity(ys.len() * ys.len());
                    for &x in &ys {
                        for &y in &ys {
                            let params = vec![("p", p), ("x", x), ("y", y)];
                            row.push(Point::from_parts(params, f(&ctx, p, x, y), spec.strict, k));
                        }
                    }
                    row
                })
                .collect();
            Ok(assemble(spec.report_input(grid, p_values.clone(), ys, notes), rows))
        }
        ClaimKind::Grunbaum { .. } => certify_grunbaum(claim_id, grid.samples, grid.seed, grid),
    }
}

/// Certifies any registered claim or monotonicity target by id.
pub fn certify(id: &str, grid: &GridSpec) -> Result<CertificateReport> {
    if monotone_targets().iter().any(|m| m.id == id) {
        return certify_monotonicity(id, grid);
    }
    certify_inequality(id, grid)
}

/// Every registered id, in the order [`certify_all`] runs them.
pub fn all_ids() -> Vec<String> {
    let mut ids: Vec<String> = claims().iter().map(|c| c.id.clone()).collect();
    ids.extend(monotone_targets().iter().map(|m| m.id.to_string()));
    ids
}

/// Runs every claim and monotonicity target.
pub fn certify_all(grid: &GridSpec) -> Result<Vec<CertificateReport>> {
    grid.validate()?;
    all_ids().iter().map(|id| certify(id, grid)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pe(margin: f64, strict: bool) -> Point {
        Point::Done(PointEval {
            params: vec![],
            lhs: 0.0,
            rhs: margin,
            margin,
            budget: 1e-16,
            class: classify(margin, 1e-16, 10.0),
            strict,
        })
    }

    fn input() -> ReportInput<'static> {
        ReportInput {
            claim_id: "t",
            statement: "",
            arity: Arity::Pointwise,
            policy: Policy::Assert,
            margin_factor: 10.0,
            grid: GridRecord { p: vec![], x: vec![], ab: vec![] },
            seed: None,
            samples: None,
            notes: vec![],
        }
    }

    #[test]
    fn ties_allowed_only_as_prefix() {
        let r = assemble(input(), vec![vec![pe(0.0, true), pe(1.0, true), pe(2.0, true)]]);
        assert_eq!((r.status, r.unresolved, r.violations_total), (Status::Holds, 1, 0));
        let r = assemble(input(), vec![vec![pe(1.0, true), pe(0.0, true)]]);
        assert_eq!(r.status, Status::Violated);
        let r = assemble(input(), vec![vec![pe(1.0, false), pe(0.0, false)]]);
        assert_eq!(r.status, Status::Holds);
        let r = assemble(input(), vec![vec![pe(0.0, true)]]);
        assert_eq!(r.status, Status::Violated);
    }

    #[test]
    fn vacuous_and_skipped() {
        let r = assemble(input(), vec![]);
        assert_eq!(r.status, Status::Vacuous);
        let r = assemble(input(), vec![vec![Point::Skipped("x".into()), pe(1.0, true)]]);
        assert_eq!((r.status, r.skipped, r.points_checked), (Status::Holds, 1, 1));
    }

    #[test]
    fn grids() {
        let g = linspace(0.0, 1.0, 5);
        assert_eq!(g, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let l = logspace(1.0, 100.0, 3);
        assert!((l[1] - 10.0).abs() < 1e-12);
        let bad = GridSpec { x_values: Some(vec![0.5, 0.2]), ..GridSpec::default() };
        assert!(bad.validate().is_err());
    }
}
