//! Which of several bounds on the same side of a target is tightest.

use crate::bounds::{bound, side_margin, target_value, Side, Target};
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Written in place of a bound id when every bound is on the wrong side.
pub const NO_VALID_BOUND: &str = "none";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceRow {
    pub target: Target,
    pub side: Side,
    pub p: f64,
    pub x: f64,
    pub best_bound_id: String,
    /// Distance from the best bound to the target, positive when on the
    /// registered side.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PSummary {
    pub p: f64,
    pub points: usize,
    /// Fraction of the row's points won by each bound.
    pub wins: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceTable {
    pub target: Target,
    pub side: Side,
    pub bound_ids: Vec<String>,
    pub rows: Vec<DominanceRow>,
    pub summary: Vec<PSummary>,
    /// Points where no listed bound was in its domain.
    pub skipped: usize,
}

impl DominanceTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("target,side,p,x,best_bound_id,gap\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{:?},{:?},{},{:?}\n", r.target, r.side, r.p, r.x, r.best_bound_id, r.gap));
        }
        out
    }
}

/// Compares `ids` pointwise on the `p × x` grid. A bound counts at a point
/// only when the point is in its domain; among those on the correct side
/// (within the error budget) the one closest to the target wins.
pub fn compare_bounds(target: Target, ids: &[&str], p_values: &[f64], x_values: &[f64]) -> Result<DominanceTable> {
    if ids.is_empty() {
        return Err(Error::domain("no bound ids given"));
    }
    let specs = ids.iter().map(|id| bound(id)).collect::<Result<Vec<_>>>()?;
    let side = specs[0].side;
    if let Some(odd) = specs.iter().find(|s| s.target != target || s.side != side) {
        return Err(Error::MixedTargets(format!(
            "expected {target} {side}, `{}` is {} {}",
            odd.id, odd.target, odd.side
        )));
    }

    let per_p: Vec<(Vec<DominanceRow>, usize)> = p_values
        .par_iter()
        .map(|&p| {
            let mut rows = Vec::new();
            let mut skipped = 0;
            for &x in x_values {
                let mut best: Option<(&str, f64)> = None;
                let mut least_wrong: Option<f64> = None;
                let mut any = false;
                for spec in &specs {
                    if spec.check_domain(p, x).is_err() {
                        continue;
                    }
                    let Ok((margin, budget, _, _)) = side_margin(spec, p, x) else { continue };
                    any = true;
                    if margin >= -budget {
                        if best.is_none_or(|(_, g)| margin < g) {
                            best = Some((spec.id, margin));
                        }
                    } else if least_wrong.is_none_or(|g| margin > g) {
                        least_wrong = Some(margin);
                    }
                }
                if !any {
                    skipped += 1;
                    continue;
                }
                let (id, gap) = match (best, least_wrong) {
                    (Some((id, g)), _) => (id, g),
                    (None, Some(g)) => (NO_VALID_BOUND, g),
                    (None, None) => unreachable!("a bound was evaluated"),
                };
                rows.push(DominanceRow { target, side, p, x, best_bound_id: id.to_string(), gap });
            }
            (rows, skipped)
        })
        .collect();

    let mut rows = Vec::new();
    let mut summary = Vec::new();
    let mut skipped = 0;
    for (&p, (r, s)) in p_values.iter().zip(per_p) {
        skipped += s;
        if !r.is_empty() {
            let mut wins: BTreeMap<String, f64> = ids.iter().map(|id| (id.to_string(), 0.0)).collect();
            for row in &r {
                *wins.entry(row.best_bound_id.clone()).or_default() += 1.0;
            }
            let n = r.len();
            wins.values_mut().for_each(|w| *w /= n as f64);
            summary.push(PSummary { p, points: n, wins });
        }
        rows.extend(r);
    }
    // Make sure the target itself evaluates somewhere, so a table of all
    // skipped points is reported as an error rather than silently empty.
    if rows.is_empty() {
        if let (Some(&p), Some(&x)) = (p_values.first(), x_values.first()) {
            target_value(target, p, x)?;
        }
    }
    Ok(DominanceTable { target, side, bound_ids: ids.iter().map(|s| s.to_string()).collect(), rows, summary, skipped })
}
