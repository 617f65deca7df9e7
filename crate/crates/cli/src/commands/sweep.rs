//! One-parameter sweeps over state families with closed-form cross-checks.

use qfasym_core::asymmetry::{bipartite_asymmetry, local_asymmetry};
use qfasym_core::correlation::{
    bell_diagonal_q, bell_diagonal_state, pure_state_q, q_measure, BellDiagonalParams, SchmidtData,
};
use qfasym_core::linalg::CVector;
use qfasym_core::{tol, Complex64, DensityMatrix, Side};
use serde::Serialize;

use crate::report::{csv_string, Format};
use crate::{json, CliError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepFamily {
    /// Werner weight `w`.
    Werner,
    /// `c = t · direction`, swept over `t`.
    BellDiagonal { direction: [f64; 3] },
    /// `√λ |00⟩ + √(1 − λ) |11⟩`, swept over `λ`.
    Pure,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: f64,
    pub q_total: Option<f64>,
    pub q_side_a: Option<f64>,
    pub q_side_b: Option<f64>,
    pub asymmetry_bipartite: Option<f64>,
    pub asymmetry_local_a: Option<f64>,
    pub asymmetry_local_b: Option<f64>,
    pub closed_form: Option<f64>,
    /// `|closed_form − q_total|`.
    pub deviation: Option<f64>,
    pub warning: String,
}

impl SweepRow {
    fn skipped(param: f64, warning: String) -> Self {
        Self {
            param,
            q_total: None,
            q_side_a: None,
            q_side_b: None,
            asymmetry_bipartite: None,
            asymmetry_local_a: None,
            asymmetry_local_b: None,
            closed_form: None,
            deviation: None,
            warning,
        }
    }

    /// Closed form and definition disagree beyond [`tol::ORACLE`].
    pub fn is_mismatch(&self) -> bool {
        self.deviation
            .is_some_and(|d| d.is_nan() || d > tol::ORACLE)
    }
}

/// `steps` evenly spaced points from `from` to `to` inclusive.
pub fn grid(from: f64, to: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if !from.is_finite() || !to.is_finite() {
        return Err(CliError::Input("sweep range must be finite".into()));
    }
    match steps {
        0 => Err(CliError::Input("--steps must be at least 1".into())),
        1 => Ok(vec![from]),
        n => Ok((0..n)
            .map(|k| {
                if k == n - 1 {
                    to
                } else {
                    from + (to - from) * k as f64 / (n - 1) as f64
                }
            })
            .collect()),
    }
}

fn family_point(family: SweepFamily, t: f64) -> qfasym_core::Result<(DensityMatrix, f64)> {
    match family {
        SweepFamily::Werner => {
            let p = BellDiagonalParams::werner(t)?;
            Ok((bell_diagonal_state(&p), bell_diagonal_q(&p)))
        }
        SweepFamily::BellDiagonal { direction } => {
            let p = BellDiagonalParams::new(direction.map(|c| c * t))?;
            Ok((bell_diagonal_state(&p), bell_diagonal_q(&p)))
        }
        SweepFamily::Pure => {
            if !(0.0..=1.0).contains(&t) {
                return Err(qfasym_core::Error::InvalidParameter {
                    name: "lambda",
                    value: t,
                    reason: "Schmidt weight must lie in [0, 1]",
                });
            }
            let mut psi = CVector::zeros(4);
            psi[0] = Complex64::new(t.sqrt(), 0.0);
            psi[3] = Complex64::new((1.0 - t).sqrt(), 0.0);
            let closed = pure_state_q(&SchmidtData::new(vec![t, 1.0 - t])?).total;
            Ok((DensityMatrix::from_pure(&psi, vec![2, 2])?, closed))
        }
    }
}

fn evaluate(t: f64, rho: &DensityMatrix, closed: f64) -> qfasym_core::Result<SweepRow> {
    let dims = [2, 2];
    let q = q_measure(rho, dims)?;
    let deviation = (closed - q.q_total).abs();
    let warning = if deviation <= tol::ORACLE {
        String::new()
    } else {
        format!("closed form differs from definition by {deviation:e}")
    };
    Ok(SweepRow {
        param: t,
        q_total: Some(q.q_total),
        q_side_a: Some(q.q_side_a()),
        q_side_b: Some(q.q_side_b()),
        asymmetry_bipartite: Some(bipartite_asymmetry(rho, dims)?.total),
        asymmetry_local_a: Some(local_asymmetry(rho, dims, Side::A)?.total),
        asymmetry_local_b: Some(local_asymmetry(rho, dims, Side::B)?.total),
        closed_form: Some(closed),
        deviation: Some(deviation),
        warning,
    })
}

/// Rows in grid order. Points outside the family's validity region are kept
/// as rows with empty values and the reason in `warning`.
pub fn sweep(
    family: SweepFamily,
    from: f64,
    to: f64,
    steps: usize,
) -> Result<Vec<SweepRow>, CliError> {
    grid(from, to, steps)?
        .into_iter()
        .map(|t| {
            let row = family_point(family, t).and_then(|(rho, closed)| evaluate(t, &rho, closed));
            Ok(row.unwrap_or_else(|e| SweepRow::skipped(t, format!("skipped: {e}"))))
        })
        .collect()
}

pub fn render(rows: &[SweepRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json::to_string(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "param",
                "q_total",
                "q_side_a",
                "q_side_b",
                "asymmetry_bipartite",
                "asymmetry_local_a",
                "asymmetry_local_b",
                "closed_form",
                "deviation",
                "warning",
            ])?;
            let cell = |v: Option<f64>| v.map(json::format_f64).unwrap_or_default();
            for r in rows {
                w.write_record([
                    json::format_f64(r.param),
                    cell(r.q_total),
                    cell(r.q_side_a),
                    cell(r.q_side_b),
                    cell(r.asymmetry_bipartite),
                    cell(r.asymmetry_local_a),
                    cell(r.asymmetry_local_b),
                    cell(r.closed_form),
                    cell(r.deviation),
                    r.warning.clone(),
                ])?;
            }
            csv_string(w)
        }
    }
}
