//! Correlation and asymmetry measures of a bipartite state.

use qfasym_core::asymmetry::{bipartite_asymmetry, lifted_asymmetry, local_asymmetry};
use qfasym_core::correlation::q_measure;
use qfasym_core::generators::{gell_mann_basis, lift};
use qfasym_core::qfi::qfi_batch;
use qfasym_core::{DensityMatrix, Side};

use crate::report::ReportRow;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Measure {
    All,
    /// `Q` and its per-side shares.
    Q,
    /// Bipartite, local and lifted asymmetries.
    Asymmetry,
    /// QFI of every lifted generator.
    Qfi,
}

/// The explicit partition, or the file's own two-factor dims.
pub fn resolve_partition(
    state: &DensityMatrix,
    partition: Option<[usize; 2]>,
) -> Result<[usize; 2], CliError> {
    match (partition, state.dims()) {
        (Some([a, b]), _) if a.checked_mul(b) == Some(state.dim()) => Ok([a, b]),
        (Some([a, b]), _) => Err(CliError::Input(format!(
            "partition {a}x{b} does not match state dimension {}",
            state.dim()
        ))),
        (None, &[a, b]) => Ok([a, b]),
        (None, dims) => Err(CliError::Input(format!(
            "state has dims {dims:?}; pass --partition AxB"
        ))),
    }
}

pub fn compute(
    state: &DensityMatrix,
    partition: Option<[usize; 2]>,
    measure: Measure,
) -> Result<Vec<ReportRow>, CliError> {
    let dims = resolve_partition(state, partition)?;
    let rho = state.with_dims(&dims)?;
    let row = |name: String, value: f64| ReportRow::new(name, value, &dims);
    let mut rows = Vec::new();

    if matches!(measure, Measure::All | Measure::Q) {
        let q = q_measure(&rho, dims)?;
        rows.push(row("q_total".into(), q.q_total));
        rows.push(row("q_side_a".into(), q.q_side_a()));
        rows.push(row("q_side_b".into(), q.q_side_b()));
    }
    if matches!(measure, Measure::All | Measure::Asymmetry) {
        rows.push(row(
            "asymmetry_bipartite".into(),
            bipartite_asymmetry(&rho, dims)?.total,
        ));
        for (side, tag) in [(Side::A, "a"), (Side::B, "b")] {
            rows.push(row(
                format!("asymmetry_local_{tag}"),
                local_asymmetry(&rho, dims, side)?.total,
            ));
            rows.push(row(
                format!("asymmetry_lifted_{tag}"),
                lifted_asymmetry(&rho, dims, side)?.total,
            ));
        }
    }
    if matches!(measure, Measure::All | Measure::Qfi) {
        for (side, tag) in [(Side::A, "a"), (Side::B, "b")] {
            let basis = gell_mann_basis(dims[side.slot()])?;
            let lifted = lift(&basis, side.slot(), &dims)?;
            for (k, f) in qfi_batch(&rho, &lifted)?.into_iter().enumerate() {
                rows.push(row(format!("qfi_{tag}[{k}]"), f));
            }
        }
    }
    Ok(rows)
}
