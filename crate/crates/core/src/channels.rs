//! Quantum channels in Kraus form, the usual one-qubit families, local
//! application on one side of a bipartite state, and the monotonicity trial
//! harness.

use num_complex::Complex64;
use rand::Rng;

use crate::asymmetry::Side;
use crate::correlation::q_measure;
use crate::linalg::{
    embed, identity, kron, max_abs, partial_trace, pauli_x, pauli_y, pauli_z, random_haar_unitary,
    unitarity_deviation, CMatrix, DensityMatrix, Observable, ONE, ZERO,
};
use crate::qfi::qfi;
use crate::{tol, Error, Result};

/// Completely positive trace-preserving map `ρ ↦ Σ_k K_k ρ K_k†`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    operators: Vec<CMatrix>,
    label: String,
}

impl KrausChannel {
    pub fn new(operators: Vec<CMatrix>, label: impl Into<String>) -> Result<Self> {
        let first = operators.first().ok_or(Error::Empty)?;
        let d = first.nrows();
        for k in &operators {
            if !k.is_square() {
                return Err(Error::NotSquare {
                    rows: k.nrows(),
                    cols: k.ncols(),
                });
            }
            if k.nrows() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: k.nrows(),
                });
            }
        }
        let channel = Self {
            operators,
            label: label.into(),
        };
        let residual = channel.completeness_residual();
        if residual > tol::VALIDATION {
            return Err(Error::IncompleteChannel { residual });
        }
        Ok(channel)
    }

    pub fn dim(&self) -> usize {
        self.operators[0].nrows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    /// `max |Σ K†K − I|`.
    pub fn completeness_residual(&self) -> f64 {
        let d = self.dim();
        let sum = self
            .operators
            .iter()
            .fold(CMatrix::zeros(d, d), |acc, k| acc + k.adjoint() * k);
        max_abs(&(sum - identity(d)))
    }

    /// Applies the channel to a raw matrix without validating the output.
    pub fn apply_matrix(&self, m: &CMatrix) -> CMatrix {
        self.operators
            .iter()
            .fold(CMatrix::zeros(m.nrows(), m.ncols()), |acc, k| {
                acc + k * m * k.adjoint()
            })
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rho.dim(),
            });
        }
        DensityMatrix::new(self.apply_matrix(rho.matrix()), rho.dims().to_vec())
    }

    /// The channel `id ⊗ … ⊗ E ⊗ … ⊗ id` acting on subsystem `slot`.
    pub fn lift(&self, slot: usize, dims: &[usize]) -> Result<KrausChannel> {
        let operators = self
            .operators
            .iter()
            .map(|k| embed(k, slot, dims))
            .collect::<Result<Vec<_>>>()?;
        KrausChannel::new(operators, format!("{}@{slot}", self.label))
    }
}

/// Applies `channel` to subsystem `slot` of a composite state.
pub fn apply_local_slot(
    channel: &KrausChannel,
    slot: usize,
    rho: &DensityMatrix,
    dims: &[usize],
) -> Result<DensityMatrix> {
    let rho = rho.with_dims(dims)?;
    channel.lift(slot, dims)?.apply(&rho)
}

pub fn apply_local(
    channel: &KrausChannel,
    side: Side,
    rho: &DensityMatrix,
    dims: [usize; 2],
) -> Result<DensityMatrix> {
    apply_local_slot(channel, side.slot(), rho, &dims)
}

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::InvalidParameter {
            name,
            value,
            reason: "must lie in [0, 1]",
        });
    }
    Ok(())
}

pub fn identity_channel(d: usize) -> KrausChannel {
    KrausChannel {
        operators: vec![identity(d)],
        label: format!("identity({d})"),
    }
}

/// Depolarizing channel `ρ ↦ (1 − p) ρ + p I/d`, with Kraus operators built
/// from the Heisenberg-Weyl unitaries `X^a Z^b`. For `d = 2` these are the
/// Pauli matrices.
pub fn depolarizing(d: usize, p: f64) -> Result<KrausChannel> {
    check_unit_interval("p", p)?;
    if d == 0 {
        return Err(Error::Empty);
    }
    let df = d as f64;
    let weyl: Vec<CMatrix> = if d == 2 {
        vec![identity(2), pauli_x(), pauli_y(), pauli_z()]
    } else {
        let shift = CMatrix::from_fn(d, d, |i, j| if i == (j + 1) % d { ONE } else { ZERO });
        let clock = CMatrix::from_fn(d, d, |i, j| {
            if i == j {
                Complex64::from_polar(1.0, std::f64::consts::TAU * i as f64 / df)
            } else {
                ZERO
            }
        });
        let mut out = Vec::with_capacity(d * d);
        let mut xa = identity(d);
        for _ in 0..d {
            let mut zb = identity(d);
            for _ in 0..d {
                out.push(&xa * &zb);
                zb = &zb * &clock;
            }
            xa = &xa * &shift;
        }
        out
    };
    let mut operators = Vec::with_capacity(d * d);
    operators.push(weyl[0].scale((1.0 - p + p / (df * df)).sqrt()));
    for w in &weyl[1..] {
        operators.push(w.scale(p.sqrt() / df));
    }
    KrausChannel::new(operators, format!("depolarizing(d={d}, p={p})"))
}

pub fn amplitude_damping(gamma: f64) -> Result<KrausChannel> {
    check_unit_interval("gamma", gamma)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let k0 = CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, c((1.0 - gamma).sqrt())]);
    let k1 = CMatrix::from_row_slice(2, 2, &[ZERO, c(gamma.sqrt()), ZERO, ZERO]);
    KrausChannel::new(vec![k0, k1], format!("amplitude_damping({gamma})"))
}

pub fn phase_damping(gamma: f64) -> Result<KrausChannel> {
    check_unit_interval("gamma", gamma)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let k0 = CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, c((1.0 - gamma).sqrt())]);
    let k1 = CMatrix::from_row_slice(2, 2, &[ZERO, ZERO, ZERO, c(gamma.sqrt())]);
    KrausChannel::new(vec![k0, k1], format!("phase_damping({gamma})"))
}

pub fn unitary_channel(u: CMatrix) -> Result<KrausChannel> {
    let deviation = unitarity_deviation(&u);
    if deviation > tol::RECONSTRUCTION {
        return Err(Error::NotUnitary { deviation });
    }
    KrausChannel::new(vec![u], "unitary")
}

/// Random channel from a Haar unitary on system ⊗ ancilla with the ancilla
/// prepared in `|0⟩` and traced out: `K_k = (I ⊗ ⟨k|) U (I ⊗ |0⟩)`.
pub fn random_channel<R: Rng + ?Sized>(
    d: usize,
    ancilla_dim: usize,
    rng: &mut R,
) -> Result<KrausChannel> {
    if d == 0 || ancilla_dim == 0 {
        return Err(Error::Empty);
    }
    let u = random_haar_unitary(d * ancilla_dim, rng);
    let operators = (0..ancilla_dim)
        .map(|k| CMatrix::from_fn(d, d, |i, j| u[(i * ancilla_dim + k, j * ancilla_dim)]))
        .collect();
    KrausChannel::new(operators, format!("stinespring(d={d}, anc={ancilla_dim})"))
}

/// Quantity tracked by [`monotonicity_trial`].
#[derive(Debug, Clone, PartialEq)]
pub enum MonotonicityMeasure {
    /// `F(ρ, T ⊗ I)` (or `I ⊗ T`) for a generator `T` of the measured side.
    LiftedQfi(Observable),
    /// The measured side's share of the correlation measure.
    QSide,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialRecord {
    pub before: f64,
    pub after: f64,
    /// `after − before`; positive values are increases.
    pub violation: f64,
}

/// Evaluates `measure` on the `measured` side before and after applying
/// `channel` to the opposite side.
pub fn monotonicity_trial(
    rho: &DensityMatrix,
    dims: [usize; 2],
    channel: &KrausChannel,
    measured: Side,
    measure: &MonotonicityMeasure,
) -> Result<TrialRecord> {
    let rho = rho.with_dims(&dims)?;
    let after_state = apply_local(channel, measured.other(), &rho, dims)?;
    let eval = |state: &DensityMatrix| -> Result<f64> {
        match measure {
            MonotonicityMeasure::LiftedQfi(t) => {
                let lifted = Observable::new(embed(t.matrix(), measured.slot(), &dims)?)?;
                Ok(qfi(state, &lifted)?.value)
            }
            MonotonicityMeasure::QSide => Ok(q_measure(state, dims)?.side(measured)),
        }
    };
    let before = eval(&rho)?;
    let after = eval(&after_state)?;
    Ok(TrialRecord {
        before,
        after,
        violation: after - before,
    })
}

/// Both sides of the collective-observable comparison
/// `F(ρ, K_a ⊗ I + I ⊗ K_b)` versus `F(ρ_a, K_a) + F(ρ_b, K_b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveQfi {
    pub collective: f64,
    pub marginal_sum: f64,
}

pub fn collective_qfi(
    rho: &DensityMatrix,
    dims: [usize; 2],
    ka: &Observable,
    kb: &Observable,
) -> Result<CollectiveQfi> {
    let rho = rho.with_dims(&dims)?;
    let joint = kron(ka.matrix(), &identity(dims[1]))? + kron(&identity(dims[0]), kb.matrix())?;
    let collective = qfi(&rho, &Observable::new(joint)?)?.value;
    let ra = partial_trace(&rho, &[0])?;
    let rb = partial_trace(&rho, &[1])?;
    let marginal_sum = qfi(&ra, ka)?.value + qfi(&rb, kb)?.value;
    Ok(CollectiveQfi {
        collective,
        marginal_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eig, random_density_matrix, CVector};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn standard_families_are_complete() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let chans = vec![
            identity_channel(3),
            depolarizing(2, 0.3).unwrap(),
            depolarizing(3, 0.7).unwrap(),
            amplitude_damping(0.2).unwrap(),
            phase_damping(0.9).unwrap(),
            unitary_channel(random_haar_unitary(3, &mut rng)).unwrap(),
            random_channel(3, 2, &mut rng).unwrap(),
        ];
        for c in &chans {
            assert!(c.completeness_residual() <= 1e-10, "{}", c.label());
        }
    }

    #[test]
    fn parameters_out_of_range() {
        assert!(depolarizing(2, 1.5).is_err());
        assert!(amplitude_damping(-0.1).is_err());
        assert!(phase_damping(2.0).is_err());
        assert!(unitary_channel(identity(2).scale(2.0)).is_err());
        assert!(KrausChannel::new(vec![identity(2).scale(0.5)], "bad").is_err());
        assert!(KrausChannel::new(vec![], "empty").is_err());
    }

    #[test]
    fn basic_actions() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_density_matrix(&[2], None, &mut rng);
        assert_eq!(
            identity_channel(2).apply(&rho).unwrap().matrix(),
            rho.matrix()
        );
        assert!(
            (depolarizing(2, 0.0).unwrap().apply(&rho).unwrap().matrix() - rho.matrix()).norm()
                < 1e-15
        );

        let rho3 = random_density_matrix(&[3], None, &mut rng);
        let full = depolarizing(3, 1.0).unwrap().apply(&rho3).unwrap();
        assert!((full.matrix() - identity(3).scale(1.0 / 3.0)).norm() < 1e-12);

        let one = DensityMatrix::diagonal(&[0.0, 1.0]).unwrap();
        let decayed = amplitude_damping(1.0).unwrap().apply(&one).unwrap();
        assert!(
            (decayed.matrix() - DensityMatrix::diagonal(&[1.0, 0.0]).unwrap().matrix()).norm()
                < 1e-15
        );

        let u = random_haar_unitary(3, &mut rng);
        let out = unitary_channel(u).unwrap().apply(&rho3).unwrap();
        let before = hermitian_eig(rho3.matrix()).unwrap().values;
        let after = hermitian_eig(out.matrix()).unwrap().values;
        for (x, y) in before.iter().zip(&after) {
            assert!((x - y).abs() < 1e-12);
        }

        let random = random_channel(3, 2, &mut rng).unwrap();
        let out = random.apply(&rho3).unwrap();
        assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn local_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rho = random_density_matrix(&[2, 3], None, &mut rng);
        let same = apply_local(&identity_channel(3), Side::B, &rho, [2, 3]).unwrap();
        assert!((same.matrix() - rho.matrix()).norm() < 1e-15);

        let ra = random_density_matrix(&[2], None, &mut rng);
        let rb = random_density_matrix(&[3], None, &mut rng);
        let prod = ra.tensor(&rb).unwrap();
        let out = apply_local(&depolarizing(3, 1.0).unwrap(), Side::B, &prod, [2, 3]).unwrap();
        let expected = kron(ra.matrix(), &identity(3).scale(1.0 / 3.0)).unwrap();
        assert!((out.matrix() - expected).norm() < 1e-12);

        let chan = random_channel(3, 2, &mut rng).unwrap();
        let out = apply_local(&chan, Side::B, &rho, [2, 3]).unwrap();
        let before = partial_trace(&rho, &[0]).unwrap();
        let after = partial_trace(&out, &[0]).unwrap();
        assert!(max_abs(&(before.matrix() - after.matrix())) < 1e-12);

        assert!(apply_local(&chan, Side::A, &rho, [2, 3]).is_err());
    }

    #[test]
    fn trials_on_simple_channels() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let rho = random_density_matrix(&[2, 2], None, &mut rng);
        let t = Observable::new(pauli_x()).unwrap();
        let u = unitary_channel(random_haar_unitary(2, &mut rng)).unwrap();
        let rec = monotonicity_trial(
            &rho,
            [2, 2],
            &u,
            Side::A,
            &MonotonicityMeasure::LiftedQfi(t),
        )
        .unwrap();
        assert!(rec.violation <= 1e-10);
        assert!((rec.after - rec.before).abs() <= 1e-9);

        let full = depolarizing(2, 1.0).unwrap();
        let rec =
            monotonicity_trial(&rho, [2, 2], &full, Side::A, &MonotonicityMeasure::QSide).unwrap();
        assert!(rec.after.abs() < 1e-10);
        assert!(rec.violation <= 1e-9);
    }

    #[test]
    fn bell_collective_observable() {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let psi = CVector::from_vec(vec![s, ZERO, ZERO, s]);
        let bell = DensityMatrix::from_pure(&psi, vec![2, 2]).unwrap();
        let z = Observable::new(pauli_z()).unwrap();
        let c = collective_qfi(&bell, [2, 2], &z, &z).unwrap();
        assert!((c.collective - 4.0).abs() < 1e-12);
        assert!(c.marginal_sum.abs() < 1e-12);
    }
}
