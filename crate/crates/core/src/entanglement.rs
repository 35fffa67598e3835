//! Partial transpose, PPT verdicts and pure-state concurrence on the
//! particle-type ⊗ spin factorization of a Dirac spinor.

use serde::{Deserialize, Serialize};

use crate::dirac::LorentzVector;
use crate::error::{Error, Result};
use crate::fermion::{component_ket, real_momentum, rho, validity, QubitLabel, Validity, VALIDITY_TOL};
use crate::linalg::{hermitian_eigenvalues, DiracMatrix, C64};

/// Normalization slack accepted by [`pure_concurrence`].
pub const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    /// Particle type `λ_E`.
    First,
    /// Spin `λ_s`.
    Second,
}

/// Transpose of one tensor factor in the computational basis `|ab⟩ ↦ 2a + b`.
pub fn partial_transpose(m: &DiracMatrix, qubit: Qubit) -> DiracMatrix {
    DiracMatrix::from_fn(|r, col| {
        let (a, b) = (r / 2, r % 2);
        let (x, y) = (col / 2, col % 2);
        match qubit {
            Qubit::First => m[(2 * x + b, 2 * a + y)],
            Qubit::Second => m[(2 * a + y, 2 * x + b)],
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PptVerdict {
    Separable,
    Entangled,
    /// `|r_k| > 1`: the operator is not a density matrix.
    NotAState,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PptReport {
    pub verdict: PptVerdict,
    /// Ascending spectrum of the partial transpose over the first qubit.
    pub pt_spectrum: Vec<f64>,
}

pub fn ppt_report(k: &LorentzVector, m: f64) -> Result<PptReport> {
    let rho = rho(k, m)?;
    let pt_spectrum = hermitian_eigenvalues(&partial_transpose(&rho.matrix, Qubit::First));
    let verdict = if validity(k, m)?.tag == Validity::OperatorOnly {
        PptVerdict::NotAState
    } else if pt_spectrum[0] >= -VALIDITY_TOL {
        PptVerdict::Separable
    } else {
        PptVerdict::Entangled
    };
    Ok(PptReport { verdict, pt_spectrum })
}

pub fn ppt_separability(k: &LorentzVector, m: f64) -> Result<PptVerdict> {
    Ok(ppt_report(k, m)?.verdict)
}

/// `a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl TwoQubitState {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_amplitudes(v: &[C64]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()
    }

    fn wedge(&self) -> f64 {
        2.0 * (self.a * self.d - self.b * self.c).norm()
    }
}

/// `C(ψ) = 2|ad - bc|` for a normalized state.
pub fn pure_concurrence(s: &TwoQubitState) -> Result<f64> {
    let n = s.norm_sqr();
    if (n - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(n));
    }
    Ok(s.wedge())
}

/// Concurrence of the mixture component `ρ(λ_E, λ_s; k)`, evaluated as
/// `2|ad - bc|` on the amplitudes of `√(M_k/k0) W_k |λ_E λ_s⟩`.
///
/// For spacelike `k` the amplitudes are complex and not unit-normalized; the
/// wedge is still evaluated.
pub fn fermion_concurrence(k: &LorentzVector, _m: f64, label: QubitLabel) -> Result<f64> {
    let ket = component_ket(k, label)?;
    Ok(TwoQubitState::from_amplitudes(ket.as_slice()).wedge())
}

/// Closed form `‖k_T‖/|k0|` with `k_T = (k1, k2, 0)`.
pub fn transverse_concurrence(k: &LorentzVector) -> Result<f64> {
    let [k0, k1, k2, _] = real_momentum(k)?;
    if k0 == 0.0 {
        return Err(Error::ZeroEnergy(k0));
    }
    Ok(k1.hypot(k2) / k0.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::eigenvalues_closed;
    use crate::linalg::{c, max_diff, re, ONE, ZERO};
    use approx::assert_abs_diff_eq;

    fn mom(k0: f64, k1: f64, k2: f64, k3: f64) -> LorentzVector {
        LorentzVector::momentum(k0, k1, k2, k3)
    }

    #[test]
    fn identity_is_fixed_point() {
        let id = DiracMatrix::identity();
        assert_eq!(partial_transpose(&id, Qubit::First), id);
        assert_eq!(partial_transpose(&id, Qubit::Second), id);
    }

    #[test]
    fn partial_transpose_is_involution() {
        let m = DiracMatrix::from_fn(|r, k| c(r as f64 + 0.1 * k as f64, (r * k) as f64));
        for q in [Qubit::First, Qubit::Second] {
            assert_eq!(partial_transpose(&partial_transpose(&m, q), q), m);
        }
        // both partial transposes compose to the full transpose
        let full = partial_transpose(&partial_transpose(&m, Qubit::First), Qubit::Second);
        assert_eq!(full, m.transpose());
    }

    #[test]
    fn bell_state_pt_has_negative_eigenvalue() {
        let s = 0.5f64.sqrt();
        let psi = crate::linalg::Spinor::new(re(s), ZERO, ZERO, re(s));
        let rho = psi * psi.adjoint();
        let ev = hermitian_eigenvalues(&partial_transpose(&rho, Qubit::First));
        assert_abs_diff_eq!(ev[0], -0.5, epsilon = 1e-14);
    }

    #[test]
    fn pt_spectrum_equals_rho_spectrum() {
        let k = mom(3.0, 0.9, -1.2, 0.6);
        let (lp, lm) = eigenvalues_closed(&k, 1.1).unwrap();
        let rho = rho(&k, 1.1).unwrap().matrix;
        for q in [Qubit::First, Qubit::Second] {
            let ev = hermitian_eigenvalues(&partial_transpose(&rho, q));
            for (got, want) in ev.iter().zip([lm, lm, lp, lp]) {
                assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn ppt_examples() {
        assert_eq!(ppt_separability(&mom(2.0, 0.0, 0.0, 0.0), 1.0).unwrap(), PptVerdict::Separable);
        assert_eq!(ppt_separability(&mom(1.0, 0.0, 0.0, 0.0), 2.0).unwrap(), PptVerdict::NotAState);
    }

    #[test]
    fn concurrence_examples() {
        let s = 0.5f64.sqrt();
        let bell = TwoQubitState::new(re(s), ZERO, ZERO, re(s));
        assert_abs_diff_eq!(pure_concurrence(&bell).unwrap(), 1.0, epsilon = 1e-15);
        let prod = TwoQubitState::new(ZERO, ONE, ZERO, ZERO);
        assert_eq!(pure_concurrence(&prod).unwrap(), 0.0);
        let bad = TwoQubitState::new(ONE, ONE, ZERO, ZERO);
        assert!(matches!(pure_concurrence(&bad), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn fermion_concurrence_explicit_amplitudes() {
        // k = (2,1,1,0), m = 1: a = √((k0+M)/2k0), d = (k1+ik2)/√(2k0(k0+M))
        let k = mom(2.0, 1.0, 1.0, 0.0);
        let mk = 2.0f64.sqrt();
        let a = ((2.0 + mk) / 4.0).sqrt();
        let d = c(1.0, 1.0) / (4.0 * (2.0 + mk)).sqrt();
        let oracle = 2.0 * (d * a).norm();
        assert_abs_diff_eq!(oracle, 0.5f64.sqrt(), epsilon = 1e-15);
        for label in QubitLabel::ALL {
            let got = fermion_concurrence(&k, 1.0, label).unwrap();
            assert_abs_diff_eq!(got, oracle, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(transverse_concurrence(&k).unwrap(), oracle, epsilon = 1e-15);
    }

    #[test]
    fn component_ket_for_00_has_expected_amplitudes() {
        let k = mom(2.5, 0.3, -0.7, 1.1);
        let ket = component_ket(&k, QubitLabel::new(0, 0)).unwrap();
        let mk = k.minkowski_square().re.sqrt();
        let den = (2.0 * 2.5 * (2.5 + mk)).sqrt();
        let expect = [re(((2.5 + mk) / 5.0).sqrt()), ZERO, re(1.1 / den), c(0.3, -0.7) / den];
        for (g, w) in ket.iter().zip(expect) {
            assert!((g - w).norm() < 1e-14);
        }
    }

    #[test]
    fn no_transverse_momentum_means_no_concurrence() {
        let k = mom(3.0, 0.0, 0.0, 2.0);
        for label in QubitLabel::ALL {
            assert!(fermion_concurrence(&k, 1.0, label).unwrap() < 1e-15);
        }
    }

    #[test]
    fn pt_of_rho_first_vs_second() {
        let rho = rho(&mom(4.0, 1.0, 2.0, -0.5), 0.5).unwrap().matrix;
        let a = partial_transpose(&rho, Qubit::First);
        let b = partial_transpose(&rho, Qubit::Second);
        assert!(max_diff(&a, &b.transpose()) < 1e-15);
    }
}
