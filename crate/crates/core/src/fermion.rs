//! The virtual-fermion operator `ρ(k)` and its qubit structure.
//!
//! `ρ(k) = (k² - m²)/(4 k0) · D_F(k) γ^0` is evaluated from the pole-free
//! polynomial form `¼ I + (m γ^0 - k^i γ^i γ^0)/(4 k0)`, so it stays finite on
//! the mass shell. Everything spectral depends on the single real parameter
//! `r_k = √(k⃗² + m²)/k0`.

use serde::{Deserialize, Serialize};

use crate::dirac::{frame_bra, gamma, gamma5, off_shell_mass, slash, spatial_generator, w_matrix, LorentzVector};
use crate::error::{Error, Result};
use crate::linalg::{re, DiracMatrix, Spinor, C64};

/// Default pole tolerance on `|k² - m²|` for the bare propagator.
pub const POLE_TOL: f64 = 1e-9;
/// Below this `|k0|` the operator is undefined.
pub const ZERO_ENERGY_TOL: f64 = 1e-12;
/// Slack on `|r_k| ≤ 1` and on eigenvalue signs.
pub const VALIDITY_TOL: f64 = 1e-12;

/// Real components of a momentum, rejecting complex input.
pub(crate) fn real_momentum(k: &LorentzVector) -> Result<[f64; 4]> {
    if !k.is_real() {
        return Err(Error::InvalidKinematics(format!("momentum has complex components: {k:?}")));
    }
    Ok(k.real_parts())
}

fn energy(k: &LorentzVector) -> Result<f64> {
    let k = real_momentum(k)?;
    if k[0].abs() < ZERO_ENERGY_TOL {
        return Err(Error::ZeroEnergy(k[0]));
    }
    Ok(k[0])
}

/// Feynman propagator `D_F(k) = (k̸ + m)/(k² - m²)`.
pub fn propagator(k: &LorentzVector, m: f64) -> Result<DiracMatrix> {
    propagator_with_tol(k, m, POLE_TOL)
}

pub fn propagator_with_tol(k: &LorentzVector, m: f64, pole_tol: f64) -> Result<DiracMatrix> {
    real_momentum(k)?;
    let d = k.minkowski_square().re - m * m;
    if d.abs() <= pole_tol {
        return Err(Error::OnShellPole(d.abs()));
    }
    Ok((slash(k) + DiracMatrix::identity() * re(m)) / re(d))
}

/// `ρ(k)` together with the data it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionOperator {
    pub matrix: DiracMatrix,
    pub k: LorentzVector,
    pub m: f64,
    pub r: f64,
}

/// `m γ^0 - k^i γ^i γ^0`; squares to `(k⃗² + m²) I`.
pub(crate) fn mass_boost_generator(k: &LorentzVector, m: f64) -> DiracMatrix {
    gamma(0) * re(m) - spatial_generator(k)
}

pub fn rho(k: &LorentzVector, m: f64) -> Result<FermionOperator> {
    let k0 = energy(k)?;
    let matrix = DiracMatrix::identity() * re(0.25) + mass_boost_generator(k, m) * re(0.25 / k0);
    Ok(FermionOperator { matrix, k: *k, m, r: r_param(k, m)? })
}

/// `r_k = √(k1² + k2² + k3² + m²)/k0`; the sign follows `k0`.
pub fn r_param(k: &LorentzVector, m: f64) -> Result<f64> {
    let k0 = energy(k)?;
    let [_, k1, k2, k3] = k.real_parts();
    Ok((k1 * k1 + k2 * k2 + k3 * k3 + m * m).sqrt() / k0)
}

/// `Tr ρ² = (1 + r²)/4`.
pub fn purity(k: &LorentzVector, m: f64) -> Result<f64> {
    let r = r_param(k, m)?;
    Ok((1.0 + r * r) / 4.0)
}

/// `(λ+, λ-) = ((1 + r)/4, (1 - r)/4)`, each doubly degenerate.
pub fn eigenvalues_closed(k: &LorentzVector, m: f64) -> Result<(f64, f64)> {
    let r = r_param(k, m)?;
    Ok(((1.0 + r) / 4.0, (1.0 - r) / 4.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validity {
    /// `|r_k| ≤ 1`: a genuine density matrix.
    StateValid,
    /// `|r_k| > 1`: hermitian and trace one but with negative eigenvalues.
    OperatorOnly,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityClass {
    pub tag: Validity,
    pub r: f64,
}

pub fn validity(k: &LorentzVector, m: f64) -> Result<ValidityClass> {
    let r = r_param(k, m)?;
    let tag = if r.abs() <= 1.0 + VALIDITY_TOL { Validity::StateValid } else { Validity::OperatorOnly };
    Ok(ValidityClass { tag, r })
}

/// Particle-type and spin bits labelling `|λ_E λ_s⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QubitLabel {
    /// 0 particle, 1 anti-particle.
    pub energy: u8,
    /// 0 spin up, 1 spin down.
    pub spin: u8,
}

impl QubitLabel {
    pub const ALL: [QubitLabel; 4] = [
        QubitLabel { energy: 0, spin: 0 },
        QubitLabel { energy: 0, spin: 1 },
        QubitLabel { energy: 1, spin: 0 },
        QubitLabel { energy: 1, spin: 1 },
    ];

    pub fn new(energy: u8, spin: u8) -> Self {
        assert!(energy < 2 && spin < 2, "qubit labels are bits");
        Self { energy, spin }
    }

    /// Position of `|λ_E λ_s⟩` in the computational basis.
    pub fn index(&self) -> usize {
        2 * self.energy as usize + self.spin as usize
    }

    pub fn energy_sign(&self) -> f64 {
        if self.energy == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn ket(&self) -> Spinor {
        let mut v = Spinor::zeros();
        v[self.index()] = re(1.0);
        v
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Projectors {
    /// `Λ(λ_E) = (1 + (-1)^λ_E γ^0)/2`
    pub energy: DiracMatrix,
    /// `Σ(λ_s) = (1 - (-1)^λ_s γ^5 γ^3 γ^0)/2`
    pub spin: DiracMatrix,
    /// `Λ Σ`, equal to `|λ_E λ_s⟩⟨λ_E λ_s|`.
    pub product: DiracMatrix,
}

pub fn projectors(label: QubitLabel) -> Projectors {
    let id = DiracMatrix::identity();
    let se = label.energy_sign();
    let ss = if label.spin == 0 { 1.0 } else { -1.0 };
    let energy = (id + gamma(0) * re(se)) * re(0.5);
    let spin = (id - gamma5() * gamma(3) * gamma(0) * re(ss)) * re(0.5);
    let product = energy * spin;
    Projectors { energy, spin, product }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixtureEntry {
    pub label: QubitLabel,
    /// `p_{E,s} = (1 + (-1)^λ_E m/M_k)/4`; real whenever `M_k` is.
    pub weight: C64,
    /// `ρ(λ_E, λ_s; k) = (M_k/k0) |λ_E, λ_s; k⟩⟨λ_E, λ_s; k|`.
    pub component: DiracMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixtureDecomposition {
    pub entries: [MixtureEntry; 4],
}

impl MixtureDecomposition {
    pub fn reconstruct(&self) -> DiracMatrix {
        self.entries
            .iter()
            .fold(DiracMatrix::zeros(), |acc, e| acc + e.component * e.weight)
    }
}

/// Normalized ket `√(M_k/k0) W_k |λ_E λ_s⟩` of a mixture component.
pub fn component_ket(k: &LorentzVector, label: QubitLabel) -> Result<Spinor> {
    let k0 = energy(k)?;
    let w = w_matrix(k)?;
    let mk = off_shell_mass(k).value;
    let scale = crate::dirac::principal_sqrt(mk / k0);
    Ok(w.column(label.index()) * scale)
}

pub fn mixture_decomposition(k: &LorentzVector, m: f64) -> Result<MixtureDecomposition> {
    let k0 = energy(k)?;
    let w = w_matrix(k)?;
    let mk = off_shell_mass(k).value;
    let entries = QubitLabel::ALL.map(|label| {
        let ket: Spinor = w.column(label.index()).into();
        let bra = frame_bra(&w, label.index());
        let component = ket * bra.transpose() * (mk / k0);
        let weight = (re(1.0) + re(label.energy_sign() * m) / mk) * 0.25;
        MixtureEntry { label, weight, component }
    });
    Ok(MixtureDecomposition { entries })
}
