//! Finite renormalization maps for the fermion mass and the photon
//! propagator normalization/gauge.
//!
//! The mass map `m' = (m + A1)/(1 + A2)` is what a renormalized propagator
//! `[(1 + A2) k̸ - (m + A1)]^{-1}` produces; rescaling it by
//! `(1 + A2)(k² - m'²)/(4 k0)` and multiplying by `γ^0` gives `ρ(k, m')`.

use serde::{Deserialize, Serialize};

use crate::dirac::{gamma, slash, LorentzVector};
use crate::error::{Error, Result};
use crate::fermion::real_momentum;
use crate::linalg::{re, DiracMatrix};
use crate::photon::{gauge_basis, photon_operator, PhotonOperator};

/// `|1 + A|` below this is singular.
pub const SINGULAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RenormParams {
    pub a1: f64,
    pub a2: f64,
    pub c1: f64,
}

fn guard(one_plus: f64) -> Result<f64> {
    if one_plus.abs() < SINGULAR_TOL {
        return Err(Error::SingularWavefunction(one_plus.abs()));
    }
    Ok(one_plus)
}

pub fn renorm_fermion_mass(m: f64, a1: f64, a2: f64) -> Result<f64> {
    Ok((m + a1) / guard(1.0 + a2)?)
}

/// How the finite correction enters the inverse propagator `k̸ - m + Σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SelfEnergyForm {
    /// `Σ = A2 k̸ - A1`, consistent with [`renorm_fermion_mass`].
    MassMap,
    /// `Σ = A1 m + A2 k̸`, giving `m' = m (1 - A1)/(1 + A2)` instead.
    Literal,
}

impl SelfEnergyForm {
    pub fn effective_mass(self, m: f64, a1: f64, a2: f64) -> Result<f64> {
        let d = guard(1.0 + a2)?;
        Ok(match self {
            Self::MassMap => (m + a1) / d,
            Self::Literal => m * (1.0 - a1) / d,
        })
    }
}

/// `(k̸ - m + Σ)^{-1}` by numeric inversion.
pub fn renormalized_propagator(k: &LorentzVector, m: f64, p: &RenormParams, form: SelfEnergyForm) -> Result<DiracMatrix> {
    real_momentum(k)?;
    guard(1.0 + p.a2)?;
    let id = DiracMatrix::identity();
    let sigma = match form {
        SelfEnergyForm::MassMap => slash(k) * re(p.a2) - id * re(p.a1),
        SelfEnergyForm::Literal => id * re(p.a1 * m) + slash(k) * re(p.a2),
    };
    let inverse_of = slash(k) - id * re(m) + sigma;
    let m_eff = form.effective_mass(m, p.a1, p.a2)?;
    let gap = k.minkowski_square().re - m_eff * m_eff;
    if gap.abs() < crate::fermion::POLE_TOL {
        return Err(Error::OnShellPole(gap.abs()));
    }
    inverse_of.try_inverse().ok_or(Error::OnShellPole(gap.abs()))
}

/// `(1 + A2)(k² - m'²)/(4 k0) · D^R(k) γ^0`.
pub fn renormalized_rho(k: &LorentzVector, m: f64, p: &RenormParams, form: SelfEnergyForm) -> Result<DiracMatrix> {
    let d = renormalized_propagator(k, m, p, form)?;
    let k0 = real_momentum(k)?[0];
    if k0.abs() < crate::fermion::ZERO_ENERGY_TOL {
        return Err(Error::ZeroEnergy(k0));
    }
    let m_eff = form.effective_mass(m, p.a1, p.a2)?;
    let pref = (1.0 + p.a2) * (k.minkowski_square().re - m_eff * m_eff) / (4.0 * k0);
    Ok(d * gamma(0) * re(pref))
}

/// `(1/(1 + C1), (1 + C1) ξ)`.
pub fn renorm_photon(xi: f64, c1: f64) -> Result<(f64, f64)> {
    let d = guard(1.0 + c1)?;
    Ok((1.0 / d, d * xi))
}

/// `D_γ` at the renormalized gauge, scaled by `1/(1 + C1)`.
pub fn renormalized_photon_operator(k: &LorentzVector, xi: f64, c1: f64) -> Result<PhotonOperator> {
    let (scale, xi_r) = renorm_photon(xi, c1)?;
    let mut op = photon_operator(&gauge_basis(k, xi_r)?);
    op.matrix *= re(scale);
    Ok(op)
}
