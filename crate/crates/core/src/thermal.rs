//! Gibbs form `ρ(k) = e^{-βH}/Tr e^{-βH}` of the virtual-fermion operator.
//!
//! With `B = (m γ^0 - k^i γ^i γ^0)/(k0 r_k)` one has `B² = I`, the momentum
//! space Hamiltonian is `H = -k0 B` (spectrum `±k0`, doubly degenerate) and
//! `-βH = α B` with the hyperbolic angle `α = ½ ln((1 + r)/(1 - r))`. For
//! `|r| > 1` the principal logarithm makes `β` complex with `Im β = π/(2 k0)`.

use crate::dirac::{principal_sqrt, LorentzVector};
use crate::error::{Error, Result};
use crate::fermion::{mass_boost_generator, r_param};
use crate::linalg::{re, DiracMatrix, C64};

/// `β` diverges as `|r| → 1`; closer than this is rejected.
pub const ON_SHELL_TOL: f64 = 1e-9;
/// Below this `|r|` the operator is `I/4` and carries no Hamiltonian.
pub const MAXIMALLY_MIXED_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ThermalData {
    /// Inverse temperature, complex when `|r| > 1`.
    pub beta: C64,
    pub hamiltonian: DiracMatrix,
    /// Hyperbolic angle, `α = β k0`.
    pub alpha: C64,
    /// Involution with `B² = I`.
    pub b: DiracMatrix,
    pub r: f64,
    pub k0: f64,
}

impl ThermalData {
    /// `e^{-βH}` through the spectral projectors `(I ± B)/2`.
    pub fn boltzmann_factor(&self) -> DiracMatrix {
        let id = DiracMatrix::identity();
        let up = (id + self.b) * re(0.5);
        let down = (id - self.b) * re(0.5);
        up * self.alpha.exp() + down * (-self.alpha).exp()
    }

    pub fn partition_function(&self) -> C64 {
        self.boltzmann_factor().trace()
    }

    pub fn gibbs_state(&self) -> DiracMatrix {
        let f = self.boltzmann_factor();
        f / f.trace()
    }

    /// Real and imaginary parts of `β`.
    pub fn beta_parts(&self) -> (f64, f64) {
        (self.beta.re, self.beta.im)
    }
}

/// `α = ½ ln((1 + r)/(1 - r))` on the principal branch.
pub fn hyperbolic_angle(r: f64) -> C64 {
    re((1.0 + r) / (1.0 - r)).ln() * 0.5
}

pub fn thermal_decomposition(k: &LorentzVector, m: f64) -> Result<ThermalData> {
    let r = r_param(k, m)?;
    if r.abs() < MAXIMALLY_MIXED_TOL {
        return Err(Error::MaximallyMixed(r));
    }
    if (1.0 - r.abs()).abs() < ON_SHELL_TOL {
        return Err(Error::OnShellLimit(r.abs()));
    }
    let k0 = k.time().re;
    let a = mass_boost_generator(k, m);
    let b = a / re(k0 * r);
    let hamiltonian = a * re(-1.0 / r);
    let alpha = hyperbolic_angle(r);
    Ok(ThermalData { beta: alpha / k0, hamiltonian, alpha, b, r, k0 })
}

/// `(Re β, Im β)` in the complex-temperature regime `|r| > 1`.
pub fn beta_split(k: &LorentzVector, m: f64) -> Result<(f64, f64)> {
    let r = r_param(k, m)?;
    if r.abs() <= 1.0 {
        return Err(Error::NotComplexRegime(r.abs()));
    }
    Ok(thermal_decomposition(k, m)?.beta_parts())
}

/// `4 sign(1 - r)/√(1 - r²)` with the principal square root.
pub fn partition_function_closed(r: f64) -> C64 {
    let sign = if 1.0 - r >= 0.0 { 1.0 } else { -1.0 };
    re(4.0 * sign) / principal_sqrt(re(1.0 - r * r))
}

/// `(cosh α, sinh α) = sign(1 - r) (1, r)/√(1 - r²)`.
pub fn cosh_sinh_from_r(r: f64) -> (C64, C64) {
    let ch = partition_function_closed(r) / 4.0;
    (ch, ch * r)
}

/// `cosh⁻¹ z = ln(z + √(z - 1) √(z + 1))`, cut along `]-∞, 1]`.
pub fn acosh_principal(z: C64) -> C64 {
    (z + principal_sqrt(z - 1.0) * principal_sqrt(z + 1.0)).ln()
}
