//! Tree-level `e⁺e⁻ → μ⁺μ⁻` (s-channel) and Compton amplitudes, each
//! evaluated by standard Feynman rules and by the qubit-operator forms.
//!
//! External spinors are `u = √(2m) W_p e_s`, `v = √(2m) W_p e_{2+s}`
//! (`u†u = v†v = 2E`), written so that the `m → 0` limit is finite.
//!
//! The operator engines contract with `Ξ(ε_P) = γ^0 ε̸` where
//! `ε_P = (ε^0, -ε⃗)`: the bilinear `ψ†Ξ(ε)χ` equals `ψ̄ ε̸_P χ`, so the
//! reflected basis is what reproduces the Feynman-rule contraction in every
//! frame and gauge. The unreflected forms agree in the centre-of-mass frame,
//! at `ξ = 1`, and (Compton) for real polarizations with `ε^0 = 0`.

use serde::{Deserialize, Serialize};

use crate::dirac::{gamma, slash, spatial_generator, LorentzVector};
use crate::error::{Error, Result};
use crate::fermion::rho;
use crate::linalg::{kron, re, BigMatrix, DiracMatrix, Spinor, C64, I, ZERO};
use crate::photon::{gauge_basis, photon_operator, xi_adjoint, xi_operator, PhotonOperator};

/// `|p² - m²|` accepted for an external line.
pub const ON_SHELL_TOL: f64 = 1e-9;
/// Four-momentum conservation slack.
pub const CONSERVATION_TOL: f64 = 1e-10;
/// `|s|` or `|s - m²|` below this is a pole.
pub const CHANNEL_TOL: f64 = 1e-9;
/// Frozen constant mapping the operator form of `e⁺e⁻ → μ⁺μ⁻` (prefactor
/// `e²/p²`) onto the Feynman-rule amplitude.
pub const EE_MUMU_PHASE: C64 = C64::new(0.0, -1.0);
/// Same for the Compton pair: both carry the same factors.
pub const COMPTON_PHASE: C64 = C64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Particle,
    Antiparticle,
}

/// On-shell spinor `((E + m) I - K)/√(E + m)` column `s` (particle) or `2 + s`.
pub fn external_spinor(p: &LorentzVector, m: f64, line: Line, s: u8) -> Result<Spinor> {
    let e = p.time().re;
    if !p.is_real() || e + m <= 0.0 {
        return Err(Error::InvalidKinematics(format!("external energy {e} must be positive")));
    }
    let n = (DiracMatrix::identity() * re(e + m) - spatial_generator(p)) / re((e + m).sqrt());
    let col = match line {
        Line::Particle => s as usize,
        Line::Antiparticle => 2 + s as usize,
    };
    Ok(n.column(col).into_owned())
}

fn bar(s: &Spinor) -> Spinor {
    gamma(0).transpose() * s.conjugate()
}

/// `ψ̄ Γ χ`.
fn sandwich(psi: &Spinor, g: &DiracMatrix, chi: &Spinor) -> C64 {
    (bar(psi).transpose() * g * chi)[(0, 0)]
}

fn check_on_shell(p: &LorentzVector, m: f64, name: &str) -> Result<()> {
    if !p.is_real() || p.time().re <= 0.0 {
        return Err(Error::InvalidKinematics(format!("{name} must be real with positive energy")));
    }
    let dev = (p.minkowski_square().re - m * m).abs();
    if dev > ON_SHELL_TOL {
        return Err(Error::InvalidKinematics(format!("{name} off shell by {dev}")));
    }
    Ok(())
}

fn check_conservation(p: &[LorentzVector; 4]) -> Result<()> {
    let d = p[0] + p[1] - p[2] - p[3];
    let dev = d.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if dev > CONSERVATION_TOL {
        return Err(Error::InvalidKinematics(format!("momentum not conserved ({dev})")));
    }
    Ok(())
}

/// `e⁻(p1) e⁺(p2) → μ⁻(p3) μ⁺(p4)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatteringConfig {
    pub p: [LorentzVector; 4],
    pub spins: [u8; 4],
    pub m_e: f64,
    pub m_mu: f64,
    pub e: f64,
    pub xi: f64,
}

impl ScatteringConfig {
    pub fn validate(&self) -> Result<()> {
        check_on_shell(&self.p[0], self.m_e, "p1")?;
        check_on_shell(&self.p[1], self.m_e, "p2")?;
        check_on_shell(&self.p[2], self.m_mu, "p3")?;
        check_on_shell(&self.p[3], self.m_mu, "p4")?;
        if self.spins.iter().any(|&s| s > 1) {
            return Err(Error::InvalidKinematics("spin indices are bits".into()));
        }
        check_conservation(&self.p)
    }

    pub fn channel(&self) -> LorentzVector {
        self.p[0] + self.p[1]
    }

    pub fn with_xi(&self, xi: f64) -> Self {
        Self { xi, ..self.clone() }
    }

    fn spinors(&self) -> Result<[Spinor; 4]> {
        let [s1, s2, s3, s4] = self.spins;
        Ok([
            external_spinor(&self.p[0], self.m_e, Line::Particle, s1)?,
            external_spinor(&self.p[1], self.m_e, Line::Antiparticle, s2)?,
            external_spinor(&self.p[2], self.m_mu, Line::Particle, s3)?,
            external_spinor(&self.p[3], self.m_mu, Line::Antiparticle, s4)?,
        ])
    }

    fn s_invariant(&self) -> Result<f64> {
        let s = self.channel().minkowski_square().re;
        if s.abs() < CHANNEL_TOL {
            return Err(Error::DegenerateChannel(s));
        }
        Ok(s)
    }
}

/// `-(i e²/s) [v̄2 γ^μ u1] T_μν [ū3 γ^ν v4]` with the gauge-ξ tensor.
pub fn amp_ee_mumu_direct(cfg: &ScatteringConfig) -> Result<C64> {
    cfg.validate()?;
    let s = cfg.s_invariant()?;
    let [u1, v2, u3, v4] = cfg.spinors()?;
    let j1 = LorentzVector(std::array::from_fn(|mu| sandwich(&v2, &gamma(mu), &u1)));
    let j2 = LorentzVector(std::array::from_fn(|mu| sandwich(&u3, &gamma(mu), &v4)));
    let p = cfg.channel();
    let mut t = -j1.dot(&j2);
    if cfg.xi != 1.0 {
        t += p.dot(&j1) * p.dot(&j2) * (1.0 - cfg.xi) / s;
    }
    Ok(-I * cfg.e * cfg.e / s * t)
}

/// `(e²/s) Tr[(I ⊗ v4 u3†) D_γ (u1 v2† ⊗ I)]` for a supplied photon operator.
pub fn amp_ee_mumu_operator_with(cfg: &ScatteringConfig, d: &PhotonOperator) -> Result<C64> {
    cfg.validate()?;
    let s = cfg.s_invariant()?;
    let [u1, v2, u3, v4] = cfg.spinors()?;
    let id = DiracMatrix::identity();
    let left = kron(&id, &(v4 * u3.adjoint()));
    let right = kron(&(u1 * v2.adjoint()), &id);
    let tr: C64 = (left * d.matrix * right).trace();
    Ok(tr * (cfg.e * cfg.e / s))
}

/// Operator form with `D_γ` built from the reflected gauge-ξ basis of `p1 + p2`.
/// Multiply by [`EE_MUMU_PHASE`] to compare with [`amp_ee_mumu_direct`].
pub fn amp_ee_mumu_operator(cfg: &ScatteringConfig) -> Result<C64> {
    let basis = gauge_basis(&cfg.channel(), cfg.xi)?;
    amp_ee_mumu_operator_with(cfg, &photon_operator(&basis.parity()))
}

/// Operator form with the unreflected basis.
pub fn amp_ee_mumu_operator_unreflected(cfg: &ScatteringConfig) -> Result<C64> {
    let basis = gauge_basis(&cfg.channel(), cfg.xi)?;
    amp_ee_mumu_operator_with(cfg, &photon_operator(&basis))
}

/// Returns `(v†Au, Tr[(uv† ⊗ I)(A ⊗ I)])`; the second is `4 v†Au`.
pub fn trace_identity(u: &Spinor, v: &Spinor, a: &DiracMatrix) -> (C64, C64) {
    let lhs = (v.adjoint() * a * u)[(0, 0)];
    let id = DiracMatrix::identity();
    let big: BigMatrix = kron(&(u * v.adjoint()), &id) * kron(a, &id);
    (lhs, big.trace())
}

/// `e⁻(p1) γ(p2, ε2) → e⁻(p3) γ(p4, ε4)`, s-channel diagram.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComptonConfig {
    pub p: [LorentzVector; 4],
    pub eps2: LorentzVector,
    pub eps4: LorentzVector,
    pub spins: [u8; 2],
    pub m: f64,
    pub e: f64,
}

impl ComptonConfig {
    pub fn validate(&self) -> Result<()> {
        check_on_shell(&self.p[0], self.m, "p1")?;
        check_on_shell(&self.p[1], 0.0, "p2")?;
        check_on_shell(&self.p[2], self.m, "p3")?;
        check_on_shell(&self.p[3], 0.0, "p4")?;
        if self.spins.iter().any(|&s| s > 1) {
            return Err(Error::InvalidKinematics("spin indices are bits".into()));
        }
        check_conservation(&self.p)
    }

    pub fn channel(&self) -> LorentzVector {
        self.p[0] + self.p[1]
    }

    fn pole_gap(&self) -> Result<f64> {
        let gap = self.channel().minkowski_square().re - self.m * self.m;
        if gap.abs() < CHANNEL_TOL {
            return Err(Error::SChannelPole(gap));
        }
        Ok(gap)
    }

    fn spinors(&self) -> Result<(Spinor, Spinor)> {
        Ok((
            external_spinor(&self.p[0], self.m, Line::Particle, self.spins[0])?,
            external_spinor(&self.p[2], self.m, Line::Particle, self.spins[1])?,
        ))
    }
}

/// Real, `ε^0 = 0` and `ε⃗ · p⃗ = 0`.
fn check_transverse(eps: &LorentzVector, p: &LorentzVector, name: &str) -> Result<()> {
    let [e0, e1, e2, e3] = eps.real_parts();
    let [_, p1, p2, p3] = p.real_parts();
    let scale = (p1 * p1 + p2 * p2 + p3 * p3).sqrt().max(1.0) * (e1 * e1 + e2 * e2 + e3 * e3).sqrt().max(1.0);
    if !eps.is_real() || e0.abs() > 1e-12 || (e1 * p1 + e2 * p2 + e3 * p3).abs() > 1e-10 * scale {
        return Err(Error::UnphysicalPolarization(name.into()));
    }
    Ok(())
}

/// `e² ū3 ε̸4* (k̸ + m) ε̸2 u1/(s - m²)`.
pub fn amp_compton_direct(cfg: &ComptonConfig) -> Result<C64> {
    cfg.validate()?;
    let gap = cfg.pole_gap()?;
    let (u1, u3) = cfg.spinors()?;
    let k = cfg.channel();
    let g = slash(&cfg.eps4.conj()) * (slash(&k) + DiracMatrix::identity() * re(cfg.m)) * slash(&cfg.eps2);
    Ok(sandwich(&u3, &g, &u1) * (cfg.e * cfg.e / gap))
}

/// `(4e² k0/(s - m²)) u3† Ξ†(ε4) ρ(k) Ξ†(ε2) u1`; requires physical polarizations.
pub fn amp_compton_operator(cfg: &ComptonConfig) -> Result<C64> {
    cfg.validate()?;
    check_transverse(&cfg.eps2, &cfg.p[1], "eps2")?;
    check_transverse(&cfg.eps4, &cfg.p[3], "eps4")?;
    compton_operator_form(cfg, &xi_adjoint(&cfg.eps4), &xi_adjoint(&cfg.eps2))
}

/// Operator form with reflected polarizations, `Ξ(ε4*_P)` and `Ξ(ε2_P)`;
/// holds for arbitrary (complex, non-transverse) polarizations.
pub fn amp_compton_operator_reflected(cfg: &ComptonConfig) -> Result<C64> {
    cfg.validate()?;
    compton_operator_form(cfg, &xi_operator(&cfg.eps4.conj().parity()), &xi_operator(&cfg.eps2.parity()))
}

fn compton_operator_form(cfg: &ComptonConfig, out: &DiracMatrix, inc: &DiracMatrix) -> Result<C64> {
    let gap = cfg.pole_gap()?;
    let (u1, u3) = cfg.spinors()?;
    let k = cfg.channel();
    let rho = rho(&k, cfg.m)?;
    let v = (u3.adjoint() * out * rho.matrix * inc * u1)[(0, 0)];
    Ok(v * (4.0 * cfg.e * cfg.e * k.time().re / gap))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComptonPair {
    pub direct: C64,
    pub operator: C64,
    /// `r` of the virtual electron; `|r| ≤ 1` for physical external lines.
    pub r_k: f64,
}

pub fn amp_compton_pair(cfg: &ComptonConfig) -> Result<ComptonPair> {
    Ok(ComptonPair {
        direct: amp_compton_direct(cfg)?,
        operator: amp_compton_operator(cfg)?,
        r_k: crate::fermion::r_param(&cfg.channel(), cfg.m)?,
    })
}

/// Least-squares constant `c` minimizing `Σ |direct - c · operator|²`.
pub fn fit_global_phase(pairs: &[(C64, C64)]) -> C64 {
    let (num, den) = pairs
        .iter()
        .fold((ZERO, 0.0), |(n, d), (a, b)| (n + a * b.conj(), d + b.norm_sqr()));
    if den == 0.0 {
        ZERO
    } else {
        num / den
    }
}
