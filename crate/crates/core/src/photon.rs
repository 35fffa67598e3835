//! Virtual-photon operators: `Ξ(ε) = ε̸ γ^0` and the 16x16
//! `D_γ = Σ_i η_i Ξ^i ⊗ Ξ^{i†}` built from a gauge-ξ polarization basis.
//!
//! The gauge tensor `-g^{μν} + (1 - ξ) k^μ k^ν / k²` is indefinite for most
//! gauges, so a basis carries a norm sign `η_i = ±1` per vector and the
//! completeness relation reads `Σ_i η_i ε_i^μ ε_i^{ν*} = T^{μν}`. With all
//! signs `+1` this is the plain sum over polarizations.

use serde::{Deserialize, Serialize};

use crate::dirac::{gamma, metric, off_shell_mass, slash, w_matrix, LorentzVector};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, hermiticity_residual, kron, re, BigMatrix, DiracMatrix, C64, ZERO};

/// Completeness residual accepted for a basis flagged complete.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Below this `|k²|` a momentum is treated as lightlike.
pub const LIGHTLIKE_TOL: f64 = 1e-12;
/// Eigenvalue/hermiticity slack for the positivity verdicts.
pub const PSD_TOL: f64 = 1e-10;

/// `T^{μν} = -g^{μν} + (1 - ξ) k^μ k^ν / k²`.
pub fn gauge_tensor(k: &LorentzVector, xi: f64) -> [[C64; 4]; 4] {
    let k2 = k.minkowski_square();
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let long = if xi == 1.0 { ZERO } else { k.0[mu] * k.0[nu] * (1.0 - xi) / k2 };
            re(-metric(mu, nu)) + long
        })
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolarizationBasis {
    pub vectors: [LorentzVector; 4],
    /// Norm signs `η_i`.
    pub signs: [f64; 4],
    pub xi: f64,
    /// Photon momentum the basis completes for.
    pub k: LorentzVector,
}

impl PolarizationBasis {
    /// Basis with all norm signs `+1`.
    pub fn new(vectors: [LorentzVector; 4], xi: f64, k: LorentzVector) -> Self {
        Self { vectors, signs: [1.0; 4], xi, k }
    }

    /// `Σ_i η_i ε_i^μ ε_i^{ν*}`.
    pub fn outer_sum(&self) -> [[C64; 4]; 4] {
        std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                self.vectors
                    .iter()
                    .zip(self.signs)
                    .map(|(e, s)| e.0[mu] * e.0[nu].conj() * s)
                    .sum()
            })
        })
    }

    /// `max |Σ η ε ε* - T(k, ξ)|`.
    pub fn completeness_residual(&self) -> f64 {
        let lhs = self.outer_sum();
        let rhs = gauge_tensor(&self.k, self.xi);
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                worst = worst.max((lhs[mu][nu] - rhs[mu][nu]).norm());
            }
        }
        worst
    }

    pub fn is_complete(&self) -> bool {
        self.completeness_residual() < COMPLETENESS_TOL
    }

    pub fn is_real(&self) -> bool {
        self.vectors.iter().all(LorentzVector::is_real)
    }

    /// Spatially reflected basis; completes `T(k_P, ξ)` with `k_P = (k0, -k⃗)`.
    pub fn parity(&self) -> Self {
        Self {
            vectors: self.vectors.map(|e| e.parity()),
            signs: self.signs,
            xi: self.xi,
            k: self.k.parity(),
        }
    }

    /// `Σ_i ε_i^0` and the closed trace `16 Σ_i η_i |ε_i^0|²`.
    pub fn time_component_sum(&self) -> C64 {
        self.vectors.iter().map(|e| e.time()).sum()
    }
}

/// Minkowski Gram-Schmidt over the seeds; returns vectors with norms `±1`
/// together with those norms.
fn tetrad(seeds: &[LorentzVector]) -> Vec<(LorentzVector, f64)> {
    let mut out: Vec<(LorentzVector, f64)> = Vec::with_capacity(4);
    for seed in seeds {
        if out.len() == 4 {
            break;
        }
        let mut v = *seed;
        for (b, n) in &out {
            let proj = v.dot(b).re * n;
            v = v - *b * proj;
        }
        let sq = v.minkowski_square().re;
        if sq.abs() < 1e-8 {
            continue;
        }
        out.push((v * (1.0 / sq.abs().sqrt()), sq.signum()));
    }
    out
}

/// Real polarization basis completing `T(k, ξ)`.
///
/// For `k² ≠ 0` the first vector is `√|ξ| k̂` with sign `-sign(ξ k²)`, the
/// others a Minkowski-orthonormal completion of `k̂`. Lightlike momenta admit
/// only `ξ = 1`, where the standard tetrad is used.
pub fn gauge_basis(k: &LorentzVector, xi: f64) -> Result<PolarizationBasis> {
    if !k.is_real() {
        return Err(Error::DegenerateMomentum("complex momentum".into()));
    }
    let unit = |i: usize| {
        let mut e = [0.0; 4];
        e[i] = 1.0;
        LorentzVector::from_real(e)
    };
    let axes = [unit(0), unit(1), unit(2), unit(3)];
    let k2 = k.minkowski_square().re;
    let scale = k.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::DegenerateMomentum("zero momentum".into()));
    }
    if k2.abs() < LIGHTLIKE_TOL * scale * scale {
        if xi != 1.0 {
            return Err(Error::DegenerateMomentum(format!(
                "lightlike momentum admits only xi = 1 (got {xi})"
            )));
        }
        let t = tetrad(&axes);
        let vectors = std::array::from_fn(|a| t[a].0);
        let signs = std::array::from_fn(|a| -t[a].1);
        return Ok(PolarizationBasis { vectors, signs, xi, k: *k });
    }
    let mut seeds = vec![*k];
    seeds.extend(axes);
    let t = tetrad(&seeds);
    if t.len() != 4 {
        return Err(Error::DegenerateMomentum("tetrad completion failed".into()));
    }
    let n0 = t[0].1;
    let mut vectors = [t[0].0 * xi.abs().sqrt(), t[1].0, t[2].0, t[3].0];
    let mut signs = [if xi == 0.0 { 1.0 } else { -(xi * n0).signum() }, -t[1].1, -t[2].1, -t[3].1];
    // keep the longitudinal slot last so the transverse/timelike vectors lead
    vectors.rotate_left(1);
    signs.rotate_left(1);
    Ok(PolarizationBasis { vectors, signs, xi, k: *k })
}

/// Feynman-gauge (`ξ = 1`) basis.
pub fn feynman_gauge_basis(k: &LorentzVector) -> Result<PolarizationBasis> {
    gauge_basis(k, 1.0)
}

/// `Ξ(ε) = ε̸ γ^0`.
pub fn xi_operator(eps: &LorentzVector) -> DiracMatrix {
    slash(eps) * gamma(0)
}

/// `Ξ(ε)† = ε*̸ γ^0`: the adjoint conjugates the polarization components only.
pub fn xi_adjoint(eps: &LorentzVector) -> DiracMatrix {
    xi_operator(&eps.conj())
}

/// `M_ε Σ_j |j; ε⟩⟨j; ε| = M_ε W_ε W_ε`, with the frame bras taken as rows of `W_ε`.
pub fn xi_spectral_form(eps: &LorentzVector) -> Result<DiracMatrix> {
    let w = w_matrix(eps)?;
    Ok(w * w * off_shell_mass(eps).value)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhotonOperator {
    pub matrix: BigMatrix,
    pub basis: PolarizationBasis,
}

impl PhotonOperator {
    /// `Tr D_γ = 16 Σ_i η_i |ε_i^0|²`.
    pub fn trace_closed(&self) -> f64 {
        self.basis
            .vectors
            .iter()
            .zip(self.basis.signs)
            .map(|(e, s)| 16.0 * s * e.time().norm_sqr())
            .sum()
    }
}

pub fn photon_operator(basis: &PolarizationBasis) -> PhotonOperator {
    let matrix = basis
        .vectors
        .iter()
        .zip(basis.signs)
        .fold(BigMatrix::zeros(), |acc, (e, s)| acc + kron(&xi_operator(e), &xi_adjoint(e)) * re(s));
    PhotonOperator { matrix, basis: basis.clone() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PsdVerdict {
    PositiveDefinite,
    /// Hermitian, no negative eigenvalue, but singular.
    PositiveSemidefinite,
    Indefinite,
    NonHermitian,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsdReport {
    pub verdict: PsdVerdict,
    pub all_real: bool,
    /// Every `η_i = +1` and every vector has `ε0 > ‖ε⃗‖`.
    pub sufficient_condition: bool,
    pub hermiticity_residual: f64,
    /// Smallest eigenvalue of the hermitian part of `D_γ`.
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// Component-wise sufficient condition for a positive definite `D_γ`.
pub fn sufficient_condition(basis: &PolarizationBasis) -> bool {
    basis.is_real()
        && basis.signs.iter().all(|&s| s > 0.0)
        && basis.vectors.iter().all(|e| {
            let [e0, e1, e2, e3] = e.real_parts();
            e0 > 0.0 && e0 > (e1 * e1 + e2 * e2 + e3 * e3).sqrt()
        })
}

pub fn psd_gauge_check(basis: &PolarizationBasis) -> PsdReport {
    let d = photon_operator(basis).matrix;
    let herm = hermiticity_residual(&d);
    let scale = crate::linalg::max_abs(&d).max(1.0);
    let ev = hermitian_eigenvalues(&d);
    let (min, max) = (ev[0], ev[ev.len() - 1]);
    let verdict = if herm > PSD_TOL * scale {
        PsdVerdict::NonHermitian
    } else if min > PSD_TOL * scale {
        PsdVerdict::PositiveDefinite
    } else if min >= -PSD_TOL * scale {
        PsdVerdict::PositiveSemidefinite
    } else {
        PsdVerdict::Indefinite
    };
    PsdReport {
        verdict,
        all_real: basis.is_real(),
        sufficient_condition: sufficient_condition(basis),
        hermiticity_residual: herm,
        min_eigenvalue: min,
        max_eigenvalue: max,
    }
}

/// JSON form of a basis: complex components as `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisFile {
    pub vectors: [[[f64; 2]; 4]; 4],
    pub xi: f64,
    #[serde(default)]
    pub signs: Option<[f64; 4]>,
    #[serde(default)]
    pub momentum: Option<[f64; 4]>,
}

impl BasisFile {
    pub fn to_basis(&self) -> PolarizationBasis {
        let vectors = self.vectors.map(|v| LorentzVector(v.map(|[a, b]| C64::new(a, b))));
        PolarizationBasis {
            vectors,
            signs: self.signs.unwrap_or([1.0; 4]),
            xi: self.xi,
            k: LorentzVector::from_real(self.momentum.unwrap_or([0.0; 4])),
        }
    }

    pub fn from_basis(b: &PolarizationBasis) -> Self {
        Self {
            vectors: b.vectors.map(|v| v.0.map(|z| [z.re, z.im])),
            xi: b.xi,
            signs: Some(b.signs),
            momentum: Some(b.k.real_parts()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, eigenvalues, max_diff};
    use approx::assert_abs_diff_eq;

    fn v(a: f64, b: f64, c_: f64, d: f64) -> LorentzVector {
        LorentzVector::momentum(a, b, c_, d)
    }

    #[test]
    fn xi_of_time_unit_is_identity() {
        let x = xi_operator(&v(1.0, 0.0, 0.0, 0.0));
        assert_eq!(x, DiracMatrix::identity());
    }

    #[test]
    fn xi_real_spectrum() {
        let e = v(0.7, 1.2, -0.4, 0.9);
        let norm = (1.2f64 * 1.2 + 0.4 * 0.4 + 0.9 * 0.9).sqrt();
        let ev = hermitian_eigenvalues(&xi_operator(&e));
        for (g, w) in ev.iter().zip([0.7 - norm, 0.7 - norm, 0.7 + norm, 0.7 + norm]) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-12);
        }
    }

    #[test]
    fn xi_adjoint_is_matrix_adjoint() {
        let e = LorentzVector::new(c(0.3, 1.0), c(-0.5, 0.2), c(0.0, -0.7), c(1.1, 0.4));
        assert!(max_diff(&xi_adjoint(&e), &xi_operator(&e).adjoint()) < 1e-15);
    }

    #[test]
    fn xi_spectral_form_reconstructs() {
        for e in [
            v(2.0, 0.3, -0.4, 0.5),
            v(0.2, 1.0, 0.0, 0.3),
            LorentzVector::new(c(0.3, 1.0), c(-0.5, 0.2), c(0.0, -0.7), c(1.1, 0.4)),
        ] {
            assert!(max_diff(&xi_spectral_form(&e).unwrap(), &xi_operator(&e)) < 1e-12, "{e:?}");
        }
    }

    #[test]
    fn identity_basis_gives_scaled_identity() {
        let t = v(1.0, 0.0, 0.0, 0.0);
        let b = PolarizationBasis::new([t; 4], 1.0, v(1.0, 0.0, 0.0, 1.0));
        let d = photon_operator(&b);
        assert!(max_diff(&d.matrix, &(BigMatrix::identity() * re(4.0))) < 1e-15);
        assert_abs_diff_eq!(d.matrix.trace().re, 64.0);
        assert_abs_diff_eq!(d.trace_closed(), 64.0);
        // the alternative closed form |Σ ε0|² gives 16 here
        assert_abs_diff_eq!(b.time_component_sum().norm_sqr(), 16.0);
    }

    #[test]
    fn gauge_bases_complete() {
        for k in [v(1.0, 0.0, 0.0, 1.0), v(2.0, 0.0, 0.0, 1.0), v(3.0, 0.4, -1.2, 0.8), v(0.5, 1.0, 0.3, -0.2)] {
            for xi in [1.0, 0.0, 3.0, -0.5] {
                match gauge_basis(&k, xi) {
                    Ok(b) => {
                        assert!(b.completeness_residual() < COMPLETENESS_TOL, "k={k:?} xi={xi}");
                        assert_eq!(b.xi, xi);
                    }
                    Err(Error::DegenerateMomentum(_)) => assert!(k.minkowski_square().re.abs() < 1e-12 && xi != 1.0),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn lightlike_feynman_basis() {
        let b = feynman_gauge_basis(&v(1.0, 0.0, 0.0, 1.0)).unwrap();
        assert!(b.completeness_residual() < 1e-12);
        assert_eq!(b.xi, 1.0);
        let d = photon_operator(&b);
        assert!((d.matrix.trace().re - d.trace_closed()).abs() < 1e-10);
    }

    #[test]
    fn zero_momentum_rejected() {
        assert!(matches!(gauge_basis(&v(0.0, 0.0, 0.0, 0.0), 1.0), Err(Error::DegenerateMomentum(_))));
    }

    #[test]
    fn psd_examples() {
        let k = v(2.0, 0.0, 0.0, 1.0);
        let good = PolarizationBasis::new([v(2.0, 1.0, 0.0, 0.0); 4], 1.0, k);
        let rep = psd_gauge_check(&good);
        assert_eq!(rep.verdict, PsdVerdict::PositiveDefinite);
        assert!(rep.sufficient_condition);
        let bad = PolarizationBasis::new([v(0.0, 0.0, 0.0, 1.0); 4], 1.0, k);
        let rep = psd_gauge_check(&bad);
        assert_eq!(rep.verdict, PsdVerdict::Indefinite);
        assert_abs_diff_eq!(rep.min_eigenvalue, -4.0, epsilon = 1e-12);
        let e = LorentzVector::new(c(0.3, 1.0), c(-0.5, 0.2), c(0.0, -0.7), c(1.1, 0.4));
        let f = LorentzVector::new(c(1.0, 0.0), c(0.5, 0.5), c(0.0, 0.0), c(0.0, 0.1));
        let cplx = PolarizationBasis::new([e, f, e, f], 1.0, k);
        let rep = psd_gauge_check(&cplx);
        assert_eq!(rep.verdict, PsdVerdict::NonHermitian);
        assert!(!rep.all_real);
    }

    #[test]
    fn purely_imaginary_vector_still_hermitian() {
        // (iε) ⊗ (iε)† = ε ⊗ ε†: realness is sufficient, not necessary
        let t = LorentzVector::new(c(0.0, 1.0), ZERO, ZERO, ZERO);
        let b = PolarizationBasis::new([t; 4], 1.0, v(1.0, 0.0, 0.0, 0.0));
        assert_eq!(psd_gauge_check(&b).verdict, PsdVerdict::PositiveDefinite);
    }

    #[test]
    fn xi_spectrum_nonhermitian_for_complex() {
        let e = LorentzVector::new(c(0.3, 1.0), c(-0.5, 0.2), c(0.0, -0.7), c(1.1, 0.4));
        let ev = eigenvalues(&xi_operator(&e));
        // eigenvalues ε0 ± √(ε⃗·ε⃗) with the bilinear square
        let s = crate::dirac::principal_sqrt(e.spatial_square());
        for z in ev {
            let d = (z - (e.time() + s)).norm().min((z - (e.time() - s)).norm());
            assert!(d < 1e-8);
        }
    }

    #[test]
    fn basis_file_roundtrip() {
        let b = gauge_basis(&v(3.0, 0.4, -1.2, 0.8), 3.0).unwrap();
        let json = serde_json::to_string(&BasisFile::from_basis(&b)).unwrap();
        let back: BasisFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_basis(), b);
    }
}
