//! Virtual pair creation: the SWAP gate `S`, the two-fermion operator
//! `ρ_2F = R S` (fixed loop momentum or a finite symmetric grid), the
//! integrand-level trace identity for the photon self-energy, its
//! expectation-value form, and the inertia census of `R S`.

use serde::{Deserialize, Serialize};

use crate::dirac::{gamma, off_shell_mass, slash, w_matrix, LorentzVector};
use crate::error::{Error, Result};
use crate::fermion::{real_momentum, rho, validity, Validity};
use crate::linalg::{
    hermitian_eigenvalues, hermiticity_residual, inertia, kron, psd_sqrt, re, BigMatrix, DiracMatrix, C64,
};
use crate::photon::xi_operator;
use crate::sweep::{map_slice, Execution};

/// `|q² - m²|` below this is a propagator pole of the integrand.
pub const POLE_TOL: f64 = 1e-9;
/// Matching tolerance for `k ↦ p - k` grid closure.
pub const CLOSURE_TOL: f64 = 1e-12;
/// Relative eigenvalue threshold used to count zero modes.
pub const INERTIA_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SwapOperator {
    pub matrix: BigMatrix,
}

/// `S |a⟩|b⟩ = |b⟩|a⟩` on `C⁴ ⊗ C⁴`.
pub fn swap_gate() -> SwapOperator {
    let matrix = BigMatrix::from_fn(|r, c| if c == 4 * (r % 4) + r / 4 { re(1.0) } else { re(0.0) });
    SwapOperator { matrix }
}

impl SwapOperator {
    /// `(n₊, n₋, n₀)` from the eigensolver.
    pub fn inertia(&self) -> (usize, usize, usize) {
        inertia(&hermitian_eigenvalues(&self.matrix), 1e-12)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub k: [f64; 4],
    pub weight: f64,
}

/// Finite stand-in for the loop integral: `R = Σ_j w_j ρ(p - k_j) ⊗ ρ(k_j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub id: String,
    pub points: Vec<GridPoint>,
}

impl GridSpec {
    /// Grid over `ks` and their images `p - k`, each with the given weight.
    pub fn symmetric(id: impl Into<String>, p: &LorentzVector, ks: &[(LorentzVector, f64)]) -> Self {
        let p = p.real_parts();
        let mut points = Vec::with_capacity(2 * ks.len());
        for (k, w) in ks {
            let k = k.real_parts();
            points.push(GridPoint { k, weight: *w });
            points.push(GridPoint { k: std::array::from_fn(|i| p[i] - k[i]), weight: *w });
        }
        Self { id: id.into(), points }
    }

    /// Checks positive weights and closure under `k ↦ p - k` with equal weights.
    pub fn check(&self, p: &LorentzVector) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let p = p.real_parts();
        let mut used = vec![false; self.points.len()];
        for (i, a) in self.points.iter().enumerate() {
            if !(a.weight > 0.0) {
                return Err(Error::AsymmetricGrid(format!("weight {} at point {i} is not positive", a.weight)));
            }
            if used[i] {
                continue;
            }
            let image: [f64; 4] = std::array::from_fn(|j| p[j] - a.k[j]);
            let partner = (0..self.points.len()).find(|&j| {
                !used[j]
                    && (j != i || image == a.k)
                    && (self.points[j].weight - a.weight).abs() <= CLOSURE_TOL * a.weight
                    && self.points[j].k.iter().zip(image).all(|(x, y)| (x - y).abs() <= CLOSURE_TOL * (1.0 + y.abs()))
            });
            match partner {
                Some(j) => {
                    used[i] = true;
                    used[j] = true;
                }
                None => return Err(Error::AsymmetricGrid(format!("point {i} has no partner p - k"))),
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LoopSampling {
    Fixed(LorentzVector),
    Grid(GridSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairOperator {
    /// `R S`.
    pub matrix: BigMatrix,
    /// `R` alone.
    pub r: BigMatrix,
    pub p: LorentzVector,
    pub sampling: LoopSampling,
    pub m: f64,
}

fn product_term(p: &LorentzVector, k: &LorentzVector, m: f64) -> Result<BigMatrix> {
    let q = *p - *k;
    Ok(kron(&rho(&q, m)?.matrix, &rho(k, m)?.matrix))
}

/// `R` summed over the grid (after the closure check).
pub fn grid_r(p: &LorentzVector, grid: &GridSpec, m: f64, exec: Execution) -> Result<BigMatrix> {
    grid.check(p)?;
    let terms = map_slice(&grid.points, exec, |pt| {
        product_term(p, &LorentzVector::from_real(pt.k), m).map(|t| t * re(pt.weight))
    });
    terms.into_iter().try_fold(BigMatrix::zeros(), |acc, t| Ok(acc + t?))
}

pub fn pair_operator(p: &LorentzVector, sampling: LoopSampling, m: f64) -> Result<PairOperator> {
    pair_operator_with(p, sampling, m, Execution::default())
}

pub fn pair_operator_with(p: &LorentzVector, sampling: LoopSampling, m: f64, exec: Execution) -> Result<PairOperator> {
    real_momentum(p)?;
    let r = match &sampling {
        LoopSampling::Fixed(k) => product_term(p, k, m)?,
        LoopSampling::Grid(g) => grid_r(p, g, m, exec)?,
    };
    let matrix = r * swap_gate().matrix;
    Ok(PairOperator { matrix, r, p: *p, sampling, m })
}

/// Both sides of the integrand identity at fixed loop momentum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LoopIdentity {
    /// `-e² Tr[ε̸ (q̸ + m) ε*̸ (k̸ + m)]/((q² - m²)(k² - m²))`, `q = p - k`.
    pub direct: C64,
    /// `-(e²/16) w Tr[(ρ(q) ⊗ ρ(k)) S (Ξ ⊗ Ξ†)]` with
    /// `w = 256 q0 k0/((q² - m²)(k² - m²))`.
    pub operator: C64,
    pub deviation: f64,
}

/// `256 q0 k0/((q² - m²)(k² - m²))`; `w/16` converts `ρ(q) ⊗ ρ(k)` back to
/// the product of propagators `D_F(q) γ^0 ⊗ D_F(k) γ^0`.
pub fn integrand_weight(p: &LorentzVector, k: &LorentzVector, m: f64) -> Result<f64> {
    let q = *p - *k;
    let mut w = 256.0;
    for v in [&q, k] {
        let d = v.minkowski_square().re - m * m;
        if d.abs() < POLE_TOL {
            return Err(Error::PropagatorPole(d.abs()));
        }
        let e = real_momentum(v)?[0];
        if e == 0.0 {
            return Err(Error::ZeroEnergy(e));
        }
        w *= e / d;
    }
    Ok(w)
}

/// Standard-rules integrand.
pub fn loop_direct(p: &LorentzVector, k: &LorentzVector, m: f64, eps: &LorentzVector, e: f64) -> Result<C64> {
    let q = *p - *k;
    let dq = q.minkowski_square().re - m * m;
    let dk = k.minkowski_square().re - m * m;
    for d in [dq, dk] {
        if d.abs() < POLE_TOL {
            return Err(Error::PropagatorPole(d.abs()));
        }
    }
    let mm = DiracMatrix::identity() * re(m);
    let t = (slash(eps) * (slash(&q) + mm) * slash(&eps.conj()) * (slash(k) + mm)).trace();
    Ok(-t * (e * e / (dq * dk)))
}

/// The pair of photon factors entering the operator form; `reflect` uses
/// `ε_P = (ε^0, -ε⃗)`, which is what the Feynman-rule contraction requires in
/// general. Without reflection the forms agree when `ε_P = ±ε`.
pub fn photon_factors(eps: &LorentzVector, reflect: bool) -> (DiracMatrix, DiracMatrix) {
    let e = if reflect { eps.parity() } else { *eps };
    let x = xi_operator(&e);
    (x, x.adjoint())
}

pub fn loop_operator(
    p: &LorentzVector,
    k: &LorentzVector,
    m: f64,
    eps: &LorentzVector,
    e: f64,
    reflect: bool,
) -> Result<C64> {
    let w = integrand_weight(p, k, m)?;
    let pair = pair_operator(p, LoopSampling::Fixed(*k), m)?;
    let (x, xd) = photon_factors(eps, reflect);
    let t = (pair.matrix * kron(&x, &xd)).trace();
    Ok(t * (-e * e / 16.0 * w))
}

pub fn loop_trace_identity(p: &LorentzVector, k: &LorentzVector, m: f64, eps: &LorentzVector, e: f64) -> Result<LoopIdentity> {
    let direct = loop_direct(p, k, m, eps, e)?;
    let operator = loop_operator(p, k, m, eps, e, true)?;
    let deviation = crate::linalg::rel_dev(direct, operator, 1e-300);
    Ok(LoopIdentity { direct, operator, deviation })
}

/// `|J, ε⟩ = W_ε|i⟩ ⊗ W_{ε*}|j⟩` for `J = 4i + j`; the bra is the matching
/// row pair, so `Σ_J |J⟩⟨J| = W_ε² ⊗ W_{ε*}²`.
pub struct PhotonKets {
    pub w: DiracMatrix,
    pub w_conj: DiracMatrix,
    /// `M_ε M_{ε*}`.
    pub mass_product: C64,
}

pub fn photon_kets(eps: &LorentzVector) -> Result<PhotonKets> {
    let c = eps.conj();
    Ok(PhotonKets {
        w: w_matrix(eps)?,
        w_conj: w_matrix(&c)?,
        mass_product: off_shell_mass(eps).value * off_shell_mass(&c).value,
    })
}

impl PhotonKets {
    fn frame(&self) -> BigMatrix {
        kron(&self.w, &self.w_conj)
    }

    /// `Σ_J ⟨J, ε| X |J, ε⟩`.
    pub fn diagonal_sum(&self, x: &BigMatrix) -> C64 {
        let f = self.frame();
        (0..16).map(|j| (f.row(j) * x * f.column(j))[(0, 0)]).sum()
    }

    /// `Σ_J ⟨J, ε|J, ε⟩`.
    pub fn norm_sum(&self) -> C64 {
        self.diagonal_sum(&BigMatrix::identity())
    }
}

/// `16 |ε0|²/(M_ε M_{ε*})`.
pub fn norm_sum_closed(eps: &LorentzVector) -> C64 {
    let c = eps.conj();
    re(16.0 * eps.time().norm_sqr()) / (off_shell_mass(eps).value * off_shell_mass(&c).value)
}

/// `-e² |ε0|² ⟨ρ_2F⟩_ε` at fixed loop momentum, with the integrand weight
/// folded into `ρ_2F`. Kets are built from the reflected polarization.
pub fn expectation_form(p: &LorentzVector, k: &LorentzVector, m: f64, eps: &LorentzVector, e: f64) -> Result<C64> {
    if eps.time().norm() == 0.0 {
        return Err(Error::ZeroTimeComponent);
    }
    let w = integrand_weight(p, k, m)?;
    let pair = pair_operator(p, LoopSampling::Fixed(*k), m)?;
    let kets = photon_kets(&eps.parity())?;
    let avg = kets.diagonal_sum(&(pair.matrix * re(w))) / kets.norm_sum();
    Ok(avg * (-e * e * eps.time().norm_sqr()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub grid_id: String,
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
    pub min_eig: f64,
    pub max_eig: f64,
    /// Grid points used (both factors valid states).
    pub n_points: usize,
    /// Points dropped because a factor is not a valid state.
    pub n_skipped: usize,
    pub swap_pos: usize,
    pub swap_neg: usize,
    pub hermiticity_residual: f64,
    /// Inertia of `√R S √R` equals that of `R S`.
    pub sylvester_agrees: bool,
}

fn both_valid(p: &LorentzVector, k: &LorentzVector, m: f64) -> Result<bool> {
    let q = *p - *k;
    Ok(validity(k, m)?.tag == Validity::StateValid && validity(&q, m)?.tag == Validity::StateValid)
}

/// Inertia of the symmetrized `R S` on the valid part of the grid.
pub fn negative_eigenvalue_census(p: &LorentzVector, grid: &GridSpec, m: f64) -> Result<CensusRecord> {
    grid.check(p)?;
    let mut kept = Vec::new();
    for pt in &grid.points {
        if both_valid(p, &LorentzVector::from_real(pt.k), m)? {
            kept.push(pt.clone());
        }
    }
    if kept.is_empty() {
        return Err(Error::EmptyGrid);
    }
    // validity is symmetric under k ↦ p - k, so the kept set stays closed
    let valid = GridSpec { id: grid.id.clone(), points: kept };
    let op = pair_operator(p, LoopSampling::Grid(valid.clone()), m)?;
    let s = swap_gate();
    let ev = hermitian_eigenvalues(&op.matrix);
    let scale = ev.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let tol = INERTIA_REL_TOL * scale;
    let (n_pos, n_neg, n_zero) = inertia(&ev, tol);
    let root = psd_sqrt(&op.r);
    let congruent = root * s.matrix * root.adjoint();
    let sylvester_agrees = inertia(&hermitian_eigenvalues(&congruent), tol) == (n_pos, n_neg, n_zero);
    let (swap_pos, swap_neg, _) = s.inertia();
    Ok(CensusRecord {
        grid_id: grid.id.clone(),
        n_pos,
        n_neg,
        n_zero,
        min_eig: ev[0],
        max_eig: ev[15],
        n_points: valid.points.len(),
        n_skipped: grid.points.len() - valid.points.len(),
        swap_pos,
        swap_neg,
        hermiticity_residual: hermiticity_residual(&op.matrix),
        sylvester_agrees,
    })
}

/// `D_F(q) γ^0 ⊗ D_F(k) γ^0`, which equals `(w/16) ρ(q) ⊗ ρ(k)`.
pub fn propagator_product(p: &LorentzVector, k: &LorentzVector, m: f64) -> Result<BigMatrix> {
    let q = *p - *k;
    let d = |v: &LorentzVector| crate::fermion::propagator(v, m).map(|x| x * gamma(0));
    Ok(kron(&d(&q)?, &d(k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{random_vector, sample_rng};
    use crate::linalg::{c, eigenvalues, max_diff, Spinor};
    use approx::assert_abs_diff_eq;
    use rand::Rng;

    fn mom(a: f64, b: f64, c_: f64, d: f64) -> LorentzVector {
        LorentzVector::momentum(a, b, c_, d)
    }

    fn random_matrix<R: Rng>(rng: &mut R) -> DiracMatrix {
        DiracMatrix::from_fn(|_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
    }

    #[test]
    fn swap_structure() {
        let s = swap_gate().matrix;
        assert_eq!(s * s, BigMatrix::identity());
        assert_eq!(s.adjoint(), s);
        assert_eq!(s.trace(), re(4.0));
        let mut rng = sample_rng(1, 0);
        let (a, b) = (random_matrix(&mut rng), random_matrix(&mut rng));
        assert!(max_diff(&(kron(&a, &b) * s), &(s * kron(&b, &a))) < 1e-12);
        let x = Spinor::from_fn(|_, _| c(rng.random(), rng.random()));
        let y = Spinor::from_fn(|_, _| c(rng.random(), rng.random()));
        assert_eq!(s * crate::linalg::kron_vec(&x, &y), crate::linalg::kron_vec(&y, &x));
        assert_eq!(swap_gate().inertia(), (10, 6, 0));
    }

    #[test]
    fn maximally_mixed_pair() {
        let op = pair_operator(&mom(2.0, 0.0, 0.0, 0.0), LoopSampling::Fixed(mom(1.0, 0.0, 0.0, 0.0)), 0.0).unwrap();
        assert!(max_diff(&op.matrix, &(swap_gate().matrix / re(16.0))) < 1e-15);
    }

    #[test]
    fn symmetric_grid_is_hermitian_and_intertwines() {
        let p = mom(4.0, 0.3, 0.0, -0.2);
        let grid = GridSpec::symmetric("two", &p, &[(mom(1.5, 0.2, -0.4, 0.1), 1.0)]);
        let op = pair_operator(&p, LoopSampling::Grid(grid), 1.0).unwrap();
        assert!(hermiticity_residual(&op.matrix) < 1e-10);
        let s = swap_gate().matrix;
        // R S = S R_swapped, and R_swapped = R on a closed grid
        assert!(max_diff(&(op.r * s), &(s * (s * op.r * s))) < 1e-12);
        assert!(max_diff(&(s * op.r * s), &op.r) < 1e-12);
        // a single point is not closed
        let bad = GridSpec { id: "one".into(), points: vec![GridPoint { k: [1.5, 0.2, -0.4, 0.1], weight: 1.0 }] };
        assert!(matches!(grid_r(&p, &bad, 1.0, Execution::Sequential), Err(Error::AsymmetricGrid(_))));
        let empty = GridSpec { id: "none".into(), points: vec![] };
        assert!(matches!(grid_r(&p, &empty, 1.0, Execution::Sequential), Err(Error::EmptyGrid)));
    }

    #[test]
    fn self_image_point_is_closed() {
        let p = mom(4.0, 0.0, 0.0, 0.0);
        let grid = GridSpec { id: "mid".into(), points: vec![GridPoint { k: [2.0, 0.0, 0.0, 0.0], weight: 0.5 }] };
        grid.check(&p).unwrap();
    }

    #[test]
    fn weight_restores_propagators() {
        let (p, k, m) = (mom(3.0, 0.4, -0.2, 0.9), mom(1.2, -0.3, 0.5, 0.1), 0.7);
        let w = integrand_weight(&p, &k, m).unwrap();
        let rr = pair_operator(&p, LoopSampling::Fixed(k), m).unwrap().r;
        assert!(max_diff(&(rr * re(w / 16.0)), &propagator_product(&p, &k, m).unwrap()) < 1e-12);
    }

    #[test]
    fn loop_identity_random_samples() {
        for i in 0..50 {
            let mut rng = sample_rng(21, i);
            let p = random_vector(&mut rng, 4.0);
            let k = random_vector(&mut rng, 4.0);
            let m = if i % 5 == 0 { 0.0 } else { rng.random_range(0.0..2.0) };
            let eps = LorentzVector::new(
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            );
            let id = loop_trace_identity(&p, &k, m, &eps, 0.3).unwrap();
            assert!(id.deviation < 1e-9, "{id:?}");
            let ex = expectation_form(&p, &k, m, &eps, 0.3).unwrap();
            assert!(crate::linalg::rel_dev(ex, id.operator, 1e-300) < 1e-9);
        }
    }

    #[test]
    fn unreflected_form_needs_transverse_or_static_polarization() {
        let (p, k, m) = (mom(3.0, 0.4, -0.2, 0.9), mom(1.2, -0.3, 0.5, 0.1), 0.7);
        for eps in [mom(0.0, 0.3, -1.0, 0.2), mom(1.3, 0.0, 0.0, 0.0)] {
            let d = loop_direct(&p, &k, m, &eps, 1.0).unwrap();
            let o = loop_operator(&p, &k, m, &eps, 1.0, false).unwrap();
            assert!(crate::linalg::rel_dev(d, o, 1e-300) < 1e-9);
        }
        let eps = mom(0.8, 0.3, -1.0, 0.2);
        let d = loop_direct(&p, &k, m, &eps, 1.0).unwrap();
        let o = loop_operator(&p, &k, m, &eps, 1.0, false).unwrap();
        assert!(crate::linalg::rel_dev(d, o, 1e-300) > 1e-6);
    }

    #[test]
    fn time_unit_polarization_reduces_to_trace() {
        let (p, k, m) = (mom(3.0, 0.4, -0.2, 0.9), mom(1.2, -0.3, 0.5, 0.1), 0.7);
        let eps = mom(1.0, 0.0, 0.0, 0.0);
        let w = integrand_weight(&p, &k, m).unwrap();
        let pair = pair_operator(&p, LoopSampling::Fixed(k), m).unwrap();
        let want = pair.matrix.trace() * (-w / 16.0);
        assert!((loop_operator(&p, &k, m, &eps, 1.0, true).unwrap() - want).norm() < 1e-12 * want.norm());
        // all 16 kets are the computational basis
        let kets = photon_kets(&eps).unwrap();
        assert!((kets.norm_sum() - re(16.0)).norm() < 1e-14);
        assert!((kets.diagonal_sum(&pair.matrix) - pair.matrix.trace()).norm() < 1e-14);
    }

    #[test]
    fn norm_sum_identity() {
        for i in 0..30 {
            let eps = random_vector(&mut sample_rng(22, i), 2.0);
            let got = photon_kets(&eps).unwrap().norm_sum();
            let want = norm_sum_closed(&eps);
            assert!((got - want).norm() < 1e-10 * want.norm().max(1.0), "{eps:?}: {got} vs {want}");
        }
        let cplx = LorentzVector::new(c(1.0, 0.5), c(0.2, -0.1), c(0.0, 0.3), c(-0.4, 0.0));
        let got = photon_kets(&cplx).unwrap().norm_sum();
        assert!((got - norm_sum_closed(&cplx)).norm() < 1e-10);
        assert!(matches!(
            expectation_form(&mom(3.0, 0.0, 0.0, 0.0), &mom(1.0, 0.0, 0.0, 0.0), 0.5, &mom(0.0, 1.0, 0.0, 0.0), 1.0),
            Err(Error::ZeroTimeComponent)
        ));
    }

    #[test]
    fn pole_is_rejected() {
        let r = loop_trace_identity(&mom(3.0, 0.0, 0.0, 0.0), &mom(1.0, 0.0, 0.0, 0.0), 1.0, &mom(1.0, 0.0, 0.0, 0.0), 1.0);
        assert!(matches!(r, Err(Error::PropagatorPole(_))));
    }

    #[test]
    fn census_on_valid_grid() {
        let p = mom(4.0, 0.0, 0.0, 0.0);
        let ks: Vec<_> = (0..6)
            .map(|i| {
                let mut rng = sample_rng(23, i);
                let d = random_vector(&mut rng, 0.3);
                (p * 0.5 + d, rng.random_range(0.1..1.0))
            })
            .collect();
        let grid = GridSpec::symmetric("g6", &p, &ks);
        let rec = negative_eigenvalue_census(&p, &grid, 1.0).unwrap();
        assert!(rec.n_neg >= 1);
        assert!(rec.sylvester_agrees);
        assert_eq!((rec.swap_pos, rec.swap_neg), (10, 6));
        assert!(rec.hermiticity_residual < 1e-10);
        // R is positive definite here, so the inertia is that of S
        assert_eq!((rec.n_pos, rec.n_neg, rec.n_zero), (10, 6, 0));
    }

    #[test]
    fn census_spectrum_matches_similarity() {
        let p = mom(4.0, 0.0, 0.0, 0.0);
        let grid = GridSpec::symmetric("g1", &p, &[(mom(2.1, 0.2, 0.1, -0.1), 1.0)]);
        let op = pair_operator(&p, LoopSampling::Grid(grid), 1.0).unwrap();
        let root = psd_sqrt(&op.r);
        let a: Vec<f64> = hermitian_eigenvalues(&op.matrix);
        let b: Vec<f64> = hermitian_eigenvalues(&(root * swap_gate().matrix * root));
        for (x, y) in a.iter().zip(&b) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-10);
        }
        // non-hermitian fixed-k product has the same spectrum as its similar form
        let fixed = pair_operator(&p, LoopSampling::Fixed(mom(2.1, 0.2, 0.1, -0.1)), 1.0).unwrap();
        assert!(eigenvalues(&fixed.matrix).iter().all(|z| z.is_finite()));
    }

    #[test]
    fn census_rejects_all_invalid_grid() {
        let p = mom(1.0, 0.0, 0.0, 0.0);
        let grid = GridSpec::symmetric("bad", &p, &[(mom(0.4, 0.0, 0.0, 0.0), 1.0)]);
        assert!(matches!(negative_eigenvalue_census(&p, &grid, 2.0), Err(Error::EmptyGrid)));
    }
}
