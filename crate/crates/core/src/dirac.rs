//! Minkowski vectors, Dirac-representation gamma matrices and the off-shell
//! spinor frame `W_k`.
//!
//! Metric signature is (+,-,-,-). Vector components are stored with upper
//! (contravariant) indices; `slash` lowers them through the metric.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, re, DiracMatrix, Spinor, C64, I, ONE, ZERO};

/// Minimum `|2 M (v0 + M)|` for which the spinor frame is considered regular.
pub const FRAME_TOL: f64 = 1e-12;

/// A four-vector with complex-capable components `c^0..c^3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzVector(pub [C64; 4]);

impl LorentzVector {
    pub fn new(c0: C64, c1: C64, c2: C64, c3: C64) -> Self {
        Self([c0, c1, c2, c3])
    }

    /// Real four-momentum `(k0, k1, k2, k3)`.
    pub fn momentum(k0: f64, k1: f64, k2: f64, k3: f64) -> Self {
        Self([re(k0), re(k1), re(k2), re(k3)])
    }

    pub fn from_real(k: [f64; 4]) -> Self {
        Self::momentum(k[0], k[1], k[2], k[3])
    }

    pub fn time(&self) -> C64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [C64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Real parts of the components. Only meaningful for momenta.
    pub fn real_parts(&self) -> [f64; 4] {
        self.0.map(|z| z.re)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|z| z.im == 0.0)
    }

    /// Bilinear Minkowski product `a·b = a0 b0 - a⃗·b⃗` (no conjugation).
    pub fn dot(&self, other: &Self) -> C64 {
        self.0[0] * other.0[0] - self.0[1] * other.0[1] - self.0[2] * other.0[2] - self.0[3] * other.0[3]
    }

    pub fn minkowski_square(&self) -> C64 {
        self.dot(self)
    }

    /// `Σ_i (c^i)^2`, bilinear.
    pub fn spatial_square(&self) -> C64 {
        self.0[1] * self.0[1] + self.0[2] * self.0[2] + self.0[3] * self.0[3]
    }

    /// Covariant components `c_μ = g_μν c^ν`.
    pub fn lower(&self) -> [C64; 4] {
        [self.0[0], -self.0[1], -self.0[2], -self.0[3]]
    }

    /// Spatial reflection `(c0, -c⃗)`.
    pub fn parity(&self) -> Self {
        Self([self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(self.0.map(|z| z * s))
    }
}

impl Add for LorentzVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for LorentzVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for LorentzVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|z| -z))
    }
}

impl Mul<f64> for LorentzVector {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self(self.0.map(|z| z * rhs))
    }
}

/// Metric tensor entry `g^{μν}` (equal to `g_{μν}`).
pub fn metric(mu: usize, nu: usize) -> f64 {
    match (mu, nu) {
        (0, 0) => 1.0,
        (a, b) if a == b => -1.0,
        _ => 0.0,
    }
}

fn from_rows(rows: [[C64; 4]; 4]) -> DiracMatrix {
    DiracMatrix::from_fn(|r, k| rows[r][k])
}

/// `γ^μ` in the Dirac representation: `γ^0 = σ3 ⊗ I2`, `γ^i = i σ2 ⊗ σ_i`.
pub fn gamma(mu: usize) -> DiracMatrix {
    let o = ZERO;
    let l = ONE;
    let n = -ONE;
    match mu {
        0 => from_rows([[l, o, o, o], [o, l, o, o], [o, o, n, o], [o, o, o, n]]),
        1 => from_rows([[o, o, o, l], [o, o, l, o], [o, n, o, o], [n, o, o, o]]),
        2 => from_rows([[o, o, o, -I], [o, o, I, o], [o, I, o, o], [-I, o, o, o]]),
        3 => from_rows([[o, o, l, o], [o, o, o, n], [n, o, o, o], [o, l, o, o]]),
        _ => panic!("gamma index {mu} out of range"),
    }
}

/// `γ^5 = i γ^0 γ^1 γ^2 γ^3`.
pub fn gamma5() -> DiracMatrix {
    gamma(0) * gamma(1) * gamma(2) * gamma(3) * I
}

/// `(γ^0, γ^1, γ^2, γ^3, γ^5)`.
pub fn gamma_matrices() -> [DiracMatrix; 5] {
    [gamma(0), gamma(1), gamma(2), gamma(3), gamma5()]
}

/// `v̸ = v_μ γ^μ`.
pub fn slash(v: &LorentzVector) -> DiracMatrix {
    let lo = v.lower();
    (0..4).fold(DiracMatrix::zeros(), |acc, mu| acc + gamma(mu) * lo[mu])
}

/// `Σ_i v^i γ^i γ^0`, the boost generator appearing in `W_v` and `ρ(k)`.
pub(crate) fn spatial_generator(v: &LorentzVector) -> DiracMatrix {
    let g0 = gamma(0);
    (1..4).fold(DiracMatrix::zeros(), |acc, i| acc + gamma(i) * g0 * v.0[i])
}

/// Principal square root with the branch cut on the negative real axis;
/// negative reals map to `+i√|x|`.
pub fn principal_sqrt(z: C64) -> C64 {
    if z.im == 0.0 {
        if z.re >= 0.0 {
            re(z.re.sqrt())
        } else {
            c(0.0, (-z.re).sqrt())
        }
    } else {
        z.sqrt()
    }
}

/// Off-shell mass `M_k = √(k²)`, principal branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffShellMass {
    pub value: C64,
}

impl OffShellMass {
    pub fn is_real(&self) -> bool {
        self.value.im == 0.0
    }
}

pub fn off_shell_mass(k: &LorentzVector) -> OffShellMass {
    OffShellMass { value: principal_sqrt(k.minkowski_square()) }
}

/// Spinor frame `W_v = ((v0 + M_v) I - v^i γ^i γ^0) / √(2 M_v (v0 + M_v))`.
///
/// Column `j` is the frame image of the computational basis state `|j⟩`;
/// columns 0,1 satisfy `v̸ x = M_v x`, columns 2,3 satisfy `v̸ x = -M_v x`.
pub fn w_matrix(v: &LorentzVector) -> Result<DiracMatrix> {
    let m = off_shell_mass(v).value;
    let a = v.time() + m;
    let denom = re(2.0) * m * a;
    if denom.norm() < FRAME_TOL {
        return Err(Error::SingularFrame(denom.norm()));
    }
    let norm = principal_sqrt(denom);
    Ok((DiracMatrix::identity() * a - spatial_generator(v)) / norm)
}

/// The four off-shell eigen-spinors of `D_F(k)` and their pseudo-adjoints.
///
/// Bars are rows of `W_k` times `γ^0`: the conjugation acts on the vector
/// components only, never on `M_k`. For real timelike `k` this is the
/// ordinary Dirac adjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorQuartet {
    pub u1: Spinor,
    pub u2: Spinor,
    pub v1: Spinor,
    pub v2: Spinor,
    pub bar_u1: Spinor,
    pub bar_u2: Spinor,
    pub bar_v1: Spinor,
    pub bar_v2: Spinor,
    pub mass: OffShellMass,
}

impl SpinorQuartet {
    pub fn kets(&self) -> [Spinor; 4] {
        [self.u1, self.u2, self.v1, self.v2]
    }

    /// Bars as column vectors holding the row entries.
    pub fn bars(&self) -> [Spinor; 4] {
        [self.bar_u1, self.bar_u2, self.bar_v1, self.bar_v2]
    }
}

/// Row `j` of a frame matrix, the pseudo-bra `⟨j; v|`, stored as a column.
pub fn frame_bra(w: &DiracMatrix, j: usize) -> Spinor {
    w.row(j).transpose()
}

pub fn spinor_basis(k: &LorentzVector) -> Result<SpinorQuartet> {
    let w = w_matrix(k)?;
    let g0t = gamma(0).transpose();
    let col = |j: usize| -> Spinor { w.column(j).into() };
    let bar = |j: usize| -> Spinor { g0t * frame_bra(&w, j) };
    Ok(SpinorQuartet {
        u1: col(0),
        u2: col(1),
        v1: col(2),
        v2: col(3),
        bar_u1: bar(0),
        bar_u2: bar(1),
        bar_v1: bar(2),
        bar_v2: bar(3),
        mass: off_shell_mass(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{eigenvalues, max_abs, max_diff};

    #[test]
    fn gamma0_is_diagonal() {
        let g0 = gamma(0);
        let expect = DiracMatrix::from_diagonal(&Spinor::new(ONE, ONE, -ONE, -ONE));
        assert_eq!(g0, expect);
    }

    #[test]
    fn clifford_algebra_is_exact() {
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
                let expect = DiracMatrix::identity() * re(2.0 * metric(mu, nu));
                assert_eq!(anti, expect, "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn gamma_i_matches_pauli_tensor_form() {
        // γ^i = i σ2 ⊗ σ_i with σ2 = [[0,-i],[i,0]]
        let sig = [
            [[ZERO, ONE], [ONE, ZERO]],
            [[ZERO, -I], [I, ZERO]],
            [[ONE, ZERO], [ZERO, -ONE]],
        ];
        let s2 = sig[1];
        for i in 0..3 {
            let g = DiracMatrix::from_fn(|r, k| I * s2[r / 2][k / 2] * sig[i][r % 2][k % 2]);
            assert_eq!(g, gamma(i + 1));
        }
    }

    #[test]
    fn gamma5_is_antidiagonal_block() {
        let g5 = gamma5();
        let expect = DiracMatrix::from_fn(|r, k| if (r + 2) % 4 == k { ONE } else { ZERO });
        assert!(max_diff(&g5, &expect) < 1e-15);
    }

    #[test]
    fn slash_lowers_spatial_index() {
        assert_eq!(slash(&LorentzVector::momentum(1.0, 0.0, 0.0, 0.0)), gamma(0));
        assert_eq!(slash(&LorentzVector::momentum(0.0, 0.0, 0.0, 1.0)), -gamma(3));
    }

    #[test]
    fn slash_squares_to_minkowski_square() {
        let v = LorentzVector::momentum(1.3, -0.4, 2.2, 0.7);
        let s = slash(&v);
        let expect = DiracMatrix::identity() * v.minkowski_square();
        assert!(max_diff(&(s * s), &expect) < 1e-13);
    }

    #[test]
    fn off_shell_mass_branches() {
        assert_eq!(off_shell_mass(&LorentzVector::momentum(2.0, 0.0, 0.0, 0.0)).value, re(2.0));
        assert_eq!(off_shell_mass(&LorentzVector::momentum(0.0, 1.0, 0.0, 0.0)).value, c(0.0, 1.0));
        assert_eq!(off_shell_mass(&LorentzVector::momentum(5.0, 3.0, 0.0, 4.0)).value, ZERO);
    }

    #[test]
    fn rest_frame_w_is_identity() {
        for m in [0.3, 1.0, 7.5] {
            let w = w_matrix(&LorentzVector::momentum(m, 0.0, 0.0, 0.0)).unwrap();
            assert!(max_diff(&w, &DiracMatrix::identity()) < 1e-15);
        }
    }

    #[test]
    fn w_singular_cases() {
        assert!(matches!(
            w_matrix(&LorentzVector::momentum(5.0, 3.0, 0.0, 4.0)),
            Err(Error::SingularFrame(_))
        ));
        assert!(matches!(
            w_matrix(&LorentzVector::momentum(-2.0, 0.0, 0.0, 0.0)),
            Err(Error::SingularFrame(_))
        ));
    }

    fn check_frame_diagonalizes(k: LorentzVector) {
        let w = w_matrix(&k).unwrap();
        let m = off_shell_mass(&k).value;
        let d = DiracMatrix::from_diagonal(&Spinor::new(m, m, -m, -m));
        let lhs = slash(&k) * w;
        let rhs = w * d;
        assert!(max_diff(&lhs, &rhs) < 1e-12, "{k:?}: {}", max_diff(&lhs, &rhs));
        // the slash spectrum from an independent eigensolver is {±M} doubled
        let ev = eigenvalues(&slash(&k));
        for e in ev {
            assert!((e - m).norm().min((e + m).norm()) < 1e-9);
        }
    }

    #[test]
    fn frame_columns_are_slash_eigenvectors() {
        check_frame_diagonalizes(LorentzVector::momentum(2.0, 0.0, 0.0, 1.0));
        check_frame_diagonalizes(LorentzVector::momentum(3.0, 1.0, -0.5, 0.2));
        // spacelike: complex frame
        check_frame_diagonalizes(LorentzVector::momentum(0.0, 0.0, 0.0, 1.0));
        check_frame_diagonalizes(LorentzVector::momentum(0.4, 1.0, 0.3, -0.2));
    }

    #[test]
    fn quartet_satisfies_generalized_dirac_equations() {
        let k = LorentzVector::momentum(2.0, 0.0, 0.0, 1.0);
        let q = spinor_basis(&k).unwrap();
        let m = q.mass.value;
        let ks = slash(&k);
        let id = DiracMatrix::identity();
        for u in [q.u1, q.u2] {
            assert!(max_abs(&((ks - id * m) * u)) < 1e-12);
        }
        for v in [q.v1, q.v2] {
            assert!(max_abs(&((ks + id * m) * v)) < 1e-12);
        }
    }

    #[test]
    fn rest_frame_quartet_is_computational_basis() {
        let q = spinor_basis(&LorentzVector::momentum(1.5, 0.0, 0.0, 0.0)).unwrap();
        assert!(max_abs(&(q.u1 - Spinor::new(ONE, ZERO, ZERO, ZERO))) < 1e-15);
    }

    #[test]
    fn pseudo_adjoint_matches_dagger_for_timelike() {
        let k = LorentzVector::momentum(3.0, 0.7, -1.1, 0.4);
        let q = spinor_basis(&k).unwrap();
        let g0 = gamma(0);
        for (ket, bar) in q.kets().iter().zip(q.bars()) {
            let dirac_bar = (ket.adjoint() * g0).transpose();
            assert!(max_abs(&(dirac_bar - bar)) < 1e-13);
        }
    }
}
