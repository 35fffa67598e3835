//! Dense complex matrix helpers shared by the operator modules.
//!
//! Fixed-size 4x4 (Dirac) and 16x16 (two-fermion) matrices are statically
//! sized; spectral routines go through nalgebra's dynamic solvers.

use nalgebra::{DMatrix, SMatrix, SVector};
use num_complex::Complex64;

pub type C64 = Complex64;
/// 4x4 complex matrix acting on one Dirac spinor (two qubits).
pub type DiracMatrix = SMatrix<C64, 4, 4>;
/// 16x16 complex matrix acting on a pair of Dirac spinors (four qubits).
pub type BigMatrix = SMatrix<C64, 16, 16>;
pub type Spinor = SVector<C64, 4>;
pub type BigVector = SVector<C64, 16>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Kronecker product `a ⊗ b`; the first factor indexes the leading qubits.
pub fn kron(a: &DiracMatrix, b: &DiracMatrix) -> BigMatrix {
    BigMatrix::from_fn(|r, col| a[(r / 4, col / 4)] * b[(r % 4, col % 4)])
}

pub fn kron_vec(x: &Spinor, y: &Spinor) -> BigVector {
    BigVector::from_fn(|r, _| x[r / 4] * y[r % 4])
}

pub fn max_abs<const R: usize, const K: usize>(m: &SMatrix<C64, R, K>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |a - b|` entrywise.
pub fn max_diff<const R: usize, const K: usize>(a: &SMatrix<C64, R, K>, b: &SMatrix<C64, R, K>) -> f64 {
    max_abs(&(a - b))
}

/// `max |M - M†|` entrywise.
pub fn hermiticity_residual<const N: usize>(m: &SMatrix<C64, N, N>) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn to_dyn<const N: usize>(m: &SMatrix<C64, N, N>) -> DMatrix<C64> {
    DMatrix::from_iterator(N, N, m.iter().copied())
}

/// Real spectrum of the hermitian part `(M + M†)/2`, ascending.
pub fn hermitian_eigenvalues<const N: usize>(m: &SMatrix<C64, N, N>) -> Vec<f64> {
    let h = (m + m.adjoint()) * re(0.5);
    let mut vals: Vec<f64> = to_dyn(&h).symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    vals
}

/// Eigen-decomposition `(values, vectors)` of the hermitian part of `m`;
/// eigenvectors are the columns, sorted by ascending eigenvalue.
pub fn hermitian_eigen<const N: usize>(m: &SMatrix<C64, N, N>) -> (Vec<f64>, DMatrix<C64>) {
    let h = (m + m.adjoint()) * re(0.5);
    let eig = to_dyn(&h).symmetric_eigen();
    let mut order: Vec<usize> = (0..N).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = DMatrix::from_fn(N, N, |r, col| eig.eigenvectors[(r, order[col])]);
    (vals, vecs)
}

/// Spectrum of a general complex matrix via the complex Schur form, sorted
/// by real part then imaginary part.
pub fn eigenvalues<const N: usize>(m: &SMatrix<C64, N, N>) -> Vec<C64> {
    let schur = to_dyn(m).schur();
    let (_, t) = schur.unpack();
    let mut vals: Vec<C64> = (0..N).map(|i| t[(i, i)]).collect();
    vals.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    vals
}

/// Numerical rank from the singular values, relative to the largest one.
pub fn rank<const N: usize>(m: &SMatrix<C64, N, N>, rel_tol: f64) -> usize {
    let sv = to_dyn(m).singular_values();
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Counts of (positive, negative, zero) entries under an absolute tolerance.
pub fn inertia(values: &[f64], tol: f64) -> (usize, usize, usize) {
    values.iter().fold((0, 0, 0), |(p, n, z), &v| {
        if v > tol {
            (p + 1, n, z)
        } else if v < -tol {
            (p, n + 1, z)
        } else {
            (p, n, z + 1)
        }
    })
}

/// Principal square root of a hermitian positive semi-definite matrix;
/// small negative eigenvalues from rounding are clamped to zero.
pub fn psd_sqrt<const N: usize>(m: &SMatrix<C64, N, N>) -> SMatrix<C64, N, N> {
    let (vals, vecs) = hermitian_eigen(m);
    SMatrix::<C64, N, N>::from_fn(|r, col| {
        (0..N)
            .map(|j| vecs[(r, j)] * vals[j].max(0.0).sqrt() * vecs[(col, j)].conj())
            .sum()
    })
}

/// Relative deviation `|a - b| / max(|a|, |b|, floor)`.
pub fn rel_dev(a: C64, b: C64, floor: f64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(floor)
}
