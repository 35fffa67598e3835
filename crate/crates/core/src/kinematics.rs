//! Seeded random kinematics.
//!
//! Every sample `i` of a run draws from its own ChaCha8 stream
//! (`seed_from_u64(seed)` then `set_stream(i)`), so results do not depend on
//! evaluation order or worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amplitudes::{ComptonConfig, ScatteringConfig};
use crate::dirac::LorentzVector;

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn unit_vector<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

/// Pure boost with velocity `beta` (|beta| < 1) applied to a real vector.
pub fn boost(v: [f64; 4], beta: [f64; 3]) -> [f64; 4] {
    let b2: f64 = beta.iter().map(|b| b * b).sum();
    if b2 == 0.0 {
        return v;
    }
    let gamma = 1.0 / (1.0 - b2).sqrt();
    let bp = beta[0] * v[1] + beta[1] * v[2] + beta[2] * v[3];
    let t = gamma * (v[0] + bp);
    let f = (gamma - 1.0) * bp / b2 + gamma * v[0];
    [t, v[1] + f * beta[0], v[2] + f * beta[1], v[3] + f * beta[2]]
}

fn random_beta<R: Rng>(rng: &mut R, max: f64) -> [f64; 3] {
    let n = unit_vector(rng);
    let s = rng.random_range(0.0..max);
    n.map(|x| x * s)
}

/// `(k, m)` with `k0 ∈ [0.5, 10]`, `|k_i| ≤ k0` and `m ∈ [0, 1.5 k0]`;
/// covers both `|r| < 1` and `|r| > 1`.
pub fn random_fermion_point<R: Rng>(rng: &mut R) -> (LorentzVector, f64) {
    let k0 = rng.random_range(0.5..10.0);
    let k = LorentzVector::momentum(
        k0,
        rng.random_range(-k0..k0),
        rng.random_range(-k0..k0),
        rng.random_range(-k0..k0),
    );
    (k, rng.random_range(0.0..1.5 * k0))
}

/// Timelike `k` with `m ≤ √k²`, so that `|r| ≤ 1`.
pub fn random_valid_point<R: Rng>(rng: &mut R) -> (LorentzVector, f64) {
    let k0 = rng.random_range(0.5..10.0);
    let n = unit_vector(rng);
    let p = rng.random_range(0.0..0.95) * k0;
    let k = LorentzVector::momentum(k0, p * n[0], p * n[1], p * n[2]);
    let mk = (k0 * k0 - p * p).sqrt();
    (k, rng.random_range(0.0..1.0) * mk)
}

fn pair_in_cm(sqrt_s: f64, m: f64, n: [f64; 3]) -> ([f64; 4], [f64; 4]) {
    let e = sqrt_s / 2.0;
    let q = (e * e - m * m).max(0.0).sqrt();
    ([e, q * n[0], q * n[1], q * n[2]], [e, -q * n[0], -q * n[1], -q * n[2]])
}

/// `e⁺e⁻ → μ⁺μ⁻` generated in the centre-of-mass frame and boosted with
/// `|β| ≤ max_beta` (`0` keeps the CM frame).
pub fn random_scattering<R: Rng>(rng: &mut R, max_beta: f64) -> ScatteringConfig {
    let m_e: f64 = rng.random_range(0.0..1.0);
    let m_mu = rng.random_range(0.0..2.0);
    let sqrt_s = 2.0 * m_e.max(m_mu) + rng.random_range(0.2..8.0);
    let (p1, p2) = pair_in_cm(sqrt_s, m_e, unit_vector(rng));
    let (p3, p4) = pair_in_cm(sqrt_s, m_mu, unit_vector(rng));
    let beta = if max_beta > 0.0 { random_beta(rng, max_beta) } else { [0.0; 3] };
    let p = [p1, p2, p3, p4].map(|v| LorentzVector::from_real(boost(v, beta)));
    ScatteringConfig {
        p,
        spins: std::array::from_fn(|_| rng.random_range(0..2)),
        m_e,
        m_mu,
        e: rng.random_range(0.1..1.5),
        xi: 1.0,
    }
}

/// Real unit 3-vector orthogonal to `n`.
fn transverse<R: Rng>(rng: &mut R, p: &[f64; 4]) -> [f64; 4] {
    let len = (p[1] * p[1] + p[2] * p[2] + p[3] * p[3]).sqrt();
    let n = [p[1] / len, p[2] / len, p[3] / len];
    loop {
        let r = unit_vector(rng);
        let d = r[0] * n[0] + r[1] * n[1] + r[2] * n[2];
        let t = [r[0] - d * n[0], r[1] - d * n[1], r[2] - d * n[2]];
        let tl = (t[0] * t[0] + t[1] * t[1] + t[2] * t[2]).sqrt();
        if tl > 1e-3 {
            return [0.0, t[0] / tl, t[1] / tl, t[2] / tl];
        }
    }
}

/// `e⁻γ → e⁻γ` with electron mass `m`, boosted from the CM frame, and
/// Coulomb-gauge polarizations chosen in the final frame.
pub fn random_compton<R: Rng>(rng: &mut R, m: f64) -> ComptonConfig {
    let w = rng.random_range(0.2..5.0);
    let e = (w * w + m * m).sqrt();
    let [a, b] = [unit_vector(rng), unit_vector(rng)];
    let p1 = [e, -w * a[0], -w * a[1], -w * a[2]];
    let p2 = [w, w * a[0], w * a[1], w * a[2]];
    let p3 = [e, -w * b[0], -w * b[1], -w * b[2]];
    let p4 = [w, w * b[0], w * b[1], w * b[2]];
    let beta = random_beta(rng, 0.8);
    let [p1, p2, p3, p4] = [p1, p2, p3, p4].map(|v| boost(v, beta));
    let eps2 = transverse(rng, &p2);
    let eps4 = transverse(rng, &p4);
    ComptonConfig {
        p: [p1, p2, p3, p4].map(LorentzVector::from_real),
        eps2: LorentzVector::from_real(eps2),
        eps4: LorentzVector::from_real(eps4),
        spins: [rng.random_range(0..2), rng.random_range(0..2)],
        m,
        e: rng.random_range(0.1..1.5),
    }
}

/// Real 4-vector with components in `[-scale, scale]`.
pub fn random_vector<R: Rng>(rng: &mut R, scale: f64) -> LorentzVector {
    LorentzVector::from_real(std::array::from_fn(|_| rng.random_range(-scale..scale)))
}
