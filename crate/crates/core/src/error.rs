use thiserror::Error;

/// Errors raised by the operator constructors and identity checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame matrix is singular: 2 M (v0 + M) = {0}")]
    SingularFrame(f64),
    #[error("propagator pole: |k^2 - m^2| = {0} is within the pole tolerance")]
    OnShellPole(f64),
    #[error("energy component k0 = {0} is zero")]
    ZeroEnergy(f64),
    #[error("state norm {0} differs from 1")]
    NotNormalized(f64),
    #[error("inverse temperature diverges on shell (|r| = {0})")]
    OnShellLimit(f64),
    #[error("operator is maximally mixed (r = {0}); no Hamiltonian direction")]
    MaximallyMixed(f64),
    #[error("|r| = {0} <= 1: inverse temperature is real")]
    NotComplexRegime(f64),
    #[error("no polarization basis completes the gauge tensor for this momentum: {0}")]
    DegenerateMomentum(String),
    #[error("s-channel invariant is degenerate: p^2 = {0}")]
    DegenerateChannel(f64),
    #[error("s-channel pole: s - m^2 = {0}")]
    SChannelPole(f64),
    #[error("polarization must be real and transverse (eps0 = 0, eps . p = 0): {0}")]
    UnphysicalPolarization(String),
    #[error("invalid kinematics: {0}")]
    InvalidKinematics(String),
    #[error("propagator pole in loop integrand: |q^2 - m^2| = {0}")]
    PropagatorPole(f64),
    #[error("polarization time component is zero")]
    ZeroTimeComponent,
    #[error("grid is empty")]
    EmptyGrid,
    #[error("grid is not closed under k -> p - k: {0}")]
    AsymmetricGrid(String),
    #[error("singular wavefunction factor: |1 + A| = {0}")]
    SingularWavefunction(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
