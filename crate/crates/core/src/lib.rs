pub mod amplitudes;
pub mod cli;
pub mod dirac;
pub mod entanglement;
pub mod error;
pub mod fermion;
pub mod kinematics;
pub mod linalg;
pub mod pair_loop;
pub mod photon;
pub mod renorm;
pub mod sweep;
pub mod thermal;
