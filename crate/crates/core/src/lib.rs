//! Lévy-Leblond equation toolkit: nilpotent matrix algebra, the
//! ε-regularized Hamiltonian, plane-wave and Coulomb solutions, and
//! numerical oracles that check them.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases at the
//! crate root fix `f64`, which is what all quoted tolerances assume.

pub mod algebra;
pub mod coulomb;
pub mod error;
pub mod hamiltonian;
pub mod oracle;
pub mod planewave;
pub mod scalar;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Real, C};

pub type Complex64 = C<f64>;
pub type ComplexMatrix = algebra::CMatrix<f64>;
pub type MatrixSet = algebra::MatrixSet<f64>;
pub type PhysParams = coulomb::PhysParams<f64>;
pub type RadialSolution = coulomb::RadialSolution<f64>;
pub type GroundStateWavefunction = coulomb::GroundStateWavefunction<f64>;
pub type AnsatzState = hamiltonian::AnsatzState<f64>;
pub type HamiltonianSpec = hamiltonian::HamiltonianSpec<f64>;
pub type RadialGrid = oracle::RadialGrid<f64>;
pub type ShootingResult = oracle::ShootingResult<f64>;
pub type ScatteringResult = planewave::ScatteringResult<f64>;
