//! Brute-force numerical oracles: outward integration of the coupled
//! radial system, shooting for eigenvalues, and radial quadrature.

mod grid;
mod quadrature;
mod shoot;

pub use grid::{RadialGrid, Spacing};
pub use quadrature::{integrate_samples, quadrature_norm, RadialDensity};
pub use shoot::{integrate_radial, shoot_eigenvalue, RadialIntegration, ShootingResult};
