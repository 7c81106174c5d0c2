//! Default numerical tolerances. Every check accepts an override.

/// Absolute elementwise tolerance for matrix identities.
pub const ALGEBRA: f64 = 1e-12;
/// `η′ η′⁻¹ = I` residual.
pub const INVERSE: f64 = 1e-10;
/// Plane-wave eigen-equation residual.
pub const DISPERSION: f64 = 1e-12;
/// Scattering probabilities and current conservation.
pub const SCATTERING: f64 = 1e-10;
/// Commutators on the ansatz family, relative to state norm.
pub const COMMUTATOR: f64 = 1e-9;
/// Recursion residuals, relative.
pub const RECURSION: f64 = 1e-12;
/// Termination ratio consistency, relative.
pub const TERMINATION: f64 = 1e-8;
/// Shooting vs closed form, relative.
pub const ORACLE: f64 = 1e-6;
/// Quadrature tail fraction beyond which the grid is rejected.
pub const QUADRATURE_TAIL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub algebra: f64,
    pub inverse: f64,
    pub dispersion: f64,
    pub scattering: f64,
    pub commutator: f64,
    pub recursion: f64,
    pub termination: f64,
    pub oracle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            algebra: ALGEBRA,
            inverse: INVERSE,
            dispersion: DISPERSION,
            scattering: SCATTERING,
            commutator: COMMUTATOR,
            recursion: RECURSION,
            termination: TERMINATION,
            oracle: ORACLE,
        }
    }
}
