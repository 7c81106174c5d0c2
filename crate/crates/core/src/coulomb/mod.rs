//! Coulomb bound states: constants, Frobenius series, quantization and the
//! ground state.

mod ground;
mod params;
pub(crate) mod series;

pub use ground::{ground_state, ground_state_with_grid, GroundStateWavefunction};
pub use params::{PhysParams, QuantumNumbers, Spin, ALPHA, ELECTRON_MASS_EV};
pub use series::{
    binding_energy_finite_eps, continuum_threshold, energy_closed_form, indicial_exponent,
    quantization_defect, radial_functions, run_recursions, series_constants,
    solve_energy_finite_eps, solve_radial, RadialSolution, SeriesConstants,
};
