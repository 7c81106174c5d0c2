//! The ε-regularized Hamiltonian `H = η′⁻¹(γ·p − m η′†) + V`, its
//! momentum-space spectrum, and the operators that commute with it.

mod ansatz;
mod operators;
mod radial;

pub use ansatz::{AnsatzState, SpinorState};
pub use operators::{
    apply_h, apply_h_spinor, apply_k, apply_k_spinor, apply_operator, commutator_residual,
    eigen_residual, finite_and_divergent_eigenvalues, kappa_j_relation, momentum_hamiltonian,
    parity_flip, residual_radii, EigenSplit, HamiltonianSpec, Operator, Potential,
};
pub use radial::RadialFunction;
