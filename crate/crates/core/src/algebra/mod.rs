//! Fixed matrix representations and their algebraic identities.

pub mod eigen;
pub mod matrix;
pub mod matrix_set;

pub use eigen::eigenvalues;
pub use matrix::CMatrix;
pub use matrix_set::{
    build_eta_prime, build_matrix_set, pauli, verify_algebra, verify_algebra_with, Expectation,
    IdentityCheck, IdentityReport, MatrixSet,
};
