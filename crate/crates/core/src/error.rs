use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is singular to working precision")]
    SingularMatrix,

    #[error("eigenvalue iteration did not converge after {0} sweeps")]
    EigenNoConvergence(usize),

    #[error("finite and divergent eigenvalue branches overlap: {0}")]
    BranchOverlap(String),

    #[error("evanescent mode requested from the propagating solver (E = {energy})")]
    EvanescentMode { energy: f64 },

    #[error("invalid kinematics: {0}")]
    InvalidKinematics(String),

    #[error("not a bound state: q1^2 - p1^2 = {radicand} <= 0")]
    NotBoundState { radicand: f64 },

    #[error("supercritical coupling: kappa^2 + q2^2 - p2^2 = {radicand} <= 0")]
    SupercriticalCoupling { radicand: f64 },

    #[error("recursion step matrix is singular at n = {0}")]
    DegenerateRecursion(i64),

    #[error("termination ratio violated: relative defect {defect:e}")]
    InconsistentEnergy { defect: f64 },

    #[error("root not bracketed on [{lo:e}, {hi:e}]")]
    RootNotBracketed { lo: f64, hi: f64 },

    #[error("converged state has {found} radial nodes, expected {expected}")]
    WrongState { expected: u32, found: u32 },

    #[error("radial grid too short: tail fraction {tail:e} exceeds {limit:e}")]
    GridInadequate { tail: f64, limit: f64 },

    #[error("state left the kappa = {kappa} family (off-family residual {residual:e})")]
    NotInFamily { kappa: u32, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
