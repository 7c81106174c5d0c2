//! Pauli, Dirac and nilpotent matrices in the Dirac basis.

use num_traits::Zero;

use super::matrix::CMatrix;
use crate::error::{invalid, Result};
use crate::scalar::{im, re, sqrt2, Real, C};

/// The canonical matrices for one spacetime dimension.
///
/// `dim = 4`: `gammas = [γ₀, γ₁, γ₂, γ₃, γ₅]`.
/// `dim = 2`: `gammas = [μ₁ = I, μ₂ = iσ₃, σ₁, σ₂, σ₃]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSet<T: Real> {
    pub dim: usize,
    pub gammas: Vec<CMatrix<T>>,
    pub eta: CMatrix<T>,
    pub eta_dag: CMatrix<T>,
}

impl<T: Real> MatrixSet<T> {
    pub fn identity(&self) -> CMatrix<T> {
        CMatrix::identity(self.dim).expect("dim validated at construction")
    }

    /// γ₀ (dim 4) or σ₁ (dim 2); the matrix `η + η†` is proportional to.
    pub fn eta_sum_partner(&self) -> &CMatrix<T> {
        if self.dim == 4 {
            &self.gammas[0]
        } else {
            &self.gammas[2]
        }
    }
}

/// `[σ₁, σ₂, σ₃]`.
pub fn pauli<T: Real>() -> [CMatrix<T>; 3] {
    let (o, z) = (re(T::one()), C::zero());
    let i = im(T::one());
    [
        CMatrix::from_rows([[z, o], [o, z]]).unwrap(),
        CMatrix::from_rows([[z, -i], [i, z]]).unwrap(),
        CMatrix::from_rows([[o, z], [z, -o]]).unwrap(),
    ]
}

pub fn build_matrix_set<T: Real>(dim: usize) -> Result<MatrixSet<T>> {
    let r2 = sqrt2::<T>();
    let [s1, s2, s3] = pauli::<T>();
    match dim {
        2 => {
            let id = CMatrix::identity(2)?;
            let mu2 = s3.scale(im(T::one()));
            let eta = (&s1 - &s2.scale(im(T::one()))).scale_re(T::one() / r2);
            let eta_dag = eta.adjoint();
            Ok(MatrixSet {
                dim,
                gammas: vec![id, mu2, s1, s2, s3],
                eta,
                eta_dag,
            })
        }
        4 => {
            let id = CMatrix::identity(2)?;
            let zero = CMatrix::zeros(2)?;
            let g0 = CMatrix::from_blocks(&id, &zero, &zero, &-&id)?;
            let gi = |s: &CMatrix<T>| CMatrix::from_blocks(&zero, s, &-s, &zero);
            let (g1, g2, g3) = (gi(&s1)?, gi(&s2)?, gi(&s3)?);
            let g5 = CMatrix::from_blocks(&zero, &id, &id, &zero)?;
            let eta = (&g0 + &g5.scale(im(T::one()))).scale_re(T::one() / r2);
            let eta_dag = eta.adjoint();
            Ok(MatrixSet {
                dim,
                gammas: vec![g0, g1, g2, g3, g5],
                eta,
                eta_dag,
            })
        }
        d => invalid(format!("matrix set dimension must be 2 or 4, got {d}")),
    }
}

/// `η′ = η − ε η†`.
pub fn build_eta_prime<T: Real>(set: &MatrixSet<T>, eps: T) -> CMatrix<T> {
    &set.eta - &set.eta_dag.scale_re(eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// Residual must not exceed the tolerance.
    Vanishes,
    /// Residual must exceed the tolerance (e.g. non-normality).
    NonZero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub expectation: Expectation,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        match self.expectation {
            Expectation::Vanishes => self.residual <= self.tolerance,
            Expectation::NonZero => self.residual > self.tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Largest residual among the checks expected to vanish.
    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.expectation == Expectation::Vanishes)
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }

    fn push(&mut self, name: &str, residual: f64, tolerance: f64) {
        self.checks.push(IdentityCheck {
            name: name.to_owned(),
            residual,
            tolerance,
            expectation: Expectation::Vanishes,
        });
    }
}

/// Evaluates every identity of the set with the default tolerance.
pub fn verify_algebra<T: Real>(set: &MatrixSet<T>) -> IdentityReport {
    verify_algebra_with(set, crate::tol::ALGEBRA)
}

pub fn verify_algebra_with<T: Real>(set: &MatrixSet<T>, tol: f64) -> IdentityReport {
    let mut rep = IdentityReport::default();
    let id = set.identity();
    let zero = CMatrix::zeros(id.dim()).expect("dimension of an existing matrix");
    let f = |x: T| x.to_f64_lossy();
    let r2 = sqrt2::<T>();
    let (eta, etad) = (&set.eta, &set.eta_dag);

    rep.push("eta^2 = 0", f((eta * eta).max_abs_diff(&zero)), tol);
    rep.push("eta_dag^2 = 0", f((etad * etad).max_abs_diff(&zero)), tol);
    rep.push(
        "eta_dag = adjoint(eta)",
        f(etad.max_abs_diff(&eta.adjoint())),
        tol,
    );
    rep.push(
        if set.dim == 4 {
            "eta + eta_dag = sqrt2 g0"
        } else {
            "eta + eta_dag = sqrt2 s1"
        },
        f((eta + etad).max_abs_diff(&set.eta_sum_partner().scale_re(r2))),
        tol,
    );
    let dd = etad * eta;

    if set.dim == 4 {
        let metric = [1.0, -1.0, -1.0, -1.0];
        let mut cliff = T::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                let g = if mu == nu { metric[mu] * 2.0 } else { 0.0 };
                let target = id.scale_re(T::of(g));
                let ac = set.gammas[mu].anticommutator(&set.gammas[nu]);
                cliff = cliff.max(ac.max_abs_diff(&target));
            }
        }
        rep.push("clifford anticommutators", f(cliff), tol);
        let prod = &(&(&set.gammas[0] * &set.gammas[1]) * &set.gammas[2]) * &set.gammas[3];
        rep.push(
            "g5 = i g0 g1 g2 g3",
            f(set.gammas[4].max_abs_diff(&prod.scale(im(T::one())))),
            tol,
        );
        let mut g5ac = T::zero();
        for mu in 0..4 {
            g5ac = g5ac.max(
                set.gammas[4]
                    .anticommutator(&set.gammas[mu])
                    .max_abs_diff(&zero),
            );
        }
        rep.push("{g5, g_mu} = 0", f(g5ac), tol);
        rep.push(
            "g5^2 = I",
            f((&set.gammas[4] * &set.gammas[4]).max_abs_diff(&id)),
            tol,
        );
        rep.push(
            "(eta_dag eta)^2 = 2 eta_dag eta",
            f((&dd * &dd).max_abs_diff(&dd.scale_re(T::of(2.0)))),
            tol,
        );
        let herm = [0usize, 4]
            .iter()
            .map(|&k| set.gammas[k].max_abs_diff(&set.gammas[k].adjoint()))
            .fold(T::zero(), T::max);
        rep.push("g0, g5 hermitian", f(herm), tol);
    } else {
        let sig = &set.gammas[2..5];
        let mut cliff = T::zero();
        for a in 0..3 {
            for b in 0..3 {
                let target = if a == b {
                    id.scale_re(T::of(2.0))
                } else {
                    zero.clone()
                };
                cliff = cliff.max(sig[a].anticommutator(&sig[b]).max_abs_diff(&target));
            }
        }
        rep.push("pauli anticommutators", f(cliff), tol);
        let s3 = &sig[2];
        rep.push("eta_dag eta = I + s3", f(dd.max_abs_diff(&(&id + s3))), tol);
        rep.push("mu1 = I", f(set.gammas[0].max_abs_diff(&id)), tol);
        rep.push(
            "mu2 = i s3",
            f(set.gammas[1].max_abs_diff(&s3.scale(im(T::one())))),
            tol,
        );
        let herm = sig
            .iter()
            .map(|s| s.max_abs_diff(&s.adjoint()))
            .fold(T::zero(), T::max);
        rep.push("pauli hermitian", f(herm), tol);
    }
    rep.checks.push(IdentityCheck {
        name: "eta non-normal".into(),
        residual: f((eta * etad).max_abs_diff(&dd)),
        tolerance: tol,
        expectation: Expectation::NonZero,
    });
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_2d_explicit_form() {
        let set = build_matrix_set::<f64>(2).unwrap();
        let want = CMatrix::from_real_rows([[0.0, 0.0], [2f64.sqrt(), 0.0]]).unwrap();
        assert!(set.eta.approx_eq(&want, 1e-15));
    }

    #[test]
    fn eta_4d_block_form() {
        let set = build_matrix_set::<f64>(4).unwrap();
        let b = set.eta.block_scalars(1e-15).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!((b[0][0] - re(h)).norm() < 1e-15);
        assert!((b[0][1] - im(h)).norm() < 1e-15);
        assert!((b[1][0] - im(h)).norm() < 1e-15);
        assert!((b[1][1] - re(-h)).norm() < 1e-15);
    }

    #[test]
    fn canonical_sets_pass() {
        for dim in [2, 4] {
            let rep = verify_algebra(&build_matrix_set::<f64>(dim).unwrap());
            assert!(rep.all_passed(), "{rep:?}");
            assert!(rep.max_residual() <= 1e-12);
        }
    }

    #[test]
    fn dim2_eta_dag_eta_to_rounding() {
        // sqrt2 * sqrt2 rounds to 2 + 4.4e-16; zero up to that
        let rep = verify_algebra(&build_matrix_set::<f64>(2).unwrap());
        assert!(rep.get("eta_dag eta = I + s3").unwrap().residual <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn perturbed_gamma1_is_reported() {
        let mut set = build_matrix_set::<f64>(4).unwrap();
        set.gammas[1][(0, 3)] += re(1e-6);
        let rep = verify_algebra(&set);
        let r = rep.get("clifford anticommutators").unwrap().residual;
        assert!((r - 2e-6).abs() < 1e-9, "{r}");
        assert!(!rep.all_passed());
    }

    #[test]
    fn unsupported_dim() {
        assert!(build_matrix_set::<f64>(3).is_err());
    }

    #[test]
    fn eta_prime_determinant() {
        let set2 = build_matrix_set::<f64>(2).unwrap();
        let ep = build_eta_prime(&set2, 1.0);
        assert!((ep.determinant() - re(2.0)).norm() < 1e-14);
        let set4 = build_matrix_set::<f64>(4).unwrap();
        assert!(build_eta_prime(&set4, 0.0).determinant().norm() < 1e-15);
        assert!(build_eta_prime(&set4, 0.0).inverse().is_err());
        let ep = build_eta_prime(&set4, 0.01);
        let diff = ep.max_abs_diff(&set4.eta);
        assert!((diff - 0.01 * set4.eta_dag.max_abs()).abs() < 1e-15);
    }

    #[test]
    fn eta_prime_inverse_residual() {
        let set = build_matrix_set::<f64>(4).unwrap();
        for eps in [1e-6, 1e-4, 1e-2, 1.0] {
            let ep = build_eta_prime(&set, eps);
            let inv = ep.inverse().unwrap();
            assert!(
                (&ep * &inv).max_abs_diff(&set.identity()) <= 1e-10,
                "eps={eps}"
            );
        }
    }

    #[test]
    fn works_in_f32() {
        let rep = verify_algebra_with(&build_matrix_set::<f32>(4).unwrap(), 1e-6);
        assert!(rep.all_passed());
    }
}
