//! Free and piecewise-constant solutions of the (1+1)D and (2+1)D equations.
//!
//! The (1+1)D equation in momentum space reads `p ψ = (η W + η† m) ψ` with
//! `W = E − V` and `η = √2 [[0,0],[1,0]]`, i.e. `p ψ₁ = √2 m ψ₂`,
//! `p ψ₂ = √2 W ψ₁`. Spinors are normalized with the lower component 1.

use num_traits::{One, Zero};

use crate::algebra::{eigenvalues, pauli, CMatrix, MatrixSet};
use crate::error::{invalid, Error, Result};
use crate::scalar::{im, re, sqrt2, Real, C};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

impl Direction {
    fn sign<T: Real>(self) -> T {
        match self {
            Direction::Plus => T::one(),
            Direction::Minus => -T::one(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveMode<T: Real> {
    /// Kinetic energy `E − V`.
    pub energy: T,
    /// Real for propagating modes, `+iκ` (decaying towards `+x`) or `−iκ`
    /// for evanescent ones.
    pub momentum: C<T>,
    pub spinor: [C<T>; 2],
    pub direction: Direction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringResult<T: Real> {
    pub reflection: T,
    pub transmission: T,
    pub r_amplitude: C<T>,
    pub t_amplitude: C<T>,
}

/// Mode of kinetic energy `w` with (possibly complex) momentum `p`.
fn mode<T: Real>(w: T, m: T, dir: Direction) -> PlaneWaveMode<T> {
    let s = dir.sign::<T>();
    let p = re(T::of(2.0) * m * w).sqrt() * re(s);
    let spinor = if w == T::zero() {
        [C::one(), C::zero()]
    } else {
        [p / re(sqrt2::<T>() * w), C::one()]
    };
    PlaneWaveMode {
        energy: w,
        momentum: p,
        spinor,
        direction: dir,
    }
}

/// Propagating modes `p = ±√(2Em)`.
pub fn momentum_modes<T: Real>(e: T, m: T) -> Result<(PlaneWaveMode<T>, PlaneWaveMode<T>)> {
    if !(m > T::zero()) {
        return invalid("mass must be positive");
    }
    if e < T::zero() {
        return Err(Error::EvanescentMode {
            energy: e.to_f64_lossy(),
        });
    }
    Ok((mode(e, m, Direction::Plus), mode(e, m, Direction::Minus)))
}

/// Modes below a barrier: `p = ±i√(2(V₀−E)m)`. `Plus` decays towards `+x`.
pub fn evanescent_modes<T: Real>(
    e: T,
    v0: T,
    m: T,
) -> Result<(PlaneWaveMode<T>, PlaneWaveMode<T>)> {
    if !(m > T::zero()) {
        return invalid("mass must be positive");
    }
    if !(e < v0) {
        return invalid("evanescent modes need E < V0");
    }
    Ok((
        mode(e - v0, m, Direction::Plus),
        mode(e - v0, m, Direction::Minus),
    ))
}

/// `|p ψ − (η W + η† m) ψ|` for a mode.
pub fn mode_residual<T: Real>(md: &PlaneWaveMode<T>, m: T) -> T {
    let r2 = sqrt2::<T>();
    let [u, l] = md.spinor;
    let a = md.momentum * u - re(r2 * m) * l;
    let b = md.momentum * l - re(r2 * md.energy) * u;
    (a.norm_sqr() + b.norm_sqr()).sqrt()
}

/// `J = ψ†(η+η†)ψ`, `ρ = ψ†η†ηψ` for the 2D set.
pub fn current_density<T: Real>(state: [C<T>; 2], set: &MatrixSet<T>) -> Result<(T, T)> {
    if set.dim != 2 {
        return invalid("current density needs the dim-2 matrix set");
    }
    let bil = |m: &CMatrix<T>| {
        let v = m.mul_vec(&state);
        state[0].conj() * v[0] + state[1].conj() * v[1]
    };
    let j = bil(&(&set.eta + &set.eta_dag));
    let rho = bil(&(&set.eta_dag * &set.eta));
    Ok((j.re, rho.re))
}

/// Plugs the exact (2+1)D Dirac mode of energy `m + E′` into the
/// Lévy-Leblond form `μᵢpᵢφ = (ηE′ + η†m)φ` and returns the residual norm.
///
/// `μ₁ = I`, `μ₂ = iσ₃`. The Dirac spinor `ψ_D ∝ (E+m, p₁+ip₂)` maps to
/// `φ = diag(1, √2) ψ_D`, scaled so `φ₂ = 1`; the residual is then `E′/√2`.
/// Only the direction of `p` is used; `|p|` follows from `E² = p² + m²`.
pub fn nr_reduction_residual<T: Real>(e_prime: T, m: T, p: [T; 2]) -> Result<T> {
    if !(m > T::zero()) {
        return invalid("mass must be positive");
    }
    if e_prime <= -m {
        return Err(Error::InvalidKinematics(format!("E' = {e_prime} <= -m")));
    }
    if e_prime < T::zero() {
        return Err(Error::InvalidKinematics(format!(
            "E' = {e_prime} < 0 has no propagating Dirac mode"
        )));
    }
    let r2 = sqrt2::<T>();
    if e_prime == T::zero() {
        // rest-frame mode (1, 0)
        return Ok(T::zero());
    }
    let e = m + e_prime;
    let pmag = (e * e - m * m).sqrt();
    let pn = (p[0] * p[0] + p[1] * p[1]).sqrt();
    let (ux, uy) = if pn > T::zero() {
        (p[0] / pn, p[1] / pn)
    } else {
        (T::one(), T::zero())
    };
    let pc = C::new(pmag * ux, pmag * uy);

    // Dirac null vector
    let dirac = [re(e + m), pc];
    let dm = [[pc, re(-e - m)], [re(-e + m), pc.conj()]];
    let dres = (dm[0][0] * dirac[0] + dm[0][1] * dirac[1]).norm()
        + (dm[1][0] * dirac[0] + dm[1][1] * dirac[1]).norm();
    debug_assert!(dres <= T::of(1e-10) * (e + m) * (e + m));

    let phi2 = re(r2) * dirac[1];
    let phi = [dirac[0] / phi2, C::one()];
    let lhs = [pc * phi[0], pc.conj() * phi[1]];
    let rhs = [re(r2 * m) * phi[1], re(r2 * e_prime) * phi[0]];
    Ok(((lhs[0] - rhs[0]).norm_sqr() + (lhs[1] - rhs[1]).norm_sqr()).sqrt())
}

/// Massless limit: `σ₁p₁ + σ₂p₂` has eigenvalues `±|p|`, and `E = |p|`
/// solves the massless (2+1)D Dirac equation. Returns the larger residual.
pub fn massless_dispersion_residual<T: Real>(p: [T; 2]) -> Result<T> {
    let [s1, s2, _] = pauli::<T>();
    let sp = &s1.scale_re(p[0]) + &s2.scale_re(p[1]);
    let pn = (p[0] * p[0] + p[1] * p[1]).sqrt();
    let ev = eigenvalues(&sp)?;
    let eig_res = (ev[0] - re(-pn)).norm().max((ev[1] - re(pn)).norm());
    let pc = C::new(p[0], p[1]);
    let psi = if pn > T::zero() {
        [re(pn), pc]
    } else {
        [C::one(), C::zero()]
    };
    let r1 = pc * psi[0] - re(pn) * psi[1];
    let r2 = re(-pn) * psi[0] + pc.conj() * psi[1];
    let scale = if pn > T::zero() { pn } else { T::one() };
    Ok(eig_res.max((r1.norm() + r2.norm()) / scale))
}

/// `ψ(x) = P(x) ψ(0)` inside a region of kinetic energy `w`.
fn propagator<T: Real>(w: T, m: T, x: T) -> [[C<T>; 2]; 2] {
    let r2 = sqrt2::<T>();
    let k = re(T::of(2.0) * m * w).sqrt();
    let mm = [[C::zero(), im(r2 * m)], [im(r2 * w), C::zero()]];
    let kx = k * re(x);
    let (c, s_over_k) = if kx.norm() < T::of(1e-8) {
        (C::one(), re(x))
    } else {
        (kx.cos(), kx.sin() / k)
    };
    [
        [c + s_over_k * mm[0][0], s_over_k * mm[0][1]],
        [s_over_k * mm[1][0], c + s_over_k * mm[1][1]],
    ]
}

fn current<T: Real>(psi: [C<T>; 2]) -> T {
    T::of(2.0) * sqrt2::<T>() * (psi[0].conj() * psi[1]).re
}

/// Scattering off a piecewise-constant profile: free region `V = v_left`
/// for `x < 0`, then `segments` as `(V, width)`, then `V = v_right`.
/// Only ψ-continuity is imposed at interfaces.
pub fn solve_profile<T: Real>(
    e: T,
    m: T,
    v_left: T,
    segments: &[(T, T)],
    v_right: T,
) -> Result<ScatteringResult<T>> {
    if !(m > T::zero()) {
        return invalid("mass must be positive");
    }
    if !(e > v_left) {
        return invalid("incident energy must exceed the left potential");
    }
    if segments.iter().any(|&(_, w)| !(w >= T::zero())) {
        return invalid("segment widths must be non-negative");
    }
    let inc = mode(e - v_left, m, Direction::Plus);
    let refl = mode(e - v_left, m, Direction::Minus);
    let out = mode(e - v_right, m, Direction::Plus);

    let mut p = [[C::one(), C::zero()], [C::zero(), C::one()]];
    let mut length = T::zero();
    for &(v, w) in segments {
        let q = propagator(e - v, m, w);
        p = mul2(&q, &p);
        length += w;
    }
    // P (u+ + r u-) = t e^{i p_out L} u_out
    let phase = (im(T::one()) * out.momentum * re(length)).exp();
    let pu_inc = mat_vec(&p, inc.spinor);
    let pu_ref = mat_vec(&p, refl.spinor);
    let col_t = [-phase * out.spinor[0], -phase * out.spinor[1]];
    let det = pu_ref[0] * col_t[1] - pu_ref[1] * col_t[0];
    if det.norm() == T::zero() {
        return Err(Error::SingularMatrix);
    }
    let rhs = [-pu_inc[0], -pu_inc[1]];
    let r = (rhs[0] * col_t[1] - rhs[1] * col_t[0]) / det;
    let t = (pu_ref[0] * rhs[1] - pu_ref[1] * rhs[0]) / det;

    let j_inc = current(inc.spinor);
    let j_ref = current([refl.spinor[0] * r, refl.spinor[1] * r]).abs();
    let j_out = current([out.spinor[0] * t, out.spinor[1] * t]);
    Ok(ScatteringResult {
        reflection: j_ref / j_inc,
        transmission: j_out / j_inc,
        r_amplitude: r,
        t_amplitude: t,
    })
}

/// Potential step `V = V₀` for `x > 0`.
pub fn solve_step<T: Real>(e: T, v0: T, m: T) -> Result<ScatteringResult<T>> {
    if !(e > T::zero()) {
        return invalid("step scattering needs E > 0");
    }
    solve_profile(e, m, T::zero(), &[], v0)
}

/// Rectangular barrier of height `V₀` on `[0, width]`.
pub fn solve_barrier<T: Real>(e: T, v0: T, width: T, m: T) -> Result<ScatteringResult<T>> {
    if !(e > T::zero()) {
        return invalid("barrier scattering needs E > 0");
    }
    if !(width > T::zero()) {
        return invalid("barrier width must be positive");
    }
    solve_profile(e, m, T::zero(), &[(v0, width)], T::zero())
}

/// Textbook Schrödinger `(R, T)` for a step of height `V₀`.
pub fn schrodinger_step<T: Real>(e: T, v0: T, m: T) -> (T, T) {
    if e <= v0 {
        return (T::one(), T::zero());
    }
    let two = T::of(2.0);
    let k1 = (two * e * m).sqrt();
    let k2 = (two * (e - v0) * m).sqrt();
    let s = k1 + k2;
    (((k1 - k2) / s).powi(2), T::of(4.0) * k1 * k2 / (s * s))
}

/// Textbook Schrödinger transmission through a rectangular barrier.
pub fn schrodinger_barrier_transmission<T: Real>(e: T, v0: T, w: T, m: T) -> T {
    let (two, four) = (T::of(2.0), T::of(4.0));
    if e < v0 {
        let k = (two * m * (v0 - e)).sqrt();
        T::one() / (T::one() + v0 * v0 * (k * w).sinh().powi(2) / (four * e * (v0 - e)))
    } else if e > v0 {
        let k = (two * m * (e - v0)).sqrt();
        T::one() / (T::one() + v0 * v0 * (k * w).sin().powi(2) / (four * e * (e - v0)))
    } else {
        T::one() / (T::one() + m * v0 * w * w / two)
    }
}

fn mul2<T: Real>(a: &[[C<T>; 2]; 2], b: &[[C<T>; 2]; 2]) -> [[C<T>; 2]; 2] {
    let mut o = [[C::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            o[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    o
}

fn mat_vec<T: Real>(a: &[[C<T>; 2]; 2], v: [C<T>; 2]) -> [C<T>; 2] {
    [
        a[0][0] * v[0] + a[0][1] * v[1],
        a[1][0] * v[0] + a[1][1] * v[1],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_matrix_set;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn step_oracle(e: f64, v0: f64, m: f64) -> (f64, f64) {
        schrodinger_step(e, v0, m)
    }

    fn barrier_oracle(e: f64, v0: f64, w: f64, m: f64) -> f64 {
        schrodinger_barrier_transmission(e, v0, w, m)
    }

    #[test]
    fn modes_at_e_equals_m() {
        let (a, b) = momentum_modes(1.0, 1.0).unwrap();
        assert_abs_diff_eq!(a.momentum.re, 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(b.momentum.re, -(2f64.sqrt()), epsilon = 1e-15);
        assert_abs_diff_eq!(a.spinor[0].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b.spinor[0].re, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn modes_solve_the_momentum_equation() {
        // E=2, m=0.5: p = ±√2 and the eigen-equation forces ψ₁ = ±√(m/E) = ±1/2
        let (a, _) = momentum_modes(2.0, 0.5).unwrap();
        assert_abs_diff_eq!(a.momentum.re, 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(a.spinor[0].re, 0.5, epsilon = 1e-15);
        assert!(mode_residual(&a, 0.5) < 1e-12);
        // (2, 1), i.e. (√(E/m), 1), does not solve it
        let wrong = PlaneWaveMode {
            spinor: [re(2.0), re(1.0)],
            ..a
        };
        assert!(mode_residual(&wrong, 0.5) > 1.0);
    }

    #[test]
    fn zero_energy_mode() {
        let (a, b) = momentum_modes(0.0, 1.0).unwrap();
        assert_eq!(a.momentum, C::zero());
        assert_eq!(a.spinor, [C::one(), C::zero()]);
        assert_eq!(b.spinor, a.spinor);
        assert_eq!(mode_residual(&a, 1.0), 0.0);
    }

    #[test]
    fn negative_energy_is_evanescent() {
        assert!(matches!(
            momentum_modes(-0.1, 1.0),
            Err(Error::EvanescentMode { .. })
        ));
        let (d, g) = evanescent_modes(0.5, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(d.momentum.im, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g.momentum.im, -1.0, epsilon = 1e-15);
        assert!(mode_residual(&d, 1.0) < 1e-14);
    }

    #[test]
    fn currents() {
        let set = build_matrix_set::<f64>(2).unwrap();
        let (j, rho) = current_density([re(1.0), re(1.0)], &set).unwrap();
        assert_abs_diff_eq!(j, 2.0 * 2f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(rho, 2.0, epsilon = 1e-14);
        assert_eq!(
            current_density([re(0.0), re(1.0)], &set).unwrap(),
            (0.0, 0.0)
        );
        let (j, rho) = current_density([im(1.0), re(1.0)], &set).unwrap();
        assert_abs_diff_eq!(j, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rho, 2.0, epsilon = 1e-14);
        let set4 = build_matrix_set::<f64>(4).unwrap();
        assert!(current_density([re(1.0), re(1.0)], &set4).is_err());
    }

    #[test]
    fn velocity_is_p_over_m() {
        let set = build_matrix_set::<f64>(2).unwrap();
        let (e, m) = (0.7, 1.3);
        let (a, _) = momentum_modes(e, m).unwrap();
        let (j, rho) = current_density(a.spinor, &set).unwrap();
        assert_abs_diff_eq!(j / rho, a.momentum.re / m, epsilon = 1e-14);
    }

    #[test]
    fn nr_residual_scaling() {
        assert_eq!(nr_reduction_residual(0.0, 1.0, [1.0, 0.0]).unwrap(), 0.0);
        let a = nr_reduction_residual(1e-3, 1.0, [0.3, 0.4]).unwrap();
        let b = nr_reduction_residual(1e-4, 1.0, [0.3, 0.4]).unwrap();
        assert!((8.0..=12.0).contains(&(a / b)), "{}", a / b);
        assert!(matches!(
            nr_reduction_residual(-1.0, 1.0, [1.0, 0.0]),
            Err(Error::InvalidKinematics(_))
        ));
    }

    #[test]
    fn massless_limit() {
        assert!(massless_dispersion_residual([0.3, -0.4]).unwrap() < 1e-14);
        assert!(massless_dispersion_residual([0.0, 0.0]).unwrap() < 1e-14);
    }

    #[test]
    fn step_examples() {
        let s = solve_step(1.0, 0.5, 1.0).unwrap();
        let want = ((2f64.sqrt() - 1.0) / (2f64.sqrt() + 1.0)).powi(2);
        assert_abs_diff_eq!(s.reflection, want, epsilon = 1e-12);
        assert_abs_diff_eq!(want, 0.0294373, epsilon = 1e-7);
        let s = solve_step(1.0, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(s.reflection, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.transmission, 1.0, epsilon = 1e-15);
        let s = solve_step(0.5, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(s.reflection, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.transmission, 0.0, epsilon = 1e-15);
        assert!(solve_step(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn barrier_examples() {
        let b = solve_barrier(0.5, 1.0, 1.0, 1.0).unwrap();
        let want = 1.0 / (1.0 + 1f64.sinh().powi(2) / (4.0 * 0.5 * 0.5));
        assert_abs_diff_eq!(b.transmission, want, epsilon = 1e-12);
        assert_abs_diff_eq!(want, 0.419975, epsilon = 1e-6);
        let b = solve_barrier(0.5, 1.0, 1e-9, 1.0).unwrap();
        assert_abs_diff_eq!(b.transmission, 1.0, epsilon = 1e-8);
        let w = std::f64::consts::PI / (2.0f64 * 0.5 * 1.0).sqrt();
        let b = solve_barrier(1.5, 1.0, w, 1.0).unwrap();
        assert_abs_diff_eq!(b.transmission, 1.0, epsilon = 1e-12);
        assert!(solve_barrier(0.5, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn barrier_at_top_uses_linear_propagator() {
        let b = solve_barrier(1.0, 1.0, 0.8, 2.0).unwrap();
        assert_abs_diff_eq!(
            b.transmission,
            barrier_oracle(1.0, 1.0, 0.8, 2.0),
            epsilon = 1e-10
        );
    }

    proptest! {
        #[test]
        fn dispersion_residual(e in 1e-6f64..10.0, m in 0.05f64..10.0) {
            let (a, b) = momentum_modes(e, m).unwrap();
            prop_assert!(mode_residual(&a, m) <= 1e-12 * (1.0 + e + m));
            prop_assert!(mode_residual(&b, m) <= 1e-12 * (1.0 + e + m));
        }

        #[test]
        fn step_matches_oracle(e in 0.01f64..5.0, v0 in -2.0f64..5.0, m in 0.1f64..3.0) {
            let s = solve_step(e, v0, m).unwrap();
            let (r, t) = step_oracle(e, v0, m);
            prop_assert!((s.reflection - r).abs() <= 1e-10);
            prop_assert!((s.transmission - t).abs() <= 1e-10);
            prop_assert!((s.reflection + s.transmission - 1.0).abs() <= 1e-10);
        }

        #[test]
        fn barrier_matches_oracle(e in 0.01f64..5.0, v0 in 0.0f64..5.0, w in 0.01f64..3.0, m in 0.1f64..3.0) {
            let b = solve_barrier(e, v0, w, m).unwrap();
            prop_assert!((b.transmission - barrier_oracle(e, v0, w, m)).abs() <= 1e-10);
            prop_assert!((b.reflection + b.transmission - 1.0).abs() <= 1e-10);
        }
    }
}
