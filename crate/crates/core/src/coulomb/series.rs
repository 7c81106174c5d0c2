//! Frobenius series for the coupled radial system
//!
//! ```text
//! F′ + (q₁ + q₂/r) F + (p₁ + (p₂ − κ)/r) G = 0
//! G′ − (q₁ + q₂/r) G − (p₁ + (p₂ + κ)/r) F = 0
//! ```
//!
//! with `F = r f` (lower, `a_n`) and `G = r g` (upper, `b_n`),
//! `F = e^{−λr} Σ a_n r^{s+n}`, `G = e^{−λr} Σ b_n r^{s+n}`.

use super::params::{PhysParams, QuantumNumbers};
use crate::error::{invalid, Error, Result};
use crate::scalar::{sqrt2, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConstants<T: Real> {
    pub p1: T,
    pub p2: T,
    pub q1: T,
    pub q2: T,
    pub lambda: T,
    pub s: T,
}

/// `(p₁, p₂, q₁, q₂)`; defined for any `E`.
pub(crate) fn couplings<T: Real>(e: T, params: &PhysParams<T>) -> (T, T, T, T) {
    let r2 = sqrt2::<T>();
    let (a, ap, za, m) = (params.a(), params.a_prime(), params.za(), params.m);
    (
        ap * (e + m) / r2,
        ap * za / r2,
        a * (e - m) / r2,
        a * za / r2,
    )
}

/// `q₁² − p₁²` in factored form `2(m − εE)(εm − E)`.
pub(crate) fn lambda_squared<T: Real>(e: T, params: &PhysParams<T>) -> T {
    let (m, eps) = (params.m, params.eps);
    T::of(2.0) * (m - eps * e) * (eps * m - e)
}

/// `κ² + q₂² − p₂² = κ² + 2ε Z²α²`.
pub(crate) fn s_squared<T: Real>(kappa: u32, params: &PhysParams<T>) -> T {
    let k = T::of_i(i64::from(kappa));
    let (_, p2, _, q2) = couplings(T::zero(), params);
    k * k + (q2 - p2) * (q2 + p2)
}

/// Continuum edge: `λ = 0` at `E = εm`.
pub fn continuum_threshold<T: Real>(params: &PhysParams<T>) -> T {
    params.eps * params.m
}

pub fn series_constants<T: Real>(
    e: T,
    params: &PhysParams<T>,
    kappa: u32,
) -> Result<SeriesConstants<T>> {
    if kappa < 1 {
        return invalid("kappa must be at least 1");
    }
    let (p1, p2, q1, q2) = couplings(e, params);
    let l2 = lambda_squared(e, params);
    if !(l2 > T::zero()) {
        return Err(Error::NotBoundState {
            radicand: l2.to_f64_lossy(),
        });
    }
    let mut c = SeriesConstants {
        p1,
        p2,
        q1,
        q2,
        lambda: l2.sqrt(),
        s: T::zero(),
    };
    c.s = indicial_exponent_inner(kappa, params)?;
    Ok(c)
}

fn indicial_exponent_inner<T: Real>(kappa: u32, params: &PhysParams<T>) -> Result<T> {
    if params.eps == T::zero() {
        return Ok(T::of_i(i64::from(kappa)));
    }
    let s2 = s_squared(kappa, params);
    if !(s2 > T::zero()) {
        return Err(Error::SupercriticalCoupling {
            radicand: s2.to_f64_lossy(),
        });
    }
    Ok(s2.sqrt())
}

/// Positive root of `s² = κ² + q₂² − p₂²`.
pub fn indicial_exponent<T: Real>(kappa: u32, c: &SeriesConstants<T>) -> Result<T> {
    let k = T::of_i(i64::from(kappa));
    let s2 = k * k + (c.q2 - c.p2) * (c.q2 + c.p2);
    if !(s2 > T::zero()) {
        return Err(Error::SupercriticalCoupling {
            radicand: s2.to_f64_lossy(),
        });
    }
    Ok(s2.sqrt())
}

/// `E = −m Z² α² / (2n²)`.
pub fn energy_closed_form<T: Real>(n: u32, params: &PhysParams<T>) -> Result<T> {
    if n < 1 {
        return invalid("principal quantum number must be at least 1");
    }
    let nn = T::of_i(i64::from(n));
    let za = params.za();
    Ok(-params.m * za * za / (T::of(2.0) * nn * nn))
}

/// The combined `n′−1` relation with `b/a` fixed by the termination ratio:
/// `p₁((q₂+N) + (p₂−κ)ρ) + (q₁−λ)(−(p₂+κ) + (N−q₂)ρ)`, `N = n′+s`,
/// `ρ = (λ−q₁)/p₁`. Its sign equals that of `p₁p₂ − q₁q₂ − λN`.
pub fn quantization_defect<T: Real>(
    e: T,
    nprime: u32,
    kappa: u32,
    params: &PhysParams<T>,
) -> Result<T> {
    let (p1, p2, q1, q2) = couplings(e, params);
    let l2 = lambda_squared(e, params);
    if l2 < T::zero() {
        return Err(Error::NotBoundState {
            radicand: l2.to_f64_lossy(),
        });
    }
    let lam = l2.sqrt();
    let s = indicial_exponent_inner(kappa, params)?;
    let k = T::of_i(i64::from(kappa));
    let big_n = T::of_i(i64::from(nprime)) + s;
    let rho = (lam - q1) / p1;
    Ok(p1 * ((q2 + big_n) + (p2 - k) * rho) + (q1 - lam) * (-(p2 + k) + (big_n - q2) * rho))
}

/// Root of [`quantization_defect`] below the continuum threshold `εm`.
/// At `ε = 0` this is exactly [`energy_closed_form`]`(n′ + κ)`.
pub fn solve_energy_finite_eps<T: Real>(
    nprime: u32,
    kappa: u32,
    params: &PhysParams<T>,
) -> Result<T> {
    if kappa < 1 {
        return invalid("kappa must be at least 1");
    }
    params.validate()?;
    if params.eps == T::zero() {
        return energy_closed_form(nprime + kappa, params);
    }
    let za = params.za();
    let mut hi = continuum_threshold(params);
    let mut lo = hi - T::of(2.0) * za * za * params.m;
    let f_lo = quantization_defect(lo, nprime, kappa, params)?;
    let f_hi = quantization_defect(hi, nprime, kappa, params)?;
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::RootNotBracketed {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
        });
    }
    for _ in 0..400 {
        let mid = lo + (hi - lo) / T::of(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = quantization_defect(mid, nprime, kappa, params)?;
        if f == T::zero() {
            return Ok(mid);
        }
        if f.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) / T::of(2.0))
}

/// Root measured from the continuum threshold, `E − εm`.
pub fn binding_energy_finite_eps<T: Real>(
    nprime: u32,
    kappa: u32,
    params: &PhysParams<T>,
) -> Result<T> {
    Ok(solve_energy_finite_eps(nprime, kappa, params)? - continuum_threshold(params))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution<T: Real> {
    pub quantum: QuantumNumbers,
    pub energy: T,
    pub constants: SeriesConstants<T>,
    /// Coefficients of `F` (lower component), `a₀ = 1`.
    pub a_coeffs: Vec<T>,
    /// Coefficients of `G` (upper component).
    pub b_coeffs: Vec<T>,
    pub params: PhysParams<T>,
}

/// Builds the terminating series at energy `e`, with `a₀ = 1`.
pub fn run_recursions<T: Real>(
    e: T,
    quantum: QuantumNumbers,
    params: &PhysParams<T>,
) -> Result<RadialSolution<T>> {
    let c = series_constants(e, params, quantum.kappa)?;
    let k = T::of_i(i64::from(quantum.kappa));
    let (p1, p2, q1, q2, lam, s) = (c.p1, c.p2, c.q1, c.q2, c.lambda, c.s);
    let np = quantum.nprime as usize;

    let mut a = Vec::with_capacity(np + 1);
    let mut b = Vec::with_capacity(np + 1);
    a.push(T::one());
    // indicial: (q2+s) a0 + (p2-κ) b0 = 0
    b.push(-(q2 + s) / (p2 - k));
    for n in 0..np {
        let nn = T::of_i(n as i64 + 1) + s;
        let m11 = q2 + nn;
        let m12 = p2 - k;
        let m21 = -(p2 + k);
        let m22 = nn - q2;
        let det = m11 * m22 - m12 * m21;
        if det.abs() <= T::epsilon() * (m11.abs() * m22.abs() + m12.abs() * m21.abs()) {
            return Err(Error::DegenerateRecursion(n as i64));
        }
        let r1 = -(q1 - lam) * a[n] - p1 * b[n];
        let r2 = p1 * a[n] + (q1 + lam) * b[n];
        a.push((r1 * m22 - m12 * r2) / det);
        b.push((m11 * r2 - m21 * r1) / det);
    }
    let sol = RadialSolution {
        quantum,
        energy: e,
        constants: c,
        a_coeffs: a,
        b_coeffs: b,
        params: *params,
    };
    let defect = sol.termination_defect();
    if !(defect <= T::of(crate::tol::TERMINATION)) {
        return Err(Error::InconsistentEnergy {
            defect: defect.to_f64_lossy(),
        });
    }
    Ok(sol)
}

/// Energy from [`solve_energy_finite_eps`], then [`run_recursions`].
pub fn solve_radial<T: Real>(
    quantum: QuantumNumbers,
    params: &PhysParams<T>,
) -> Result<RadialSolution<T>> {
    let e = solve_energy_finite_eps(quantum.nprime, quantum.kappa, params)?;
    run_recursions(e, quantum, params)
}

/// `(f, g)` evaluators; both return an error for `r < 0`.
pub fn radial_functions<T: Real>(
    sol: &RadialSolution<T>,
) -> (impl Fn(T) -> Result<T> + '_, impl Fn(T) -> Result<T> + '_) {
    (
        move |r| sol.eval(r).map(|x| x.0),
        move |r| sol.eval(r).map(|x| x.1),
    )
}

impl<T: Real> RadialSolution<T> {
    fn terms(&self, n: i64) -> ([T; 4], [T; 4]) {
        // eq1 and eq2 at index n, split into their four terms
        let c = &self.constants;
        let k = T::of_i(i64::from(self.quantum.kappa));
        let get = |v: &Vec<T>, i: i64| {
            if i < 0 || i as usize >= v.len() {
                T::zero()
            } else {
                v[i as usize]
            }
        };
        let (an, bn) = (get(&self.a_coeffs, n), get(&self.b_coeffs, n));
        let (a1, b1) = (get(&self.a_coeffs, n + 1), get(&self.b_coeffs, n + 1));
        let nn = T::of_i(n + 1) + c.s;
        (
            [
                (c.q2 + nn) * a1,
                (c.q1 - c.lambda) * an,
                (c.p2 - k) * b1,
                c.p1 * bn,
            ],
            [
                -(c.p2 + k) * a1,
                -c.p1 * an,
                (nn - c.q2) * b1,
                -(c.q1 + c.lambda) * bn,
            ],
        )
    }

    /// Largest relative residual of both recursions over `n = −1 … n′−1`.
    pub fn recursion_residual(&self) -> T {
        let mut worst = T::zero();
        for n in -1..self.quantum.nprime as i64 {
            let (e1, e2) = self.terms(n);
            for eq in [e1, e2] {
                let sum = eq.iter().fold(T::zero(), |s, &x| s + x);
                let mag = eq.iter().fold(T::zero(), |s, &x| s + x.abs());
                if mag > T::zero() {
                    worst = worst.max(sum.abs() / mag);
                }
            }
        }
        worst
    }

    /// Relative violation of `b_{n′} = ((λ − q₁)/p₁) a_{n′}`.
    pub fn termination_defect(&self) -> T {
        let c = &self.constants;
        let np = self.quantum.nprime as usize;
        let want = (c.lambda - c.q1) / c.p1 * self.a_coeffs[np];
        let got = self.b_coeffs[np];
        (got - want).abs() / (got.abs() + want.abs())
    }

    /// `(f, g)` at `r ≥ 0`.
    pub fn eval(&self, r: T) -> Result<(T, T)> {
        if r < T::zero() {
            return invalid(format!("radius must be non-negative, got {r}"));
        }
        let pf = r.powf(self.constants.s - T::one()) * (-self.constants.lambda * r).exp();
        Ok((
            pf * horner(&self.a_coeffs, r),
            pf * horner(&self.b_coeffs, r),
        ))
    }

    /// `(F, G) = r (f, g)`.
    pub fn eval_big(&self, r: T) -> Result<(T, T)> {
        let (f, g) = self.eval(r)?;
        Ok((r * f, r * g))
    }

    /// Sign changes of the polynomial part of `F` on `r > 0`.
    pub fn f_nodes(&self) -> u32 {
        poly_positive_roots(&self.a_coeffs)
    }

    pub fn g_nodes(&self) -> u32 {
        poly_positive_roots(&self.b_coeffs)
    }
}

fn horner<T: Real>(c: &[T], r: T) -> T {
    c.iter().rev().fold(T::zero(), |acc, &x| acc * r + x)
}

/// Counts positive real roots by log-spaced sampling between Cauchy bounds.
/// Assumes `c[0] != 0`, which the indicial normalization guarantees.
fn poly_positive_roots<T: Real>(c: &[T]) -> u32 {
    if c.len() < 2 {
        return 0;
    }
    let lead = c[c.len() - 1].abs();
    let bound = T::one()
        + c[..c.len() - 1]
            .iter()
            .fold(T::zero(), |m, x| m.max(x.abs() / lead));
    let samples = 20000;
    // Cauchy bound of the reciprocal polynomial bounds the roots from below
    let c0 = c[0].abs();
    let lower = T::one() / (T::one() + c[1..].iter().fold(T::zero(), |m, x| m.max(x.abs() / c0)));
    let lo = (lower * T::of(0.5)).ln();
    let span = (bound * T::of(2.0)).ln() - lo;
    let mut count = 0;
    let mut prev = horner(c, T::zero()).signum();
    for i in 0..=samples {
        let r = (lo + span * T::of(i as f64 / samples as f64)).exp();
        let v = horner(c, r);
        if v != T::zero() && v.signum() != prev {
            count += 1;
            prev = v.signum();
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::super::params::{Spin, ALPHA};
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn hyd(eps: f64) -> PhysParams<f64> {
        PhysParams::new(1.0, 1, ALPHA, eps).unwrap()
    }

    /// Lower root of the quadratic obtained by squaring λN = p₁p₂ − q₁q₂.
    fn squared_relation_root(nprime: u32, kappa: u32, p: &PhysParams<f64>) -> f64 {
        let (m, e, za) = (p.m, p.eps, p.za());
        let s = (f64::from(kappa).powi(2) + 2.0 * e * za * za).sqrt();
        let n2 = (f64::from(nprime) + s).powi(2);
        let a = 2.0 * n2 * e - 4.0 * e * e * za * za;
        let b = -2.0 * n2 * m * (1.0 + e * e) + 4.0 * e * m * (1.0 + e * e) * za * za;
        let c = 2.0 * n2 * e * m * m - za * za * m * m * (1.0 + e * e).powi(2);
        let disc = (b * b - 4.0 * a * c).sqrt();
        // numerically stable lower root
        let q = -0.5 * (b - disc);
        c / q
    }

    #[test]
    fn eps_zero_limits() {
        let p = hyd(0.0);
        let e = -ALPHA * ALPHA / 2.0;
        let c = series_constants(e, &p, 1).unwrap();
        assert_eq!(c.q2, c.p2);
        assert_eq!(c.s, 1.0);
        assert_relative_eq!(c.lambda, ALPHA, max_relative = 1e-13);
        assert_eq!(
            indicial_exponent(2, &series_constants(e, &p, 2).unwrap()).unwrap(),
            2.0
        );
    }

    #[test]
    fn indicial_exponent_finite_eps() {
        // s² = κ² + 2ε(Zα)²
        let p = PhysParams::new(1.0, 1, 0.1, 0.01).unwrap();
        let c = series_constants(-0.004, &p, 1).unwrap();
        let s = indicial_exponent(1, &c).unwrap();
        assert_relative_eq!(s, (1.0f64 + 2e-4).sqrt(), max_relative = 1e-14);
        assert_relative_eq!(s, 1.000099995, max_relative = 1e-9);
        assert_eq!(s, c.s);
    }

    #[test]
    fn not_bound_above_threshold() {
        let p = hyd(1e-3);
        assert!(matches!(
            series_constants(2e-3, &p, 1),
            Err(Error::NotBoundState { .. })
        ));
        assert!(matches!(
            series_constants(0.0, &hyd(0.0), 1),
            Err(Error::NotBoundState { .. })
        ));
        // below threshold but above zero is bound for ε > 0
        assert!(series_constants(5e-4, &p, 1).is_ok());
    }

    #[test]
    fn closed_form_values() {
        let p = PhysParams::new(1.0, 1, 1.0 / 137.035999084, 0.0).unwrap();
        assert_relative_eq!(
            energy_closed_form(1, &p).unwrap(),
            -2.66256e-5,
            max_relative = 1e-5
        );
        let p = hyd(0.0);
        let e22 = energy_closed_form(2, &p.with_z(2).unwrap()).unwrap();
        assert_relative_eq!(
            e22,
            energy_closed_form(1, &p).unwrap(),
            max_relative = 1e-15
        );
        assert!(energy_closed_form(0, &p).is_err());
        let mut prev = f64::NEG_INFINITY;
        for n in 1..50 {
            let e = energy_closed_form(n, &p).unwrap();
            assert!(e > prev && e < 0.0);
            prev = e;
        }
    }

    #[test]
    fn hydrogen_in_ev() {
        let p = PhysParams::new(ELECTRON_MASS, 1, ALPHA, 0.0).unwrap();
        let e = energy_closed_form(1, &p).unwrap();
        assert_relative_eq!(e, -13.6057, max_relative = 1e-3);
    }
    const ELECTRON_MASS: f64 = super::super::params::ELECTRON_MASS_EV;

    #[test]
    fn ground_state_ratio_matches_d0() {
        let p = hyd(0.0);
        let q = QuantumNumbers::new(0, 1, Spin::Up).unwrap();
        let sol = solve_radial(q, &p).unwrap();
        let x = 2f64.sqrt() * ALPHA;
        let d0 = (2.0 - x) / (2.0 + x);
        assert_relative_eq!(sol.a_coeffs[0] / sol.b_coeffs[0], d0, max_relative = 1e-13);
        let c = sol.constants;
        assert_relative_eq!(
            sol.b_coeffs[0] / sol.a_coeffs[0],
            (c.lambda - c.q1) / c.p1,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            sol.b_coeffs[0] / sol.a_coeffs[0],
            (2.0 + x) / (2.0 - x),
            max_relative = 1e-12
        );
    }

    #[test]
    fn n2_chain_at_small_eps() {
        let p = hyd(1e-4);
        let q = QuantumNumbers::new(1, 1, Spin::Up).unwrap();
        let sol = solve_radial(q, &p).unwrap();
        assert_eq!(sol.a_coeffs.len(), 2);
        assert!(sol.recursion_residual() <= 1e-12);
        assert!(sol.termination_defect() <= 1e-8);
        assert_eq!(sol.f_nodes(), 1);
    }

    #[test]
    fn closed_form_energy_fails_termination_at_finite_eps() {
        let p = hyd(1e-3);
        let e = energy_closed_form(1, &p).unwrap();
        let q = QuantumNumbers::new(0, 1, Spin::Up).unwrap();
        assert!(matches!(
            run_recursions(e, q, &p),
            Err(Error::InconsistentEnergy { .. })
        ));
    }

    #[test]
    fn eps_zero_short_circuit() {
        let p = hyd(0.0);
        assert_eq!(
            solve_energy_finite_eps(1, 2, &p).unwrap(),
            energy_closed_form(3, &p).unwrap()
        );
    }

    #[test]
    fn small_eps_example() {
        let p = hyd(1e-6);
        let e0 = -ALPHA * ALPHA / 2.0;
        let raw = solve_energy_finite_eps(0, 1, &p).unwrap();
        let bind = binding_energy_finite_eps(0, 1, &p).unwrap();
        assert_relative_eq!(bind, e0, max_relative = 1e-4);
        // the raw root sits near the shifted threshold εm
        assert_relative_eq!(raw - e0, 1e-6, max_relative = 1e-3);
    }

    #[test]
    fn finite_eps_matches_squared_relation() {
        for eps in [1e-2, 1e-3, 1e-4, 1e-5] {
            for z in [1, 2, 5] {
                let p = PhysParams::new(1.0, z, ALPHA, eps).unwrap();
                for (np, k) in [(0, 1), (1, 1), (0, 2), (2, 1), (1, 2), (0, 3)] {
                    let e = solve_energy_finite_eps(np, k, &p).unwrap();
                    let want = squared_relation_root(np, k, &p);
                    assert!(
                        (e - want).abs() <= 1e-15 + 1e-12 * want.abs(),
                        "{eps} {z} {np} {k}: {e} {want}"
                    );
                    // dual route: λ N = p₁p₂ − q₁q₂
                    let c = series_constants(e, &p, k).unwrap();
                    let lhs = c.lambda * (f64::from(np) + c.s);
                    let rhs = c.p1 * c.p2 - c.q1 * c.q2;
                    assert_relative_eq!(lhs, rhs, max_relative = 1e-9);
                }
            }
        }
    }

    #[test]
    fn radial_function_examples() {
        let p = hyd(0.0);
        let sol = solve_radial(QuantumNumbers::new(0, 1, Spin::Up).unwrap(), &p).unwrap();
        let (f, _) = radial_functions(&sol);
        let f0 = f(0.0).unwrap();
        for r in [0.5, 10.0, 200.0, 1000.0] {
            assert_relative_eq!(f(r).unwrap() / f0, (-ALPHA * r).exp(), max_relative = 1e-13);
        }
        assert!(f(-1.0).is_err());
        let sol = solve_radial(QuantumNumbers::new(0, 2, Spin::Up).unwrap(), &p).unwrap();
        assert_eq!(sol.eval(0.0).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn lambda_consistency_at_closed_form() {
        for z in [1u32, 2, 3] {
            let p = hyd(0.0).with_z(z).unwrap();
            for n in 1..=6 {
                let e = energy_closed_form(n, &p).unwrap();
                let c = series_constants(e, &p, 1).unwrap();
                assert_relative_eq!(c.lambda, p.za() / f64::from(n), max_relative = 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn recursions_hold_everywhere(np in 0u32..6, k in 1u32..5, z in 1u32..4, le in -6.0f64..-2.0) {
            let eps = 10f64.powf(le);
            let p = PhysParams::new(1.0, z, ALPHA, eps).unwrap();
            let sol = solve_radial(QuantumNumbers::new(np, i64::from(k), Spin::Up).unwrap(), &p).unwrap();
            prop_assert!(sol.recursion_residual() <= 1e-12);
            prop_assert!(sol.termination_defect() <= 1e-8);
            prop_assert_eq!(sol.f_nodes(), np);
        }

        #[test]
        fn no_fine_structure_at_eps_zero(n in 1u32..8, z in 1u32..10) {
            let p = hyd(0.0).with_z(z).unwrap();
            let e0 = solve_energy_finite_eps(n - 1, 1, &p).unwrap();
            for k in 2..=n {
                prop_assert_eq!(solve_energy_finite_eps(n - k, k, &p).unwrap(), e0);
            }
        }
    }
}
