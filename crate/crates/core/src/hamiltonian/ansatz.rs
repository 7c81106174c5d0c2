//! Four-component states of fixed `j`, `m_j` and `K = −κ`.
//!
//! Two representations are kept:
//!
//! * [`AnsatzState`] holds `g(r)`, `f(r)` in the form `(g Y_A, i f Y_B)`
//!   evaluated on the `θ = 0` spinors, the form the radial equations are
//!   written in.
//! * [`SpinorState`] holds the four radial coefficients on the spin-angle
//!   functions `Ω_A` (`l = κ`) and `Ω_B` (`l = κ − 1`):
//!   upper `= u_A Ω_A + u_B Ω_B`, lower `= l_A Ω_A + l_B Ω_B`.
//!   Every operator acts here, where `σ·p` and `σ·L` are exact.
//!
//! The `K = −κ` family is `u = (g, h)`, `l = (i g, −i h)`. At `θ = 0`,
//! `Ω_A = ∓Ω_B` for `m_j = ±1/2`, which fixes the map between the two:
//! spin up `g_A = g − h`, `f_B = −(g + h)`; spin down `g_A = g + h`,
//! `f_B = g − h`.

use num_traits::Zero;

use super::radial::RadialFunction;
use crate::coulomb::{RadialSolution, Spin};
use crate::error::{invalid, Error, Result};
use crate::scalar::{im, re, Real, C};

#[derive(Debug, Clone, PartialEq)]
pub struct AnsatzState<T: Real> {
    pub kappa: u32,
    pub spin: Spin,
    pub g_radial: RadialFunction<T>,
    pub f_radial: RadialFunction<T>,
}

impl<T: Real> AnsatzState<T> {
    /// Rejects `κ ≤ 0` and radial parts that do not share `r^σ e^{−λr}`.
    pub fn new(
        kappa: i64,
        spin: Spin,
        g_radial: RadialFunction<T>,
        f_radial: RadialFunction<T>,
    ) -> Result<Self> {
        if kappa < 1 {
            return invalid(format!(
                "only kappa = j + 1/2 >= 1 is supported, got {kappa}"
            ));
        }
        if !g_radial.same_shape(&f_radial) {
            return invalid("g and f must share the power and decay rate");
        }
        Ok(Self {
            kappa: kappa as u32,
            spin,
            g_radial,
            f_radial,
        })
    }

    /// Series solution as an ansatz state: `g = G/r`, `f = F/r`.
    ///
    /// The series is written for spin up; spin down goes through the
    /// spinor form so both describe the same radial physics.
    pub fn from_radial_solution(sol: &RadialSolution<T>, spin: Spin) -> Result<Self> {
        let s = sol.constants.s;
        let lam = sol.constants.lambda;
        let cvt = |v: &[T]| v.iter().map(|&x| re(x)).collect::<Vec<_>>();
        let g = RadialFunction::new(s, lam, -1, cvt(&sol.b_coeffs))?;
        let f = RadialFunction::new(s, lam, -1, cvt(&sol.a_coeffs))?;
        let up = Self::new(i64::from(sol.quantum.kappa), Spin::Up, g, f)?;
        match spin {
            Spin::Up => Ok(up),
            Spin::Down => up.to_spinor().with_spin(Spin::Down).to_ansatz(),
        }
    }

    pub fn j(&self) -> T {
        T::of_i(i64::from(self.kappa)) - T::of(0.5)
    }

    pub fn m_j(&self) -> T {
        T::of(f64::from(self.spin.two_mj()) / 2.0)
    }

    pub fn to_spinor(&self) -> SpinorState<T> {
        let (gp, fp) = (&self.g_radial, &self.f_radial);
        let half = re(T::of(0.5));
        let (g, h) = match self.spin {
            Spin::Up => (
                RadialFunction::combine(&[(half, gp), (-half, fp)]),
                RadialFunction::combine(&[(-half, gp), (-half, fp)]),
            ),
            Spin::Down => (
                RadialFunction::combine(&[(half, gp), (half, fp)]),
                RadialFunction::combine(&[(half, gp), (-half, fp)]),
            ),
        };
        SpinorState::family(self.kappa, self.spin, g, h)
    }

    /// `(g, f)` at `r`.
    pub fn eval(&self, r: T) -> (C<T>, C<T>) {
        (self.g_radial.eval(r), self.f_radial.eval(r))
    }

    /// The four components at `θ = 0`, including the `√((j+1/2)/4π)`
    /// angular factor.
    pub fn eval_theta0(&self, r: T) -> [C<T>; 4] {
        let c = (T::of_i(i64::from(self.kappa)) / (T::of(4.0) * T::PI())).sqrt();
        let (g, f) = self.eval(r);
        let z = C::zero();
        match self.spin {
            // Y_A = c(−1, 0), Y_B = c(1, 0)
            Spin::Up => [-g * c, z, im(T::one()) * f * c, z],
            // Y_A = Y_B = c(0, 1)
            Spin::Down => [z, g * c, z, im(T::one()) * f * c],
        }
    }

    pub fn scale(&self, s: C<T>) -> Self {
        Self {
            g_radial: self.g_radial.scale(s),
            f_radial: self.f_radial.scale(s),
            ..self.clone()
        }
    }

    /// Largest coefficient magnitude of `self − other`.
    pub fn max_coeff_diff(&self, other: &Self) -> T {
        self.g_radial
            .sub(&other.g_radial)
            .max_coeff()
            .max(self.f_radial.sub(&other.f_radial).max_coeff())
    }
}

/// Radial coefficients `[u_A, u_B, l_A, l_B]` on `Ω_A`, `Ω_B`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorState<T: Real> {
    pub kappa: u32,
    pub spin: Spin,
    pub components: [RadialFunction<T>; 4],
}

impl<T: Real> SpinorState<T> {
    /// The `K = −κ` combination `u = (g, h)`, `l = (i g, −i h)`.
    pub fn family(kappa: u32, spin: Spin, g: RadialFunction<T>, h: RadialFunction<T>) -> Self {
        let i = im(T::one());
        let la = g.scale(i);
        let lb = h.scale(-i);
        Self {
            kappa,
            spin,
            components: [g, h, la, lb],
        }
    }

    pub fn with_spin(mut self, spin: Spin) -> Self {
        self.spin = spin;
        self
    }

    pub fn map(&self, f: impl Fn(&RadialFunction<T>) -> RadialFunction<T>) -> Self {
        let [a, b, c, d] = &self.components;
        Self {
            components: [f(a), f(b), f(c), f(d)],
            ..self.clone()
        }
    }

    pub fn scale(&self, s: C<T>) -> Self {
        self.map(|x| x.scale(s))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let c = |i: usize| self.components[i].sub(&other.components[i]);
        Self {
            components: [c(0), c(1), c(2), c(3)],
            ..self.clone()
        }
    }

    pub fn max_coeff(&self) -> T {
        self.components
            .iter()
            .fold(T::zero(), |m, f| m.max(f.max_coeff()))
    }

    pub fn eval(&self, r: T) -> [C<T>; 4] {
        [0, 1, 2, 3].map(|i| self.components[i].eval(r))
    }

    /// `max_r max_i |ψ_i(r)|` on the given radii.
    pub fn sup_norm(&self, radii: &[T]) -> T {
        radii
            .iter()
            .flat_map(|&r| self.eval(r))
            .fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// Back to `(g, f)`; fails if the state has left the `K = −κ` family
    /// (relative coefficient residual above `1e-10`).
    pub fn to_ansatz(&self) -> Result<AnsatzState<T>> {
        let [g, h, la, lb] = &self.components;
        let i = im(T::one());
        let off = la
            .sub(&g.scale(i))
            .max_coeff()
            .max(lb.add(&h.scale(i)).max_coeff());
        let scale = self.max_coeff();
        if scale > T::zero() && off > T::of(1e-10) * scale {
            return Err(Error::NotInFamily {
                kappa: self.kappa,
                residual: (off / scale).to_f64_lossy(),
            });
        }
        let one = re(T::one());
        let (gp, fp) = match self.spin {
            Spin::Up => (g.sub(h), RadialFunction::combine(&[(-one, g), (-one, h)])),
            Spin::Down => (g.add(h), g.sub(h)),
        };
        AnsatzState::new(i64::from(self.kappa), self.spin, gp, fp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn state(spin: Spin) -> AnsatzState<f64> {
        let g = RadialFunction::exp_poly(0.8, &[1.0, -0.3, 0.05]).unwrap();
        let f = RadialFunction::exp_poly(0.8, &[0.2, 0.7]).unwrap();
        AnsatzState::new(2, spin, g, f).unwrap()
    }

    #[test]
    fn spinor_round_trip() {
        for spin in [Spin::Up, Spin::Down] {
            let s = state(spin);
            let back = s.to_spinor().to_ansatz().unwrap();
            assert!(s.max_coeff_diff(&back) < 1e-15);
        }
    }

    #[test]
    fn theta0_matches_spin_angle_functions() {
        // Ω_A(0) = ∓Ω_B(0) for m_j = ±1/2
        for spin in [Spin::Up, Spin::Down] {
            let s = state(spin);
            let sp = s.to_spinor();
            let r = 1.7;
            let v = sp.eval(r);
            let sign = if spin == Spin::Up { -1.0 } else { 1.0 };
            let c = (2.0 / (4.0 * std::f64::consts::PI)).sqrt();
            let row = if spin == Spin::Up { 0 } else { 1 };
            let upper = (v[0] * sign + v[1]) * c;
            let lower = (v[2] * sign + v[3]) * c;
            let want = s.eval_theta0(r);
            assert_relative_eq!(upper.re, want[row].re, epsilon = 1e-14);
            assert_relative_eq!(lower.im, want[row + 2].im, epsilon = 1e-14);
        }
    }

    #[test]
    fn negative_kappa_rejected() {
        let g = RadialFunction::<f64>::exp_poly(1.0, &[1.0]).unwrap();
        assert!(AnsatzState::new(-1, Spin::Up, g.clone(), g.clone()).is_err());
        assert!(AnsatzState::new(0, Spin::Up, g.clone(), g).is_err());
    }

    #[test]
    fn off_family_state_is_detected() {
        let mut sp = state(Spin::Up).to_spinor();
        sp.components[2] = sp.components[2].scale(re(2.0));
        assert!(matches!(
            sp.to_ansatz(),
            Err(Error::NotInFamily { kappa: 2, .. })
        ));
    }
}
