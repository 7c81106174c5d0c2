//! Ground state `(n′ = 0, κ = 1, j = 1/2)` in closed form
//!
//! ```text
//! spin up:   N/√(4π) e^{−Zr/a_B} (1, 0, −i d₀ cosθ, −i d₀ sinθ e^{iφ})
//! spin down: N/√(4π) e^{−Zr/a_B} (0, 1, −i d₀ sinθ e^{−iφ}, i d₀ cosθ)
//! ```
//!
//! This is the `ε → 0` state; `params.eps` is ignored. `N` is fixed by
//! quadrature of `ψ†ψ`.

use num_traits::Zero;

use super::params::{PhysParams, QuantumNumbers, Spin};
use super::series::solve_radial;
use crate::error::Result;
use crate::oracle::{quadrature_norm, RadialDensity, RadialGrid};
use crate::scalar::{im, re, Real, C};

#[derive(Debug, Clone, PartialEq)]
pub struct GroundStateWavefunction<T: Real> {
    pub params: PhysParams<T>,
    pub spin: Spin,
    pub energy: T,
    /// `a₀/b₀` from the series.
    pub d0: T,
    /// Radial decay rate `Z/a_B`.
    pub lambda: T,
    pub s: T,
    /// Normalization from quadrature.
    pub n_computed: T,
    /// `2√π (Z/a_B)^{3/2} (2 + √2 Zα)/√(2 + Z²α²)`.
    pub n_formula: T,
}

impl<T: Real> GroundStateWavefunction<T> {
    /// `(2 − √2 Zα)/(2 + √2 Zα)`.
    pub fn d0_formula(params: &PhysParams<T>) -> T {
        let x = T::SQRT_2() * params.za();
        (T::of(2.0) - x) / (T::of(2.0) + x)
    }

    pub fn n_closed_form(params: &PhysParams<T>) -> T {
        let za = params.za();
        let zr = T::of_i(i64::from(params.z)) / params.bohr_radius();
        T::of(2.0) * T::PI().sqrt() * zr * zr.sqrt() * (T::of(2.0) + T::SQRT_2() * za)
            / (T::of(2.0) + za * za).sqrt()
    }

    /// `N_computed / N_formula`.
    pub fn ratio(&self) -> T {
        self.n_computed / self.n_formula
    }

    /// Angular part without `N`, `1/√(4π)` or the radial factor.
    pub fn angular(&self, theta: T, phi: T) -> [C<T>; 4] {
        let (c, s) = (theta.cos(), theta.sin());
        let d = self.d0;
        match self.spin {
            Spin::Up => [
                re(T::one()),
                C::zero(),
                im(-d * c),
                im(-d * s) * C::new(phi.cos(), phi.sin()),
            ],
            Spin::Down => [
                C::zero(),
                re(T::one()),
                im(-d * s) * C::new(phi.cos(), -phi.sin()),
                im(d * c),
            ],
        }
    }

    /// Full four-component field at `(r, θ, φ)`.
    pub fn spinor(&self, r: T, theta: T, phi: T) -> [C<T>; 4] {
        let pref = self.n_computed / (T::of(4.0) * T::PI()).sqrt() * (-self.lambda * r).exp();
        self.angular(theta, phi).map(|z| z * re(pref))
    }

    /// `(1/4π) ∫ |angular|² dΩ`, Simpson in `cosθ`, trapezoid in `φ`.
    pub fn angular_integral(&self) -> T {
        let nu = 64;
        let nphi = 32;
        let mut total = T::zero();
        for iu in 0..=nu {
            let u = -T::one() + T::of(2.0) * T::of_i(iu) / T::of_i(nu);
            let w_u = if iu == 0 || iu == nu {
                T::one()
            } else if iu % 2 == 1 {
                T::of(4.0)
            } else {
                T::of(2.0)
            };
            let theta = u.max(-T::one()).min(T::one()).acos();
            let mut ring = T::zero();
            for ip in 0..nphi {
                let phi = T::of(2.0) * T::PI() * T::of_i(ip) / T::of_i(nphi);
                ring += self
                    .angular(theta, phi)
                    .iter()
                    .map(|z| z.norm_sqr())
                    .fold(T::zero(), |a, b| a + b);
            }
            total += w_u * ring / T::of_i(nphi);
        }
        // Simpson step 2/nu over u, then 2π over φ, divided by 4π
        total * (T::of(2.0) / T::of_i(nu)) / T::of(3.0) / T::of(2.0)
    }

    /// `∫ ψ†ψ d³r` on `grid` with the stored `N`.
    pub fn quadrature_norm(&self, grid: &RadialGrid<T>) -> Result<T> {
        quadrature_norm(self, grid)
    }
}

impl<T: Real> RadialDensity<T> for GroundStateWavefunction<T> {
    fn radial_density(&self, r: T) -> T {
        let e = (-self.lambda * r).exp();
        self.n_computed * self.n_computed * e * e
    }

    fn angular_factor(&self) -> T {
        self.angular_integral()
    }
}

pub fn ground_state<T: Real>(
    params: &PhysParams<T>,
    spin: Spin,
) -> Result<GroundStateWavefunction<T>> {
    ground_state_with_grid(params, spin, &RadialGrid::for_state(1, params))
}

pub fn ground_state_with_grid<T: Real>(
    params: &PhysParams<T>,
    spin: Spin,
    grid: &RadialGrid<T>,
) -> Result<GroundStateWavefunction<T>> {
    let p0 = params.with_eps(T::zero())?;
    let sol = solve_radial(QuantumNumbers::new(0, 1, spin)?, &p0)?;
    let mut wf = GroundStateWavefunction {
        params: p0,
        spin,
        energy: sol.energy,
        d0: sol.a_coeffs[0] / sol.b_coeffs[0],
        lambda: sol.constants.lambda,
        s: sol.constants.s,
        n_computed: T::one(),
        n_formula: GroundStateWavefunction::n_closed_form(&p0),
    };
    let norm = quadrature_norm(&wf, grid)?;
    wf.n_computed = T::one() / norm.sqrt();
    Ok(wf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coulomb::ALPHA;
    use approx::assert_relative_eq;

    #[test]
    fn d0_hydrogen() {
        let p = PhysParams::<f64>::hydrogen();
        let wf = ground_state(&p, Spin::Up).unwrap();
        assert_relative_eq!(
            wf.d0,
            GroundStateWavefunction::d0_formula(&p),
            max_relative = 1e-12
        );
        assert_relative_eq!(wf.d0, 0.98973296, max_relative = 1e-8);
        assert_relative_eq!(wf.lambda, ALPHA, max_relative = 1e-12);
    }

    #[test]
    fn d0_tends_to_one() {
        let p = PhysParams::<f64>::new(1.0, 1, 1e-9, 0.0).unwrap();
        assert!((GroundStateWavefunction::d0_formula(&p) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn spin_up_at_pole() {
        let wf = ground_state(&PhysParams::<f64>::hydrogen(), Spin::Up).unwrap();
        let a = wf.angular(0.0, 0.3);
        assert_eq!(a[0], re(1.0));
        assert_eq!(a[1], C::zero());
        assert_relative_eq!(a[2].im, -wf.d0, max_relative = 1e-15);
        assert!(a[3].norm() < 1e-15);
    }

    #[test]
    fn normalization_and_ratio() {
        let p = PhysParams::<f64>::hydrogen();
        for spin in [Spin::Up, Spin::Down] {
            let wf = ground_state(&p, spin).unwrap();
            let g = RadialGrid::for_state(1, &p);
            assert_relative_eq!(
                wf.quadrature_norm(&g.refined()).unwrap(),
                1.0,
                max_relative = 1e-8
            );
            assert_relative_eq!(
                wf.ratio(),
                0.5 / std::f64::consts::PI.sqrt(),
                max_relative = 1e-8
            );
        }
    }

    #[test]
    fn angular_integral_exact() {
        let wf = ground_state(
            &PhysParams::<f64>::hydrogen().with_z(3).unwrap(),
            Spin::Down,
        )
        .unwrap();
        assert_relative_eq!(
            wf.angular_integral(),
            1.0 + wf.d0 * wf.d0,
            max_relative = 1e-13
        );
    }
}
