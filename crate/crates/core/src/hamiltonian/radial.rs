//! Radial functions of the form `r^σ e^{−λr} Σ_k c_k r^k`, with `k` allowed
//! to run negative so that `1/r` terms produced by `H` stay representable.

use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::scalar::{re, Real, C};

#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction<T: Real> {
    /// Overall power `σ` (non-integer at finite ε).
    pub power: T,
    /// Decay rate `λ ≥ 0`.
    pub lambda: T,
    /// Power of `coeffs[0]`.
    pub lowest: i32,
    pub coeffs: Vec<C<T>>,
}

impl<T: Real> RadialFunction<T> {
    pub fn new(power: T, lambda: T, lowest: i32, coeffs: Vec<C<T>>) -> Result<Self> {
        if !(lambda >= T::zero()) || !lambda.is_finite() {
            return invalid(format!(
                "decay rate must be finite and non-negative, got {lambda}"
            ));
        }
        if !power.is_finite() {
            return invalid("power must be finite");
        }
        Ok(Self {
            power,
            lambda,
            lowest,
            coeffs,
        })
    }

    /// `(Σ c_k r^k) e^{−λr}` with real coefficients starting at `r⁰`.
    pub fn exp_poly(lambda: T, coeffs: &[T]) -> Result<Self> {
        Self::new(
            T::zero(),
            lambda,
            0,
            coeffs.iter().map(|&c| re(c)).collect(),
        )
    }

    pub fn zero_like(&self) -> Self {
        Self {
            power: self.power,
            lambda: self.lambda,
            lowest: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.power == other.power && self.lambda == other.lambda
    }

    pub fn max_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.norm()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Value at `r > 0`.
    pub fn eval(&self, r: T) -> C<T> {
        if self.coeffs.is_empty() {
            return C::zero();
        }
        let poly = self
            .coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, &c| acc * r + c);
        let pref = r.powf(self.power + T::of_i(i64::from(self.lowest))) * (-self.lambda * r).exp();
        poly * pref
    }

    pub fn scale(&self, s: C<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
            ..self.clone()
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(re(s))
    }

    /// `Σ wᵢ fᵢ`. Panics if the terms do not share `power` and `λ`; every
    /// operator in this module preserves both, so a mismatch is a bug.
    pub fn combine(terms: &[(C<T>, &Self)]) -> Self {
        let first = terms.first().expect("at least one term").1;
        assert!(
            terms.iter().all(|(_, f)| f.same_shape(first)),
            "radial functions of different shape combined"
        );
        let live: Vec<_> = terms.iter().filter(|(_, f)| !f.coeffs.is_empty()).collect();
        if live.is_empty() {
            return first.zero_like();
        }
        let lo = live.iter().map(|(_, f)| f.lowest).min().unwrap();
        let hi = live
            .iter()
            .map(|(_, f)| f.lowest + f.coeffs.len() as i32)
            .max()
            .unwrap();
        let mut out = vec![C::zero(); (hi - lo) as usize];
        for (w, f) in live {
            let off = (f.lowest - lo) as usize;
            for (k, &c) in f.coeffs.iter().enumerate() {
                out[off + k] += *w * c;
            }
        }
        Self {
            power: first.power,
            lambda: first.lambda,
            lowest: lo,
            coeffs: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::combine(&[
            (C::new(T::one(), T::zero()), self),
            (C::new(T::one(), T::zero()), other),
        ])
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::combine(&[
            (C::new(T::one(), T::zero()), self),
            (C::new(-T::one(), T::zero()), other),
        ])
    }

    /// `f / r`.
    pub fn div_r(&self) -> Self {
        Self {
            lowest: self.lowest - 1,
            ..self.clone()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let p = self.power + T::of_i(i64::from(self.lowest) + k as i64);
            out[k] += c * p;
            out[k + 1] -= c * self.lambda;
        }
        Self {
            coeffs: out,
            lowest: self.lowest - 1,
            ..self.clone()
        }
    }

    /// `f′ + c f / r`.
    pub fn d_plus(&self, c: T) -> Self {
        Self::combine(&[(re(T::one()), &self.derivative()), (re(c), &self.div_r())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn f(power: f64, lambda: f64, lowest: i32, c: &[f64]) -> RadialFunction<f64> {
        RadialFunction::new(power, lambda, lowest, c.iter().map(|&x| re(x)).collect()).unwrap()
    }

    #[test]
    fn eval_matches_direct_formula() {
        let g = f(0.5, 0.7, -1, &[1.0, -2.0, 0.25]);
        let r = 1.3f64;
        let want = r.powf(0.5) * (-0.7 * r).exp() * (1.0 / r - 2.0 + 0.25 * r);
        assert_relative_eq!(g.eval(r).re, want, max_relative = 1e-14);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let g = f(1.1, 0.4, -2, &[0.3, 1.0, -0.5, 0.2]);
        let d = g.derivative();
        for r in [0.2, 1.0, 3.7] {
            let h = 1e-5 * r;
            let fd = (g.eval(r + h) - g.eval(r - h)) / (2.0 * h);
            assert_relative_eq!(d.eval(r).re, fd.re, max_relative = 1e-8);
        }
    }

    #[test]
    fn combine_aligns_powers() {
        let a = f(0.0, 1.0, -1, &[1.0]);
        let b = f(0.0, 1.0, 2, &[3.0]);
        let s = a.add(&b);
        assert_eq!(s.lowest, -1);
        assert_eq!(s.coeffs.len(), 4);
        assert_relative_eq!(
            s.eval(2.0).re,
            (0.5 + 12.0) * (-2.0f64).exp(),
            max_relative = 1e-14
        );
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    #[should_panic(expected = "different shape")]
    fn combine_rejects_mismatched_decay() {
        let _ = f(0.0, 1.0, 0, &[1.0]).add(&f(0.0, 2.0, 0, &[1.0]));
    }

    #[test]
    fn negative_decay_rejected() {
        assert!(RadialFunction::<f64>::exp_poly(-1.0, &[1.0]).is_err());
    }
}
