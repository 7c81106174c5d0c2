use crate::coulomb::PhysParams;
use crate::error::{invalid, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Uniform,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid<T: Real> {
    pub r_min: T,
    pub r_max: T,
    pub points: usize,
    pub spacing: Spacing,
}

pub const DEFAULT_POINTS: usize = 4000;
pub const MIN_POINTS: usize = 1000;

impl<T: Real> RadialGrid<T> {
    pub fn new(r_min: T, r_max: T, points: usize, spacing: Spacing) -> Result<Self> {
        if !(r_min > T::zero()) {
            return invalid("r_min must be positive");
        }
        if !(r_min < r_max) || !r_max.is_finite() {
            return invalid("r_min must be below a finite r_max");
        }
        if points < MIN_POINTS {
            return invalid(format!(
                "grid needs at least {MIN_POINTS} points, got {points}"
            ));
        }
        Ok(Self {
            r_min,
            r_max,
            points,
            spacing,
        })
    }

    pub fn log(r_min: T, r_max: T, points: usize) -> Result<Self> {
        Self::new(r_min, r_max, points, Spacing::Log)
    }

    pub fn uniform(r_min: T, r_max: T, points: usize) -> Result<Self> {
        Self::new(r_min, r_max, points, Spacing::Uniform)
    }

    /// Log grid on `[1e−6 a_B, 30 n² a_B]` with 4000 points.
    pub fn for_state(n: u32, params: &PhysParams<T>) -> Self {
        let ab = params.bohr_radius();
        let nn = T::of_i(i64::from(n.max(1)));
        Self {
            r_min: T::of(1e-6) * ab,
            r_max: T::of(30.0) * nn * nn * ab,
            points: DEFAULT_POINTS,
            spacing: Spacing::Log,
        }
    }

    /// Same range with the step halved.
    pub fn refined(&self) -> Self {
        Self {
            points: 2 * (self.points - 1) + 1,
            ..*self
        }
    }

    pub fn with_points(&self, points: usize) -> Result<Self> {
        Self::new(self.r_min, self.r_max, points, self.spacing)
    }

    /// Uniform step in the integration variable (`r` or `ln r`).
    pub fn step(&self) -> T {
        let span = match self.spacing {
            Spacing::Uniform => self.r_max - self.r_min,
            Spacing::Log => (self.r_max / self.r_min).ln(),
        };
        span / T::of_i(self.points as i64 - 1)
    }

    pub fn node(&self, i: usize) -> T {
        if i + 1 == self.points {
            return self.r_max;
        }
        let t = T::of_i(i as i64) * self.step();
        match self.spacing {
            Spacing::Uniform => self.r_min + t,
            Spacing::Log => self.r_min * t.exp(),
        }
    }

    pub fn nodes(&self) -> Vec<T> {
        (0..self.points).map(|i| self.node(i)).collect()
    }

    /// `dr/dt` at `r`, where `t` is the uniform grid variable.
    #[inline]
    pub(crate) fn jacobian(&self, r: T) -> T {
        match self.spacing {
            Spacing::Uniform => T::one(),
            Spacing::Log => r,
        }
    }

    /// Point halfway between nodes `i` and `i+1` in the grid variable.
    pub(crate) fn midpoint(&self, i: usize) -> T {
        let (a, b) = (self.node(i), self.node(i + 1));
        match self.spacing {
            Spacing::Uniform => (a + b) / T::of(2.0),
            Spacing::Log => (a * b).sqrt(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RadialGrid::<f64>::log(0.0, 1.0, 2000).is_err());
        assert!(RadialGrid::<f64>::log(1.0, 0.5, 2000).is_err());
        assert!(RadialGrid::<f64>::log(1e-3, 1.0, 999).is_err());
    }

    #[test]
    fn log_nodes_hit_ends() {
        let g = RadialGrid::<f64>::log(1e-6, 100.0, 1001).unwrap();
        let n = g.nodes();
        assert_eq!(n[0], 1e-6);
        assert_eq!(n[1000], 100.0);
        assert!((n[500] - 1e-2).abs() < 1e-15);
        assert_eq!(g.refined().points, 2001);
    }

    #[test]
    fn default_covers_tail() {
        let p = PhysParams::<f64>::hydrogen();
        let g = RadialGrid::for_state(3, &p);
        assert!(g.r_max >= 30.0 * 9.0 * p.bohr_radius() * (1.0 - 1e-15));
        assert_eq!(g.points, 4000);
    }
}
