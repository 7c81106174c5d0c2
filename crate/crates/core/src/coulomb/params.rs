use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::scalar::Real;

/// CODATA 2018 fine-structure constant.
pub const ALPHA: f64 = 7.2973525693e-3;
/// Electron rest energy in eV.
pub const ELECTRON_MASS_EV: f64 = 510998.9461;

/// Physical parameters in natural units (ħ = c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams<T: Real> {
    pub m: T,
    pub z: u32,
    pub alpha: T,
    pub eps: T,
}

impl<T: Real> PhysParams<T> {
    pub fn new(m: T, z: u32, alpha: T, eps: T) -> Result<Self> {
        let p = Self { m, z, alpha, eps };
        p.validate()?;
        Ok(p)
    }

    /// m = 1, Z = 1, physical α, ε = 0.
    pub fn hydrogen() -> Self {
        Self {
            m: T::one(),
            z: 1,
            alpha: T::of(ALPHA),
            eps: T::zero(),
        }
    }

    pub fn with_z(self, z: u32) -> Result<Self> {
        Self::new(self.m, z, self.alpha, self.eps)
    }

    pub fn with_eps(self, eps: T) -> Result<Self> {
        Self::new(self.m, self.z, self.alpha, eps)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m > T::zero()) || !self.m.is_finite() {
            return invalid(format!("mass must be positive, got {}", self.m));
        }
        if self.z == 0 {
            return invalid("atomic number must be at least 1");
        }
        if !(self.alpha > T::zero()) {
            return invalid(format!("alpha must be positive, got {}", self.alpha));
        }
        if !(self.za() < T::one()) {
            return invalid(format!("Z*alpha = {} must be below 1", self.za()));
        }
        if !(self.eps >= T::zero() && self.eps < T::of(0.1)) {
            return invalid(format!("eps = {} must lie in [0, 0.1)", self.eps));
        }
        Ok(())
    }

    #[inline]
    pub fn za(&self) -> T {
        T::of_i(self.z as i64) * self.alpha
    }

    /// `a_B = 1/(αm)`.
    #[inline]
    pub fn bohr_radius(&self) -> T {
        T::one() / (self.alpha * self.m)
    }

    /// `a = 1 + ε`.
    #[inline]
    pub fn a(&self) -> T {
        T::one() + self.eps
    }

    /// `a′ = 1 − ε`.
    #[inline]
    pub fn a_prime(&self) -> T {
        T::one() - self.eps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    /// `2 m_j`.
    pub fn two_mj(self) -> i32 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spin::Up => "up",
            Spin::Down => "down",
        })
    }
}

impl FromStr for Spin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" | "+" | "+1/2" => Ok(Spin::Up),
            "down" | "-" | "-1/2" => Ok(Spin::Down),
            _ => invalid(format!("unknown spin '{s}'")),
        }
    }
}

/// Bound-state labels. `n = n′ + κ`, `j = κ − 1/2`, `m_j = ±1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub nprime: u32,
    pub kappa: u32,
    pub spin: Spin,
}

impl QuantumNumbers {
    /// Only `κ = +(j + 1/2) ≥ 1` is admissible.
    pub fn new(nprime: u32, kappa: i64, spin: Spin) -> Result<Self> {
        if kappa < 1 {
            return invalid(format!("kappa must be a positive integer, got {kappa}"));
        }
        let kappa =
            u32::try_from(kappa).map_err(|_| Error::InvalidArgument("kappa too large".into()))?;
        Ok(Self {
            nprime,
            kappa,
            spin,
        })
    }

    /// Spectroscopic label such as `1s`, `2p`, `3d`; `κ = l + 1`.
    pub fn from_label(label: &str, spin: Spin) -> Result<Self> {
        let label = label.trim();
        let split = label
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(label.len());
        let (digits, letter) = label.split_at(split);
        let n: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad state label '{label}'")))?;
        let l = match letter {
            "s" => 0,
            "p" => 1,
            "d" => 2,
            "f" => 3,
            "g" => 4,
            "h" => 5,
            _ => return invalid(format!("bad orbital letter in '{label}'")),
        };
        if n == 0 || l >= n {
            return invalid(format!("state '{label}' needs n >= 1 and l < n"));
        }
        Self::new(n - l - 1, i64::from(l) + 1, spin)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.nprime + self.kappa
    }

    /// Orbital quantum number of the Schrödinger-like component, `κ − 1`.
    #[inline]
    pub fn l(&self) -> u32 {
        self.kappa - 1
    }

    #[inline]
    pub fn j(&self) -> f64 {
        f64::from(self.kappa) - 0.5
    }

    #[inline]
    pub fn m_j(&self) -> f64 {
        0.5 * f64::from(self.spin.two_mj())
    }

    /// All `(n′, κ)` with `n′ + κ = n`.
    pub fn splittings(n: u32, spin: Spin) -> Vec<Self> {
        (1..=n)
            .map(|k| Self {
                nprime: n - k,
                kappa: k,
                spin,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let q = QuantumNumbers::from_label("2p", Spin::Up).unwrap();
        assert_eq!((q.nprime, q.kappa, q.n()), (0, 2, 2));
        let q = QuantumNumbers::from_label("3s", Spin::Down).unwrap();
        assert_eq!((q.nprime, q.kappa, q.j(), q.m_j()), (2, 1, 0.5, -0.5));
        assert!(QuantumNumbers::from_label("1p", Spin::Up).is_err());
        assert!(QuantumNumbers::from_label("x", Spin::Up).is_err());
    }

    #[test]
    fn negative_kappa_rejected() {
        assert!(QuantumNumbers::new(0, -1, Spin::Up).is_err());
        assert!(QuantumNumbers::new(0, 0, Spin::Up).is_err());
    }

    #[test]
    fn param_validation() {
        assert!(PhysParams::new(1.0, 1, ALPHA, 0.0).is_ok());
        assert!(PhysParams::new(1.0, 140, ALPHA, 0.0).is_err());
        assert!(PhysParams::new(1.0, 1, ALPHA, 0.2).is_err());
        assert!(PhysParams::new(0.0, 1, ALPHA, 0.0).is_err());
        assert!(PhysParams::new(1.0, 0, ALPHA, 0.0).is_err());
    }
}
