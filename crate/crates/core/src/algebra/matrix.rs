//! Dense complex matrices of dimension 2 or 4.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::scalar::{re, Real, C};

/// Row-major dense complex matrix, `dim` ∈ {2, 4}.
#[derive(Clone, PartialEq)]
pub struct CMatrix<T: Real> {
    dim: usize,
    data: Vec<C<T>>,
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        d => invalid(format!("matrix dimension must be 2 or 4, got {d}")),
    }
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            data: vec![C::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = C::one();
        }
        Ok(m)
    }

    /// Builds from row-major entries; the length must be 4 or 16.
    pub fn from_row_major(entries: Vec<C<T>>) -> Result<Self> {
        let dim = match entries.len() {
            4 => 2,
            16 => 4,
            n => return invalid(format!("expected 4 or 16 entries, got {n}")),
        };
        Ok(Self { dim, data: entries })
    }

    pub fn from_rows<const N: usize>(rows: [[C<T>; N]; N]) -> Result<Self> {
        check_dim(N)?;
        Ok(Self {
            dim: N,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Real-valued convenience constructor.
    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Result<Self> {
        check_dim(N)?;
        Ok(Self {
            dim: N,
            data: rows.iter().flatten().map(|&x| re(T::of(x))).collect(),
        })
    }

    /// Block matrix `[[a, b], [c, d]]` from four 2×2 blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if [a, b, c, d].iter().any(|m| m.dim != 2) {
            return invalid("blocks must be 2x2");
        }
        let mut out = Self::zeros(4)?;
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = a[(i, j)];
                out[(i, j + 2)] = b[(i, j)];
                out[(i + 2, j)] = c[(i, j)];
                out[(i + 2, j + 2)] = d[(i, j)];
            }
        }
        Ok(out)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }

    pub fn scale(&self, s: C<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(re(s))
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C<T> {
        (0..self.dim)
            .map(|i| self[(i, i)])
            .fold(C::zero(), |a, b| a + b)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }

    pub fn mul_vec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).fold(C::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    /// Extracts `X` from a matrix of the form `X ⊗ I₂` (4×4 whose 2×2 blocks
    /// are multiples of the identity). Returns `None` otherwise.
    pub fn block_scalars(&self, tol: T) -> Option<[[C<T>; 2]; 2]> {
        if self.dim != 4 {
            return None;
        }
        let mut out = [[C::zero(); 2]; 2];
        for (bi, row) in out.iter_mut().enumerate() {
            for (bj, slot) in row.iter_mut().enumerate() {
                let (r, c) = (2 * bi, 2 * bj);
                let d0 = self[(r, c)];
                let ok = (self[(r + 1, c + 1)] - d0).norm() <= tol
                    && self[(r, c + 1)].norm() <= tol
                    && self[(r + 1, c)].norm() <= tol;
                if !ok {
                    return None;
                }
                *slot = d0;
            }
        }
        Some(out)
    }

    /// LU with partial pivoting; returns (lu, perm, sign) or `None` if a
    /// pivot falls below `tiny`.
    fn lu(&self, tiny: T) -> Option<(Self, Vec<usize>, T)> {
        let n = self.dim;
        let mut a = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = T::one();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[(i, k)].norm().partial_cmp(&a[(j, k)].norm()).unwrap())
                .unwrap();
            if a[(p, k)].norm() <= tiny {
                return None;
            }
            if p != k {
                for j in 0..n {
                    let tmp = a[(k, j)];
                    a[(k, j)] = a[(p, j)];
                    a[(p, j)] = tmp;
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / pivot;
                a[(i, k)] = f;
                for j in k + 1..n {
                    let akj = a[(k, j)];
                    a[(i, j)] -= f * akj;
                }
            }
        }
        Some((a, perm, sign))
    }

    pub fn determinant(&self) -> C<T> {
        match self.lu(T::zero()) {
            None => C::zero(),
            Some((lu, _, sign)) => (0..self.dim).fold(re(sign), |acc, i| acc * lu[(i, i)]),
        }
    }

    /// Inverse via LU. Pivots below `1e-14 · max|a|` count as singular.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let tiny = self.max_abs() * T::of(1e-14);
        let (lu, perm, _) = self.lu(tiny).ok_or(Error::SingularMatrix)?;
        let mut inv = Self::zeros(n)?;
        for col in 0..n {
            // solve L y = P e_col, then U x = y
            let mut x: Vec<C<T>> = (0..n)
                .map(|i| if perm[i] == col { C::one() } else { C::zero() })
                .collect();
            for i in 0..n {
                for k in 0..i {
                    let l = lu[(i, k)];
                    let xk = x[k];
                    x[i] -= l * xk;
                }
            }
            for i in (0..n).rev() {
                for k in i + 1..n {
                    let u = lu[(i, k)];
                    let xk = x[k];
                    x[i] -= u * xk;
                }
                x[i] /= lu[(i, i)];
            }
            for i in 0..n {
                inv[(i, col)] = x[i];
            }
        }
        Ok(inv)
    }
}

impl<T: Real> Index<(usize, usize)> for CMatrix<T> {
    type Output = C<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Real> Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: Self) -> CMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: Self) -> CMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Real> Neg for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn neg(self) -> CMatrix<T> {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| -z).collect(),
        }
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: Self) -> CMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = CMatrix {
            dim: n,
            data: vec![C::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<T: Real> fmt::Debug for CMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:>10.4e}{:+.4e}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
