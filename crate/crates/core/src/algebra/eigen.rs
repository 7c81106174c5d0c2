//! Eigenvalues of small non-hermitian complex matrices.
//!
//! Householder reduction to upper Hessenberg form followed by single-shift
//! complex QR with Wilkinson shifts and deflation.

use num_traits::Zero;

use super::matrix::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::{re, Real, C};

const MAX_SWEEPS_PER_ROOT: usize = 60;

/// All eigenvalues of `m`, sorted by real part (ties by imaginary part).
pub fn eigenvalues<T: Real>(m: &CMatrix<T>) -> Result<Vec<C<T>>> {
    let n = m.dim();
    let mut a: Vec<Vec<C<T>>> = (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)]).collect())
        .collect();
    if a.iter()
        .flatten()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::InvalidArgument(
            "matrix has non-finite entries".into(),
        ));
    }
    hessenberg(&mut a);
    let mut out = qr_eigenvalues(a)?;
    out.sort_by(|x, y| {
        x.re.partial_cmp(&y.re)
            .unwrap()
            .then(x.im.partial_cmp(&y.im).unwrap())
    });
    Ok(out)
}

fn hessenberg<T: Real>(a: &mut [Vec<C<T>>]) {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n)
            .map(|i| a[i][k].norm_sqr())
            .fold(T::zero(), |s, x| s + x)
            .sqrt();
        if norm == T::zero() {
            continue;
        }
        let x0 = a[k + 1][k];
        let phase = if x0.norm() > T::zero() {
            x0 / re(x0.norm())
        } else {
            re(T::one())
        };
        let alpha = -phase * re(norm);
        let mut v: Vec<C<T>> = (k + 1..n).map(|i| a[i][k]).collect();
        v[0] -= alpha;
        let vn = v
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |s, x| s + x)
            .sqrt();
        if vn == T::zero() {
            continue;
        }
        for z in v.iter_mut() {
            *z /= re(vn);
        }
        let two = re(T::of(2.0));
        // A <- H A
        for j in 0..n {
            let dot = (0..v.len()).fold(C::zero(), |s, t| s + v[t].conj() * a[k + 1 + t][j]);
            for t in 0..v.len() {
                a[k + 1 + t][j] -= two * v[t] * dot;
            }
        }
        // A <- A H
        for row in a.iter_mut() {
            let dot = (0..v.len()).fold(C::zero(), |s, t| s + row[k + 1 + t] * v[t]);
            for t in 0..v.len() {
                row[k + 1 + t] -= two * dot * v[t].conj();
            }
        }
        for row in a.iter_mut().skip(k + 2) {
            row[k] = C::zero();
        }
    }
}

fn wilkinson<T: Real>(a: C<T>, b: C<T>, c: C<T>, d: C<T>) -> C<T> {
    let half = re(T::of(0.5));
    let mean = (a + d) * half;
    let disc = ((a - d) * half * (a - d) * half + b * c).sqrt();
    let (r1, r2) = (mean + disc, mean - disc);
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

fn qr_eigenvalues<T: Real>(mut a: Vec<Vec<C<T>>>) -> Result<Vec<C<T>>> {
    let n = a.len();
    let mut eig = vec![C::zero(); n];
    let ulp = T::epsilon();
    let mut hi = n;
    let mut iter = 0usize;
    let mut total = 0usize;
    while hi > 0 {
        let top = hi - 1;
        // locate the start of the active unreduced block
        let mut l = top;
        while l > 0 {
            let scale = a[l - 1][l - 1].norm() + a[l][l].norm();
            let scale = if scale == T::zero() { T::one() } else { scale };
            if a[l][l - 1].norm() <= ulp * scale {
                a[l][l - 1] = C::zero();
                break;
            }
            l -= 1;
        }
        if l == top {
            eig[top] = a[top][top];
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if iter > MAX_SWEEPS_PER_ROOT {
            return Err(Error::EigenNoConvergence(total));
        }
        let mu = if iter % 11 == 10 {
            // exceptional shift to break cycles
            a[top][top] + re(a[top][top - 1].norm() * T::of(0.75))
        } else {
            wilkinson(
                a[top - 1][top - 1],
                a[top - 1][top],
                a[top][top - 1],
                a[top][top],
            )
        };
        for (i, row) in a.iter_mut().enumerate().take(hi).skip(l) {
            row[i] -= mu;
        }
        let mut rots = Vec::with_capacity(top - l);
        for k in l..top {
            let x = a[k][k];
            let y = a[k + 1][k];
            let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
            let (c, s) = if r == T::zero() {
                (re(T::one()), C::zero())
            } else {
                (x / re(r), y / re(r))
            };
            for j in k..hi {
                let (u, w) = (a[k][j], a[k + 1][j]);
                a[k][j] = c.conj() * u + s.conj() * w;
                a[k + 1][j] = -s * u + c * w;
            }
            rots.push((c, s));
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = l + idx;
            let last = (k + 2).min(top);
            for row in a.iter_mut().take(last + 1).skip(l) {
                let (u, w) = (row[k], row[k + 1]);
                row[k] = u * c + w * s;
                row[k + 1] = -u * s.conj() + w * c.conj();
            }
        }
        for (i, row) in a.iter_mut().enumerate().take(hi).skip(l) {
            row[i] += mu;
        }
    }
    Ok(eig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::im;

    #[test]
    fn diagonal_and_triangular() {
        let m = CMatrix::<f64>::from_real_rows([[3.0, 1.0], [0.0, -2.0]]).unwrap();
        let e = eigenvalues(&m).unwrap();
        assert!((e[0] - re(-2.0)).norm() < 1e-14);
        assert!((e[1] - re(3.0)).norm() < 1e-14);
    }

    #[test]
    fn rotation_has_imaginary_pair() {
        let m = CMatrix::<f64>::from_real_rows([[0.0, -1.0], [1.0, 0.0]]).unwrap();
        let e = eigenvalues(&m).unwrap();
        assert!((e[0] - im(-1.0)).norm() < 1e-14);
        assert!((e[1] - im(1.0)).norm() < 1e-14);
    }

    #[test]
    fn nilpotent_jordan_block() {
        let m = CMatrix::<f64>::from_real_rows([
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        for z in eigenvalues(&m).unwrap() {
            assert!(z.norm() < 1e-12);
        }
    }

    #[test]
    fn companion_matrix_roots() {
        // x^4 - 10x^3 + 35x^2 - 50x + 24 = (x-1)(x-2)(x-3)(x-4)
        let m = CMatrix::<f64>::from_real_rows([
            [10.0, -35.0, 50.0, -24.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
        ])
        .unwrap();
        let e = eigenvalues(&m).unwrap();
        for (k, z) in e.iter().enumerate() {
            assert!((z - re((k + 1) as f64)).norm() < 1e-10, "{z}");
        }
    }

    #[test]
    fn trace_and_determinant_preserved() {
        let m = CMatrix::<f64>::from_rows([
            [
                C::new(1.0, 2.0),
                C::new(0.5, -1.0),
                C::new(0.0, 0.3),
                C::new(2.0, 0.0),
            ],
            [
                C::new(-1.0, 0.0),
                C::new(0.0, 1.0),
                C::new(1.5, 0.5),
                C::new(0.0, -2.0),
            ],
            [
                C::new(0.2, 0.2),
                C::new(3.0, 0.0),
                C::new(-2.0, 0.0),
                C::new(1.0, 1.0),
            ],
            [
                C::new(0.0, 0.0),
                C::new(0.7, -0.1),
                C::new(1.0, 0.0),
                C::new(0.5, 0.5),
            ],
        ])
        .unwrap();
        let e = eigenvalues(&m).unwrap();
        let tr: C<f64> = e.iter().sum();
        let det: C<f64> = e.iter().product();
        assert!((tr - m.trace()).norm() < 1e-12);
        assert!((det - m.determinant()).norm() < 1e-11);
    }
}
