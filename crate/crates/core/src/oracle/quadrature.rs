use super::grid::RadialGrid;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tol::QUADRATURE_TAIL;

/// Something with a radial density `|f|² + |g|²` and an angular weight.
pub trait RadialDensity<T: Real> {
    /// `|f(r)|² + |g(r)|²`.
    fn radial_density(&self, r: T) -> T;
    /// `∫ |angular part|² dΩ`, relative to the radial split used above.
    fn angular_factor(&self) -> T;
}

/// Composite Simpson over the grid variable of samples `h(rᵢ)`, i.e.
/// `∫_{r_min}^{r_max} h(r) dr`. An odd interval count closes with the 3/8 rule.
pub fn integrate_samples<T: Real>(h: &[T], grid: &RadialGrid<T>) -> T {
    let n = h.len();
    assert_eq!(n, grid.points, "sample count must match the grid");
    let w: Vec<T> = (0..n).map(|i| h[i] * grid.jacobian(grid.node(i))).collect();
    let step = grid.step();
    let intervals = n - 1;
    let (simpson_end, tail38) = if intervals % 2 == 0 {
        (n - 1, false)
    } else {
        (n - 4, true)
    };
    let mut acc = T::zero();
    let mut i = 0;
    while i + 2 <= simpson_end {
        acc += w[i] + T::of(4.0) * w[i + 1] + w[i + 2];
        i += 2;
    }
    let mut total = acc * step / T::of(3.0);
    if tail38 {
        let k = simpson_end;
        total += T::of(3.0) * step / T::of(8.0)
            * (w[k] + T::of(3.0) * w[k + 1] + T::of(3.0) * w[k + 2] + w[k + 3]);
    }
    total
}

/// `angular_factor · ∫ (|f|² + |g|²) r² dr`, with the tail past `r_max`
/// estimated from the local decay rate. Fails if that tail exceeds 1e−10
/// of the integral.
pub fn quadrature_norm<T: Real, D: RadialDensity<T> + ?Sized>(
    d: &D,
    grid: &RadialGrid<T>,
) -> Result<T> {
    let nodes = grid.nodes();
    let h: Vec<T> = nodes.iter().map(|&r| d.radial_density(r) * r * r).collect();
    let integral = integrate_samples(&h, grid);
    let n = h.len();
    let (h1, h2) = (h[n - 2], h[n - 1]);
    let tail = if h2 == T::zero() {
        T::zero()
    } else {
        let dr = nodes[n - 1] - nodes[n - 2];
        let rate = (h1 / h2).ln() / dr;
        if rate > T::zero() && h1 > T::zero() {
            h2 / rate
        } else {
            T::infinity()
        }
    };
    let limit = T::of(QUADRATURE_TAIL);
    if !(tail <= limit * integral.abs()) {
        return Err(Error::GridInadequate {
            tail: (tail / integral.abs()).to_f64_lossy(),
            limit: QUADRATURE_TAIL,
        });
    }
    Ok(d.angular_factor() * integral)
}

impl<T: Real, F: Fn(T) -> T> RadialDensity<T> for (F, T) {
    fn radial_density(&self, r: T) -> T {
        (self.0)(r)
    }
    fn angular_factor(&self) -> T {
        self.1
    }
}
