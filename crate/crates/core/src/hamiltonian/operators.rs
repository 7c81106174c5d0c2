//! `H`, `K`, `J²`, `J_z` on spinor states, and their commutators.

use super::ansatz::{AnsatzState, SpinorState};
use super::radial::RadialFunction;
use crate::algebra::{build_eta_prime, build_matrix_set, CMatrix};
use crate::coulomb::PhysParams;
use crate::error::{Error, Result};
use crate::scalar::{im, re, Real, C};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Potential {
    Free,
    Coulomb,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianSpec<T: Real> {
    pub params: PhysParams<T>,
    pub potential: Potential,
}

impl<T: Real> HamiltonianSpec<T> {
    pub fn new(params: PhysParams<T>, potential: Potential) -> Self {
        Self { params, potential }
    }

    /// `(η′⁻¹, η′†)` as 2×2 block scalars.
    fn blocks(&self) -> Result<([[C<T>; 2]; 2], [[C<T>; 2]; 2])> {
        if self.params.eps == T::zero() {
            return Err(Error::SingularMatrix);
        }
        let set = build_matrix_set::<T>(4)?;
        let ep = build_eta_prime(&set, self.params.eps);
        let tol = T::of(1e-12);
        let inv = ep
            .inverse()?
            .block_scalars(tol * T::one().max(T::one() / self.params.eps));
        let dag = ep.adjoint().block_scalars(tol);
        match (inv, dag) {
            (Some(i), Some(d)) => Ok((i, d)),
            _ => Err(Error::InvalidArgument("eta' is not block scalar".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    H,
    J2,
    Jz,
    K,
}

impl Operator {
    pub const ALL: [Operator; 4] = [Operator::H, Operator::J2, Operator::Jz, Operator::K];

    pub fn name(self) -> &'static str {
        match self {
            Operator::H => "H",
            Operator::J2 => "J2",
            Operator::Jz => "Jz",
            Operator::K => "K",
        }
    }
}

/// `X ⊗ I` acting on the `(upper, lower)` blocks of every `Ω` channel.
fn block_apply<T: Real>(x: &[[C<T>; 2]; 2], psi: &SpinorState<T>) -> SpinorState<T> {
    let [ua, ub, la, lb] = &psi.components;
    let mix = |row: usize, u: &RadialFunction<T>, l: &RadialFunction<T>| {
        RadialFunction::combine(&[(x[row][0], u), (x[row][1], l)])
    };
    SpinorState {
        components: [
            mix(0, ua, la),
            mix(0, ub, lb),
            mix(1, ua, la),
            mix(1, ub, lb),
        ],
        ..psi.clone()
    }
}

/// `σ·p (R_A Ω_A + R_B Ω_B) = i D₋R_B Ω_A + i D₊R_A Ω_B` with
/// `D± R = R′ + (1 ± κ) R / r`.
fn sigma_p<T: Real>(
    kappa: u32,
    ra: &RadialFunction<T>,
    rb: &RadialFunction<T>,
) -> [RadialFunction<T>; 2] {
    let k = T::of_i(i64::from(kappa));
    let i = im(T::one());
    [
        rb.d_plus(T::one() - k).scale(i),
        ra.d_plus(T::one() + k).scale(i),
    ]
}

/// `σ·r̂ Ω_A = −Ω_B` and `σ·r̂ Ω_B = −Ω_A`, applied to both blocks.
pub fn parity_flip<T: Real>(psi: &SpinorState<T>) -> SpinorState<T> {
    let [ua, ub, la, lb] = &psi.components;
    let m1 = re(-T::one());
    SpinorState {
        components: [ub.scale(m1), ua.scale(m1), lb.scale(m1), la.scale(m1)],
        ..psi.clone()
    }
}

/// `γ·p (u, l) = (σ·p l, −σ·p u)`.
fn gamma_p<T: Real>(psi: &SpinorState<T>) -> SpinorState<T> {
    let [ua, ub, la, lb] = &psi.components;
    let [ta, tb] = sigma_p(psi.kappa, la, lb);
    let [ba, bb] = sigma_p(psi.kappa, ua, ub);
    let m1 = re(-T::one());
    SpinorState {
        components: [ta, tb, ba.scale(m1), bb.scale(m1)],
        ..psi.clone()
    }
}

/// `(σ·L + 1)` is `−κ` on `Ω_A` and `+κ` on `Ω_B`.
fn sigma_l_plus_one<T: Real>(psi: &SpinorState<T>) -> SpinorState<T> {
    let k = re(T::of_i(i64::from(psi.kappa)));
    let [ua, ub, la, lb] = &psi.components;
    SpinorState {
        components: [ua.scale(-k), ub.scale(k), la.scale(-k), lb.scale(k)],
        ..psi.clone()
    }
}

/// `K = i γ₅ γ₀ (Σ·L + I)`.
pub fn apply_k_spinor<T: Real>(psi: &SpinorState<T>) -> SpinorState<T> {
    let set = build_matrix_set::<T>(4).expect("dim 4 is supported");
    let k = (&set.gammas[4] * &set.gammas[0]).scale(im(T::one()));
    let blocks = k
        .block_scalars(T::of(1e-15))
        .expect("i g5 g0 is block scalar");
    block_apply(&blocks, &sigma_l_plus_one(psi))
}

/// `H = η′⁻¹ (γ·p − m η′†) + V(r)`.
pub fn apply_h_spinor<T: Real>(
    psi: &SpinorState<T>,
    spec: &HamiltonianSpec<T>,
) -> Result<SpinorState<T>> {
    let (inv, dag) = spec.blocks()?;
    let kin = gamma_p(psi);
    let mass = block_apply(&dag, psi);
    let m = re(spec.params.m);
    let one = re(T::one());
    let t = SpinorState {
        components: [0, 1, 2, 3].map(|i| {
            RadialFunction::combine(&[(one, &kin.components[i]), (-m, &mass.components[i])])
        }),
        ..psi.clone()
    };
    let out = block_apply(&inv, &t);
    Ok(match spec.potential {
        Potential::Free => out,
        Potential::Coulomb => {
            let v = re(-spec.params.za());
            SpinorState {
                components: [0, 1, 2, 3].map(|i| {
                    RadialFunction::combine(&[
                        (one, &out.components[i]),
                        (v, &psi.components[i].div_r()),
                    ])
                }),
                ..out
            }
        }
    })
}

pub fn apply_operator<T: Real>(
    op: Operator,
    psi: &SpinorState<T>,
    spec: &HamiltonianSpec<T>,
) -> Result<SpinorState<T>> {
    let j = T::of_i(i64::from(psi.kappa)) - T::of(0.5);
    Ok(match op {
        Operator::H => apply_h_spinor(psi, spec)?,
        Operator::K => apply_k_spinor(psi),
        Operator::J2 => psi.scale(re(j * (j + T::one()))),
        Operator::Jz => psi.scale(re(T::of(f64::from(psi.spin.two_mj()) / 2.0))),
    })
}

/// `K ψ`; on the family this is `−κ ψ`.
pub fn apply_k<T: Real>(state: &AnsatzState<T>) -> Result<AnsatzState<T>> {
    apply_k_spinor(&state.to_spinor()).to_ansatz()
}

/// `H ψ`, returned in the same `(g, f)` form. `1/r` terms appear as
/// negative powers; the result is meaningful for `r > 0` only.
pub fn apply_h<T: Real>(
    state: &AnsatzState<T>,
    spec: &HamiltonianSpec<T>,
) -> Result<AnsatzState<T>> {
    apply_h_spinor(&state.to_spinor(), spec)?.to_ansatz()
}

/// Radii used for grid residuals: 200 log-spaced points on
/// `[0.1, 20]` decay lengths (`1/λ`, or 1 for `λ = 0`).
pub fn residual_radii<T: Real>(lambda: T) -> Vec<T> {
    let len = if lambda > T::zero() {
        T::one() / lambda
    } else {
        T::one()
    };
    let (lo, hi) = (T::of(0.1).ln(), T::of(20.0).ln());
    (0..200)
        .map(|i| (lo + (hi - lo) * T::of_i(i) / T::of(199.0)).exp() * len)
        .collect()
}

/// `sup_r |[A, B] ψ| / sup_r |ψ|` on [`residual_radii`].
pub fn commutator_residual<T: Real>(
    a: Operator,
    b: Operator,
    state: &AnsatzState<T>,
    spec: &HamiltonianSpec<T>,
) -> Result<T> {
    let psi = state.to_spinor();
    let ab = apply_operator(a, &apply_operator(b, &psi, spec)?, spec)?;
    let ba = apply_operator(b, &apply_operator(a, &psi, spec)?, spec)?;
    let radii = residual_radii(state.g_radial.lambda);
    let norm = psi.sup_norm(&radii);
    if norm == T::zero() {
        return Ok(T::zero());
    }
    Ok(ab.sub(&ba).sup_norm(&radii) / norm)
}

/// `sup_r |H ψ − E ψ| / sup_r |ψ|`.
pub fn eigen_residual<T: Real>(
    state: &AnsatzState<T>,
    energy: T,
    spec: &HamiltonianSpec<T>,
) -> Result<T> {
    let psi = state.to_spinor();
    let hpsi = apply_h_spinor(&psi, spec)?;
    let radii = residual_radii(state.g_radial.lambda);
    let norm = psi.sup_norm(&radii);
    Ok(hpsi.sub(&psi.scale(re(energy))).sup_norm(&radii) / norm)
}

/// `κ = j + 1/2` and the check `κ² − 1/4 = j(j+1)`.
pub fn kappa_j_relation<T: Real>(j: T) -> Result<(u32, bool)> {
    let twice = j * T::of(2.0);
    let odd = (twice - twice.round()).abs() <= T::of(1e-12)
        && twice.round().to_i64().map_or(false, |n| n % 2 == 1);
    if !(j > T::zero()) || !odd {
        return Err(Error::InvalidArgument(format!(
            "j must be a positive half-integer, got {j}"
        )));
    }
    let k = (j + T::of(0.5)).round();
    let holds =
        (k * k - T::of(0.25) - j * (j + T::one())).abs() <= T::epsilon() * T::of(4.0) * k * k;
    Ok((k.to_u32().expect("small positive integer"), holds))
}

/// The 4×4 `H` for one 3-momentum.
pub fn momentum_hamiltonian<T: Real>(p: [T; 3], params: &PhysParams<T>) -> Result<CMatrix<T>> {
    if params.eps == T::zero() {
        return Err(Error::SingularMatrix);
    }
    let set = build_matrix_set::<T>(4)?;
    let ep = build_eta_prime(&set, params.eps);
    let mut gp = CMatrix::zeros(4)?;
    for (i, &pi) in p.iter().enumerate() {
        gp = &gp + &set.gammas[i + 1].scale_re(pi);
    }
    let rhs = &gp - &ep.adjoint().scale_re(params.m);
    Ok(&ep.inverse()? * &rhs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSplit<T: Real> {
    /// The pair below `m/(2ε)`.
    pub finite: [T; 2],
    /// The pair above, shifted by `−m/ε`.
    pub renormalized: [T; 2],
    /// Largest `|Im E|` over all four.
    pub max_imag: T,
}

/// Splits the spectrum of a momentum-space `H` at `m/(2ε)`.
///
/// Complex eigenvalues (beyond `1e-10·m/ε`) or a split other than 2 + 2
/// mean the branches have met, which happens once `p²/2m` passes
/// roughly `m/(4ε)`.
pub fn finite_and_divergent_eigenvalues<T: Real>(
    h: &CMatrix<T>,
    params: &PhysParams<T>,
) -> Result<EigenSplit<T>> {
    if params.eps == T::zero() {
        return Err(Error::SingularMatrix);
    }
    let scale = params.m / params.eps;
    let ev = crate::algebra::eigenvalues(h)?;
    let max_imag = ev.iter().fold(T::zero(), |m, z| m.max(z.im.abs()));
    if max_imag > T::of(1e-10) * scale {
        return Err(Error::BranchOverlap(format!(
            "complex eigenvalues, |Im E| = {max_imag:e}"
        )));
    }
    let cut = scale / T::of(2.0);
    let (lo, hi): (Vec<T>, Vec<T>) = {
        let re: Vec<T> = ev.iter().map(|z| z.re).collect();
        (
            re.iter().copied().filter(|&x| x < cut).collect(),
            re.iter().copied().filter(|&x| x >= cut).collect(),
        )
    };
    if lo.len() != 2 || hi.len() != 2 {
        return Err(Error::BranchOverlap(format!(
            "{} eigenvalues below m/(2 eps), expected 2",
            lo.len()
        )));
    }
    Ok(EigenSplit {
        finite: [lo[0], lo[1]],
        renormalized: [hi[0] - scale, hi[1] - scale],
        max_imag,
    })
}
