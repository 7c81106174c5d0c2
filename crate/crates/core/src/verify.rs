//! Verification suites: each check reports a measured value next to the
//! bound it has to meet. Used by the CLI `verify` command and the
//! acceptance tests.

use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_eta_prime, build_matrix_set, eigenvalues, verify_algebra, Expectation};
use crate::coulomb::{
    energy_closed_form, ground_state_with_grid, solve_energy_finite_eps, solve_radial,
    GroundStateWavefunction, PhysParams, QuantumNumbers, Spin, ELECTRON_MASS_EV,
};
use crate::hamiltonian::{
    apply_h, apply_k, commutator_residual, eigen_residual, finite_and_divergent_eigenvalues,
    kappa_j_relation, momentum_hamiltonian, AnsatzState, HamiltonianSpec, Operator, Potential,
    RadialFunction,
};
use crate::oracle::{shoot_eigenvalue, RadialGrid};
use crate::planewave::{
    current_density, massless_dispersion_residual, mode_residual, momentum_modes,
    nr_reduction_residual, schrodinger_barrier_transmission, schrodinger_step, solve_barrier,
    solve_step,
};
use crate::scalar::re;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost,
    AtLeast,
    /// Within `limit` of the target.
    Near(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub bound: Bound,
    pub passed: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Self {
            name: name.into(),
            value,
            limit,
            bound: Bound::AtMost,
            passed: value <= limit,
        }
    }

    pub fn at_least(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Self {
            name: name.into(),
            value,
            limit,
            bound: Bound::AtLeast,
            passed: value >= limit,
        }
    }

    pub fn within(name: impl Into<String>, value: f64, target: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            value,
            limit: tol,
            bound: Bound::Near(target),
            passed: (value - target).abs() <= tol,
        }
    }

    /// A step that could not be carried out.
    pub fn failed(name: impl Into<String>, err: impl fmt::Display) -> Self {
        Self {
            name: format!("{} ({err})", name.into()),
            value: f64::NAN,
            limit: 0.0,
            bound: Bound::AtMost,
            passed: false,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        match self.bound {
            Bound::AtMost => write!(
                f,
                "{tag}  {:<48} {:>12.4e}  <= {:.1e}",
                self.name, self.value, self.limit
            ),
            Bound::AtLeast => write!(
                f,
                "{tag}  {:<48} {:>12.4e}  >= {:.1e}",
                self.name, self.value, self.limit
            ),
            Bound::Near(t) => write!(
                f,
                "{tag}  {:<48} {:>12.6}  = {t} ± {}",
                self.name, self.value, self.limit
            ),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Dispersion,
    Hamiltonian,
    Commutators,
    Coulomb,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Algebra,
        Suite::Dispersion,
        Suite::Hamiltonian,
        Suite::Commutators,
        Suite::Coulomb,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Dispersion => "dispersion",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Commutators => "commutators",
            Suite::Coulomb => "coulomb",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// `Z` and `α` for the Coulomb and oracle suites; `ε` for commutators
    /// (a zero `ε` falls back to `1e-3`, since `H` needs `ε > 0`).
    pub params: PhysParams<f64>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            params: PhysParams::hydrogen(),
            seed: 0x1e71,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    match suite {
        Suite::Algebra => [algebra_identities(), eta_prime_inverse()].concat(),
        Suite::Dispersion => [
            plane_wave_dispersion(),
            scattering_grid(10),
            nr_reduction_slope(),
        ]
        .concat(),
        Suite::Hamiltonian => [
            momentum_spectrum(cfg.seed, 100, &[1e-2, 1e-3, 1e-4]),
            kappa_j_checks(),
        ]
        .concat(),
        Suite::Commutators => {
            let eps = if cfg.params.eps > 0.0 {
                cfg.params.eps
            } else {
                1e-3
            };
            commutators(cfg.seed, 50, eps)
        }
        Suite::Coulomb => {
            let p = cfg.params;
            [
                hydrogen_spectrum(&p, 4),
                degeneracy(&p, 4, 1e-4),
                eps_convergence(&p),
                series_eigenstates(&p),
                ground_state_checks(&p),
            ]
            .concat()
        }
        Suite::Oracle => {
            let mut zs = vec![1, 2];
            if !zs.contains(&cfg.params.z) {
                zs.push(cfg.params.z);
            }
            shooting_oracle(&cfg.params, &zs, 4)
        }
    }
}

/// Least-squares slope of `log y` against `log x`.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

pub fn algebra_identities() -> Vec<Check> {
    let mut out = Vec::new();
    for dim in [2, 4] {
        let set = match build_matrix_set::<f64>(dim) {
            Ok(s) => s,
            Err(e) => return vec![Check::failed(format!("build dim {dim}"), e)],
        };
        for c in verify_algebra(&set).checks {
            let name = format!("dim {dim}: {}", c.name);
            out.push(match c.expectation {
                Expectation::Vanishes => Check::at_most(name, c.residual, c.tolerance),
                Expectation::NonZero => Check::at_least(name, c.residual, c.tolerance),
            });
        }
    }
    out
}

/// `η′ η′⁻¹ = I` for `ε ∈ [1e-6, 1]`.
pub fn eta_prime_inverse() -> Vec<Check> {
    let mut out = Vec::new();
    for dim in [2, 4] {
        let set = build_matrix_set::<f64>(dim).expect("supported dims");
        let mut worst = 0.0f64;
        for k in 0..=12 {
            let eps = 10f64.powf(-0.5 * f64::from(k));
            let ep = build_eta_prime(&set, eps);
            match ep.inverse() {
                Ok(inv) => worst = worst.max((&ep * &inv).max_abs_diff(&set.identity())),
                Err(e) => {
                    return vec![Check::failed(
                        format!("dim {dim}: invert eta' at eps {eps:e}"),
                        e,
                    )]
                }
            }
        }
        out.push(Check::at_most(
            format!("dim {dim}: eta' eta'^-1 = I, eps in [1e-6, 1]"),
            worst,
            tol::INVERSE,
        ));
    }
    out
}

pub fn plane_wave_dispersion() -> Vec<Check> {
    let set = build_matrix_set::<f64>(2).expect("dim 2");
    let (mut modes, mut vel, mut massless) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..60 {
        let e = 10f64.powf(-6.0 + 7.0 * f64::from(i) / 59.0);
        for m in [0.05, 1.0, 7.5] {
            let (a, b) = match momentum_modes(e, m) {
                Ok(x) => x,
                Err(err) => return vec![Check::failed("momentum modes", err)],
            };
            let scale = 1.0 + e + m;
            modes = modes
                .max(mode_residual(&a, m) / scale)
                .max(mode_residual(&b, m) / scale);
            if let Ok((j, rho)) = current_density(a.spinor, &set) {
                vel = vel.max((j / rho - a.momentum.re / m).abs() / (a.momentum.re / m));
            }
        }
        let ang = 0.37 * f64::from(i);
        let p = [e.sqrt() * ang.cos(), e.sqrt() * ang.sin()];
        massless = massless.max(massless_dispersion_residual(p).unwrap_or(f64::INFINITY));
    }
    vec![
        Check::at_most("(1+1)D modes p = ±sqrt(2Em)", modes, tol::DISPERSION),
        Check::at_most("J/rho = p/m (relative)", vel, tol::DISPERSION),
        Check::at_most("massless (2+1)D: E = |p|", massless, tol::DISPERSION),
    ]
}

/// Step and barrier against the Schrödinger closed forms on an
/// `n × n` grid of `(E, V₀)`, plus `R + T = 1`.
pub fn scattering_grid(n: usize) -> Vec<Check> {
    let (m, width) = (1.0, 1.3);
    let (mut step, mut barrier, mut unit) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..n {
        let e = 0.05 + 4.95 * i as f64 / (n - 1) as f64;
        for k in 0..n {
            let v0 = -1.0 + 6.0 * k as f64 / (n - 1) as f64;
            match solve_step(e, v0, m) {
                Ok(s) => {
                    let (r, t) = schrodinger_step(e, v0, m);
                    step = step
                        .max((s.reflection - r).abs())
                        .max((s.transmission - t).abs());
                    unit = unit.max((s.reflection + s.transmission - 1.0).abs());
                }
                Err(err) => return vec![Check::failed(format!("step at E={e}, V0={v0}"), err)],
            }
            match solve_barrier(e, v0, width, m) {
                Ok(b) => {
                    let t = schrodinger_barrier_transmission(e, v0, width, m);
                    barrier = barrier
                        .max((b.transmission - t).abs())
                        .max((b.reflection - (1.0 - t)).abs());
                    unit = unit.max((b.reflection + b.transmission - 1.0).abs());
                }
                Err(err) => return vec![Check::failed(format!("barrier at E={e}, V0={v0}"), err)],
            }
        }
    }
    vec![
        Check::at_most(
            format!("step R, T vs Schrodinger ({} points)", n * n),
            step,
            tol::SCATTERING,
        ),
        Check::at_most(
            format!("barrier R, T vs Schrodinger ({} points)", n * n),
            barrier,
            tol::SCATTERING,
        ),
        Check::at_most("R + T = 1", unit, tol::SCATTERING),
    ]
}

/// Residual of the exact Dirac mode in the Lévy-Leblond form over
/// `E′/m ∈ [1e-6, 1e-2]`; must be linear in `E′`.
pub fn nr_reduction_slope() -> Vec<Check> {
    let m = 1.0;
    let xs: Vec<f64> = (0..9)
        .map(|i| 10f64.powf(-6.0 + 0.5 * f64::from(i)))
        .collect();
    let mut ys = Vec::new();
    for &e in &xs {
        match nr_reduction_residual(e * m, m, [0.6, 0.8]) {
            Ok(r) => ys.push(r),
            Err(err) => return vec![Check::failed("NR reduction residual", err)],
        }
    }
    vec![Check::within(
        "NR reduction residual slope in E'/m",
        log_log_slope(&xs, &ys),
        1.0,
        0.2,
    )]
}

/// Random momenta `|p| ≤ 0.3m`: finite pair near `p²/2m`, divergent pair
/// near `−p²/2m + m/ε`, all eigenvalues real.
///
/// The finite pair sits at `p²/2m + εm + O(ε p²)`, so its distance is
/// measured in units of `εm`; the divergent pair relative to `m/ε`.
pub fn momentum_spectrum(seed: u64, samples: usize, eps_list: &[f64]) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = 1.0;
    let mut out = Vec::new();
    for &eps in eps_list {
        let params = PhysParams {
            m,
            z: 1,
            alpha: crate::coulomb::ALPHA,
            eps,
        };
        let (mut fin, mut div, mut imag) = (0.0f64, 0.0f64, 0.0f64);
        for _ in 0..samples {
            let p = random_momentum(&mut rng, 0.3 * m);
            let p2: f64 = p.iter().map(|x| x * x).sum();
            let kin = p2 / (2.0 * m);
            let h = match momentum_hamiltonian(p, &params) {
                Ok(h) => h,
                Err(e) => return vec![Check::failed("momentum hamiltonian", e)],
            };
            match eigenvalues(&h) {
                Ok(ev) => {
                    imag = imag.max(ev.iter().fold(0.0f64, |a, z| a.max(z.im.abs())) / (m / eps))
                }
                Err(e) => return vec![Check::failed("eigenvalues", e)],
            }
            let split = match finite_and_divergent_eigenvalues(&h, &params) {
                Ok(s) => s,
                Err(e) => return vec![Check::failed(format!("classify at eps {eps:e}"), e)],
            };
            for k in 0..2 {
                fin = fin.max((split.finite[k] - kin).abs() / (eps * m));
                div = div.max((split.renormalized[k] + kin).abs() / (m / eps) / eps);
            }
        }
        out.push(Check::at_most(
            format!("eps {eps:.0e}: |E_fin - p^2/2m| / (eps m)"),
            fin,
            5.0,
        ));
        out.push(Check::at_most(
            format!("eps {eps:.0e}: relative |E_div - (m/eps - p^2/2m)| / eps"),
            div,
            5.0,
        ));
        out.push(Check::at_most(
            format!("eps {eps:.0e}: max |Im E| / (m/eps)"),
            imag,
            1e-10,
        ));
    }
    out
}

fn random_momentum(rng: &mut ChaCha8Rng, pmax: f64) -> [f64; 3] {
    loop {
        let p = [0, 1, 2].map(|_| rng.random_range(-pmax..pmax));
        if p.iter().map(|x| x * x).sum::<f64>() <= pmax * pmax {
            return p;
        }
    }
}

pub fn kappa_j_checks() -> Vec<Check> {
    let mut bad = 0.0;
    for k in 1..=6u32 {
        let j = f64::from(k) - 0.5;
        match kappa_j_relation(j) {
            Ok((kk, true)) if kk == k => {}
            _ => bad += 1.0,
        }
    }
    vec![Check::at_most(
        "kappa = j + 1/2, kappa^2 - 1/4 = j(j+1), j <= 11/2",
        bad,
        0.0,
    )]
}

/// A random ansatz state: `κ ∈ 1..=3`, cubic radial polynomials.
pub fn random_ansatz(rng: &mut ChaCha8Rng, spin: Spin) -> AnsatzState<f64> {
    let kappa = rng.random_range(1..=3i64);
    let lam = rng.random_range(0.3..2.0);
    let poly = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        (0..4).map(|_| rng.random_range(-1.0..1.0)).collect()
    };
    let g = poly(rng);
    let f = poly(rng);
    AnsatzState::new(
        kappa,
        spin,
        RadialFunction::exp_poly(lam, &g).expect("positive decay"),
        RadialFunction::exp_poly(lam, &f).expect("positive decay"),
    )
    .expect("valid kappa")
}

/// The commutators of `H`, `J²`, `J_z`, `K` on random states, free and
/// Coulomb, both spins; plus `K(Hψ) = −κ Hψ` on the coefficients.
pub fn commutators(seed: u64, states: usize, eps: f64) -> Vec<Check> {
    let pairs = [
        (Operator::H, Operator::J2),
        (Operator::H, Operator::Jz),
        (Operator::H, Operator::K),
        (Operator::K, Operator::J2),
        (Operator::K, Operator::Jz),
        (Operator::J2, Operator::Jz),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = match PhysParams::hydrogen().with_eps(eps) {
        Ok(p) => p,
        Err(e) => return vec![Check::failed("commutator parameters", e)],
    };
    let mut worst = [0.0f64; 6];
    let mut k_pres = 0.0f64;
    for i in 0..states {
        let spin = if i % 2 == 0 { Spin::Up } else { Spin::Down };
        let pot = if (i / 2) % 2 == 0 {
            Potential::Free
        } else {
            Potential::Coulomb
        };
        let spec = HamiltonianSpec::new(params, pot);
        let s = random_ansatz(&mut rng, spin);
        for (w, (a, b)) in worst.iter_mut().zip(pairs) {
            match commutator_residual(a, b, &s, &spec) {
                Ok(r) => *w = w.max(r),
                Err(e) => return vec![Check::failed(format!("[{}, {}]", a.name(), b.name()), e)],
            }
        }
        let step = apply_h(&s, &spec).and_then(|h| apply_k(&h).map(|kh| (h, kh)));
        match step {
            Ok((h, kh)) => {
                let scale = h.g_radial.max_coeff().max(h.f_radial.max_coeff());
                let kappa = f64::from(s.kappa);
                k_pres = k_pres.max(kh.max_coeff_diff(&h.scale(re(-kappa))) / scale);
            }
            Err(e) => return vec![Check::failed("K(H psi)", e)],
        }
    }
    let mut out: Vec<Check> = pairs
        .iter()
        .zip(worst)
        .map(|((a, b), w)| {
            Check::at_most(
                format!(
                    "[{}, {}] on {states} states, eps {eps:.0e}",
                    a.name(),
                    b.name()
                ),
                w,
                tol::COMMUTATOR,
            )
        })
        .collect();
    out.push(Check::at_most(
        "K(H psi) = -kappa H psi (coefficients)",
        k_pres,
        tol::COMMUTATOR,
    ));
    out
}

/// Closed-form spectrum and the eV display of `n = 1`.
pub fn hydrogen_spectrum(params: &PhysParams<f64>, n_max: u32) -> Vec<Check> {
    let p0 = PhysParams {
        eps: 0.0,
        ..*params
    };
    let za = p0.za();
    let mut worst = 0.0f64;
    for n in 1..=n_max {
        let want = -za * za / (2.0 * f64::from(n * n));
        match energy_closed_form(n, &p0) {
            Ok(e) => worst = worst.max((e / p0.m - want).abs() / want.abs()),
            Err(err) => return vec![Check::failed("closed form", err)],
        }
    }
    let mut out = vec![Check::at_most(
        format!("E/m = -(Z alpha)^2/(2n^2), n <= {n_max}"),
        worst,
        4.0 * f64::EPSILON,
    )];
    if p0.z == 1 {
        let ev = energy_closed_form(1, &p0)
            .map(|e| e / p0.m * ELECTRON_MASS_EV)
            .unwrap_or(f64::NAN);
        out.push(Check::at_most(
            "n = 1 in eV vs -13.6057 (relative)",
            ((ev + 13.6057) / 13.6057).abs(),
            1e-3,
        ));
    }
    out
}

/// Same-`n` energies across `(n′, κ)`: equal at `ε = 0`, within `10ε`
/// (relative to the closed form) at finite `ε`.
pub fn degeneracy(params: &PhysParams<f64>, n_max: u32, eps: f64) -> Vec<Check> {
    let mut out = Vec::new();
    for (e, limit) in [(0.0, 0.0), (eps, 10.0 * eps)] {
        let p = PhysParams { eps: e, ..*params };
        let mut worst = 0.0f64;
        for n in 1..=n_max {
            let e0 = energy_closed_form(n, &p).unwrap_or(f64::NAN);
            let levels: Result<Vec<f64>, _> = QuantumNumbers::splittings(n, Spin::Up)
                .iter()
                .map(|q| solve_energy_finite_eps(q.nprime, q.kappa, &p))
                .collect();
            match levels {
                Ok(l) => {
                    let (lo, hi) = l
                        .iter()
                        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| {
                            (a.min(x), b.max(x))
                        });
                    worst = worst.max((hi - lo) / e0.abs());
                }
                Err(err) => return vec![Check::failed(format!("levels at n = {n}"), err)],
            }
        }
        out.push(Check::at_most(
            format!("same-n spread / |E_n|, eps {e:.0e}, n <= {n_max}"),
            worst,
            limit,
        ));
    }
    out
}

/// Finite-ε roots approach the closed form linearly in ε.
pub fn eps_convergence(params: &PhysParams<f64>) -> Vec<Check> {
    let eps = [1e-3, 1e-4, 1e-5];
    let mut out = Vec::new();
    for (np, k) in [(0u32, 1u32), (1, 1), (0, 2)] {
        let e0 = energy_closed_form(np + k, params).unwrap_or(f64::NAN);
        let mut err = Vec::new();
        for &e in &eps {
            match params
                .with_eps(e)
                .and_then(|p| solve_energy_finite_eps(np, k, &p))
            {
                Ok(v) => err.push(((v - e0) / e0).abs()),
                Err(x) => return vec![Check::failed(format!("finite-eps root ({np},{k})"), x)],
            }
        }
        out.push(Check::within(
            format!("finite-eps slope, (n',kappa) = ({np},{k})"),
            log_log_slope(&eps, &err),
            1.0,
            0.2,
        ));
    }
    out
}

/// Recursions and `H ψ = E ψ` for the series solutions.
///
/// `H ψ` is a difference of terms of size `(m/ε)|ψ|` that cancel down to
/// `E ψ`, so the attainable residual grows like `m/(ε|E|)` times the
/// polynomial cancellation of the state. The ground state is checked at
/// `ε = 1e-3`, all `n ≤ 3` states at `ε = 1e-2`.
pub fn series_eigenstates(params: &PhysParams<f64>) -> Vec<Check> {
    let mut out = Vec::new();
    for (eps, n_max) in [(1e-3, 1u32), (1e-2, 3)] {
        let p = match params.with_eps(eps) {
            Ok(p) => p,
            Err(e) => return vec![Check::failed(format!("eps {eps:e}"), e)],
        };
        let spec = HamiltonianSpec::new(p, Potential::Coulomb);
        let (mut rec, mut eig) = (0.0f64, 0.0f64);
        for n in 1..=n_max {
            for q in QuantumNumbers::splittings(n, Spin::Up) {
                let sol = match solve_radial(q, &p) {
                    Ok(s) => s,
                    Err(e) => {
                        return vec![Check::failed(
                            format!("series ({},{})", q.nprime, q.kappa),
                            e,
                        )]
                    }
                };
                rec = rec.max(sol.recursion_residual());
                for spin in [Spin::Up, Spin::Down] {
                    let r = AnsatzState::from_radial_solution(&sol, spin)
                        .and_then(|s| eigen_residual(&s, sol.energy, &spec));
                    match r {
                        Ok(r) => eig = eig.max(r / sol.energy.abs()),
                        Err(e) => return vec![Check::failed("H psi = E psi", e)],
                    }
                }
            }
        }
        out.push(Check::at_most(
            format!("recursion residual, n <= {n_max}, eps {eps:.0e}"),
            rec,
            tol::RECURSION,
        ));
        out.push(Check::at_most(
            format!("|H psi - E psi| / |E psi|, n <= {n_max}, eps {eps:.0e}"),
            eig,
            1e-8,
        ));
    }
    out
}

/// `d₀`, quadrature norm and the stability of `N_computed / N_formula`.
pub fn ground_state_checks(params: &PhysParams<f64>) -> Vec<Check> {
    let p0 = PhysParams {
        eps: 0.0,
        ..*params
    };
    let grid = RadialGrid::for_state(1, &p0);
    let mut out = Vec::new();
    let wf = |g: &RadialGrid<f64>| ground_state_with_grid(&p0, Spin::Up, g);
    match (wf(&grid), wf(&grid.refined())) {
        (Ok(a), Ok(b)) => {
            let d0 = GroundStateWavefunction::d0_formula(&p0);
            out.push(Check::at_most(
                "d0 vs (2 - sqrt2 Z alpha)/(2 + sqrt2 Z alpha)",
                (a.d0 - d0).abs() / d0,
                1e-12,
            ));
            match b.quadrature_norm(&grid.refined().refined()) {
                Ok(n) => out.push(Check::at_most(
                    "quadrature norm with computed N",
                    (n - 1.0).abs(),
                    1e-8,
                )),
                Err(e) => out.push(Check::failed("quadrature norm", e)),
            }
            out.push(Check::at_most(
                format!("N ratio stable under refinement (ratio {:.12})", b.ratio()),
                (a.ratio() - b.ratio()).abs() / b.ratio(),
                1e-8,
            ));
        }
        (Err(e), _) | (_, Err(e)) => out.push(Check::failed("ground state", e)),
    }
    out
}

/// Shooting against the closed form for every `(n′, κ)` with `n ≤ n_max`.
pub fn shooting_oracle(params: &PhysParams<f64>, zs: &[u32], n_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for &z in zs {
        let p = match PhysParams::new(params.m, z, params.alpha, 0.0) {
            Ok(p) => p,
            Err(e) => {
                out.push(Check::failed(format!("Z = {z}"), e));
                continue;
            }
        };
        let mut worst = 0.0f64;
        let mut nodes_ok = true;
        for n in 1..=n_max {
            let e0 = energy_closed_form(n, &p).unwrap_or(f64::NAN);
            for q in QuantumNumbers::splittings(n, Spin::Up) {
                match shoot_eigenvalue(q.nprime, q.kappa, &p, &RadialGrid::for_state(n, &p)) {
                    Ok(r) => {
                        worst = worst.max(((r.energy - e0) / e0).abs());
                        nodes_ok &= r.f_nodes == q.nprime;
                    }
                    Err(e) => {
                        out.push(Check::failed(
                            format!("Z = {z}, (n',kappa) = ({},{})", q.nprime, q.kappa),
                            e,
                        ));
                        worst = f64::INFINITY;
                    }
                }
            }
        }
        out.push(Check::at_most(
            format!("Z = {z}: shooting vs closed form, n <= {n_max}"),
            worst,
            tol::ORACLE,
        ));
        out.push(Check::at_most(
            format!("Z = {z}: F node count = n'"),
            if nodes_ok { 0.0 } else { 1.0 },
            0.0,
        ));
    }
    out
}
