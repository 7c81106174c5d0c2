use std::path::PathBuf;

use ll_core::coulomb::{
    continuum_threshold, energy_closed_form, ground_state, solve_energy_finite_eps, solve_radial,
    QuantumNumbers, Spin,
};
use ll_core::oracle::{quadrature_norm, shoot_eigenvalue, RadialDensity, RadialGrid};
use ll_core::planewave::{
    schrodinger_barrier_transmission, schrodinger_step, solve_barrier, solve_step,
};
use ll_core::verify::{run_suite, Bound, Suite, VerifyConfig};
use ll_core::{PhysParams, RadialSolution};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Common, Format, Units};
use crate::output::{emit, Cell, CliError, Report, Table};

#[derive(Serialize)]
struct ParamsMeta {
    m: f64,
    #[serde(rename = "Z")]
    z: u32,
    alpha: f64,
    eps: f64,
}

fn params(c: &Common) -> Result<PhysParams, CliError> {
    Ok(PhysParams::new(c.m, c.z, c.alpha, c.eps)?)
}

fn energy(c: &Common, e: f64) -> f64 {
    match c.units {
        Units::Natural => e,
        Units::Ev => e * c.electron_mass_ev,
    }
}

fn meta(c: &Common, command: &str) -> Value {
    json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "params": ParamsMeta { m: c.m, z: c.z, alpha: c.alpha, eps: c.eps },
        "units": match c.units { Units::Natural => "natural", Units::Ev => "eV" },
    })
}

fn conventions(c: &Common) -> Value {
    let energy_unit = match c.units {
        Units::Natural => {
            "natural units (hbar = c = 1), energies in units of the mass scale".to_owned()
        }
        Units::Ev => format!("eV, natural energy unit = {} eV", c.electron_mass_ev),
    };
    // the ratio depends only on Z alpha; absent for invalid parameters
    let ratio = params(c)
        .ok()
        .and_then(|p| ground_state(&p, Spin::Up).ok())
        .map(|g| g.ratio());
    json!({
        "energy_unit": energy_unit,
        "inputs": "natural units regardless of --units",
        "length_unit": "Bohr radius a_B = 1/(alpha m)",
        "series_normalization": "a_0 = 1 before normalization",
        "radial_normalization": "integral of (f^2 + g^2) r^2 dr = 1, r in a_B",
        "ground_state_density": "psi^dagger psi, both components",
        "n_ratio_computed_over_formula": ratio,
        "csv_float_format": "{:.16e}",
    })
}

/// Writes the report in the requested format.
fn write(c: &Common, report: &Report, default: Format) -> Result<(), CliError> {
    let text = match c.format.unwrap_or(default) {
        Format::Json => report.to_json(),
        Format::Csv | Format::Text => report.table.to_csv(),
    };
    emit(&text, c.output.as_deref())
}

pub fn spectrum(c: &Common, n_max: u32, shooting: bool) -> Result<(), CliError> {
    let p = params(c)?;
    let p0 = PhysParams { eps: 0.0, ..p };
    let threshold = continuum_threshold(&p);
    let states: Vec<QuantumNumbers> = (1..=n_max)
        .flat_map(|n| QuantumNumbers::splittings(n, Spin::Up))
        .collect();
    let rows: Result<Vec<Vec<Cell>>, CliError> = states
        .par_iter()
        .map(|q| {
            let n = q.n();
            let closed = energy_closed_form(n, &p0)?;
            let raw = solve_energy_finite_eps(q.nprime, q.kappa, &p)?;
            let shifted = raw - threshold;
            let shot = if shooting {
                shoot_eigenvalue(q.nprime, q.kappa, &p, &RadialGrid::for_state(n, &p))?.energy
            } else {
                f64::NAN
            };
            Ok(vec![
                n.into(),
                q.nprime.into(),
                q.kappa.into(),
                q.j().into(),
                energy(c, closed).into(),
                energy(c, raw).into(),
                energy(c, shifted).into(),
                energy(c, shot).into(),
                ((shot - raw) / shifted).abs().into(),
            ])
        })
        .collect();
    let mut table = Table::new(&[
        "n",
        "n_prime",
        "kappa",
        "j",
        "E_closed_form",
        "E_finite_eps",
        "E_finite_eps_shifted",
        "E_shooting",
        "rel_err",
    ]);
    table.rows = rows?;
    write(
        c,
        &Report {
            meta: meta(c, "spectrum"),
            conventions: conventions(c),
            table,
        },
        Format::Csv,
    )
}

struct SeriesDensity<'a>(&'a RadialSolution);

impl RadialDensity<f64> for SeriesDensity<'_> {
    fn radial_density(&self, r: f64) -> f64 {
        self.0
            .eval(r)
            .map(|(f, g)| f * f + g * g)
            .unwrap_or(f64::NAN)
    }

    fn angular_factor(&self) -> f64 {
        1.0
    }
}

pub struct WavefunctionArgs<'a> {
    pub state: &'a str,
    pub spin: Spin,
    pub theta: f64,
    pub phi: f64,
    pub r_max: f64,
    pub points: u32,
}

pub fn wavefunction(c: &Common, a: &WavefunctionArgs<'_>) -> Result<(), CliError> {
    if !(a.r_max > 0.0) || !a.r_max.is_finite() {
        return Err(CliError::Usage(format!(
            "--r-max must be positive, got {}",
            a.r_max
        )));
    }
    let p = params(c)?;
    let q = QuantumNumbers::from_label(a.state, a.spin)?;
    let sol = solve_radial(q, &p)?;
    let norm = quadrature_norm(&SeriesDensity(&sol), &RadialGrid::for_state(q.n(), &p))?;
    let ab = p.bohr_radius();
    let n_radial = 1.0 / norm.sqrt();
    // positive upper component at the origin, lengths in a_B
    let scale = sol.b_coeffs[0].signum() * n_radial * ab.powf(1.5);

    let mut table = Table::new(&["r", "f", "g"]);
    for i in 0..a.points {
        let rho = a.r_max * f64::from(i) / f64::from(a.points - 1);
        let (f, g) = sol.eval(rho * ab)?;
        table.push(vec![rho.into(), (f * scale).into(), (g * scale).into()]);
    }

    let mut m = meta(c, "wavefunction");
    let d0 = sol.a_coeffs[0] / sol.b_coeffs[0];
    let mut state = json!({
        "state": a.state,
        "spin": a.spin.to_string(),
        "n": q.n(),
        "n_prime": q.nprime,
        "kappa": q.kappa,
        "j": q.j(),
        "m_j": q.m_j(),
        "E": energy(c, sol.energy),
        "E_shifted": energy(c, sol.energy - continuum_threshold(&p)),
        "s": sol.constants.s,
        "lambda": sol.constants.lambda,
        "lambda_a_B": sol.constants.lambda * ab,
        "d0": d0,
        "N_radial": n_radial,
        "N_computed": Value::Null,
        "N_formula": Value::Null,
        "ratio": Value::Null,
        "theta": a.theta,
        "phi": a.phi,
        "spinor_at_theta": Value::Null,
    });
    if (q.nprime, q.kappa) == (0, 1) {
        let wf = ground_state(&p, a.spin)?;
        let spinor: Vec<[f64; 2]> = wf
            .angular(a.theta, a.phi)
            .iter()
            .map(|z| [z.re, z.im])
            .collect();
        state["d0"] = json!(wf.d0);
        state["N_computed"] = json!(wf.n_computed);
        state["N_formula"] = json!(wf.n_formula);
        state["ratio"] = json!(wf.ratio());
        state["spinor_at_theta"] = json!(spinor);
    }
    m["state"] = state;
    let report = Report {
        meta: m,
        conventions: conventions(c),
        table,
    };

    match c.format.unwrap_or(Format::Csv) {
        Format::Json => emit(&report.to_json(), c.output.as_deref()),
        Format::Csv | Format::Text => {
            match &c.output {
                Some(path) => {
                    let mut side = path.clone().into_os_string();
                    side.push(".json");
                    emit(&report.header_json(), Some(&PathBuf::from(side)))?;
                }
                None => eprint!("{}", report.header_json()),
            }
            emit(&report.table.to_csv(), c.output.as_deref())
        }
    }
}

pub struct ScatterArgs {
    pub barrier: Option<f64>,
    pub v0: f64,
    pub energies: Vec<f64>,
}

pub fn scatter(c: &Common, a: &ScatterArgs) -> Result<(), CliError> {
    let m = c.m;
    if !(m > 0.0) {
        return Err(CliError::Usage(format!("mass must be positive, got {m}")));
    }
    let rows: Result<Vec<Vec<Cell>>, CliError> = a
        .energies
        .par_iter()
        .map(|&e| {
            let (res, rs, ts) = match a.barrier {
                None => {
                    let (rs, ts) = schrodinger_step(e, a.v0, m);
                    (solve_step(e, a.v0, m)?, rs, ts)
                }
                Some(w) => {
                    let ts = schrodinger_barrier_transmission(e, a.v0, w, m);
                    (solve_barrier(e, a.v0, w, m)?, 1.0 - ts, ts)
                }
            };
            Ok(vec![
                energy(c, e).into(),
                energy(c, a.v0).into(),
                res.reflection.into(),
                res.transmission.into(),
                (res.reflection + res.transmission).into(),
                rs.into(),
                ts.into(),
            ])
        })
        .collect();
    let mut table = Table::new(&[
        "E",
        "V0",
        "R",
        "T",
        "R_plus_T",
        "R_schrodinger",
        "T_schrodinger",
    ]);
    table.rows = rows?;
    let mut md = meta(c, "scatter");
    md["profile"] = match a.barrier {
        None => json!({ "kind": "step", "V0": a.v0 }),
        Some(w) => json!({ "kind": "barrier", "V0": a.v0, "width": w }),
    };
    write(
        c,
        &Report {
            meta: md,
            conventions: conventions(c),
            table,
        },
        Format::Csv,
    )
}

pub fn verify(c: &Common, suites: &[Suite], seed: u64) -> Result<(), CliError> {
    let cfg = VerifyConfig {
        params: params(c)?,
        seed,
    };
    let suites = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    let mut table = Table::new(&[
        "suite", "check", "value", "limit", "relation", "target", "passed",
    ]);
    let mut text = String::new();
    let mut failed = 0;
    for s in suites {
        text.push_str(&format!("[{s}]\n"));
        for chk in run_suite(s, &cfg) {
            failed += usize::from(!chk.passed);
            text.push_str(&format!("{chk}\n"));
            table.push(vec![
                s.name().into(),
                Cell::Text(chk.name.clone()),
                chk.value.into(),
                chk.limit.into(),
                match chk.bound {
                    Bound::AtMost => "<=".into(),
                    Bound::AtLeast => ">=".into(),
                    Bound::Near(_) => "near".into(),
                },
                match chk.bound {
                    Bound::Near(t) => t.into(),
                    _ => f64::NAN.into(),
                },
                chk.passed.into(),
            ]);
        }
    }
    let total = table.rows.len();
    text.push_str(&format!("{} of {total} checks passed\n", total - failed));
    let mut md = meta(c, "verify");
    md["seed"] = json!(seed);
    md["failed"] = json!(failed);
    let report = Report {
        meta: md,
        conventions: conventions(c),
        table,
    };
    match c.format.unwrap_or(Format::Text) {
        Format::Text => emit(&text, c.output.as_deref())?,
        Format::Json => emit(&report.to_json(), c.output.as_deref())?,
        Format::Csv => emit(&report.table.to_csv(), c.output.as_deref())?,
    }
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}

pub fn oracle_compare(c: &Common, n_max: u32) -> Result<(), CliError> {
    let p = params(c)?;
    let states: Vec<QuantumNumbers> = (1..=n_max)
        .flat_map(|n| QuantumNumbers::splittings(n, Spin::Up))
        .collect();
    let threshold = continuum_threshold(&p);
    let rows: Result<Vec<Vec<Cell>>, CliError> = states
        .par_iter()
        .map(|q| {
            let sol = solve_radial(*q, &p)?;
            let shot = shoot_eigenvalue(q.nprime, q.kappa, &p, &RadialGrid::for_state(q.n(), &p))?;
            let series: Vec<(f64, f64)> = shot
                .r
                .iter()
                .map(|&r| sol.eval_big(r))
                .collect::<Result<_, _>>()?;
            // least-squares scale of the shooting solution onto the series
            let (num, den) = series
                .iter()
                .zip(shot.f_values.iter().zip(&shot.g_values))
                .fold((0.0, 0.0), |(n, d), ((fs, gs), (f, g))| {
                    (n + fs * f + gs * g, d + f * f + g * g)
                });
            let k = num / den;
            let peak = series.iter().fold(0.0f64, |m, (f, g)| m.max(f.hypot(*g)));
            let diff = series
                .iter()
                .zip(shot.f_values.iter().zip(&shot.g_values))
                .fold(0.0f64, |m, ((fs, gs), (f, g))| {
                    m.max((fs - k * f).hypot(gs - k * g))
                });
            Ok(vec![
                q.n().into(),
                q.nprime.into(),
                q.kappa.into(),
                energy(c, sol.energy).into(),
                energy(c, shot.energy).into(),
                ((shot.energy - sol.energy) / (sol.energy - threshold))
                    .abs()
                    .into(),
                sol.f_nodes().into(),
                shot.f_nodes.into(),
                (diff / peak).into(),
                shot.match_defect.into(),
            ])
        })
        .collect();
    let mut table = Table::new(&[
        "n",
        "n_prime",
        "kappa",
        "E_series",
        "E_shooting",
        "rel_err",
        "nodes_series",
        "nodes_shooting",
        "max_shape_diff",
        "match_defect",
    ]);
    table.rows = rows?;
    write(
        c,
        &Report {
            meta: meta(c, "oracle-compare"),
            conventions: conventions(c),
            table,
        },
        Format::Csv,
    )
}
