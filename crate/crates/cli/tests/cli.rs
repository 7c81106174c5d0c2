use std::process::{Command, Output};

use serde_json::Value;

fn ll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ll"))
        .args(args)
        .env_remove("LL_ALPHA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Header and rows of a CSV document.
fn csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let head = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_owned)
        .collect();
    (
        head,
        lines
            .map(|l| l.split(',').map(str::to_owned).collect())
            .collect(),
    )
}

fn column(head: &[String], name: &str) -> usize {
    head.iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn spectrum_in_ev() {
    let o = ll(&["spectrum", "--Z", "1", "--n-max", "3", "--units", "eV"]);
    assert!(o.status.success());
    let (head, rows) = csv(&stdout(&o));
    assert_eq!(rows.len(), 6);
    let e: f64 = rows[0][column(&head, "E_closed_form")].parse().unwrap();
    assert!(((e + 13.6057) / 13.6057).abs() < 1e-3, "{e}");
    for r in &rows {
        let err: f64 = r[column(&head, "rel_err")].parse().unwrap();
        assert!(err < 1e-6, "{err}");
    }
}

#[test]
fn spectrum_finite_eps_shifted_root() {
    let o = ll(&["spectrum", "--Z", "1", "--n-max", "1", "--eps", "1e-4"]);
    assert!(o.status.success());
    let (head, rows) = csv(&stdout(&o));
    let closed: f64 = rows[0][column(&head, "E_closed_form")].parse().unwrap();
    let shifted: f64 = rows[0][column(&head, "E_finite_eps_shifted")]
        .parse()
        .unwrap();
    assert!(((shifted - closed) / closed).abs() < 1e-3);
    // the raw root sits near the threshold eps*m
    let raw: f64 = rows[0][column(&head, "E_finite_eps")].parse().unwrap();
    assert!((raw - shifted - 1e-4).abs() < 1e-12);
}

#[test]
fn zero_n_max_is_a_usage_error() {
    assert_eq!(ll(&["spectrum", "--n-max", "0"]).status.code(), Some(2));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(ll(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(ll(&["scatter", "--V0", "1"]).status.code(), Some(2));
    assert_eq!(
        ll(&["wavefunction", "--state", "1p"]).status.code(),
        Some(2)
    );
    assert_eq!(ll(&["spectrum", "--eps", "-1"]).status.code(), Some(2));
    assert_eq!(
        ll(&["scatter", "--step", "--E", "-1"]).status.code(),
        Some(2)
    );
}

#[test]
fn ground_state_header() {
    let o = ll(&[
        "wavefunction",
        "--state",
        "1s",
        "--spin",
        "up",
        "--Z",
        "1",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let st = &doc["meta"]["state"];
    let d0 = st["d0"].as_f64().unwrap();
    assert!((d0 - 0.98973296).abs() < 1e-8);
    let ratio = st["ratio"].as_f64().unwrap();
    assert!((ratio - 0.5 / std::f64::consts::PI.sqrt()).abs() < 1e-8);
    // (1, 0, -i d0, 0) at theta = 0
    let sp = st["spinor_at_theta"].as_array().unwrap();
    let z = |i: usize, k: usize| sp[i][k].as_f64().unwrap();
    assert_eq!((z(0, 0), z(0, 1)), (1.0, 0.0));
    assert_eq!((z(1, 0), z(1, 1), z(3, 0), z(3, 1)), (0.0, 0.0, 0.0, 0.0));
    assert_eq!(z(2, 0), 0.0);
    assert!((z(2, 1) + d0).abs() < 1e-15);
    assert!(doc["conventions"].is_object());
    assert_eq!(doc["rows"].as_array().unwrap().len(), 201);
}

#[test]
fn wavefunction_csv_is_normalized_and_writes_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wf.csv");
    let o = ll(&[
        "wavefunction",
        "--state",
        "2p",
        "--r-max",
        "60",
        "--points",
        "3001",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (head, rows) = csv(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(head, ["r", "f", "g"]);
    let v: Vec<[f64; 3]> = rows
        .iter()
        .map(|r| [0, 1, 2].map(|i| r[i].parse().unwrap()))
        .collect();
    // trapezoid on a uniform grid is enough at this resolution
    let h = v[1][0] - v[0][0];
    let norm: f64 = v.iter().map(|[r, f, g]| (f * f + g * g) * r * r * h).sum();
    assert!((norm - 1.0).abs() < 1e-4, "{norm}");
    let header: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("wf.csv.json")).unwrap())
            .unwrap();
    assert_eq!(header["meta"]["state"]["kappa"], 2);
}

#[test]
fn step_reflection() {
    let o = ll(&["scatter", "--step", "--V0", "0.5", "--m", "1", "--E", "1"]);
    assert!(o.status.success());
    let (head, rows) = csv(&stdout(&o));
    let r: f64 = rows[0][column(&head, "R")].parse().unwrap();
    assert!((r - 0.0294373).abs() < 1e-7, "{r}");
}

#[test]
fn barrier_sweep_conserves_flux_in_order() {
    let o = ll(&[
        "scatter",
        "--barrier",
        "--width",
        "2",
        "--V0",
        "1",
        "--E-min",
        "0.1",
        "--E-max",
        "3",
        "--E-steps",
        "30",
    ]);
    assert!(o.status.success());
    let (head, rows) = csv(&stdout(&o));
    assert_eq!(rows.len(), 30);
    let e: Vec<f64> = rows
        .iter()
        .map(|r| r[column(&head, "E")].parse().unwrap())
        .collect();
    assert!(e.windows(2).all(|w| w[0] < w[1]));
    for r in &rows {
        let s: f64 = r[column(&head, "R_plus_T")].parse().unwrap();
        let (t, ts): (f64, f64) = (
            r[column(&head, "T")].parse().unwrap(),
            r[column(&head, "T_schrodinger")].parse().unwrap(),
        );
        assert!((s - 1.0).abs() < 1e-10 && (t - ts).abs() < 1e-10);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["spectrum", "--n-max", "3", "--eps", "1e-3"];
    assert_eq!(ll(&args).stdout, ll(&args).stdout);
    let args = ["scatter", "--step", "--E-steps", "50", "--format", "json"];
    assert_eq!(ll(&args).stdout, ll(&args).stdout);
}

#[test]
fn verify_suites_exit_zero() {
    let o = ll(&["verify", "--suite", "algebra"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() > 10);
    assert!(!stdout(&o).contains("FAIL"));
    assert_eq!(
        ll(&["verify", "--suite", "commutators", "--eps", "1e-3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(ll(&["verify", "--suite", "oracle"]).status.code(), Some(0));
}

#[test]
fn verify_failure_exits_one() {
    // alpha large enough that the eV display check cannot hold
    let o = ll(&[
        "verify", "--suite", "coulomb", "--alpha", "0.2", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(",false"));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    assert_eq!(
        ll(&["spectrum", "--n-max", "1", "-o", path.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn alpha_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ll"))
        .args([
            "spectrum",
            "--n-max",
            "1",
            "--no-shooting",
            "--format",
            "json",
        ])
        .env("LL_ALPHA", "0.01")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["meta"]["params"]["alpha"], 0.01);
    let e = doc["rows"][0]["E_closed_form"].as_f64().unwrap();
    assert!((e + 0.5e-4).abs() < 1e-18);
}

#[test]
fn oracle_compare_rows() {
    let o = ll(&["oracle-compare", "--n-max", "2", "--Z", "2"]);
    assert!(o.status.success());
    let (head, rows) = csv(&stdout(&o));
    assert_eq!(rows.len(), 3);
    for r in &rows {
        assert_eq!(
            r[column(&head, "nodes_series")],
            r[column(&head, "nodes_shooting")]
        );
        let err: f64 = r[column(&head, "rel_err")].parse().unwrap();
        assert!(err < 1e-6);
    }
}
