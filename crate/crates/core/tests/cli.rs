use std::path::Path;
use std::process::{Command, Output};

use rodsym::{PiecewisePoly, StepFunction};

fn rodsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rodsym")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const LEFT_HALF: &str = r#"{"interval":[-3.141592653589793,3.141592653589793],
  "breakpoints":[-3.141592653589793,0,3.141592653589793],"values":[1,0]}"#;
const ZERO: &str = r#"{"interval":[-3.141592653589793,3.141592653589793],
  "breakpoints":[-3.141592653589793,3.141592653589793],"values":[0]}"#;

#[test]
fn robin_audit_exits_zero_and_is_deterministic() {
    let a = rodsym(&["audit", "robin", "--count", "100", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let lines: Vec<&str> = std::str::from_utf8(&a.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 100);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["pass"], true);
    }
    let b = rodsym(&["audit", "robin", "--count", "100", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dirichlet_solve_of_zero_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "zero.json", ZERO);
    let out = dir.path().join("u.csv");
    let r = rodsym(&["solve", "--bc", "dirichlet", "--in", &input, "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,u"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 1001);
    for row in rows {
        let u: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(u, 0.0);
    }
}

#[test]
fn solve_json_round_trips_to_the_library_solution() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f.json", LEFT_HALF);
    let out = dir.path().join("u.json");
    let r = rodsym(&["solve", "--bc", "robin:0.7", "--in", &input, "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    let u: PiecewisePoly = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let f: StepFunction = serde_json::from_str(LEFT_HALF).unwrap();
    let direct = rodsym::solver::robin_solve(&f, rodsym::RobinParam::new(0.7).unwrap()).unwrap();
    for (x, y) in direct.sample(201) {
        assert!((u.eval(x).unwrap() - y).abs() <= 1e-12);
    }
}

#[test]
fn gap_scan_peaks_near_the_critical_centre() {
    let r = rodsym(&["gap", "scan", "--alpha", "1"]);
    assert_eq!(r.status.code(), Some(0));
    let text = String::from_utf8(r.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("b,gap_numeric,gap_formula"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 2001);
    let best = rows.iter().max_by(|a, b| a[1].total_cmp(&b[1])).unwrap();
    assert!((best[0].abs() - 0.617).abs() < 0.005, "{best:?}");
}

#[test]
fn gap_crit_and_search_formats() {
    let r = rodsym(&["gap", "crit", "--alpha-grid", "0.1,1"]);
    assert_eq!(String::from_utf8(r.stdout).unwrap(), "alpha,b_crit\n0.1,\n1.0,-0.6170072481932412\n");
    let r = rodsym(&["gap", "search", "--alpha", "0.1", "--cells", "8"]);
    assert_eq!(r.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 4);
    assert!(v["gap"].as_f64().unwrap() > 0.0);
    let r = rodsym(&["gap", "search", "--alpha", "0.1", "--cells", "8", "--measure", "1"]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"interval\": [0, 1],\n  \"breakpoints\": [0, }");
    let r = rodsym(&["rearrange", "--in", &bad, "--mode", "dec"]);
    assert_eq!(r.status.code(), Some(2));
    let err = String::from_utf8(r.stderr).unwrap();
    assert!(err.contains("line 2 column"), "{err}");

    let f = write(dir.path(), "f.json", LEFT_HALF);
    let r = rodsym(&["solve", "--bc", "neumann", "--in", &f]);
    assert_eq!(r.status.code(), Some(2));
    assert!(String::from_utf8(r.stderr).unwrap().contains("∫f = 0"));

    let r = rodsym(&["solve", "--bc", "robin:-1", "--in", &f]);
    assert_eq!(r.status.code(), Some(2));
    let r = rodsym(&["compare", "robin", "--in", &dir.path().join("missing.json").to_string_lossy()]);
    assert_eq!(r.status.code(), Some(2));
    let r = rodsym(&["frobnicate"]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn rearrange_star_and_compare() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.json", LEFT_HALF);
    let r = rodsym(&["rearrange", "--in", &f, "--mode", "sym"]);
    let g: StepFunction = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(g.eval(0.0).unwrap(), 1.0);
    assert_eq!(g.eval(3.0).unwrap(), 0.0);

    let r = rodsym(&["star", "--in", &f]);
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.starts_with("t,star\n0.0,0.0\n"));

    let r = rodsym(&["compare", "dirichlet", "--in", &f]);
    assert_eq!(r.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["theorem"], "dirichlet_pointwise");
    assert_eq!(v["pass"], true);
}

#[test]
fn inequality_checks_and_example() {
    let r = rodsym(&["check", "hl", "--seed", "3", "--count", "20"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(String::from_utf8(r.stdout).unwrap().lines().count(), 20);
    let r = rodsym(&["check", "baernstein", "--count", "2", "--grid", "256"]);
    assert_eq!(r.status.code(), Some(0));
    let r = rodsym(&["example", "--alpha", "0.5"]);
    let v: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(v["osc_u"].as_f64().unwrap() > v["osc_v"].as_f64().unwrap());
}

#[test]
fn thread_cap_must_be_positive() {
    let r = Command::new(env!("CARGO_BIN_EXE_rodsym"))
        .args(["audit", "neumann", "--count", "5"])
        .env("RODSYM_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(2));
    let r = Command::new(env!("CARGO_BIN_EXE_rodsym"))
        .args(["audit", "neumann", "--count", "5"])
        .env("RODSYM_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(0));
}
