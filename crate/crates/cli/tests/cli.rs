use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fracmem"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

/// Rows of the CSV as optional numbers (empty cells are None).
fn read_csv(p: &Path) -> (Vec<String>, Vec<Vec<Option<f64>>>) {
    let mut r = csv::Reader::from_path(p).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(|c| if c.is_empty() { None } else { Some(c.parse().unwrap()) }).collect())
        .collect();
    (header, rows)
}

fn double_integrator(a: [f64; 2], b: [f64; 2], n: usize) -> String {
    format!(
        r#"{{"n":2,"m":1,"A":[[0,1],[0,0]],"B":[[0],[1]],"alpha":0.5,"beta":0.5,"T":1,"N":{n},
        "history":{{"type":"constant","a":[{},{}]}},"b":[{},{}]}}"#,
        a[0], a[1], b[0], b[1]
    )
}

#[test]
fn simulate_free_memory_of_double_integrator() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sim.csv");
    for (a, expect) in [
        // m(T) = T^β E_{α,β+1}(A T^α) a; Γ(3/2) = √π/2 and Γ(2) = 1
        ([1.0, 0.0], [2.0 / PI.sqrt(), 0.0]),
        ([0.0, 1.0], [1.0, 2.0 / PI.sqrt()]),
    ] {
        let spec = write(&dir, "p.json", &double_integrator(a, [0.0, 0.0], 128));
        let o = run(&["simulate", s(&spec), "--out", s(&out), "--quiet"]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let (header, rows) = read_csv(&out);
        assert_eq!(header, ["t", "x_1", "x_2", "m_1", "m_2", "u_1"]);
        assert_eq!(rows.len(), 129);
        let last = rows.last().unwrap();
        assert_eq!(last[0], Some(1.0));
        for k in 0..2 {
            assert!((last[3 + k].unwrap() - expect[k]).abs() < 1e-12, "{a:?}: {:?}", last);
        }
    }
}

#[test]
fn simulate_zero_system_is_all_zero() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "z.json",
        r#"{"n":1,"m":1,"A":[0],"B":[0],"alpha":0.7,"beta":0.3,"T":2,"N":16,"history":{"type":"constant","a":[0]}}"#,
    );
    let out = dir.path().join("z.csv");
    assert_eq!(code(&run(&["simulate", s(&spec), "-o", s(&out)])), 0);
    let (_, rows) = read_csv(&out);
    assert!(rows.iter().all(|r| r[1..].iter().all(|v| *v == Some(0.0))));
}

#[test]
fn malformed_spec_is_a_schema_error() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "bad.json",
        r#"{"n":2,"m":1,"A":[[0,1,2],[0,0,0]],"B":[[0],[1]],"alpha":0.5,"beta":0.5,"T":1,"N":16,
            "history":{"type":"constant","a":[0,0]}}"#,
    );
    let o = run(&["simulate", s(&spec), "-o", s(&dir.path().join("x.csv"))]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension"));
    let missing = write(&dir, "m.json", r#"{"n":1}"#);
    assert_eq!(code(&run(&["gramian", s(&missing)])), 2);
    // β below 1 - α is not a memory order
    let short = write(
        &dir,
        "s.json",
        r#"{"n":1,"m":1,"A":[0],"B":[1],"alpha":0.3,"beta":0.2,"T":1,"N":16,"history":{"type":"constant","a":[0]}}"#,
    );
    assert_eq!(code(&run(&["gramian", s(&short)])), 2);
}

#[test]
fn gramian_examples() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "di.json", &double_integrator([0.0, 0.0], [0.0, 0.0], 64));
    let o = run(&["gramian", s(&spec)]);
    assert_eq!(code(&o), 0);
    let q = &json(&o)["Q"];
    let off = 4.0 / (3.0 * PI.sqrt());
    let expect = [[2.0 / PI, off], [off, 1.0]];
    for i in 0..2 {
        for j in 0..2 {
            assert!((num(&q[i][j]) - expect[i][j]).abs() < 1e-12 * expect[i][j]);
        }
    }
    let spec = write(
        &dir,
        "int.json",
        r#"{"n":2,"m":2,"A":[0,0,0,0],"B":[1,0,0,1],"alpha":1,"beta":0,"T":3,"N":16,"history":{"type":"constant","a":[0,0]}}"#,
    );
    let v = json(&run(&["gramian", s(&spec)]));
    assert!((num(&v["Q"][0][0]) - 3.0).abs() < 1e-13 && num(&v["Q"][0][1]).abs() < 1e-15);
    // scalar A = 0: Q = T / Γ(α+β)², with Γ(3/2)² = π/4
    let spec = write(
        &dir,
        "sc.json",
        r#"{"n":1,"m":1,"A":[0],"B":[1],"alpha":0.5,"beta":1,"T":2,"N":16,"history":{"type":"constant","a":[0]}}"#,
    );
    let v = json(&run(&["gramian", s(&spec)]));
    assert!((num(&v["Q"][0][0]) - 8.0 / PI).abs() < 1e-13);
}

#[test]
fn steer_scalar_example() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "sc.json",
        r#"{"n":1,"m":1,"A":[0],"B":[1],"alpha":0.5,"beta":0.5,"T":1,"N":64,"history":{"type":"constant","a":[0]},"b":[1],"method":"gramian"}"#,
    );
    let out = dir.path().join("u.csv");
    let o = run(&["steer", s(&spec), "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    let (header, rows) = read_csv(&out);
    assert_eq!(header, ["t", "u_1"]);
    assert!(rows.iter().all(|r| (r[1].unwrap() - 1.0).abs() < 1e-13));
    let v = json(&o);
    assert!((num(&v["energy"]) - 1.0).abs() < 1e-12);
    assert_eq!(v["method"], "gramian");
}

#[test]
fn steer_zero_problem_with_every_method() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "z.json",
        r#"{"n":2,"m":2,"A":[[0,1],[-1,0]],"B":[[1,0],[0,1]],"alpha":0.6,"beta":0.7,"T":1,"N":32,"history":{"type":"constant","a":[0,0]},"b":[0,0]}"#,
    );
    let out = dir.path().join("u.csv");
    for m in ["gramian", "rank", "kalman"] {
        let o = run(&["steer", s(&spec), "-o", s(&out), "--method", m]);
        assert_eq!(code(&o), 0, "{m}");
        let (_, rows) = read_csv(&out);
        assert!(rows.iter().all(|r| r[1..].iter().all(|v| v.is_none_or(|x| x == 0.0))), "{m}");
    }
}

#[test]
fn steer_precondition_failure_exit_code() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "di.json", &double_integrator([0.0, 0.0], [1.0, 1.0], 32));
    let o = run(&["steer", s(&spec), "-o", s(&dir.path().join("u.csv")), "--method", "rank"]);
    assert_eq!(code(&o), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank 1"));
}

#[test]
fn tolerance_miss_exit_code() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "di.json", &double_integrator([0.0, 0.0], [1.0, 1.0], 64));
    let o = run(&["steer", s(&spec), "-o", s(&dir.path().join("u.csv")), "--tol", "1e-12"]);
    assert_eq!(code(&o), 4);
    assert_eq!(json(&o)["within_tolerance"], false);
}

#[test]
fn verify_round_trip_and_failures() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "di.json", &double_integrator([0.3, -0.2], [1.0, 1.0], 128));
    let out = dir.path().join("u.csv");
    let steer = run(&["steer", s(&spec), "-o", s(&out)]);
    assert_eq!(code(&steer), 0);
    let verify = run(&["verify", s(&spec), s(&out)]);
    assert_eq!(code(&verify), 0);
    let (a, b) = (json(&steer), json(&verify));
    assert!((num(&a["residual"]) - num(&b["residual"])).abs() <= 1e-12);
    assert!((num(&a["energy"]) - num(&b["energy"])).abs() <= 1e-12);
    // grid mismatch
    assert_eq!(code(&run(&["verify", s(&spec), s(&out), "--grid", "64"])), 2);
    // zero control against b = (1, -2), no history: residual |b|∞
    let spec0 = write(&dir, "z.json", &double_integrator([0.0, 0.0], [1.0, -2.0], 16));
    let zero: String = std::iter::once("t,u_1\n".to_string())
        .chain((0..=16).map(|i| format!("{},0\n", i as f64 / 16.0)))
        .collect();
    let zfile = write(&dir, "zero.csv", &zero);
    let o = run(&["verify", s(&spec0), s(&zfile)]);
    assert_eq!(code(&o), 4);
    assert_eq!(num(&json(&o)["residual"]), 2.0);
    let bad = write(&dir, "bad.csv", "t,u_1\n0,1\n0.5,x\n");
    assert_eq!(code(&run(&["verify", s(&spec0), s(&bad)])), 2);
}

#[test]
fn singular_endpoint_control_round_trips() {
    // α + β > 1: u is unbounded at T, written as an empty cell plus factor columns
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "p.json",
        r#"{"n":2,"m":1,"A":[[-0.4,1],[-0.6,0.1]],"B":[[0.3],[1]],"alpha":0.3,"beta":1,"T":1,"N":256,
            "history":{"type":"constant","a":[0.5,-0.3]},"b":[0.8,0.4]}"#,
    );
    let out = dir.path().join("u.csv");
    let steer = run(&["steer", s(&spec), "-o", s(&out)]);
    assert_eq!(code(&steer), 0, "{}", String::from_utf8_lossy(&steer.stderr));
    let (header, rows) = read_csv(&out);
    assert_eq!(header, ["t", "u_1", "c_1"]);
    assert_eq!(rows.last().unwrap()[1], None);
    let verify = run(&["verify", s(&spec), s(&out)]);
    assert_eq!(code(&verify), 0);
    assert!((num(&json(&steer)["residual"]) - num(&json(&verify)["residual"])).abs() <= 1e-12);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "di.json", &double_integrator([0.3, -0.2], [1.0, 1.0], 128));
    let runs: Vec<(Vec<u8>, Vec<u8>)> = [None, Some("1"), None]
        .iter()
        .enumerate()
        .map(|(i, threads)| {
            let out = dir.path().join(format!("u{i}.csv"));
            let mut cmd = bin();
            cmd.args(["steer", s(&spec), "-o", s(&out)]);
            if let Some(t) = threads {
                cmd.env("FRACMEM_THREADS", t);
            }
            let o = cmd.output().unwrap();
            (o.stdout, std::fs::read(&out).unwrap())
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn sampled_history_matches_constant_history_shape() {
    // ψ ≡ 0 given as samples behaves like a zero constant history
    let dir = TempDir::new().unwrap();
    let rows: Vec<String> = (0..=16).map(|_| "[0,0]".to_string()).collect();
    let spec = write(
        &dir,
        "p.json",
        &format!(
            r#"{{"n":2,"m":1,"A":[[0,1],[0,0]],"B":[[0],[1]],"alpha":0.5,"beta":0.5,"T":1,"N":16,
               "history":{{"type":"sampled","values":[{}]}},"b":[1,1]}}"#,
            rows.join(",")
        ),
    );
    let constant = write(&dir, "c.json", &double_integrator([0.0, 0.0], [1.0, 1.0], 16));
    let a = json(&run(&["steer", s(&spec), "-o", s(&dir.path().join("a.csv"))]));
    let b = json(&run(&["steer", s(&constant), "-o", s(&dir.path().join("b.csv"))]));
    assert_eq!(a["achieved"], b["achieved"]);
    // wrong number of samples
    assert_eq!(code(&run(&["gramian", s(&spec), "--grid", "32"])), 2);
}
