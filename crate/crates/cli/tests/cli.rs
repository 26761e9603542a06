use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use qlin_cli::{run, Outcome};

fn write(name: &str, body: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn qlin(args: &[&str]) -> Outcome {
    run(std::iter::once("qlin").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = qlin(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn bell() -> String {
    write("bell.txt", "qubits 2\nH 0\nCNOT 0 1\n")
}

#[test]
fn bell_histogram() {
    let f = bell();
    let out = ok(&["simulate", &f, "--shots", "10000", "--seed", "3", "--format", "json"]);
    let h: BTreeMap<String, u64> = serde_json::from_str(&out).unwrap();
    assert_eq!(h.keys().collect::<Vec<_>>(), ["00", "11"]);
    for v in h.values() {
        let freq = *v as f64 / 10000.0;
        assert!((0.48..=0.52).contains(&freq));
    }
}

#[test]
fn identity_histogram() {
    let f = write("id1.txt", "qubits 1\n");
    let out = ok(&["simulate", &f, "--shots", "25", "--seed", "1", "--format", "json"]);
    assert_eq!(out, "{\"0\":25}\n");
}

#[test]
fn zero_shots_is_usage_error() {
    let out = qlin(&["simulate", &bell(), "--shots", "0"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error[usage]:"));
}

#[test]
fn bell_stats() {
    let out = ok(&["stats", &bell(), "--format", "json"]);
    assert_eq!(out, "{\"qubits\":2,\"depth\":2,\"counts\":{\"H\":1,\"P\":0,\"CNOT\":1}}\n");
    assert!(ok(&["stats", &bell()]).contains("depth 2\n"));
}

#[test]
fn qasm_round_trip_same_histogram() {
    let f = write("mixed.txt", "qubits 3\nH 0\nP 0.3 0\nCNOT 0 2\nH 1\nP -pi/8 1\nCNOT 1 0\nH 2\n");
    let qasm = ok(&["export-qasm", &f]);
    let g = write("mixed.qasm", &qasm);
    let a = ok(&["simulate", &f, "--shots", "500", "--seed", "11", "--format", "json"]);
    let b = ok(&["simulate", &g, "--shots", "500", "--seed", "11", "--format", "json"]);
    assert_eq!(a, b);
    let c = ok(&["export-qasm", &g]);
    assert_eq!(qasm, c);
}

#[test]
fn qft_one_is_hadamard() {
    assert_eq!(ok(&["qft", "--n", "1"]), "qubits 1\nH 0\n");
}

#[test]
fn qft_output_parses_back() {
    let text = ok(&["qft", "--n", "4"]);
    let f = write("qft4.txt", &text);
    let stats = ok(&["stats", &f, "--format", "json"]);
    assert!(stats.contains("\"H\":4"));
}

#[test]
fn optimise_reports_and_writes() {
    let f = write("redundant.txt", "qubits 2\nH 0\nH 0\nCNOT 0 1\nCNOT 0 1\nP 0.5 1\nP -0.5 1\nH 1\n");
    let out_path = write("redundant.opt.txt", "");
    let text = ok(&["optimise", &f, "--output", &out_path]);
    assert_eq!(text, "before: depth 7, H 3, P 2, CNOT 2\nafter: depth 1, H 1, P 0, CNOT 0\n");
    assert_eq!(std::fs::read_to_string(&out_path).unwrap(), "qubits 2\nH 1\n");
}

#[test]
fn draw_bell() {
    assert_eq!(ok(&["draw", &bell()]), "q0: -H-@-\nq1: ---X-\n");
}

#[test]
fn coin_prints_one_bit() {
    let out = ok(&["coin", "--seed", "7"]);
    assert!(out == "0\n" || out == "1\n");
}

#[test]
fn qaoa_triangle() {
    let g = write("k3.txt", "vertices 3\nedge 0 1\nedge 1 2\nedge 0 2\n");
    let out = ok(&["qaoa", "--graph", &g, "--k", "50", "--p", "1", "--seed", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["history"].as_array().unwrap().len(), 50);
}

#[test]
fn vqe_single_z() {
    let h = write("z.txt", "1.0 Z\n");
    let out = ok(&[
        "vqe", "--ham", &h, "--depth", "1", "--k", "60", "--nsamples", "2000", "--seed", "7", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["best_energy"].as_f64().unwrap() <= -0.9);
    assert_eq!(v["best_params"].as_array().unwrap().len(), 2);
}

#[test]
fn rus_limit_is_runtime_error() {
    let out = qlin(&["rus", "--max-iter", "1", "--shots", "200", "--seed", "1"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.starts_with("error[runtime]:"));
}

#[test]
fn error_codes_and_prefixes() {
    let cnot = write("bad-cnot.txt", "qubits 1\nCNOT 0 0\n");
    let wire = write("bad-wire.txt", "qubits 1\nH 3\n");
    let cases: [(&[&str], i32, &str); 7] = [
        (&["stats", &cnot], 2, "error[parse]:"),
        (&["stats", &wire], 2, "error[parse]:"),
        (&["stats", "/nonexistent/file.txt"], 3, "error[runtime]:"),
        (&["coin", "--format", "json"], 1, "error[usage]:"),
        (&["coin", "--backend", "gpu"], 1, "error[usage]:"),
        (&["frobnicate"], 1, "error[usage]:"),
        (&["qft"], 1, "error[usage]:"),
    ];
    for (args, code, prefix) in cases {
        let out = qlin(args);
        assert_eq!(out.code, code, "{args:?}");
        assert!(out.stderr.starts_with(prefix), "{args:?}: {}", out.stderr);
        assert_eq!(out.stderr.lines().count(), 1, "{args:?}");
    }
    assert!(qlin(&["stats", &cnot]).stderr.contains("line 2"));
    assert!(qlin(&["stats", &wire]).stderr.contains("line 2"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(qlin(&["--help"]).code, 0);
    assert_eq!(qlin(&["--version"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qlin");
    let out = Command::new(bin).args(["coin", "--seed", "1"]).output().unwrap();
    assert!(out.status.success());
    let out = Command::new(bin).args(["simulate", &bell(), "--shots", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let bad = write("bin-bad.txt", "qubits 1\nH 3\n");
    let out = Command::new(bin).args(["draw", &bad]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
