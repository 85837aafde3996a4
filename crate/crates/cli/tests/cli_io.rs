//! End-to-end checks of the binary: exit codes, JSON output and file-driven
//! inputs.

use std::process::Command;

fn qalg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qalg"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("qalg-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file written");
    path
}

#[test]
fn demo_subcommands_exit_zero() {
    for args in [
        vec!["chsh"],
        vec!["mermin-peres"],
        vec!["hydrogen"],
        vec!["moon"],
        vec!["weak-law"],
        vec!["complementarity"],
        vec!["probability"],
        vec!["evolve"],
    ] {
        let output = qalg().args(&args).output().expect("binary runs");
        assert!(
            output.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
}

#[test]
fn chsh_json_matches_library_numbers() {
    let output = qalg().args(["chsh", "--json"]).output().unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let gamma = value["rows"][0]["computed"].as_f64().unwrap();
    let (quadruple, ensemble) = qalg::build_spinpair();
    let report = qalg::chsh(&ensemble, &quadruple).unwrap();
    assert_eq!(gamma, report.gamma, "JSON output must carry identical numerics");
    assert_eq!(value["pass"], serde_json::Value::Bool(true));
}

#[test]
fn axioms_emits_json_and_exit_zero() {
    let output = qalg()
        .args(["axioms", "--dim", "4", "--samples", "200", "--seed", "42"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["pass"], serde_json::Value::Bool(true));
    assert_eq!(value["algebra"]["samples"], serde_json::json!(200));

    let diagonal = qalg()
        .args(["axioms", "--kind", "diagonal", "--dim", "8"])
        .output()
        .unwrap();
    assert!(diagonal.status.success());
    let value: serde_json::Value = serde_json::from_slice(&diagonal.stdout).unwrap();
    let checks = value["algebra"]["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "commutative multiplication"));
}

#[test]
fn corrupted_json_input_exits_two() {
    let path = write_temp("corrupt.json", "{ not json");
    for command in ["probability", "axioms", "chsh", "evolve", "complementarity"] {
        let output = qalg()
            .args([command, "--file"])
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(
            output.status.code(),
            Some(2),
            "{command} must exit 2 on corrupt input"
        );
        let stderr = String::from_utf8_lossy(&output.stderr);
        assert!(stderr.contains("json"), "diagnostic: {stderr}");
    }
}

#[test]
fn dimension_mismatch_exits_two_with_index() {
    let path = write_temp(
        "mismatch.json",
        r#"{"ensemble":{"form":"pure","ctx":{"kind":"matrix","dim":2},"data":[[1.0,0.0],[0.0,0.0]]},
            "effect":{"kind":"matrix","dim":2,"data":[[1.0,0.0],[0.0,0.0],[0.0,0.0]],"role":"event"}}"#,
    );
    let output = qalg()
        .args(["probability", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("index"), "diagnostic: {stderr}");
}

#[test]
fn probability_file_input_works() {
    let path = write_temp(
        "prob.json",
        r#"{"ensemble":{"form":"pure","ctx":{"kind":"matrix","dim":2},"data":[[1.0,0.0],[1.0,0.0]]},
            "effect":{"kind":"matrix","dim":2,"data":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]],"role":"event"}}"#,
    );
    let output = qalg()
        .args(["probability", "--json", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let p = value["probability"].as_f64().unwrap();
    assert!((p - 0.5).abs() < 1e-12);
}

#[test]
fn evolve_file_round_trip() {
    let path = write_temp(
        "evolve.json",
        r#"{
          "family": {"kind":"hamiltonian","h":{"kind":"matrix","dim":2,
                     "data":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[-1.0,0.0]]},"hbar":1.0},
          "target": {"type":"state","state":{"kind":"ensemble","ensemble":
                     {"form":"pure","ctx":{"kind":"matrix","dim":2},"data":[[1.0,0.0],[0.0,0.0]]}}},
          "t": 0.7
        }"#,
    );
    let output = qalg().args(["evolve", "--file"]).arg(&path).output().unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["t"].as_f64(), Some(0.7));
    assert_eq!(value["residuals"]["pass"], serde_json::Value::Bool(true));
    assert_eq!(value["evolved"]["type"], "state");
}

#[test]
fn chsh_file_input_reports() {
    // product state, commuting quadruple: gamma = 1
    let path = write_temp(
        "chsh.json",
        r#"{
          "ensemble": {"form":"pure","ctx":{"kind":"matrix","dim":4},
                       "data":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]},
          "quadruple": [
            {"kind":"matrix","dim":4,"data":[[0,0],[0,0],[1,0],[0,0], [0,0],[0,0],[0,0],[1,0], [1,0],[0,0],[0,0],[0,0], [0,0],[1,0],[0,0],[0,0]]},
            {"kind":"matrix","dim":4,"data":[[0,0],[1,0],[0,0],[0,0], [1,0],[0,0],[0,0],[0,0], [0,0],[0,0],[0,0],[1,0], [0,0],[0,0],[1,0],[0,0]]},
            {"kind":"matrix","dim":4,"data":[[1,0],[0,0],[0,0],[0,0], [0,0],[1,0],[0,0],[0,0], [0,0],[0,0],[-1,0],[0,0], [0,0],[0,0],[0,0],[-1,0]]},
            {"kind":"matrix","dim":4,"data":[[1,0],[0,0],[0,0],[0,0], [0,0],[-1,0],[0,0],[0,0], [0,0],[0,0],[1,0],[0,0], [0,0],[0,0],[0,0],[-1,0]]}
          ]
        }"#,
    );
    let output = qalg().args(["chsh", "--file"]).arg(&path).output().unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let gamma = value["gamma"].as_f64().unwrap();
    assert!((gamma - 1.0).abs() < 1e-12);
}

#[test]
fn hydrogen_flag_overrides_constants() {
    let output = qalg()
        .args(["hydrogen", "--r0", "1.0", "--json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    // in r0 = 1 units the meter rows coincide with the ratio rows
    let ratio = value["rows"][0]["computed"].as_f64().unwrap();
    let meters = value["rows"][2]["computed"].as_f64().unwrap();
    assert!((ratio - meters).abs() < 1e-15);
}
