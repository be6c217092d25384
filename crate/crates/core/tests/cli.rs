use std::process::Command;

use serde_json::Value;

fn verify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("verify runs")
}

#[test]
fn json_report_shape() {
    let out = verify(&["torus", "--box", "1", "--samples", "5", "--seed", "7", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for r in reports {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 7);
        assert_eq!(r["status"], "pass");
        assert_eq!(r["seed"], 7);
        assert_eq!(r["duration_ms"], 0);
        assert!(r["check_id"].as_str().unwrap().starts_with("torus."));
    }
}

#[test]
fn section_escalates_from_box_zero() {
    let out = verify(&["section", "--box", "0", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let solve = v.as_array().unwrap().iter().find(|r| r["check_id"] == "section.solve").unwrap();
    assert_eq!(solve["box"], 1);
    assert_eq!(solve["status"], "pass");
}

#[test]
fn probe_is_not_a_failure() {
    let out = verify(&["probe", "--box", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("NOT-FALSIFIED")));
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(verify(&["torus", "--box", "-1"]).status.code(), Some(2));
    assert_eq!(verify(&["torus", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(verify(&["bogus"]).status.code(), Some(2));
}

#[test]
fn report_written_to_file() {
    let dir = std::env::temp_dir().join(format!("eala-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out =
        verify(&["jacobi", "--box", "1", "--samples", "3", "--format", "json", "--report", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["check_id"], "jacobi.bracket_e");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn regenerated_fixture_matches_committed() {
    let dir = std::env::temp_dir().join(format!("eala-fixture-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("section.txt");
    let out = verify(&["--regenerate-section-fixture", "--fixture-path", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), eala::counterexample::section::SECTION_FIXTURE);
    std::fs::remove_dir_all(dir).ok();
}
