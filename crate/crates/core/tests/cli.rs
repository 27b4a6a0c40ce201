use std::path::Path;
use std::process::{Command, Output};

use qident::report::{canonical_json, CheckReport, Status};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().unwrap()
}

fn reports(path: &Path) -> Vec<CheckReport> {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn passing_grid_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = verify(&[
        "--k",
        "2..3",
        "--flavor",
        "regular",
        "--trunc-n",
        "16",
        "--trunc-x",
        "6",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let rs = reports(&out);
    assert!(!rs.is_empty());
    assert!(rs.iter().all(|r| !r.failed()));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains(" 0 failed,"));
}

#[test]
fn failing_tuple_exits_one() {
    let o = verify(&[
        "--checks",
        "cor34",
        "--k",
        "2",
        "--a",
        "2",
        "--d",
        "2",
        "--s",
        "1",
        "--flavor",
        "over",
        "--trunc-n",
        "10",
        "--trunc-x",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL at (m, n) = (1, 0)"));
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        &["--k", "1"][..],
        &["--k", "2..3", "--a", "9"],
        &["--checks", "lemma99"],
        &["--d", "x"],
        &["--trunc-n", "-1"],
    ] {
        let o = verify(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}: nothing computed");
    }
}

#[test]
fn empty_check_list_is_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = verify(&["--checks", "", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(reports(&out).is_empty());
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        verify(&[
            "--k",
            "2..3",
            "--trunc-n",
            "14",
            "--trunc-x",
            "5",
            "--out",
            out.to_str().unwrap(),
        ]);
        canonical_json(&reports(&out)).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn json_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    verify(&[
        "--checks",
        "thm36",
        "--k",
        "5",
        "--d",
        "4",
        "--s",
        "1",
        "--a",
        "3",
        "--flavor",
        "regular",
        "--trunc-n",
        "25",
        "--out",
        out.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let r = &v[0];
    assert_eq!(r["check_id"], "thm36.d-equals-a+s");
    assert_eq!(r["status"], "pass");
    assert!(r["first_mismatch"].is_null());
    for key in ["k", "a", "d", "s", "flavor", "trunc_x", "trunc_n"] {
        assert!(!r["params"][key].is_null(), "{key}");
    }
    assert!(r["runtime_ms"].is_u64());
}

#[test]
fn mismatch_values_are_strings() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    verify(&[
        "--checks",
        "thm36",
        "--k",
        "2",
        "--a",
        "2",
        "--d",
        "2",
        "--s",
        "1",
        "--flavor",
        "over",
        "--trunc-n",
        "8",
        "--out",
        out.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["first_mismatch"]["lhs"].is_string());
    assert_eq!(v[0]["first_mismatch"]["m"], -1);
}

#[test]
fn alternative_condition_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    verify(&[
        "--checks",
        "thm36",
        "--k",
        "3",
        "--flavor",
        "regular",
        "--trunc-n",
        "10",
        "--alt-condition",
        "--out",
        out.to_str().unwrap(),
    ]);
    let rs = reports(&out);
    assert!(rs.iter().all(|r| r.check_id.ends_with("+alt")));
}

/// No tuple meeting the stated hypotheses is skipped: every skip reason
/// names a violated hypothesis.
#[test]
fn skips_name_a_violated_condition() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    verify(&[
        "--checks",
        "thm36,cor34",
        "--k",
        "2..4",
        "--trunc-n",
        "10",
        "--trunc-x",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    for r in reports(&out) {
        if let Status::Skipped(why) = &r.status {
            assert!(
                why.contains("mod") || why.contains("d = 1 or 2") || why.contains("!="),
                "{why}"
            );
        }
    }
}

#[test]
fn csv_export() {
    let dir = tempfile::tempdir().unwrap();
    let csv_dir = dir.path().join("tables");
    let o = verify(&[
        "--checks",
        "lemma31",
        "--k",
        "2",
        "--d",
        "1",
        "--flavor",
        "regular",
        "--trunc-n",
        "8",
        "--trunc-x",
        "4",
        "--csv-dir",
        csv_dir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let counters = std::fs::read_to_string(csv_dir.join("counters.csv")).unwrap();
    let mut lines = counters.lines();
    assert_eq!(lines.next(), Some("k,a,d,s,flavor,m,n,count"));
    assert!(lines.any(|l| l == "2,2,1,0,regular,0,0,1"));
    let g = std::fs::read_to_string(csv_dir.join("g_k2_a2_d1_s0_regular.csv")).unwrap();
    assert!(g.starts_with("x_exp,q_exp,coefficient\n0,0,1\n"));
}
