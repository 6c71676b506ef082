use std::process::{Command, Output};

use serde_json::Value;

fn hilbsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn genus7_quartics() {
    let o = hilbsq(&["gn", "--case", "genus7", "--degree", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("h0 = 65"));
}

#[test]
fn genus6_degrees() {
    let o = hilbsq(&["degrees", "--genus", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "sigma=7 y0=6 y_top=1 residual=0");
}

#[test]
fn expected_betti_diagram() {
    let o = hilbsq(&["betti", "expected", "--square", "4", "--format", "text"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row3: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with('3'))
        .unwrap()
        .split_whitespace()
        .collect();
    assert_eq!(
        row3,
        ["3", "|", ".", "20", "126", "190", "130", "45", "10", "1"]
    );
    let row2: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with('2'))
        .unwrap()
        .split_whitespace()
        .collect();
    assert_eq!(row2[3], "10");
}

#[test]
fn betti_json_round_trips() {
    for fixture in ["S2_G7", "DEF_G7", "S2_G8_PARTIAL"] {
        let o = hilbsq(&["betti", "show", "--fixture", fixture, "--format", "json"]);
        assert!(o.status.success());
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let t = hilbsq_core::betti::table_from_json(&v).unwrap();
        assert_eq!(t, hilbsq_core::betti::paper_fixture(fixture).unwrap());
    }
}

#[test]
fn cohomology_json_round_trips() {
    let o = hilbsq(&[
        "bwb",
        "gr",
        "--k",
        "2",
        "--n",
        "6",
        "--pattern",
        "2,2",
        "--twist",
        "-2",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t = hilbsq_core::bwb::CohomologyTable::from_json(&v).unwrap();
    assert_eq!(t.get(4), 1.into());
}

#[test]
fn spinor_sections_on_q8() {
    let o = hilbsq(&[
        "bwb",
        "quadric",
        "--m",
        "4",
        "--weight",
        "1/2,1/2,1/2,1/2,-1/2",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "h0 = 16");
}

#[test]
fn validate_fixture() {
    let o = hilbsq(&["betti", "validate", "--fixture", "s2_g7"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn selftest_passes() {
    let o = hilbsq(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        9
    );
}

#[test]
fn selftest_json_shape() {
    let o = hilbsq(&["selftest", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 9);
    for c in arr {
        for key in ["name", "expected", "got", "pass"] {
            assert!(c.get(key).is_some());
        }
    }
}

#[test]
fn override_mismatch_exits_3() {
    let dir = std::env::temp_dir().join(format!("hilbsq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"c1": -3, "c2": 8, "c3": -10}"#).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"c1": -4, "c2": 8, "c3": -10}"#).unwrap();
    let o = hilbsq(&["selftest", "--chern-file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = hilbsq(&[
        "degrees",
        "--genus",
        "7",
        "--chern-file",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = hilbsq(&["selftest", "--chern-file", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = hilbsq(&[
        "selftest",
        "--chern-file",
        dir.join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_input_exits_2_with_one_line() {
    for args in [
        &["hilbert", "--square", "3", "--power", "1"][..],
        &["betti", "show", "--fixture", "nope"],
        &["gn", "--case", "genus9", "--degree", "1"],
        &["degrees", "--genus", "4"],
        &["frobnicate"],
        &["ideal", "--square", "4", "--degree", "2", "--bogus"],
    ] {
        let o = hilbsq(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("hilbsq: invalid-input: "));
    }
}

#[test]
fn sweep_preserves_order() {
    let o = hilbsq(&["degrees", "--sweep", "6..12", "--format", "csv"]);
    assert!(o.status.success());
    let genera: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    assert_eq!(genera, ["6", "7", "8", "9", "10", "11", "12"]);
    let o = hilbsq(&["degrees", "--sweep", "6..20"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("genus 17"));
    let o = hilbsq(&[
        "mukai", "--sweep", "6..8", "--vector", "2,1,2", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let squares: Vec<i64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["square"].as_i64().unwrap())
        .collect();
    assert_eq!(squares, [2, 4, 6]);
}

#[test]
fn output_is_deterministic() {
    let args = ["degrees", "--sweep", "6..16", "--format", "json"];
    assert_eq!(hilbsq(&args).stdout, hilbsq(&args).stdout);
}

#[test]
fn hilbert_and_ideal() {
    assert_eq!(
        stdout(&hilbsq(&["hilbert", "--square", "4", "--power", "1"])).trim(),
        "h0(H^1) = 10"
    );
    assert_eq!(
        stdout(&hilbsq(&["ideal", "--square", "6", "--degree", "3"])).trim(),
        "dim I_3 = 245"
    );
}
