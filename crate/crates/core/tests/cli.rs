use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn numrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numrad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn real_matrix(rows: &[&[f64]]) -> Value {
    json!({
        "rows": rows.len(),
        "cols": rows[0].len(),
        "entries": rows.iter().map(|r| r.iter().map(|&x| [x, 0.0]).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn write(dir: &TempDir, name: &str, value: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, value.to_string()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn radius_of_identity_and_jordan() {
    let dir = TempDir::new().unwrap();
    let id = write(
        &dir,
        "id.json",
        &real_matrix(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]),
    );
    let out = numrad(&["radius", s(&id)]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    for key in ["numerical_radius", "operator_norm", "spectral_radius"] {
        assert!((v[key].as_f64().unwrap() - 1.0).abs() < 1e-12, "{key}");
    }

    let j = write(&dir, "j.json", &real_matrix(&[&[0.0, 1.0], &[0.0, 0.0]]));
    let v = stdout_json(&numrad(&["radius", s(&j)]));
    assert!((v["numerical_radius"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    assert!((v["operator_norm"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(v["spectral_radius"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn radius_of_self_bound_example() {
    let dir = TempDir::new().unwrap();
    let b = write(&dir, "b.json", &real_matrix(&[&[-4.0, 7.0], &[-4.0, -8.0]]));
    let v = stdout_json(&numrad(&["radius", s(&b)]));
    assert!((v["numerical_radius"].as_f64().unwrap() - 8.69626).abs() < 5e-3);
}

#[test]
fn radius_rejects_rectangular_and_garbage() {
    let dir = TempDir::new().unwrap();
    let r = write(&dir, "r.json", &real_matrix(&[&[1.0, 2.0, 3.0]]));
    let out = numrad(&["radius", s(&r)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let g = dir.path().join("g.json");
    std::fs::write(&g, "{not json").unwrap();
    assert_eq!(numrad(&["radius", g.to_str().unwrap()]).status.code(), Some(2));

    let bad = write(
        &dir,
        "bad.json",
        &json!({"rows": 2, "cols": 2, "entries": [[[1.0, 0.0]]]}),
    );
    assert_eq!(numrad(&["radius", s(&bad)]).status.code(), Some(2));
}

#[test]
fn bounds_self_reports_truth() {
    let dir = TempDir::new().unwrap();
    let b = write(&dir, "b.json", &real_matrix(&[&[-4.0, 7.0], &[-4.0, -8.0]]));
    let out = numrad(&["bounds", "self", s(&b)]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["c7"].as_f64().unwrap() - 9.74488).abs() < 5e-3);
    assert!((v["kittaneh"].as_f64().unwrap() - 9.9823).abs() < 5e-3);
    assert!((v["truth"]["omega"].as_f64().unwrap() - 8.69626).abs() < 5e-3);
}

#[test]
fn bounds_pair_second_dataset() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", &real_matrix(&[&[2.0, 2.0], &[-1.0, 2.0]]));
    let b = write(&dir, "b.json", &real_matrix(&[&[3.0, 4.0], &[4.0, 1.0]]));
    let v = stdout_json(&numrad(&["bounds", "pair", s(&a), s(&b)]));
    assert!((v["lemma21"].as_f64().unwrap() - 9.02776).abs() < 5e-3);
    assert!((v["lemma22"].as_f64().unwrap() - 9.27186).abs() < 5e-3);
    let sup = v["truth"]["sup_inner_sum"].as_f64().unwrap();
    assert!(sup <= v["lemma21"].as_f64().unwrap() + 1e-8);
}

#[test]
fn bounds_block_of_zeros_is_zero() {
    let dir = TempDir::new().unwrap();
    let t = write(
        &dir,
        "t.json",
        &json!({"dims": [1, 2], "blocks": [[null, null], [null, null]]}),
    );
    let out = numrad(&["bounds", "block", s(&t)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    for key in ["omega_alpha", "omega_beta", "omega_abu_omar", "omega_hou"] {
        assert_eq!(v[key].as_f64(), Some(0.0), "{key}");
    }
    assert_eq!(v["truth"]["omega"].as_f64(), Some(0.0));
}

#[test]
fn bounds_shape_and_count_errors() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", &real_matrix(&[&[1.0, 0.0], &[0.0, 1.0]]));
    let r = write(&dir, "r.json", &real_matrix(&[&[1.0, 2.0, 3.0]]));
    assert_eq!(numrad(&["bounds", "pair", s(&a)]).status.code(), Some(2));
    assert_eq!(numrad(&["bounds", "pair", s(&a), s(&r)]).status.code(), Some(2));
    assert_eq!(numrad(&["bounds", "spectral-sum", s(&a)]).status.code(), Some(2));
    assert_eq!(numrad(&["bounds", "diagonal", s(&a)]).status.code(), Some(2));
}

#[test]
fn bounds_two_by_two_row_and_spectral_sum_run() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", &real_matrix(&[&[-1.0, -2.0], &[-1.0, 2.0]]));
    let b = write(&dir, "b.json", &real_matrix(&[&[2.0, 1.0], &[0.0, -2.0]]));
    let c = write(&dir, "c.json", &real_matrix(&[&[-3.0, -1.0], &[-3.0, -3.0]]));
    let d = write(&dir, "d.json", &real_matrix(&[&[-2.0, 3.0], &[-3.0, 0.0]]));
    let v = stdout_json(&numrad(&["bounds", "2x2", s(&a), s(&b), s(&c), s(&d)]));
    assert!((v["cor1"].as_f64().unwrap() - 6.50583).abs() < 5e-3);
    assert!(v["truth"]["omega"].as_f64().unwrap() <= v["cor1"].as_f64().unwrap());

    let v = stdout_json(&numrad(&["bounds", "row", s(&a), s(&b)]));
    assert!(v["truth"]["omega"].as_f64().unwrap() <= v["sh1"].as_f64().unwrap() + 1e-8);

    let v = stdout_json(&numrad(&["bounds", "spectral-sum", s(&a), s(&b), s(&c), s(&d)]));
    let r = v["truth"]["spectral_radius"].as_f64().unwrap();
    assert!(r <= v["omega_gamma"].as_f64().unwrap() + 1e-8);
}

#[test]
fn verify_flags() {
    let out = numrad(&["verify", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["trials"], 0);

    let out = numrad(&[
        "verify",
        "--trials",
        "3",
        "--dims",
        "2:3",
        "--seed",
        "1",
        "--checks",
        "sandwich,goldberg",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stats = stdout_json(&out)["stats"].as_object().unwrap().clone();
    assert_eq!(stats.keys().collect::<Vec<_>>(), ["goldberg", "sandwich"]);

    assert_eq!(numrad(&["verify", "--checks", "unknown"]).status.code(), Some(2));
    assert_eq!(numrad(&["verify", "--dims", "5:2"]).status.code(), Some(2));
    assert_eq!(numrad(&["verify", "--trials", "-1"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--trials", "4", "--dims", "2:4", "--seed", "9"];
    assert_eq!(numrad(&args).stdout, numrad(&args).stdout);
}

#[test]
fn repro_table_and_json_agree() {
    let table = numrad(&["repro"]);
    let json = numrad(&["repro", "--json"]);
    assert_eq!(table.status.code(), json.status.code());
    let text = String::from_utf8(table.stdout).unwrap();
    let v = stdout_json(&json);
    for case in v["cases"].as_array().unwrap() {
        assert!(text.contains(case["id"].as_str().unwrap()));
        assert!(!case["citation"].as_str().unwrap().is_empty());
    }
    assert_eq!(json.status.code() == Some(0), v["passed"].as_bool().unwrap());
}
