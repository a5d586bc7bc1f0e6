use std::process::{Command, Output};

use specpoly::poly::{polynomial, ExactPoly, Family, FamilySpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specpoly"))
        .args(args)
        .env_remove("SPECPOLY_TOL_SCALE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn poly_pretty_output() {
    let o = run(&["poly", "--family", "P", "--N", "1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("z^4+97z^3+2685z^2+22970z+43225"));
}

#[test]
fn poly_degree_zero_is_one() {
    let v = json(&["poly", "--family", "q", "--N", "2", "--n", "0", "--format", "json"]);
    let polys = v["polynomials"].as_array().unwrap();
    assert_eq!(polys.len(), 1);
    let p: ExactPoly = serde_json::from_value(polys[0]["coeffs"].clone()).unwrap();
    assert_eq!(p, ExactPoly::from_i64(&[1]));
}

#[test]
fn poly_json_round_trips() {
    let v = json(&["poly", "--family", "Q", "--N", "-1", "--n", "7", "--format", "json"]);
    assert_eq!(v["schema_version"], 1);
    let spec = FamilySpec::new(Family::OddQ, -1).unwrap();
    for (n, entry) in v["polynomials"].as_array().unwrap().iter().enumerate() {
        let p: ExactPoly = serde_json::from_value(entry["coeffs"].clone()).unwrap();
        assert_eq!(p, polynomial(spec, n));
    }
}

#[test]
fn poly_hermite_check() {
    let o = run(&["poly", "--family", "p", "--N", "0", "--n", "6", "--check-hermite"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hermite check: pass"));
    assert_eq!(run(&["poly", "--family", "p", "--N", "2", "--n", "3", "--check-hermite"]).status.code(), Some(2));
}

#[test]
fn poly_csv_has_one_row_per_coefficient() {
    let o = run(&["poly", "--family", "p", "--N", "2", "--n", "2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,coeff"));
    assert_eq!(lines.count(), 1 + 2 + 3);
}

#[test]
fn spectrum_with_oracle() {
    let v = json(&["spectrum", "--N", "1", "--range=-2..2", "--oracle", "--format", "json"]);
    let rows = v["rows"].as_array().unwrap();
    let energies: Vec<i64> = rows.iter().map(|r| r["e_exact"].as_i64().unwrap()).collect();
    assert_eq!(energies, vec![-9, -3, 3, 9, 15]);
    for r in rows {
        assert_eq!(r["status"], "pass");
        assert!(r["delta"].as_f64().unwrap() < 1e-6);
    }
}

#[test]
fn spectrum_even_exponent() {
    let v = json(&["spectrum", "--N", "2", "--range", "0..3", "--format", "json"]);
    let energies: Vec<i64> = v["rows"].as_array().unwrap().iter().map(|r| r["e_exact"].as_i64().unwrap()).collect();
    assert_eq!(energies, vec![3, 5, 11, 13]);
}

#[test]
fn spectrum_empty_range() {
    let o = run(&["spectrum", "--N", "2", "--range", "3..1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "n,E_exact");
}

#[test]
fn moments_cfrac_and_phi3() {
    let v = json(&["moments", "--family", "P", "--N", "1", "--cfrac", "--count", "4", "--format", "json"]);
    assert_eq!(v["values"], serde_json::json!(["7", "5", "13", "11"]));
    let o = run(&["moments", "--family", "Q", "--N", "1", "--phi3", "--count", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5/24"));
}

#[test]
fn moments_reject_bad_input() {
    assert_eq!(run(&["moments", "--family", "p", "--N", "1"]).status.code(), Some(2));
    assert_eq!(run(&["moments", "--family", "P", "--N", "1", "--phi3"]).status.code(), Some(2));
    assert_eq!(run(&["moments", "--family", "z", "--N", "2"]).status.code(), Some(2));
}

#[test]
fn eigenfunction_route_ratio_is_constant() {
    let v = json(&[
        "eigenfunction", "--N", "-1", "--n", "0", "--grid", "0.5,1.0,2.0,3.5", "--route", "bateman", "--compare", "k0",
        "--format", "json",
    ]);
    let ratios: Vec<f64> = v["samples"].as_array().unwrap().iter().map(|s| s["ratio"].as_f64().unwrap()).collect();
    for r in &ratios {
        assert!((r - ratios[0]).abs() < 1e-9 * ratios[0].abs(), "{ratios:?}");
    }
}

#[test]
fn eigenfunction_grid_forms() {
    let o = run(&["eigenfunction", "--N", "2", "--n", "1", "--grid", "0:2:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
    assert_eq!(run(&["eigenfunction", "--N", "2", "--n", "1", "--grid", "0:2:1"]).status.code(), Some(2));
    assert_eq!(run(&["eigenfunction", "--N", "2", "--n", "1", "--grid", "0.5", "--route", "k0"]).status.code(), Some(2));
}

#[test]
fn verify_exact_suite() {
    let v = json(&["verify", "--suite", "exact", "--N", "-1,1,2", "--format", "json"]);
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_wkb_suite() {
    let v = json(&["verify", "--suite", "wkb", "--N", "1", "--format", "json"]);
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_skips_missing_tables() {
    let v = json(&["verify", "--suite", "spectra", "--N", "5", "--format", "json"]);
    let cases = v["cases"].as_array().unwrap();
    assert!(cases.iter().any(|c| c["status"] == "skip"));
    assert!(cases.iter().all(|c| c["status"] != "fail"));
}

#[test]
fn verify_is_deterministic() {
    let names = |v: serde_json::Value| -> Vec<String> {
        v["cases"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect()
    };
    let args = ["verify", "--suite", "orthogonality", "--N", "0,2", "--format", "json"];
    assert_eq!(names(json(&args)), names(json(&args)));
}

#[test]
fn impossible_tolerance_exits_one() {
    let o = run(&["verify", "--suite", "spectra", "--N", "1", "--tol-scale", "1e-9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["poly", "--family", "P", "--N", "2", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--N", "1", "--range", "x"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_specpoly"))
        .args(["verify", "--suite", "wkb", "--N", "1"])
        .env("SPECPOLY_TOL_SCALE", "-3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unevaluable_points_exit_three() {
    let o = run(&["eigenfunction", "--N", "1", "--n", "0", "--grid", "0.5,nan"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().split(',').nth(1).unwrap().len() > 1);
    assert!(text.contains("finite"));
}
