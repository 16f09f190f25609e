use std::process::{Command, Output};

use serde_json::Value;

fn bohr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bohr")).args(args).output().expect("run bohr")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bohr(&[]).status.code(), Some(2));
    assert_eq!(bohr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bohr(&["radii", "--equation", "rogosinski_RN"]).status.code(), Some(2));
    assert_eq!(bohr(&["constants", "--kind", "nu_thm23"]).status.code(), Some(2));
    let out = bohr(&["verify", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("samples"));
}

#[test]
fn help_exits_zero() {
    let out = bohr(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify"));
}

#[test]
fn constants_report_all_kinds() {
    let out = bohr(&["constants"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    for k in ["lambda_thm21", "mu_thm22", "lambda1_thmF", "lambda2_thmF"] {
        assert!(v[k]["value"].as_f64().unwrap() > 10.0, "{k}");
        assert!(v[k]["residual_stationarity"].as_f64().unwrap() < 1e-4, "{k}");
    }
    assert!(v["lambda_thm21"]["residual_exact_root"].as_f64().unwrap() < 1e-6);
}

#[test]
fn radius_of_first_rogosinski_equation() {
    let out = bohr(&["radii", "--equation", "rogosinski_RN", "--N", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["root"].as_f64().unwrap() - (5f64.sqrt() - 2.0)).abs() < 1e-12);
    let b = v["bracket"].as_array().unwrap();
    assert!(b[0].as_f64().unwrap() <= b[1].as_f64().unwrap());

    let csv = String::from_utf8(bohr(&["radii", "--format", "csv"]).stdout).unwrap();
    assert!(csv.lines().any(|l| l.starts_with("rogosinski_RN,1,0.23606797749")), "{csv}");
    assert!(csv.lines().any(|l| l.starts_with("thmC_quadratic,,0.28077640640")), "{csv}");
}

#[test]
fn verify_passes_with_computed_constants() {
    let out = bohr(&["verify", "--samples", "40", "--seed", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    assert_eq!(v["metadata"]["table_hash"].as_str().unwrap().len(), 64);
    assert!(v["findings"].as_array().unwrap().iter().any(|f| f["subject"] == "mu_thm22:psi2"));
}

#[test]
fn corrupted_constants_fail_verification() {
    for args in [["--lambda", "17.0214"], ["--mu", "15.0824"], ["--lambda", "19.0214"]] {
        let mut argv = vec!["verify", "--samples", "2", "--checks", "B_N"];
        argv.extend(args);
        let out = bohr(&argv);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL sharpness"));
    }
}

#[test]
fn json_reports_are_byte_identical() {
    let args = ["verify", "--samples", "15", "--seed", "3", "--checks", "thm21_lhs,lemmaA", "--format", "json"];
    let a = bohr(&args);
    let b = bohr(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_csv_columns() {
    let out = bohr(&["verify", "--samples", "3", "--checks", "B_N", "--format", "csv"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("check_id,radius,value_lo,value_hi,threshold,pass"));
    assert!(lines.any(|l| l.starts_with("B_N,0.1,") && l.ends_with(",true")));
}

#[test]
fn poly_subcommand() {
    let v = stdout_json(&bohr(&["poly", "--id", "psi1", "--isolate", "--width", "1e-10"]));
    let roots = v.as_array().unwrap();
    assert_eq!(roots.len(), 1);
    let lo = roots[0]["lo"].as_f64().unwrap();
    assert!((lo - 0.600975517551).abs() < 1e-9, "{lo}");

    let v = stdout_json(&bohr(&["poly", "--id", "a3_poly", "--eval", "0"]));
    // 64 (-11563 + 2829 sqrt 17)
    let want = 64.0 * (-11563.0 + 2829.0 * 17f64.sqrt());
    assert!((v["value"].as_f64().unwrap() - want).abs() < 1e-6 * want.abs());

    let audit = stdout_json(&bohr(&["poly", "--audit"]));
    let flagged: Vec<&str> = audit
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| !a["mismatches"].as_array().unwrap().is_empty())
        .map(|a| a["id"].as_str().unwrap())
        .collect();
    assert_eq!(flagged, ["a2", "psi2"]);

    let table = stdout_json(&bohr(&["poly", "--export-table"]));
    assert_eq!(table["polys"].as_array().unwrap().len(), 14);
    assert_eq!(bohr(&["poly", "--id", "thmf_quintic", "--source", "derived"]).status.code(), Some(2));
}

#[test]
fn eval_and_sweep() {
    let v = stdout_json(&bohr(&["eval", "--functional", "B_N", "--moebius", "0.5", "--r", "0.5", "--N", "0"]));
    assert!((v["value"]["hi"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let v = stdout_json(&bohr(&["eval", "--functional", "lemmaA", "--schur", "0.3,0.1;-0.2,0.4", "--r", "0.3", "--N", "3"]));
    assert!(v["value"]["hi"].as_f64().unwrap() <= v["rhs"].as_f64().unwrap());

    let out = bohr(&["sweep", "--functional", "thmC_lhs,area_ratio", "--moebius", "0.4", "--points", "5", "--r-max", "0.28"]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 1 + 10);

    let dir = std::env::temp_dir().join(format!("bohr-series-{}.json", std::process::id()));
    std::fs::write(&dir, r#"{"coeffs": [[0.0, 0.0], [1.0, 0.0]], "order": 1, "tail": {"kind": "exact_zero"}}"#).unwrap();
    let v = stdout_json(&bohr(&["eval", "--functional", "area_odds", "--series", dir.to_str().unwrap(), "--r", "0.5"]));
    assert!((v["value"]["hi"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
    let _ = std::fs::remove_file(dir);
}
