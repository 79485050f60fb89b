//! End-to-end tests that drive the compiled binary and inspect its exit
//! codes and output bytes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s2rotator"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn equilateral_check_reports_a_rotator() {
    let out = run(&["check", "--masses", "1,1,1", "--shape", "1,1,1"]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["is_rotator"], Value::Bool(true));
    assert_eq!(doc["classification"], "extended-lagrangian");
    let rate = doc["solution"]["scaled_omega_squared"].as_f64().unwrap();
    let expected = 3.0 / 1.0_f64.sin().powi(3);
    assert!((rate - expected).abs() < 1e-9 * expected);
    assert_eq!(doc["hemisphere_ordered"], Value::Bool(true));
}

#[test]
fn scalene_unequal_masses_exit_one() {
    let out = run(&["check", "--masses", "1,2,3", "--shape", "1.1,0.9,1.0"]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_of(&out);
    assert_eq!(doc["is_rotator"], Value::Bool(false));
    assert_eq!(doc["classification"], "none");
}

#[test]
fn unequal_mass_equilateral_is_rejected() {
    let out = run(&["check", "--masses", "1,2,3", "--shape", "1,1,1"]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_of(&out);
    assert_eq!(doc["is_rotator"], Value::Bool(false));
}

#[test]
fn infeasible_triangle_exits_two() {
    let out = run(&["check", "--masses", "1,1,1", "--shape", "1.0,0.2,0.2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn malformed_inputs_exit_two() {
    for args in [
        vec!["check", "--masses", "1,1", "--shape", "1,1,1"],
        vec!["check", "--masses", "1,1,x", "--shape", "1,1,1"],
        vec!["check", "--masses", "1,1,-1", "--shape", "1,1,1"],
        vec!["check", "--masses", "1,1,1", "--shape", "4.0,1,1"],
        vec!["check", "--masses", "1,1,1"],
        vec!["verify", "--config", "/nonexistent/report.json"],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 2, "args {args:?}");
    }
}

#[test]
fn harmonic_test_law_also_finds_the_equilateral_rotator() {
    let out = run(&[
        "check",
        "--masses",
        "1,1,1",
        "--shape",
        "1,1,1",
        "--potential",
        "harmonic-test",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_of(&out);
    let rate = doc["solution"]["scaled_omega_squared"].as_f64().unwrap();
    assert!((rate - 6.0).abs() < 1e-9);
}

#[test]
fn degrees_flag_matches_radian_input_byte_for_byte() {
    let radians = run(&[
        "check",
        "--masses",
        "1,1,1",
        "--shape",
        "1.5707963267948966,1.5707963267948966,1.5707963267948966",
    ]);
    let degrees = run(&[
        "check",
        "--masses",
        "1,1,1",
        "--shape",
        "90,90,90",
        "--degrees",
    ]);
    assert_eq!(exit_code(&radians), 0);
    assert_eq!(radians.stdout, degrees.stdout);
}

#[test]
fn curve_and_special_point_output_is_deterministic() {
    for args in [
        vec!["isosceles-curve", "--resolution", "16"],
        vec!["two-equal-mass", "--resolution", "16"],
        vec!["special-points"],
        vec!["special-points", "--format", "csv"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(exit_code(&first), 0, "args {args:?}");
        assert!(!first.stdout.is_empty());
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}

fn csv_rows(out: &Output, columns: usize) -> Vec<Vec<String>> {
    let text = stdout_of(out);
    let mut lines = text.lines();
    let header = lines.next().expect("header row");
    assert_eq!(header.split(',').count(), columns);
    lines
        .map(|l| l.split(',').map(str::to_owned).collect::<Vec<_>>())
        .inspect(|row| assert_eq!(row.len(), columns))
        .collect()
}

// The CSV carries 12 significant digits. Where the base arc approaches 0 or
// pi the triangle degenerates and the rotator residual amplifies the arc
// truncation by a factor of order 1e4, so rows near the ends of the grid
// only round-trip to about 1e-7; everywhere else 1e-8 holds.
#[test]
fn every_isosceles_curve_row_passes_check() {
    let out = run(&["isosceles-curve", "--resolution", "64"]);
    assert_eq!(exit_code(&out), 0);
    let rows = csv_rows(&out, 5);
    assert!(rows.len() >= 64);
    for row in rows {
        let sigma12: f64 = row[0].parse().unwrap();
        let margin = sigma12.min(std::f64::consts::PI - sigma12);
        let (tol, bound) = if margin < 0.1 {
            ("1e-6", 1e-6)
        } else {
            ("1e-8", 1e-8)
        };
        let shape = format!("{},{},{}", row[0], row[1], row[1]);
        let check = run(&[
            "check", "--masses", "1,1,1", "--shape", &shape, "--tol", tol,
        ]);
        assert_eq!(exit_code(&check), 0, "sigma12={} sigma={}", row[0], row[1]);
        let doc = json_of(&check);
        let rate = doc["solution"]["scaled_omega_squared"].as_f64().unwrap();
        let listed: f64 = row[2].parse().unwrap();
        assert!((rate - listed).abs() <= bound * listed.abs().max(1.0));
    }
}

#[test]
fn every_two_equal_mass_row_passes_check() {
    let out = run(&["two-equal-mass", "--resolution", "64"]);
    assert_eq!(exit_code(&out), 0);
    let rows = csv_rows(&out, 5);
    assert!(rows.len() >= 32);
    for row in rows {
        let masses = format!("{},{},1", row[1], row[1]);
        let shape = format!("1.5707963267948966,{},{}", row[0], row[0]);
        let check = run(&["check", "--masses", &masses, "--shape", &shape]);
        assert_eq!(exit_code(&check), 0, "sigma={} nu={}", row[0], row[1]);
        let doc = json_of(&check);
        let rate = doc["solution"]["scaled_omega_squared"].as_f64().unwrap();
        let listed: f64 = row[2].parse().unwrap();
        assert!((rate - listed).abs() <= 1e-9 * listed.abs().max(1.0));
    }
}

#[test]
fn check_report_feeds_verify_and_stays_rigid() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let report_arg = report.to_str().unwrap();

    let check = run(&[
        "check",
        "--masses",
        "0.01,0.01,1",
        "--shape",
        "1.5707963267948966,0.9730687696676717,0.9730687696676717",
        "--out",
        report_arg,
    ]);
    assert_eq!(exit_code(&check), 0);
    assert!(check.stdout.is_empty());

    let trajectory = dir.path().join("trajectory.csv");
    let verify = run(&[
        "verify",
        "--config",
        report_arg,
        "--periods",
        "1",
        "--trajectory",
        trajectory.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&verify), 0);
    let doc = json_of(&verify);
    assert!(doc["max_arc_drift"].as_f64().unwrap() <= 1e-6);
    assert!(doc["energy_rel_drift"].as_f64().unwrap() <= 1e-8);
    assert!(doc["momentum_rel_drift"].as_f64().unwrap() <= 1e-8);

    let csv = std::fs::read_to_string(&trajectory).unwrap();
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        "t,theta1,theta2,theta3,phi1,phi2,phi3,sigma12,sigma23,sigma31,energy,cx,cy,cz"
    );
    assert!(csv.lines().count() >= 3);
}

#[test]
fn verify_rejects_a_report_without_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("none.json");
    let report_arg = report.to_str().unwrap();
    let check = run(&[
        "check",
        "--masses",
        "1,2,3",
        "--shape",
        "1.1,0.9,1.0",
        "--out",
        report_arg,
    ]);
    assert_eq!(exit_code(&check), 1);
    assert!(Path::new(report_arg).exists());

    let verify = run(&["verify", "--config", report_arg]);
    assert_eq!(exit_code(&verify), 2);
}

#[test]
fn special_points_csv_lists_named_constants() {
    let out = run(&["special-points", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let rows = csv_rows(&out, 2);
    let names: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    for expected in [
        "sigma_saddle",
        "sigma_branch_end",
        "right_angle_sigma_2",
        "sigma_nu_zero",
        "nu_band_lower",
        "nu_band_upper",
    ] {
        assert!(names.contains(&expected), "missing {expected}");
    }
    for row in &rows {
        let value: f64 = row[1].parse().unwrap();
        assert!(value.is_finite() && value > 0.0);
    }
}
