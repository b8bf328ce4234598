use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn spin_sweep_small() {
    let out = run(&["verify-spin", "--max-prime", "3"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let records = report["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["prime"], 2);
    assert_eq!(records[1]["prime"], 3);
    assert!(records.iter().all(|r| r["equal"] == true));
    assert_eq!(report["summary"]["failures"], 0);
    assert_eq!(records[0]["eigenvalues"]["lambda_p"], -47808);
}

#[test]
fn spin_sweep_default_bound() {
    let out = run(&["verify-spin", "--jobs", "4"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["records"].as_array().unwrap().len(), 100);
    assert_eq!(report["summary"]["primes_checked"], 100);
    assert_eq!(report["records"][99]["prime"], 541);
}

#[test]
fn short_series_is_a_config_error() {
    let out = run(&["verify-spin", "--max-prime", "100", "--series-length", "50"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("series_length"));
}

#[test]
fn standard_sweeps() {
    for bound in ["2", "97"] {
        let out = run(&["verify-standard", "--max-prime", bound]);
        assert_eq!(code(&out), 0, "bound {bound}");
        let report = json(&out);
        for r in report["records"].as_array().unwrap() {
            assert_eq!(r["equal"], true);
            assert_eq!(r["lhs"].as_array().unwrap().len(), 8);
            assert_eq!(r["literal_equal"], false);
        }
    }
}

#[test]
fn malformed_or_unsupported_kappa() {
    assert_eq!(code(&run(&["verify-standard", "--kappa", "twelve"])), 2);
    assert_eq!(code(&run(&["verify-standard", "--kappa", "13"])), 2);
    // only weight 12 has concrete forms
    assert_eq!(code(&run(&["verify-spin", "--kappa", "14"])), 2);
}

#[test]
fn symbolic_check_exit_codes() {
    let out = run(&["symbolic-check", "--kappa", "12", "--json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let reports = report["reports"].as_array().unwrap();
    assert!(reports.len() >= 8);
    assert!(reports.iter().all(|r| r["holds"] == true));

    assert_eq!(code(&run(&["symbolic-check", "--kappa", "12,14,16"])), 0);
    assert_eq!(code(&run(&["symbolic-check", "--kappa", "13"])), 2);
}

#[test]
fn qexp_table() {
    let out = run(&["qexp", "delta", "10"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "n,a(n)");
    assert!(lines.contains(&"2,-24"));
    assert_eq!(lines.len(), 12);
    let g = String::from_utf8(run(&["qexp", "g20", "3"]).stdout).unwrap();
    assert!(g.lines().any(|l| l == "2,456"));
    assert_eq!(code(&run(&["qexp", "delta", "0"])), 2);
}

#[test]
fn euler_factors() {
    let out = run(&["euler", "2", "spin"]);
    assert_eq!(code(&out), 0);
    let f = json(&out);
    assert_eq!(f["kind"], "spin");
    assert_eq!(f["equal"], true);
    assert_eq!(f["lhs"], f["rhs"]);
    assert_eq!(code(&run(&["euler", "4", "spin"])), 2);

    let hecke = json(&run(&["euler", "2", "hecke"]));
    assert_eq!(hecke["delta"], serde_json::json!([1, 24, 2048]));
    let rankin = json(&run(&["euler", "2", "rankin"]));
    assert_eq!(rankin["coefficients"][1], 10944);
    let standard = json(&run(&["euler", "3", "standard"]));
    assert_eq!(standard["equal"], true);
    assert_eq!(standard["literal_rhs"].as_array().unwrap().len(), 8);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "3")] {
        let out = run(&[
            "verify-spin",
            "--max-prime",
            "60",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "max_prime = 7\nformat = csv\n").unwrap();
    let out = run(&["verify-spin", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("prime,kappa,equal,lhs_0"));
    assert_eq!(text.lines().count(), 5);

    let out = run(&[
        "verify-spin",
        "--config",
        cfg.to_str().unwrap(),
        "--max-prime",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["records"].as_array().unwrap().len(), 2);

    fs::write(&cfg, "max_prime = seven\n").unwrap();
    assert_eq!(code(&run(&["verify-spin", "--config", cfg.to_str().unwrap()])), 2);
}

#[test]
fn eigenvalue_export() {
    let out = run(&["export", "--max-prime", "5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "p,a_delta,a_g20,lambda_p,lambda_t1,lambda_t2,lambda_t3");
    assert_eq!(lines[1], "2,-24,456,-47808,235339776,66060288,16777216");
    assert_eq!(lines.len(), 4);
}
