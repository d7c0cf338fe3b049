//! End-to-end tests of the `mim` binary: JSON report values, the exit-code
//! contract, CSV round-tripping, and byte determinism.

use std::process::{Command, Output};

use mim::distributions::Distribution;
use mim::measures::{mim, ImportanceCoefficient};
use mim_cli::table::SweepTable;

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mim"))
        .args(args)
        .output()
        .expect("failed to spawn the mim binary")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run_cli(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is not valid JSON")
}

#[test]
fn eval_reports_reference_values() {
    let v = stdout_json(&["eval", "--dist", "0.1,0.9", "--omega", "10"]);
    assert!((v["mim"].as_f64().unwrap() - 6.700_429_522_135_355).abs() < 1e-12);
    assert!((v["shannon"].as_f64().unwrap() - 0.325_082_973_391_448_25).abs() < 1e-12);
    assert!((v["renyi"].as_f64().unwrap() - 0.198_450_938_723_838_27).abs() < 1e-12);
    assert!((v["lower_bound"].as_f64().unwrap() - 1.8).abs() < 1e-12);
    assert!((v["asymptote"].as_f64().unwrap() - 6.697_414_907_005_954).abs() < 1e-12);
}

#[test]
fn eval_honors_the_alpha_flag() {
    let v = stdout_json(&["eval", "--dist", "0.1,0.9", "--omega", "0", "--alpha", "0.5"]);
    assert!((v["renyi"].as_f64().unwrap() - 0.470_003_629_245_735_6).abs() < 1e-12);
    assert!(v["mim"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn eval_normalize_flag_rescales() {
    let v = stdout_json(&["eval", "--dist", "0.2,0.2", "--normalize", "--omega", "10"]);
    assert!((v["mim"].as_f64().unwrap() - 5.0).abs() < 1e-12);
}

#[test]
fn select_omega_defaults_to_the_minimizing_rule() {
    let v = stdout_json(&[
        "select-omega",
        "--dist",
        "0.0925,0.3156,0.3887,0.1484,0.0549",
        "--normalize",
    ]);
    assert_eq!(v["rule"], "theorem3");
    assert!((v["threshold"].as_f64().unwrap() - 20.001_599_777_146_72).abs() < 1e-9);
    assert!((v["witness_prob"].as_f64().unwrap() - 0.054_894_510_548_945_104).abs() < 1e-12);
}

#[test]
fn select_omega_rule_theorem2_uses_the_given_candidate() {
    let v = stdout_json(&[
        "select-omega",
        "--dist",
        "0.1,0.2,0.2,0.2,0.3",
        "--rule",
        "theorem2",
        "--p-s",
        "0.1",
    ]);
    assert!((v["threshold"].as_f64().unwrap() - 23.025_850_929_940_458).abs() < 1e-9);
}

#[test]
fn exit_codes_follow_the_contract() {
    // Validation failures exit 2.
    let bad_sum = run_cli(&["eval", "--dist", "0.2,0.9", "--omega", "1"]);
    assert_eq!(bad_sum.status.code(), Some(2));
    assert!(!bad_sum.stderr.is_empty());

    let reversed = run_cli(&["estimate-prior", "--lower", "0.1", "--upper", "0.01"]);
    assert_eq!(reversed.status.code(), Some(2));

    let bad_range = run_cli(&["sweep-omega", "--dist", "0.1,0.9", "--range", "0:12"]);
    assert_eq!(bad_range.status.code(), Some(2));

    let unparsable = run_cli(&["eval", "--dist", "0.1,oops", "--omega", "1"]);
    assert_eq!(unparsable.status.code(), Some(2));

    // Degenerate-math conditions exit 3.
    let degenerate = run_cli(&["select-omega", "--dist", "0.2,0.2,0.2,0.2,0.2"]);
    assert_eq!(degenerate.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&degenerate.stderr).contains("uniform"));

    // Unknown subcommands are usage errors.
    let unknown = run_cli(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn sweep_csv_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = run_cli(&[
        "sweep-omega",
        "--dist",
        "0.1,0.9",
        "--range",
        "0:2:0.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let table = SweepTable::from_csv(&text).unwrap();
    assert_eq!(table.to_csv(), text);
    assert_eq!(table.rows().len(), 5);

    // Parsed values match a direct library evaluation bit for bit.
    let d = Distribution::new(&[0.1, 0.9]).unwrap();
    let k = table.column_index("mim").unwrap();
    for row in table.rows() {
        let w = ImportanceCoefficient::new(row[0]).unwrap();
        assert_eq!(row[k].to_bits(), mim(&d, w).to_bits());
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run_cli(&["sweep-p", "--omega", "20", "--range", "0.01:0.99:0.01"]);
    let b = run_cli(&["sweep-p", "--omega", "20", "--range", "0.01:0.99:0.01"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn json_format_emits_the_full_table() {
    let out = run_cli(&[
        "sweep-omega",
        "--dist",
        "0.1,0.9",
        "--range",
        "0:1:0.5",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["columns"][0], "omega");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["meta"]["command"], "sweep-omega");
}

#[test]
fn fig_presets_emit_tables() {
    let out = run_cli(&["fig", "--which", "1b"]);
    assert!(out.status.success());
    let table = SweepTable::from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(table.columns().len(), 5);
    assert_eq!(table.rows().len(), 99);
    assert_eq!(table.meta_value("which"), Some("1b"));

    let three = run_cli(&["fig", "--which", "3"]);
    assert!(three.status.success());
    let table = SweepTable::from_csv(&String::from_utf8(three.stdout).unwrap()).unwrap();
    assert!(table.meta_value("theorem1_threshold").is_some());
}

#[test]
fn unwritable_output_path_is_a_usage_error() {
    let out = run_cli(&[
        "eval",
        "--dist",
        "0.5,0.5",
        "--omega",
        "1",
        "--out",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chernoff_report_is_complete() {
    let v = stdout_json(&[
        "chernoff", "--omega0", "0.1", "--mu0", "0", "--mu1", "2", "--sigma", "1",
    ]);
    // Closed-form optimum is clamped for this skewed prior.
    assert!((v["alpha"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert_eq!(v["clamped"], true);
    assert!((v["beta"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    let bound = v["bound"].as_f64().unwrap();
    let oracle = v["bayes_error"].as_f64().unwrap();
    assert!(oracle <= bound + 1e-9);
    assert!(bound <= 0.1 + 1e-9);
}
