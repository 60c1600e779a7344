//! Drives the built binary end to end: exit codes, exact output bytes,
//! and the generate → verify round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn fixture(name: &str, content: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatpoints"))
        .args(args)
        .output()
        .unwrap()
}

/// Runs expecting success and returns stdout.
fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Runs expecting failure; returns (exit code, stderr).
fn fails(args: &[&str]) -> (i32, String) {
    let out = run(args);
    let code = out.status.code().expect("process exited");
    assert_ne!(code, 0, "command {args:?} unexpectedly succeeded");
    assert!(
        out.stdout.is_empty() || code == 3,
        "partial stdout on input error"
    );
    (code, String::from_utf8(out.stderr).unwrap())
}

const GENERAL_NINE: &str = r#"{"field":"rationals","points":[[0,0,1],[1,0,1],[0,1,1],[1,2,1],[2,1,1],[-1,1,1],[1,-1,1],[2,3,1],[3,-2,1]]}"#;

#[test]
fn dim_fixtures() {
    let empty = fixture("empty.json", r#"{"field":"rationals","points":[]}"#);
    assert_eq!(ok(&["dim", empty.to_str().unwrap(), "--d", "2"]), "6\n");

    let nine = fixture("general.json", GENERAL_NINE);
    assert_eq!(
        ok(&["dim", nine.to_str().unwrap(), "--t", "1", "--d", "3"]),
        "1\n"
    );

    // the file's multiplicity is the default for --t, and --t overrides it
    let double = fixture(
        "double-point.json",
        r#"{"field":"rationals","points":[[0,0,1]],"multiplicity":2}"#,
    );
    assert_eq!(ok(&["dim", double.to_str().unwrap(), "--d", "2"]), "3\n");
    assert_eq!(
        ok(&["dim", double.to_str().unwrap(), "--t", "1", "--d", "2"]),
        "5\n"
    );
}

#[test]
fn generate_verify_round_trip() {
    let config = tmp("torsion2.json");
    let report_path = tmp("torsion2-report.json");
    ok(&[
        "generate",
        "--order",
        "2",
        "--seed",
        "0",
        "--out",
        config.to_str().unwrap(),
    ]);

    // the generated class has order 2, so h0 jumps exactly at t = 2 and 4
    assert_eq!(
        ok(&["dim", config.to_str().unwrap(), "--t", "2", "--d", "6"]),
        "2\n"
    );

    let table = ok(&[
        "verify",
        config.to_str().unwrap(),
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert!(table.contains("torsion order  2"));
    assert!(table.contains("prediction matches oracle yes"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["all_match"], serde_json::json!(true));
    assert_eq!(report["torsion_order"], serde_json::json!(2));
    assert_eq!(report["jumps"], serde_json::json!([2, 4, 6, 8]));
    assert_eq!(report["pencil"], serde_json::json!(false));
    assert_eq!(report["extrapolated"], serde_json::json!(false));
    assert_eq!(report["jump_iff_torsion"], serde_json::json!(true));
}

#[test]
fn finite_field_generation_is_marked_extrapolated() {
    let config = tmp("f31-order7.json");
    let report_path = tmp("f31-report.json");
    ok(&[
        "generate",
        "--order",
        "7",
        "--field",
        "31",
        "--seed",
        "0",
        "--out",
        config.to_str().unwrap(),
    ]);
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&config).unwrap()).unwrap();
    assert_eq!(written["field"], serde_json::json!({ "prime": 31 }));

    ok(&[
        "verify",
        config.to_str().unwrap(),
        "--out",
        report_path.to_str().unwrap(),
    ]);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["torsion_order"], serde_json::json!(7));
    assert_eq!(report["jumps"], serde_json::json!([7]));
    assert_eq!(report["all_match"], serde_json::json!(true));
    assert_eq!(report["extrapolated"], serde_json::json!(true));
}

#[test]
fn support_table_is_exact() {
    assert_eq!(
        ok(&["support", "--orders", "1,2,3", "--t-max", "4"]),
        "order,field,first_jump,all_match,h0_1,h0_2,h0_3,h0_4\n\
         1,rationals,1,1,2,3,4,5\n\
         2,rationals,2,1,1,2,2,3\n\
         3,rationals,3,1,1,1,2,2\n"
    );
    // an order the rational catalog cannot realize falls back to F_p
    assert_eq!(
        ok(&["support", "--orders", "7", "--t-max", "8"]),
        "order,field,first_jump,all_match,h0_1,h0_2,h0_3,h0_4,h0_5,h0_6,h0_7,h0_8\n\
         7,F31,7,1,1,1,1,1,1,1,2,2\n"
    );
}

#[test]
fn alpha_tables() {
    let single = fixture("single.json", r#"{"field":"rationals","points":[[0,0,1]]}"#);
    assert_eq!(
        ok(&["alpha", single.to_str().unwrap(), "--t-max", "3"]),
        "t,alpha\n1,1\n2,2\n3,3\n"
    );

    let coord = fixture(
        "coord.json",
        r#"{"field":"rationals","points":[[1,0,0],[0,1,0],[0,0,1]]}"#,
    );
    assert_eq!(
        ok(&["alpha", coord.to_str().unwrap(), "--t-max", "2"]),
        "t,alpha\n1,2\n2,3\n"
    );
    // capping the degree search leaves cells empty instead of guessing
    assert_eq!(
        ok(&[
            "alpha",
            coord.to_str().unwrap(),
            "--t-max",
            "2",
            "--d-max",
            "2"
        ]),
        "t,alpha\n1,2\n2,\n"
    );

    let nine = fixture("general-alpha.json", GENERAL_NINE);
    assert_eq!(
        ok(&["alpha", nine.to_str().unwrap(), "--t-max", "3"]),
        "t,alpha\n1,3\n2,6\n3,9\n"
    );
}

#[test]
fn out_flag_diverts_stdout() {
    let nine = fixture("general-out.json", GENERAL_NINE);
    let csv_path = tmp("alpha-out.csv");
    let piped = ok(&["alpha", nine.to_str().unwrap(), "--t-max", "2"]);
    let silent = ok(&[
        "alpha",
        nine.to_str().unwrap(),
        "--t-max",
        "2",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(silent.is_empty());
    assert_eq!(std::fs::read_to_string(&csv_path).unwrap(), piped);
}

#[test]
fn input_errors_exit_two() {
    let garbage = fixture("garbage.json", "{ this is not json");
    let (code, stderr) = fails(&["dim", garbage.to_str().unwrap(), "--d", "2"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());

    let float = fixture(
        "float.json",
        r#"{"field":"rationals","points":[[1.5,0,1]]}"#,
    );
    let (code, stderr) = fails(&["dim", float.to_str().unwrap(), "--d", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("floating-point"));

    let unknown = fixture(
        "unknown.json",
        r#"{"field":"rationals","points":[],"typo":1}"#,
    );
    assert_eq!(fails(&["dim", unknown.to_str().unwrap(), "--d", "2"]).0, 2);

    let missing = tmp("does-not-exist.json");
    assert_eq!(fails(&["dim", missing.to_str().unwrap(), "--d", "2"]).0, 2);

    assert_eq!(fails(&["generate", "--order", "2", "--field", "32"]).0, 2);

    let nine = fixture("general-t0.json", GENERAL_NINE);
    let (code, stderr) = fails(&["dim", nine.to_str().unwrap(), "--t", "0", "--d", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains(">= 1"));
}

#[test]
fn math_preconditions_exit_three() {
    // nine collinear points: every cubic through them is ambiguous
    let collinear = fixture(
        "collinear.json",
        r#"{"field":"rationals","points":[[0,0,1],[1,0,1],[2,0,1],[3,0,1],[4,0,1],[5,0,1],[6,0,1],[7,0,1],[8,0,1]]}"#,
    );
    let (code, stderr) = fails(&["verify", collinear.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("cubic"));

    let seven = fixture(
        "seven.json",
        r#"{"field":"rationals","points":[[0,0,1],[1,0,1],[0,1,1],[1,1,1],[2,1,1],[1,2,1],[3,1,1]]}"#,
    );
    assert_eq!(fails(&["verify", seven.to_str().unwrap()]).0, 3);

    // the rational catalog stops at order 6
    let (code, stderr) = fails(&["generate", "--order", "7"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("finite fields"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let nine = fixture("general-det.json", GENERAL_NINE);
    let verify_args = ["verify", nine.to_str().unwrap(), "--t-max", "3"];
    assert_eq!(ok(&verify_args), ok(&verify_args));

    let generate_args = ["generate", "--order", "3", "--seed", "5"];
    assert_eq!(ok(&generate_args), ok(&generate_args));

    let support_args = ["support", "--orders", "2,4", "--t-max", "5"];
    assert_eq!(ok(&support_args), ok(&support_args));
}
