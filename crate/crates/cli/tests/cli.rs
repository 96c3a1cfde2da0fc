use std::process::{Command, Output};

fn liecx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecx"))
        .args(args)
        .env("LIECX_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = liecx(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn dims_as_json() {
    let v = stdout_json(&["dims", "-p", "2", "-r", "2", "--max", "8"]);
    assert_eq!(v["dims"], serde_json::json!([0, 0, 1, 1, 1, 2, 2, 2, 3]));
    assert_eq!(v["m_max"], 8);
}

#[test]
fn dims_as_csv() {
    let out = liecx(&[
        "dims", "-p", "3", "-r", "1", "--max", "3", "--format", "csv",
    ]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "m,dim\n0,0\n1,0\n2,1\n3,1\n"
    );
}

#[test]
fn complexity_report() {
    let v = stdout_json(&["complexity", "-n", "12", "-p", "2"]);
    assert_eq!(v["conclusion"], 2);
    let v = stdout_json(&["complexity", "-n", "7", "-p", "2"]);
    assert_eq!(v["conclusion"], 0);
}

#[test]
fn decomposition_check_exits_zero_on_exact_fit() {
    let out = liecx(&[
        "check",
        "decomposition",
        "-n",
        "4",
        "-p",
        "2",
        "--lambda",
        "2,2",
        "--max",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["residual"], 0);
    assert_eq!(v["coefficients"], serde_json::json!([1, 1]));
}

#[test]
fn lie_matrices_and_normal_forms() {
    let v = stdout_json(&["lie", "-n", "3", "-p", "2", "--perm", "(2 3)"]);
    assert_eq!(v, serde_json::json!([[1, 1], [0, 1]]));
    let v = stdout_json(&["lie", "-n", "3", "-p", "5", "--tree", "[[1,2],3]"]);
    assert_eq!(v["terms"][0]["basis"], "[1,[2,3]]");
    assert_eq!(v["terms"][1]["basis"], "[[1,3],2]");
    let v = stdout_json(&["lie", "-n", "3"]);
    assert_eq!(v, serde_json::json!(["[1,[2,3]]", "[[1,3],2]"]));
}

#[test]
fn oracle_series() {
    let v = stdout_json(&["oracle", "-p", "3", "--lambda", "3", "--max", "6"]);
    assert_eq!(v["dims"], serde_json::json!([0, 0, 1, 1, 0, 0, 1]));
    let v = stdout_json(&[
        "oracle",
        "-p",
        "2",
        "--lambda",
        "2",
        "--module",
        "trivial",
        "--max",
        "4",
        "--cohomology",
    ]);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 1, 1, 1]));
}

#[test]
fn small_checks_pass() {
    for args in [
        &["check", "oracle", "-p", "2", "-r", "1", "--max", "8"][..],
        &["check", "freeness", "-n", "4", "-p", "3"],
        &[
            "check", "duality", "-p", "2", "--lambda", "2,2", "--count", "5",
        ],
        &["check", "resolution", "-p", "3", "--lambda", "3"],
        &["check", "family", "-p", "3", "-r", "3", "-x", "4"],
        &["check", "lie", "-n", "4", "-p", "5", "--count", "10"],
    ] {
        let out = liecx(args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        liecx(&["dims", "-p", "4", "-r", "1", "--max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(liecx(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(liecx(&["dims", "-p", "2"]).status.code(), Some(2));
    assert_eq!(
        liecx(&["oracle", "-p", "2", "--lambda", "2,x", "--max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        liecx(&[
            "oracle",
            "-p",
            "2",
            "--lambda",
            "4",
            "--max",
            "6",
            "--capacity-width",
            "40"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        liecx(&["check", "resolution", "-p", "2", "--lambda", "4"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["dims", "-p", "5", "-r", "2", "--max", "300"][..],
        &[
            "gamma", "-p", "3", "-r", "2", "--max", "2000", "--shift", "4",
        ],
        &[
            "complexity",
            "-n",
            "24",
            "-p",
            "2",
            "--audited",
            "--m-max",
            "1500",
        ],
        &[
            "check", "duality", "-p", "3", "--lambda", "3", "--count", "4", "--seed", "8",
        ],
        &[
            "words", "-p", "2", "-r", "3", "--degree", "20", "--format", "csv",
        ],
    ] {
        let a = liecx(args);
        let b = liecx(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
