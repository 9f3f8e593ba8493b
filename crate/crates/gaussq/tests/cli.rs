use std::process::{Command, Output};

fn gaussq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaussq")).args(args).env_remove("QSERIES_SCALE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_gauss_reports_twenty_passing_points() {
    let o = gaussq(&["verify", "gauss-1.7", "--n-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[0], "pass gauss-1.7 N=1");
    assert_eq!(lines[19], "pass gauss-1.7 N=20");
}

#[test]
fn corrupted_check_exits_1_with_witness() {
    let o = gaussq(&["verify", "gauss-1.7", "--n-max", "3", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("fail gauss-1.7 N=1\n  witness: "));
    assert!(text.contains("    lhs = "));
}

#[test]
fn eval_examples() {
    let o = gaussq(&["eval", "qbinom(3,5)"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0\n"));
    let o = gaussq(&["eval", "qbinom(4,2)"]);
    assert_eq!(stdout(&o), "1 + 1*q^1 + 2*q^2 + 1*q^3 + 1*q^4\n");
    let o = gaussq(&["eval", "dq(x^3)"]);
    assert_eq!(stdout(&o), "(1 + 1*q^1 + 1*q^2)*x^2\n");
    let o = gaussq(&["eval", "q^3/2 * (1 + x)"]);
    assert_eq!(stdout(&o), "(1*q^(3/2)) + (1*q^(3/2))*x^1\n");
}

#[test]
fn parse_errors_exit_2_and_name_the_position() {
    let o = gaussq(&["eval", "qint(2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("at byte 6"), "{err}");
    assert!(err.contains("')'"), "{err}");
}

#[test]
fn unknown_identity_is_a_usage_error() {
    assert_eq!(gaussq(&["verify", "gauss-9.9"]).status.code(), Some(2));
    assert_eq!(gaussq(&["verify-all", "--scale", "huge"]).status.code(), Some(2));
}

#[test]
fn stdout_is_deterministic() {
    for args in [&["verify-all", "--scale", "small"][..], &["table", "ccoef", "--format", "latex"], &["theta", "--alpha", "1", "--n-max", "5"]] {
        let a = gaussq(args);
        let b = gaussq(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn scale_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_gaussq"))
        .args(["verify", "taylor-3.3"])
        .env("QSERIES_SCALE", "small")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    // small scale runs n = 0..=8
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn json_reports_follow_the_report_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = gaussq(&["verify", "fine-v-6.15", "--n-max", "3", "--order", "12", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let reports = value.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    let first = &reports[0];
    assert_eq!(first["name"], "fine-v-6.14/6.15");
    assert_eq!(first["params"]["N"], "1");
    assert_eq!(first["params"]["order"], "12");
    assert_eq!(first["status"], "pass");
    assert!(first["witness"].is_null());
    assert!(first["elapsed_ms"].is_number());
    assert!(first["note"].as_str().unwrap().starts_with("reading: "));
}

#[test]
fn theta_json_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theta.json");
    let o = gaussq(&["theta", "--alpha", "0", "--n-max", "4", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["status"], "pass");
    assert_eq!(value["thetas"][2]["text"], "1 - 1*q^1");
    assert_eq!(value["thetas"][2]["value"]["num"], serde_json::json!([[0, "1"], [2, "-1"]]));
    assert_eq!(value["matches_alpha_zero_closed_form"], true);

    let o = gaussq(&["table", "gauss", "--n-max", "4"]);
    assert_eq!(stdout(&o).lines().next(), Some("N,s_{N|0},G_N"));
    assert!(stdout(&o).contains("\n2,1 - 1*q^1,1 - 1*q^1\n"));
    let o = gaussq(&["table", "s", "--n-max", "2", "--alpha", "1/2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[1]["r"], "1/2");
    assert_eq!(rows[1]["s_{N|r}"], serde_json::json!([[0, "-1"], [1, "1"]]));
}
