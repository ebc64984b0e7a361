use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_names_every_check() {
    let o = verify(&["--list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 48);
    assert!(text.lines().any(|l| l.starts_with("m10-m20-shared-line")));
}

#[test]
fn full_generic_run_passes() {
    let o = verify(&[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS: 48 checks, 48 passed, 0 failed, 0 skipped\n"));
}

#[test]
fn structured_report_fields() {
    let o = verify(&["--check", "tangency-n5-n13", "--check", "chow-e-cube", "--u", "2", "--u", "-1/3", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "v22-verify/1");
    assert_eq!(v["environment"]["arithmetic"], "exact rational");
    assert_eq!(v["config"]["u"], serde_json::json!(["2", "-1/3"]));
    assert_eq!(v["summary"]["total"], 4);
    assert_eq!(v["summary"]["status"], "PASS");
    let checks = v["checks"].as_array().unwrap();
    let order: Vec<(&str, &str)> = checks.iter().map(|c| (c["u"].as_str().unwrap(), c["id"].as_str().unwrap())).collect();
    assert_eq!(order, [("2", "chow-e-cube"), ("2", "tangency-n5-n13"), ("-1/3", "chow-e-cube"), ("-1/3", "tangency-n5-n13")]);
    for c in checks {
        for key in ["id", "u", "status", "witness", "claim"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }
    assert!(checks[1]["witness"].as_str().unwrap().contains("proportional: true"));
    assert!(checks[3]["witness"].as_str().unwrap().contains("proportional: false"));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let args = ["--u", "3/4", "--u", "2", "--format", "structured"];
    let one = verify(&[&args[..], &["--jobs", "1"]].concat());
    let many = verify(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["--check", "no-such-check"][..], &["--u", "0"], &["--u", "1"], &["--u", "abc"], &["--format", "xml"], &["--eval", "x +"]]
    {
        let o = verify(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn singular_parameter_needs_the_flag() {
    let o = verify(&["--u", "1", "--allow-singular", "--check", "chow-e-cube", "--check", "local-charts"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS    chow-e-cube [u = 1]"));
    assert!(text.contains("SKIPPED local-charts [u = 1]"));
}

#[test]
fn eval_normalizes_and_specializes() {
    let o = verify(&["--eval", "{quadric} - u*x*w", "--u", "3", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!([{ "u": "3", "value": "-y*t - 2*z^2" }]));
    let o = verify(&["--eval", "(x + y)^2 - x^2 - y^2"]);
    assert_eq!(stdout(&o), "[u = generic] 2*x*y\n");
}
