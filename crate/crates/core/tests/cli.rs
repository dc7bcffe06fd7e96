use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_betabound");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("BETABOUND_PRECISION")
        .env_remove("BETABOUND_GRID")
        .env_remove("BETABOUND_WIDTH")
        .env_remove("BETABOUND_OUT")
        .env_remove("BETABOUND_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn replay_writes_json_report_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["replay", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let steps = report["report"]["steps"].as_array().unwrap();
    let verified = steps.iter().filter(|s| s["status"] == "verified").count();
    assert!(verified >= 15);
    assert_eq!(report["report"]["summary"]["failed"], 0);
    for s in steps {
        for key in ["id", "claim", "method", "status", "evidence"] {
            assert!(s.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn replay_at_thirty_digits() {
    let o = run(&["--precision", "30", "replay"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("failed 0, inconclusive 0"));
}

#[test]
fn config_errors_exit_two() {
    let o = run(&["--grid", "1", "replay"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("grid_n must be >= 2"));
    assert_eq!(run(&["--precision", "29", "roots"]).status.code(), Some(2));
    assert_eq!(run(&["--width", "0", "roots"]).status.code(), Some(2));
    assert_eq!(run(&["--width", "abc", "roots"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--x", "0", "--y", "1/2"]).status.code(), Some(2));
}

#[test]
fn environment_overrides_flags() {
    let o = Command::new(BIN).arg("roots").env("BETABOUND_PRECISION", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(BIN).arg("roots").env("BETABOUND_FORMAT", "csv").output().unwrap();
    assert!(stdout(&o).starts_with("root,lo,hi,printed,prefix_consistent"));
}

#[test]
fn roots_report_digits_and_ordering() {
    let o = run(&["roots"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for prefix in ["0.03733", "0.2114", "0.3085", "0.3822", "0.4439"] {
        assert!(text.contains(&format!("printed {prefix}...  ok")), "{text}");
    }
    assert!(text.contains("x1 < x2 < x3 < x4 < x5 verified"));

    let wide = run(&["--width", "1/4", "roots"]);
    assert_eq!(wide.status.code(), Some(0));
    assert!(stdout(&wide).contains("ordering unverified at this width"));
    assert!(stderr(&wide).contains("warning"));

    let narrow = run(&["--width", "1e-10", "roots"]);
    assert_eq!(narrow.status.code(), Some(0));
    assert!(stdout(&narrow).contains("verified"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = run(&["--format", "json", "roots"]);
    let b = run(&["--format", "json", "roots"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--format", "json", "constants"]);
    let d = run(&["--format", "json", "constants"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn constants_show_computed_and_printed_digits() {
    let o = run(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2.5797362673929057458896"));
    assert!(text.contains("printed 2.57973..."));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn bounds_at_a_point() {
    let o = run(&["bounds", "--x", "1", "--y", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("margin_new   3.333333333333333333333333e-1"), "{text}");
}

#[test]
fn sweep_csv_has_one_row_per_cell() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let o = run(&["--grid", "100", "--format", "csv", "--out", path.to_str().unwrap(), "sweep"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,y,beta,new_bound,ivady_lower,alzer_lower,margin_new,margin_ivady"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 10_000);
    assert!(rows.iter().all(|r| r.len() == 8 && r[6] > 0.0));
    let corner = rows.last().unwrap();
    assert_eq!((corner[0], corner[1]), (1.0, 1.0));
    assert!((corner[2] - 1.0).abs() < 1e-15);
    assert!((corner[6] - 1.0 / 3.0).abs() < 1e-15);
    assert!(stderr(&o).contains("min margin new"));
}

#[test]
fn unwritable_output_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.json");
    let o = run(&["--out", path.to_str().unwrap(), "roots"]);
    assert_eq!(o.status.code(), Some(3));
}
