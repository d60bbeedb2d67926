use std::process::{Command, Output};

fn hookcontent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookcontent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dims_reports_the_worked_hook() {
    let o = hookcontent(&["dims", "--shape", "4,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // row 1 of the hook grid: h((1,2)) = 4
    assert!(text.contains("hook lengths:\n  6 4 3 1\n"), "{text}");
}

#[test]
fn dims_with_dimension() {
    let o = hookcontent(&["dims", "--shape", "4,2,1", "--d", "4"]);
    let text = stdout(&o);
    assert!(text.contains("SYT: 35"));
    assert!(text.contains("SSYT(d=4): 140"));
}

#[test]
fn steps_for_figure_shape() {
    let o = hookcontent(&["steps", "--shape", "8,8,4,4,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("step coordinates: (1,3,3,2,4,2)"));
}

#[test]
fn q_prints_lowest_terms() {
    let o = hookcontent(&["q", "--seq", "2,4", "--m", "0", "--j", "0", "--n", "1"]);
    assert_eq!(stdout(&o), "1/3\n");
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        vec!["dims", "--shape", "1,2"],
        vec!["steps", "--shape", ""],
        vec!["q", "--seq", "1", "--m", "0", "--j", "0", "--n", "0"],
        vec!["verify", "--identities", "NOPE"],
        vec!["verify", "--n-max", "0"],
    ] {
        let o = hookcontent(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_writes_report_to_stdout_and_file() {
    let dir = std::env::temp_dir().join(format!("hookcontent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");

    let args = [
        "verify", "--n-max", "5", "--d-set", "1-3", "--trials", "10", "--seed", "7",
    ];
    let to_stdout = hookcontent(&args);
    assert_eq!(to_stdout.status.code(), Some(0));

    let mut with_file = args.to_vec();
    with_file.extend(["--workers", "3", "--out", path.to_str().unwrap()]);
    let to_file = hookcontent(&with_file);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());

    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, to_stdout.stdout);

    let report: serde_json::Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["config"]["seed"], 7);
    assert_eq!(report["config"]["d_set"], serde_json::json!([1, 2, 3]));
    assert_eq!(report["summary"].as_array().unwrap().len(), 6);
    let _ = std::fs::remove_dir_all(&dir);
}
