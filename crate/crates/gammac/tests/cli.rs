use std::io::Write;
use std::process::{Command, Output};

fn gammac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammac")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn comply_reports_paley13() {
    let o = gammac(&["comply", "-k", "3", "QR13"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "non-compliant, min_k=4");
    let o = gammac(&["comply", "-k", "3", "QR13", "--cross-check", "--expect", "compliant"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn comply_json_has_no_timing_by_default() {
    let o = gammac(&["--json", "comply", "-k", "4", "QR13"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "comply");
    assert_eq!(v["verdicts"][0]["value"]["compliant"], true);
    assert!(v.get("timing").is_none());
    let t = gammac(&["--json", "--timing", "comply", "-k", "4", "QR13"]);
    let v: serde_json::Value = serde_json::from_slice(&t.stdout).unwrap();
    assert!(v["timing"]["elapsed_ms"].is_number());
}

#[test]
fn petersen_family_lists_seven_graphs() {
    let o = gammac(&["petersen-family"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn reads_edge_list_files() {
    let dir = std::env::temp_dir().join(format!("gammac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
    let o = gammac(&["gammac", &format!("@{}", path.display()), "--expect", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(gammac(&["il", "petersen", "--expect", "il"]).status.code(), Some(0));
    assert_eq!(gammac(&["il", "K5", "--expect", "il"]).status.code(), Some(1));
    assert_eq!(gammac(&["comply", "-k", "3", "not-a-graph!"]).status.code(), Some(2));
    assert_eq!(gammac(&["comply", "-k", "0", "K3"]).status.code(), Some(2));
    assert_eq!(gammac(&["fn", "8"]).status.code(), Some(2));
    assert_eq!(gammac(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn search_writes_checkpoint() {
    let dir = std::env::temp_dir().join(format!("gammac-search-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("spec.json");
    let cp = dir.join("out.ckpt");
    std::fs::write(
        &spec,
        r#"{"order": 13, "degree": {"regular": 6}, "filters": ["basic"],
            "mode": {"sample": {"count": 50, "seed": 2}}, "k": 3, "candidates": ["QR13"]}"#,
    )
    .unwrap();
    // Candidates must be graph6, so a name is a parse error.
    assert_eq!(gammac(&["search", spec.to_str().unwrap()]).status.code(), Some(2));
    let qr13 = stdout(&gammac(&["paley", "13"])).lines().next().unwrap().to_string();
    std::fs::write(
        &spec,
        format!(
            r#"{{"order": 13, "degree": {{"regular": 6}}, "filters": ["basic"],
                "mode": {{"sample": {{"count": 50, "seed": 2}}}}, "k": 3, "candidates": ["{qr13}"]}}"#
        ),
    )
    .unwrap();
    let o = gammac(&["search", spec.to_str().unwrap(), "--checkpoint", cp.to_str().unwrap(), "--expect", "found"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&cp).unwrap();
    assert!(text.starts_with("# gammac checkpoint\n"));
    assert!(text.lines().any(|l| l == qr13));
    std::fs::remove_dir_all(&dir).unwrap();
}
