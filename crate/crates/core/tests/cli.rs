use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quasimap-verify"))
}

#[test]
fn identical_config_gives_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let status = bin()
            .args(["--suite", "verma", "--suite", "potential", "--suite", "nilhecke"])
            .args(["--dmax", "2", "--nmax", "3", "--vmax", "10", "--seed", "5", "--json"])
            .arg(path)
            .output()
            .unwrap();
        assert_eq!(status.status.code(), Some(0), "{}", String::from_utf8_lossy(&status.stdout));
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["suites"], serde_json::json!(["verma", "nilhecke", "potential"]));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = bin().args(["--suite", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn bad_flag_is_a_usage_error() {
    let out = bin().args(["--dmax", "many"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    // At vmax 0 the retraction search cannot cover its unknowns for d = 1.
    let out = bin().args(["--suite", "koszul", "--dmax", "1", "--vmax", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn verma_suite_at_larger_dmax() {
    let out = bin().args(["--suite", "verma", "--dmax", "8"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let table = String::from_utf8_lossy(&out.stdout);
    assert!(table.contains("uv_relations") && table.contains("dmax=8"));
}
