use std::process::Command;

fn daha(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_daha")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn trivial_polynomial() {
    let (code, out) = daha(&["koornwinder", "E", "--n", "2", "--lambda", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");
}

#[test]
fn lattice_report() {
    let (code, out) = daha(&["structure", "lattice", "--n", "4", "--r", "4", "--lambda", "-3,0,-9,13"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""quot":[3,2,0,0]"#), "{}", out);
    assert!(out.contains(r#""std":[9,6,0,0]"#), "{}", out);
}

#[test]
fn output_is_deterministic() {
    let args = ["modified", "build", "--n", "2", "--lambda", "1,-1", "--format", "json"];
    assert_eq!(daha(&args), daha(&args));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(daha(&["koornwinder", "E", "--n", "2"]).0, 2);
    assert_eq!(daha(&["nope"]).0, 2);
    assert_eq!(daha(&["koornwinder", "E", "--n", "2", "--lambda", "1,2,3"]).0, 2);
    assert_eq!(daha(&["structure", "basis", "--case", "zz"]).0, 2);
    assert_eq!(daha(&["structure", "wheel-check", "--n", "2", "--k", "3"]).0, 2);
}

#[test]
fn failed_check_exits_1() {
    // the constant polynomial violates the wheel condition
    let (code, out) = daha(&["structure", "wheel-check", "--n", "2", "--lambda", "0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""wheel_check":false"#));
    let (code, _) = daha(&["structure", "basis", "--case", "ac", "--minus", "--window", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn relations_and_seed() {
    let (code, out) = daha(&["verify", "relations", "--n", "2", "--count", "3", "--seed", "5", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""ok":true"#));
}

#[test]
fn config_file_defaults() {
    let path = std::env::temp_dir().join("daha_cli_test.conf");
    std::fs::write(&path, "# defaults\nformat = json\nseed = 3\n").unwrap();
    let (code, out) = daha(&["koornwinder", "E", "--n", "2", "--lambda", "0,0", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with('{'), "{}", out);
    std::fs::write(&path, "colour = red\n").unwrap();
    assert_eq!(daha(&["params", "catalog", "--n", "2", "--config", path.to_str().unwrap()]).0, 2);
}
