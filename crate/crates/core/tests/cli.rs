use std::path::PathBuf;
use std::process::{Command, Output};

fn euclid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_euclid"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("EUCLID_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("euclid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn decagon_divides_into_eight_triangles() {
    let o = euclid(&["prop", "I.45", "--input", "tests/decagon.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("triangles: 8"));
}

#[test]
fn script_run_writes_svg() {
    let svg = scratch("i1.svg");
    let o = euclid(&["run", "examples/i1.euc", "--svg", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml"));
    assert_eq!(text.matches("<text").count(), 3);
}

#[test]
fn failed_assertion_exits_one() {
    let script = scratch("bad_assert.euc");
    std::fs::write(&script, "segment AB = [(0, 0), (1, 0)]\nsegment AC = [A, (0, 2)]\nassert seg_eq(AB, AC)\n").unwrap();
    assert_eq!(euclid(&["run", script.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let script = scratch("bad_parse.euc");
    std::fs::write(&script, "point A = (0 0)\n").unwrap();
    let o = euclid(&["run", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":1:13:"));
    assert_eq!(euclid(&["suite", "I.99"]).status.code(), Some(2));
    assert_eq!(euclid(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn application_suite_reports_superpositions() {
    let o = euclid(&["suite", "I.44", "--n", "20", "--seed", "7", "--records"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("strategy=euclid_superposition") && out.contains("superposing_instances=20"), "{out}");
}

#[test]
fn seed_variable_overrides_flag() {
    let run = |env: Option<&str>, seed: &str| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_euclid"));
        c.args(["suite", "I.23", "--n", "3", "--seed", seed, "--records"]);
        c.env_remove("EUCLID_SEED");
        if let Some(v) = env {
            c.env("EUCLID_SEED", v);
        }
        stdout(&c.output().unwrap())
    };
    assert_eq!(run(Some("5"), "9"), run(None, "5"));
    assert_ne!(run(None, "9"), run(None, "5"));
}

#[test]
fn compare_needs_an_input() {
    assert_eq!(euclid(&["compare", "I.46", "--strategies", "campanus_first,campanus_second"]).status.code(), Some(2));
}
