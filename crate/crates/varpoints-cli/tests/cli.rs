//! End-to-end checks of the `varpoints` binary: exit codes, JSON shapes,
//! the CSV sweep format and seeded determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const CURVE: &str = "ring 101 [x,y,z]\nideal: x^3+y^2+1; z^3-x^2-y^2+2\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_varpoints"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("VARPOINTS_SEED")
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "invalid JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn points_finds_and_verifies() {
    let out = run(
        &[
            "points",
            "--count",
            "1",
            "--strategy",
            "default",
            "--seed",
            "7",
        ],
        CURVE,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "points");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["field"]["p"], 101);
    assert_eq!(v["points"].as_array().unwrap().len(), 1);
}

#[test]
fn empty_point_list_is_success() {
    let out = run(
        &[
            "points",
            "--strategy",
            "brute",
            "--attempts",
            "10",
            "--seed",
            "1",
        ],
        CURVE,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["points"].as_array().unwrap().len(), 0);
}

#[test]
fn parse_and_contract_errors_exit_three() {
    let out = run(&["points"], "ring 4 [x]\nideal: x\n");
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["points"], "ring 101 [x]\nideal: x + + 1\n");
    assert_eq!(out.status.code(), Some(3));

    // csv is reserved for lineprobe
    let out = run(&["points", "--format", "csv"], CURVE);
    assert_eq!(out.status.code(), Some(3));

    // minor without --minor-size
    let out = run(&["minor"], "ring 101 [x,y]\nideal: x\nmatrix 1x1: x\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_exhaustion_exits_two() {
    // no rational points and no extension allowed: the minor search cannot
    // find any point to test rank at
    let input = "ring 3 [x,y]\nideal: x^2+1\nmatrix 1x1: x\n";
    let out = run(
        &[
            "minor",
            "--minor-size",
            "1",
            "--minor-attempts",
            "2",
            "--seed",
            "5",
        ],
        input,
    );
    assert_eq!(
        out.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn byte_identical_reruns() {
    for cmd in [
        vec!["points", "--count", "2", "--seed", "11"],
        vec!["dim", "--dim-attempts", "2", "--seed", "11"],
        vec!["dim-exact"],
        vec!["coordchange", "--seed", "4"],
        vec!["project", "--drop", "1", "--seed", "4"],
    ] {
        let a = run(&cmd, CURVE);
        let b = run(&cmd, CURVE);
        assert_eq!(
            a.status.code(),
            Some(0),
            "{cmd:?}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout, "bytes differ for {cmd:?}");
    }
    let cubic = "ring 101 [x,y]\nideal: y^2-x^3-x-1\n";
    let probe = ["lineprobe", "--trials", "50", "--seed", "4"];
    let a = run(&probe, cubic);
    let b = run(&probe, cubic);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn workers_do_not_change_output() {
    let args1 = [
        "points",
        "--strategy",
        "brute",
        "--attempts",
        "60000",
        "--count",
        "2",
        "--workers",
        "1",
        "--seed",
        "3",
    ];
    let args4 = [
        "points",
        "--strategy",
        "brute",
        "--attempts",
        "60000",
        "--count",
        "2",
        "--workers",
        "4",
        "--seed",
        "3",
    ];
    let a = run(&args1, CURVE);
    let b = run(&args4, CURVE);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_var_supplies_the_seed() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_varpoints"))
        .args(["points", "--count", "1"])
        .env("VARPOINTS_SEED", "7")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(CURVE.as_bytes())
        .unwrap();
    let with_env = child.wait_with_output().unwrap();
    let with_flag = run(&["points", "--count", "1", "--seed", "7"], CURVE);
    assert_eq!(with_env.stdout, with_flag.stdout);
}

#[test]
fn lineprobe_csv_schema() {
    let input = "ring 101 [x,y]\nideal: y^2-x^3-x-1\n";
    let out = run(
        &[
            "lineprobe",
            "--trials",
            "20",
            "--seed",
            "2",
            "--format",
            "csv",
        ],
        input,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("trial,hit,seed"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 20);
    for (i, row) in rows.iter().enumerate() {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 3);
        assert_eq!(cols[0], i.to_string());
        assert!(cols[1] == "0" || cols[1] == "1");
        assert_eq!(cols[2], "2");
    }
}

#[test]
fn extension_points_serialize_coefficient_arrays() {
    let input = "ring 3 [x,y]\nideal: x^2+1\n";
    let out = run(&["points", "--extend-field", "--seed", "1"], input);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 1);
    let field = &pts[0]["field"];
    assert_eq!(field["k"], 2);
    assert_eq!(field["p"], 3);
    assert!(field["modulus"].is_array());
    // extension coordinates are coefficient arrays
    assert!(pts[0]["coordinates"][0].is_array());
}

#[test]
fn dim_commands_agree_on_the_plane_curve() {
    let out = run(&["dim-exact"], CURVE);
    let v = json(&out);
    assert_eq!(v["dim"], 1);
    let out = run(&["dim", "--seed", "3"], CURVE);
    let v = json(&out);
    assert_eq!(v["dim"], 1);
}

#[test]
fn project_hypersurface_payload() {
    let input = "ring 5 [x,y,z]\nideal: x; y\n";
    let out = run(
        &["project-hypersurface", "--codim", "2", "--seed", "3"],
        input,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["ideal_generators"].as_array().unwrap().len(), 1);
    assert_eq!(v["map_images"].as_array().unwrap().len(), 2);
}

#[test]
fn extension_ring_declaration() {
    let input = "ring 5^2 [x,y]\nideal: x-1; y-1\n";
    let out = run(&["points", "--seed", "4"], input);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["field"]["k"], 2);
    assert!(v["field"]["modulus"].is_array());
    assert_eq!(v["points"].as_array().unwrap().len(), 1);
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--seed", "0"], "");
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["failures"], 0);
}
