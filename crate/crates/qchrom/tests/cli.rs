//! End-to-end CLI tests driving `harness::cli` with argv vectors.

use std::io::Write;

use qchrom::harness::cli;

fn write_temp(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("qchrom-test-{}-{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> i32 {
    let argv: Vec<String> = std::iter::once("qchrom".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    cli(argv)
}

#[test]
fn poly_and_leading_exit_zero() {
    let p2 = write_temp("p2.txt", "2\n1 2\n");
    assert_eq!(run(&["poly", "--graph", &p2]), 0);
    assert_eq!(
        run(&["poly", "--graph", &p2, "--lambda", "1,2", "--format", "latex"]),
        0
    );
    assert_eq!(
        run(&["poly", "--graph", &p2, "--method", "enumerate", "--n", "3"]),
        0
    );
    assert_eq!(
        run(&["poly", "--graph", &p2, "--method", "delcon", "--n", "2", "--format", "json"]),
        0
    );
    assert_eq!(
        run(&["leading", "--graph", &p2, "--route", "gpartition"]),
        0
    );
}

#[test]
fn bad_input_exits_two() {
    let p2 = write_temp("p2b.txt", "2\n1 2\n");
    // missing file
    assert_eq!(run(&["poly", "--graph", "/nonexistent/file.txt"]), 2);
    // malformed graph
    let bad = write_temp("bad.txt", "2\n1 5\n");
    assert_eq!(run(&["poly", "--graph", &bad]), 2);
    // enumerate without --n
    assert_eq!(run(&["poly", "--graph", &p2, "--method", "enumerate"]), 2);
    // weighted loebl is rejected
    assert_eq!(
        run(&["poly", "--graph", &p2, "--lambda", "1,2", "--method", "loebl", "--n", "2"]),
        2
    );
    // n over budget
    assert_eq!(
        run(&["poly", "--graph", &p2, "--method", "enumerate", "--n", "99"]),
        2
    );
    // unknown flag: clap reports usage errors as 2
    assert_eq!(run(&["poly", "--graph", &p2, "--no-such-flag"]), 2);
    // wrong lambda length
    assert_eq!(run(&["poly", "--graph", &p2, "--lambda", "1,2,3"]), 2);
}

#[test]
fn reciprocity_stable_verify_report_check_failures() {
    let p2 = write_temp("p2c.txt", "2\n1 2\n");
    assert_eq!(run(&["reciprocity", "--graph", &p2, "--n", "2"]), 0);
    assert_eq!(run(&["stable", "--graph", &p2]), 0);
    assert_eq!(run(&["gpartitions", "--graph", &p2, "--upto", "8"]), 0);
    assert_eq!(run(&["beta", "--graph", &p2]), 0);
}

#[test]
fn trees_scan_and_budget_marker() {
    assert_eq!(run(&["trees", "--vertices", "5"]), 0);
    // over the default scan budget: aborted marker, reported as check failure
    assert_eq!(run(&["trees", "--vertices", "11"]), 1);
    // bad vertex count is bad input
    assert_eq!(run(&["trees", "--vertices", "1"]), 2);
}

#[test]
fn json_graph_with_lambda_round_trips_through_cli() {
    let path = write_temp(
        "k3.json",
        r#"{"d": 3, "edges": [[1, 2], [1, 3], [2, 3]], "lambda": [2, 1, 1]}"#,
    );
    assert_eq!(
        run(&["poly", "--graph", &path, "--method", "mobius", "--format", "json"]),
        0
    );
    assert_eq!(run(&["leading", "--graph", &path, "--route", "tree"]), 2); // K3 is not a tree
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]), 0);
    assert_eq!(run(&["--version"]), 0);
    assert_eq!(run(&["no-such-command"]), 2);
}
