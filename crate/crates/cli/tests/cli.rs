//! End-to-end checks of the `jack` binary: output fixtures, exit codes,
//! schema shapes, determinism, and the on-disk expansion cache.

use std::process::{Command, Output};

fn jack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jack"))
        .args(args)
        .env_remove("JACK_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn expand_prints_degree_three_fixture() {
    let out = jack(&["expand", "--lambda", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(1 + 3*alpha + 2*alpha^2)*m[3]"), "{text}");
    assert!(text.contains("(3 + 3*alpha)*m[2,1]"));
    assert!(text.contains("6*m[1,1,1]"));
    assert!(text.contains("2*alpha^2*p[3]"));
}

#[test]
fn stanley_json_has_documented_shape() {
    let out = jack(&[
        "stanley", "--mu", "1", "--nu", "1", "--lambda", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["lambda"], serde_json::json!([2]));
    // 2 alpha^2 ascending: [0, 0, 2].
    assert_eq!(doc["value"], serde_json::json!([[0, 1], [0, 1], [2, 1]]));
    assert_eq!(doc["factored"]["constant"], serde_json::json!([2, 1]));
    assert_eq!(doc["factored"]["factors"], serde_json::json!([[1, 0, 2]]));
}

#[test]
fn lr_table_lists_both_expansions() {
    let out = jack(&["lr", "--mu", "1", "--nu", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("gamma=[2] g=(1)/(1 + alpha)"), "{text}");
    assert!(text.contains("gamma=[1,1] g=(alpha)/(1 + alpha)"));
}

#[test]
fn hooks_rect_union_prints_worked_grids() {
    let out = jack(&[
        "hooks",
        "rect-union",
        "--mu",
        "4,2,2,1,1",
        "--m",
        "3",
        "--n",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mu factor:\nL\nL\nL L\nL L\nU U U U"), "{text}");
    assert!(text.contains("nu factor:\nU\nU\nU U"));
    assert!(text.contains("lambda factor:\nU\nU U L\nU U L\nU L L\nL L L L"));
}

#[test]
fn verify_smallest_suite_exits_zero() {
    let out = jack(&["verify", "sum-product", "--max-size", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("8 of 8 cases verified"));
}

#[test]
fn usage_errors_exit_two() {
    let out = jack(&["expand", "--lambda", "42211"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jack(&["expand"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jack(&["hooks", "rect", "--mu", "3", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let args = ["lr", "--mu", "2,1", "--nu", "2", "--format", "json"];
    let a = jack(&args);
    let b = jack(&args);
    assert_eq!(a.stdout, b.stdout);

    // Worker count must not affect suite output.
    let one = jack(&["verify", "norms", "--max-size", "4", "--jobs", "1"]);
    let three = jack(&["verify", "norms", "--max-size", "4", "--jobs", "3"]);
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn cache_dir_persists_and_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_jack"))
            .args(args)
            .env("JACK_CACHE_DIR", dir.path())
            .output()
            .expect("binary runs")
    };
    let first = run(&["expand", "--lambda", "2,1"]);
    assert!(first.status.success());
    let cached = dir.path().join("jack-degree-3.json");
    assert!(cached.exists(), "expansion table persisted");

    let second = run(&["expand", "--lambda", "2,1"]);
    assert_eq!(first.stdout, second.stdout);

    // A corrupt cache entry is ignored, not trusted.
    std::fs::write(&cached, "{not json").unwrap();
    let third = run(&["expand", "--lambda", "2,1"]);
    assert_eq!(first.stdout, third.stdout);
}
