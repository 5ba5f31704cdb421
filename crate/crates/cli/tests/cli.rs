use std::process::{Command, Output};

use serde_json::Value;

fn howe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_howe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (String, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = howe(&full);
    assert!(out.status.success(), "{args:?}: {}", stderr(&out));
    let text = stdout(&out);
    let value = serde_json::from_str(&text).unwrap();
    (text, value)
}

const COMMANDS: &[&[&str]] = &[
    &["omega", "--m", "1", "--mp", "1", "--k", "0"],
    &["omega", "--m", "3", "--mp", "2", "--k", "1", "--parity-p", "0"],
    &["omega", "--m", "2", "--mp", "0", "--k", "0"],
    &[
        "theta", "--m", "2", "--mp", "2", "--k", "0", "--alpha", "1", "--beta", "1",
    ],
    &["extremal", "--m", "2", "--mp", "3", "--k", "0", "--alpha", "2"],
    &["centralizer", "--q", "3", "--n", "7", "--orbits", "0^3,4^2,1"],
    &[
        "centralizer",
        "--q",
        "5",
        "--n",
        "4",
        "--orbits",
        "0,12,3",
        "--modulus",
        "24",
    ],
    &["transport", "--support", "2:s,1", "--m", "3", "--mp", "5"],
    &[
        "transport",
        "--support",
        "1",
        "--m",
        "1",
        "--mp",
        "0",
        "--parity-p",
        "1",
    ],
    &["omega-full", "--pair", "0^4,4^2,1", "--m", "4", "--mp", "3"],
    &["verify", "--max-rank", "2"],
];

#[test]
fn pinned_one_one_table() {
    let (_, v) = json(&["omega", "--m", "1", "--mp", "1", "--k", "0"]);
    assert_eq!(v["row_labels"], serde_json::json!([[[1], []], [[], [1]]]));
    assert_eq!(v["entries"], serde_json::json!([[0, 0, 1], [0, 1, 1], [1, 0, 1]]));
    let text = stdout(&howe(&["omega", "--m", "1", "--mp", "1", "--k", "0"]));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn json_round_trips_byte_identically() {
    for args in COMMANDS {
        let (text, value) = json(args);
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(text, again, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in COMMANDS {
        assert_eq!(stdout(&howe(args)), stdout(&howe(args)), "{args:?}");
    }
}

#[test]
fn verify_passes_at_rank_three() {
    let out = howe(&["verify", "--max-rank", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all properties passed"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn below_first_occurrence_is_an_explicit_zero() {
    // k = 3 goes to k' = 4 in the even tower, first occurring at m' = 5
    let out = howe(&[
        "theta",
        "--m",
        "4",
        "--mp",
        "1",
        "--k",
        "3",
        "--parity-p",
        "0",
        "--alpha",
        "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("zero"));
    let (_, v) = json(&[
        "theta",
        "--m",
        "4",
        "--mp",
        "1",
        "--k",
        "3",
        "--parity-p",
        "0",
        "--alpha",
        "1",
    ]);
    assert_eq!(v["zero"], Value::Bool(true));
    assert_eq!(v["images"], serde_json::json!([]));

    let (_, v) = json(&["omega", "--m", "4", "--mp", "1", "--k", "3", "--parity-p", "0"]);
    assert_eq!(v["entries"], serde_json::json!([]));
    assert_eq!(v["metadata"]["r_prime"], Value::Null);

    let (_, v) = json(&[
        "extremal",
        "--m",
        "4",
        "--mp",
        "1",
        "--k",
        "3",
        "--parity-p",
        "0",
        "--alpha",
        "1",
    ]);
    assert_eq!(v["zero"], Value::Bool(true));
}

#[test]
fn transport_zero_and_growth() {
    let out = howe(&["transport", "--support", "1,1", "--m", "2", "--mp", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[1,1; lambda_0] -> [1,1,1,1; lambda_0]");
    // lambda_1 lives on U_1; in the odd tower its partner is lambda_2, on U_6
    let (_, v) = json(&[
        "transport",
        "--support",
        "",
        "--m",
        "0",
        "--mp",
        "0",
        "--k",
        "1",
        "--parity-p",
        "1",
    ]);
    assert_eq!(v["zero"], Value::Bool(true));
    assert_eq!(v["image"], Value::Null);
    let (_, v) = json(&[
        "transport",
        "--support",
        "",
        "--m",
        "0",
        "--mp",
        "0",
        "--k",
        "1",
        "--parity-p",
        "0",
    ]);
    assert_eq!(v["image"]["phi"], serde_json::json!({"unipotent": {"k": 0}}));
}

#[test]
fn validation_errors_exit_one_with_one_line() {
    let cases: &[&[&str]] = &[
        &["omega", "--m", "1", "--mp", "1", "--k", "1", "--parity", "0"],
        &["omega", "--m", "0", "--mp", "1", "--k", "2"],
        &["theta", "--m", "1", "--mp", "1", "--k", "0", "--alpha", "2"],
        &["theta", "--m", "1", "--mp", "1", "--k", "0", "--alpha", "x"],
        &["centralizer", "--q", "3", "--n", "6", "--orbits", "0^2"],
        &["centralizer", "--q", "4", "--n", "1", "--orbits", "0"],
        &["centralizer", "--q", "3", "--n", "1", "--orbits", "z"],
        &["transport", "--support", "1,2:s", "--m", "3", "--mp", "1"],
        &["omega"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = howe(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = stderr(&out);
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn help_is_not_an_error() {
    let out = howe(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("omega-full"));
}

/// Replays the `$ howe ...` transcripts of the book chapter. A line `...`
/// skips ahead to the next line that matches.
#[test]
fn book_transcripts_match() {
    let chapter = include_str!("../../../book/src/cli.md");
    let block = chapter.split("```text").nth(1).unwrap().split("```").next().unwrap();
    let mut sessions: Vec<(Vec<&str>, Vec<&str>)> = Vec::new();
    for line in block.lines() {
        if let Some(cmd) = line.strip_prefix("$ howe ") {
            sessions.push((cmd.split_whitespace().collect(), Vec::new()));
        } else if let Some((_, expected)) = sessions.last_mut() {
            if !line.is_empty() {
                expected.push(line);
            }
        }
    }
    assert!(sessions.len() >= 5);
    for (args, expected) in sessions {
        let out = howe(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let mut actual = text.lines();
        let mut skipping = false;
        for want in expected {
            if want == "..." {
                skipping = true;
                continue;
            }
            loop {
                let got = actual.next().unwrap_or_else(|| panic!("{args:?}: missing {want:?}"));
                if got == want {
                    break;
                }
                assert!(skipping, "{args:?}: expected {want:?}, got {got:?}");
            }
            skipping = false;
        }
    }
}
