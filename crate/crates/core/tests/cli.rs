use std::io::Write;
use std::process::{Command, Stdio};

use diagrank::cli::main_with_args;
use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut input = stdin.as_bytes();
    let argv = std::iter::once("diagrank").chain(args.iter().copied());
    let code = main_with_args(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str], stdin: &str) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full, stdin);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

fn matrix_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn rank_of_identity() {
    let f = matrix_file("10\n01\n");
    assert_eq!(
        run(&["rank", f.path().to_str().unwrap()], ""),
        (0, "2\n".into(), String::new())
    );
}

#[test]
fn decide_exit_codes_and_witness() {
    let f = matrix_file("01\n10\n");
    let (code, out, _) = run(&["decide", "--k", "1", f.path().to_str().unwrap()], "");
    assert_eq!(code, 0);
    assert!(out.contains("11"));
    let (code, v) = json(&["decide", "--k", "1", f.path().to_str().unwrap()], "");
    assert_eq!(code, 0);
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["witness_diagonal"], "11");
    assert_eq!(v["achieved_rank"], 1);
    assert_eq!(v["k"], 1);
    assert_eq!(v["n"], 2);
    let (code, v) = json(&["decide", "--k", "0", f.path().to_str().unwrap()], "");
    assert_eq!(code, 1);
    assert_eq!(v["answer"], "no");
    assert!(v["witness_diagonal"].is_null());
}

#[test]
fn approx_brackets_true_value() {
    let (code, v) = json(&["approx", "-"], "01\n10\n");
    assert_eq!(code, 0);
    let lower = v["rank_bounds"]["lower"].as_u64().unwrap();
    let upper = v["rank_bounds"]["upper"].as_u64().unwrap();
    assert!(lower <= 1 && 1 <= upper);
    assert_eq!(v["achieved_rank"].as_u64().unwrap(), upper);
    assert_eq!(v["witness_diagonal"], "01");
}

#[test]
fn exact_oracle_upper_bound_complete() {
    let (code, v) = json(&["exact", "--k-max", "2", "-"], "01\n10\n");
    assert_eq!(code, 0);
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["rank_bounds"]["lower"], 1);
    assert_eq!(v["witness_diagonal"], "11");

    let (code, v) = json(&["exact", "--k-max", "0", "-"], "01\n10\n");
    assert_eq!(code, 1);
    assert_eq!(v["answer"], "exhausted");

    let (code, v) = json(&["oracle", "-"], "01\n10\n");
    assert_eq!(code, 0);
    assert_eq!(v["rank_bounds"]["upper"], 1);
    assert_eq!(v["witness_diagonal"], "11");

    let (code, v) = json(&["upper-bound", "-"], "01\n10\n");
    assert_eq!(code, 0);
    assert_eq!(v["witness_diagonal"], "11");
    assert_eq!(v["achieved_rank"], 1);

    let (code, v) = json(&["complete", "-"], "01\n10\n");
    assert_eq!(code, 0);
    assert_eq!(v["witness_diagonal"], "10");
    assert_eq!(v["achieved_rank"], 2);
    assert_eq!(run(&["complete", "-"], "00\n00\n").1, "10\n01\n");
}

#[test]
fn hieroglyph_subcommands() {
    assert_eq!(run(&["hiero", "overlap", "abab"], "").1, "01\n10\n");
    let (code, v) = json(&["hiero", "decide", "--k", "1", "abab"], "");
    assert_eq!(code, 0);
    assert_eq!(v["twist_witness"], "11");
    assert_eq!(v["alphabet"], serde_json::json!(["a", "b"]));
    let (code, _) = json(&["hiero", "decide", "--k", "0", "abab"], "");
    assert_eq!(code, 1);
    let (code, v) = json(&["hiero", "approx", "aabbcc"], "");
    assert_eq!(code, 0);
    assert_eq!(
        v["rank_bounds"],
        serde_json::json!({"lower": 0, "upper": 0})
    );
    assert!(v["twist_witness"].is_string());
    assert_eq!(run(&["hiero", "canon", "abba"], "").1, "aabb\n");
    let f = matrix_file("x y x y\n");
    assert_eq!(
        run(&["hiero", "overlap", f.path().to_str().unwrap()], "").1,
        "01\n10\n"
    );
    assert_eq!(run(&["hiero", "canon", "-"], "baba").1, "abab\n");
}

#[test]
fn gen_is_reproducible() {
    let a = run(&["gen", "--n", "9", "--density", "0.4", "--seed", "5"], "");
    let b = run(&["gen", "--n", "9", "--density", "0.4", "--seed", "5"], "");
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    let zero = run(&["gen", "--n", "3", "--density", "0", "--seed", "5"], "").1;
    assert_eq!(zero, "000\n000\n000\n");
    let ones = run(&["gen", "--n", "3", "--density", "1", "--seed", "5"], "").1;
    assert_eq!(ones, "011\n101\n110\n");
    let (_, v) = json(&["gen", "--n", "3", "--density", "1/2", "--seed", "1"], "");
    assert_eq!(v["n"], 3);
    assert_eq!(v["seed"], 1);
    assert_eq!(v["density"], 0.5);
}

#[test]
fn bench_emits_csv_rows() {
    let (code, out, _) = run(
        &[
            "bench", "--algo", "approx", "--sizes", "8,16", "--reps", "1", "--seed", "3",
        ],
        "",
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].starts_with("approx,16,"));
    let (_, v) = json(
        &["bench", "--algo", "rank", "--sizes", "8", "--reps", "1"],
        "",
    );
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn error_prefixes_and_exit_code() {
    let (code, _, err) = run(&["rank", "-"], "01\n1");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[matrix]"), "{err}");

    let (code, _, err) = run(&["rank", "/nonexistent/diagrank-input"], "");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[io]"), "{err}");

    let (code, _, err) = run(&["hiero", "overlap", "aab"], "");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[hieroglyph]"), "{err}");

    let big = "0".repeat(25) + "\n";
    let (code, _, err) = run(&["oracle", "-"], &big.repeat(25));
    assert_eq!(code, 2);
    assert!(err.starts_with("error[guard]"), "{err}");

    let (code, _, err) = run(&["decide", "-"], "0\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[usage]"), "{err}");

    let (code, _, err) = run(&["gen", "--n", "3", "--density", "1.5", "--seed", "0"], "");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[usage]"), "{err}");
}

#[test]
fn json_fields_present_for_every_subcommand() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["rank", "-"], &["n", "rank"]),
        (
            &["complete", "-"],
            &["n", "witness_diagonal", "achieved_rank", "matrix"],
        ),
        (
            &["decide", "--k", "1", "-"],
            &["n", "k", "answer", "witness_diagonal", "achieved_rank"],
        ),
        (
            &["approx", "-"],
            &["n", "rank_bounds", "witness_diagonal", "achieved_rank"],
        ),
        (
            &["exact", "--k-max", "3", "-"],
            &[
                "n",
                "k_max",
                "answer",
                "rank_bounds",
                "witness_diagonal",
                "achieved_rank",
            ],
        ),
        (
            &["oracle", "-"],
            &["n", "rank_bounds", "witness_diagonal", "achieved_rank"],
        ),
        (
            &["upper-bound", "-"],
            &["n", "rank_bounds", "witness_diagonal", "achieved_rank"],
        ),
    ];
    for (args, fields) in cases {
        let (_, v) = json(args, "011\n101\n110\n");
        for f in *fields {
            assert!(v.get(*f).is_some(), "{args:?} lacks {f}");
        }
    }
    let hiero: &[(&[&str], &[&str])] = &[
        (
            &["hiero", "overlap", "abcabc"],
            &["n", "alphabet", "matrix"],
        ),
        (
            &["hiero", "decide", "--k", "1", "abcabc"],
            &[
                "n",
                "k",
                "answer",
                "alphabet",
                "twist_witness",
                "witness_diagonal",
                "achieved_rank",
            ],
        ),
        (
            &["hiero", "approx", "abcabc"],
            &[
                "n",
                "alphabet",
                "rank_bounds",
                "twist_witness",
                "witness_diagonal",
                "achieved_rank",
            ],
        ),
        (
            &["hiero", "canon", "abcabc"],
            &["n", "canonical", "alphabet"],
        ),
    ];
    for (args, fields) in hiero {
        let (_, v) = json(args, "");
        for f in *fields {
            assert!(v.get(*f).is_some(), "{args:?} lacks {f}");
        }
    }
}

#[test]
fn end_to_end_oracle_exact_decide_agree() {
    for seed in 0..12u64 {
        let n = (1 + seed % 12).to_string();
        let (_, gen, _) = run(
            &[
                "gen",
                "--n",
                &n,
                "--density",
                "0.5",
                "--seed",
                &seed.to_string(),
            ],
            "",
        );
        let (_, oracle) = json(&["oracle", "-"], &gen);
        let r = oracle["rank_bounds"]["upper"].as_u64().unwrap();
        let (code, exact) = json(&["exact", "--k-max", &n, "-"], &gen);
        assert_eq!(code, 0);
        assert_eq!(exact["rank_bounds"]["upper"].as_u64().unwrap(), r);
        for k in 0..=n.parse::<u64>().unwrap() {
            let (code, _) = json(&["decide", "--k", &k.to_string(), "-"], &gen);
            assert_eq!(code == 0, r <= k, "seed {seed} k {k}");
        }
    }
}

#[test]
fn binary_reads_stdin_and_sets_exit_status() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_diagrank"))
        .args(["decide", "--k", "0", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"01\n10\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "no\n");
}
