//! End-to-end tests of the `deltaflip` binary: frozen outputs, exit codes
//! and machine-format round-trips.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use deltaflip::matrix_delta_matroid;
use deltaflip::text::{parse_matrix, parse_subset, parse_word};

const U12: &str = "rmatrix GF4 1 2\nr0\na b\n1 1\n";
const LINE6: &str = "setsystem 6\na b c d e f\n\
    a,b\na,c\na,d\na,e\na,f\nb,c\nb,d\nb,e\nb,f\nc,d\nc,e\nc,f\nd,e\nd,f\ne,f\n";

fn fixture(name: &str, content: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, content).expect("fixture directory is writable");
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltaflip"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn normalize_collapses_the_documented_word() {
    let out = run(&["normalize", "*u +u"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "Z1=- Z2=u Z3=u\n");
}

#[test]
fn parity_of_the_two_point_line() {
    let path = fixture("u12_parity.mat", U12);
    let out = run(&["parity", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "bases=2 (even), bd=1, consistent\n");
}

#[test]
fn dm_check_reports_the_first_violation() {
    let path = fixture("gap.ss", "setsystem 3\na b c\n-\na,b,c\n");
    let out = run(&["dm-check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out), "violation X=- Y=a,b,c u=a\n");
}

#[test]
fn dm_check_accepts_a_delta_matroid() {
    let path = fixture("u12.ss", "setsystem 2\na b\na\nb\n");
    let out = run(&["dm-check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "delta-matroid\n");
}

#[test]
fn flip_applies_words_left_to_right() {
    let path = fixture("gap_flip.ss", "setsystem 3\na b c\n-\na,b,c\n");
    let out = run(&["flip", path.to_str().unwrap(), "+a *b"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "setsystem 3\na b c\nb\na,b\na,c\n");
}

#[test]
fn foreign_labels_in_words_are_usage_errors() {
    let path = fixture("u12_foreign.ss", "setsystem 2\na b\na\nb\n");
    let out = run(&["flip", path.to_str().unwrap(), "*z"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ppt_output_reparses_and_pivots_back() {
    let a_src = "matrix GF4 2\na b\n0 w\nw2 1\n";
    let path = fixture("piv.mat", a_src);
    let out = run(&["ppt", path.to_str().unwrap(), "b"]);
    assert_eq!(out.status.code(), Some(0));
    let back_path = fixture("piv_back.mat", &stdout_of(&out));
    let out_back = run(&["ppt", back_path.to_str().unwrap(), "b"]);
    assert_eq!(out_back.status.code(), Some(0));
    assert_eq!(
        parse_matrix(&stdout_of(&out_back)).unwrap(),
        parse_matrix(a_src).unwrap()
    );
}

#[test]
fn ppt_on_a_singular_block_fails_with_status_one() {
    let path = fixture("piv_sing.mat", "matrix GF4 2\na b\n0 w\nw2 1\n");
    let out = run(&["ppt", path.to_str().unwrap(), "a"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_files_and_bad_formats_are_usage_errors() {
    let missing = run(&["ppt", "/nonexistent/input.mat", "a"]);
    assert_eq!(missing.status.code(), Some(2));
    let path = fixture("broken.mat", "matrix GF9 2\na b\n0 1\n1 0\n");
    let broken = run(&["parity", path.to_str().unwrap()]);
    assert_eq!(broken.status.code(), Some(2));
}

#[test]
fn six_point_line_witness_replays_through_the_cli() {
    let path = fixture("line6.ss", LINE6);
    let out = run(&["vfsafe", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("unsafe"));
    let witness = lines
        .next()
        .and_then(|l| l.strip_prefix("witness="))
        .expect("witness line")
        .to_string();
    assert!(!witness.is_empty());
    let flipped = run(&["flip", path.to_str().unwrap(), &witness]);
    assert_eq!(flipped.status.code(), Some(0));
    let replay_path = fixture("line6_flipped.ss", &stdout_of(&flipped));
    let check = run(&["dm-check", replay_path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
}

#[test]
fn exhausting_the_orbit_budget_exits_three() {
    let path = fixture("line6_budget.ss", LINE6);
    let out = run(&["vfsafe", path.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).starts_with("exhausted\n"));
}

#[test]
fn represent_prints_the_standard_pivot_matrix_and_twist() {
    let path = fixture("u12_rep.mat", U12);
    let out = run(&["represent", path.to_str().unwrap(), "--alpha", "inv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "matrix GF4 2\na b\n0 1\n1 0\ntwist=a\n");
}

#[test]
fn transport_matches_the_flip_oracle() {
    let a_src = "matrix GF4 2\na b\n0 w\nw2 1\n";
    let path = fixture("trans.mat", a_src);
    let out = run(&["transport", path.to_str().unwrap(), "-", "+a *b"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let split = text.rfind("twist=").expect("twist line");
    let carried = parse_matrix(&text[..split]).unwrap();
    let new_twist = parse_subset(
        carried.ground(),
        text[split..].trim().strip_prefix("twist=").unwrap(),
    )
    .unwrap();
    let a = parse_matrix(a_src).unwrap();
    let expected = matrix_delta_matroid(&a)
        .unwrap()
        .apply_word(&parse_word("+a *b").unwrap())
        .unwrap();
    assert_eq!(
        matrix_delta_matroid(&carried).unwrap().twist(&new_twist),
        expected
    );
}

#[test]
fn bicycle_identity_for_the_two_point_line() {
    let path = fixture("u12_bc.mat", U12);
    let out = run(&["bicycle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "rmatrix GF4 1 2\nr0\na b\n1 1\nbd=1\n\
         setsystem 2\na b\na\nb\nsetsystem 2\na b\na\nb\nEQUAL\n"
    );
}

#[test]
fn output_flag_redirects_the_payload() {
    let input = fixture("u12_out.mat", U12);
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("parity.txt");
    let out = run(&[
        "parity",
        input.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "");
    assert_eq!(
        fs::read_to_string(&target).unwrap(),
        "bases=2 (even), bd=1, consistent\n"
    );
}

#[test]
fn verify_is_deterministic_per_seed_and_passes() {
    let first = run(&["verify", "--seed", "3"]);
    let second = run(&["verify", "--seed", "3"]);
    assert_eq!(first.status.code(), Some(0));
    let table = stdout_of(&first);
    assert_eq!(table, stdout_of(&second));
    assert_eq!(table.lines().count(), 11);
    assert!(table.lines().all(|line| line.contains(": PASS (")));
}
