//! End-to-end checks of the command-line interface: pinned output strings,
//! exit codes, and the JSON round-trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.pd"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_conway_trefoil() {
    let out = run(&["eval", "--pd", &fixture("trefoil"), "--invariant", "conway"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 + h^2\n");
}

#[test]
fn eval_p_values() {
    let out = run(&["eval", "--pd", &fixture("unknot"), "--invariant", "p"]);
    assert_eq!(stdout(&out), "1 + O(u^12)\n");
    let out = run(&["eval", "--pd", &fixture("hopf_plus"), "--invariant", "p"]);
    assert_eq!(stdout(&out), "h + u + O(u^12)\n");
}

#[test]
fn eval_homfly_unlink() {
    let out = run(&["eval", "--pd", &fixture("unlink2"), "--invariant", "homfly"]);
    assert_eq!(stdout(&out), "-x^-1h^-1 + xh^-1\n");
}

#[test]
fn series_output_at_order_eight() {
    let out = run(&["series", "--order", "8"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "gamma = -1 + O(u^8)\n\
         alpha = -u - u^3 - u^5 - u^7 + O(u^8)\n\
         beta = u^2 + u^4 + u^6 + O(u^8)\n"
    );
}

#[test]
fn table_json_is_stable_under_roundtrip() {
    let out = run(&[
        "table",
        "--pd",
        &fixture("trefoil"),
        "--lmax",
        "2",
        "--mmax",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let table: skeinlab::higher::NablaTable = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(table.link, "trefoil");
    assert_eq!(table.order, 12);
    let reserialized = serde_json::to_string(&table).unwrap();
    assert_eq!(reserialized, text.trim());
    let entry00 = table
        .entries
        .iter()
        .find(|e| e.l == 0 && e.m == 0)
        .unwrap();
    assert_eq!(entry00.poly, "1 + h^2");
}

#[test]
fn table_window_guard_is_a_usage_error() {
    let out = run(&[
        "table",
        "--pd",
        &fixture("trefoil"),
        "--lmax",
        "8",
        "--mmax",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_extends_to_singular_diagrams() {
    // The resolution of the one-curl generator has series image -h u.
    let out = run(&["eval", "--pd", &fixture("g_1_1"), "--invariant", "p"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-hu + O(u^12)\n");
    let out = run(&["eval", "--pd", &fixture("g_0_2"), "--invariant", "conway"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn table_of_a_resolved_generator_shows_the_delta_pattern() {
    let out = run(&[
        "table",
        "--pd",
        &fixture("g_1_2"),
        "--lmax",
        "2",
        "--mmax",
        "2",
    ]);
    assert!(out.status.success());
    let table: skeinlab::higher::NablaTable = serde_json::from_str(stdout(&out).trim()).unwrap();
    for e in &table.entries {
        let expect = if e.l == 1 && e.m == 1 { "1" } else { "0" };
        assert_eq!(e.poly, expect, "entry ({}, {})", e.l, e.m);
    }
}

#[test]
fn resolve_prints_the_combination() {
    let out = run(&["resolve", "--pd", &fixture("g_1_1")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 merged terms"));
    assert!(text.contains("term -h"));
}

#[test]
fn verify_series_passes() {
    let out = run(&["verify", "--suite", "series"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().all(|l| l.starts_with("[PASS]")));
}

#[test]
fn verify_eightt_passes_in_json() {
    let out = run(&["verify", "--suite", "eightt", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(value
        .as_array()
        .unwrap()
        .iter()
        .all(|i| i["passed"] == true));
}

#[test]
fn usage_errors_exit_two() {
    // Unknown invariant.
    let out = run(&["eval", "--pd", &fixture("trefoil"), "--invariant", "jones"]);
    assert_eq!(out.status.code(), Some(2));
    // Unreadable file.
    let out = run(&["eval", "--pd", "/nonexistent.pd", "--invariant", "conway"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown suite.
    let out = run(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // Malformed flags (handled by the argument parser).
    let out = run(&["eval", "--invariant", "conway"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn runs_are_deterministic() {
    let a = run(&["verify", "--suite", "skein", "--seed", "11"]);
    let b = run(&["verify", "--suite", "skein", "--seed", "11"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(a.status.success());
}
