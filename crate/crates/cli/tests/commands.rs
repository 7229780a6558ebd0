use std::process::Command as Process;

use clap::Parser;
use cvwl_cli::args::Cli;
use cvwl_cli::{run_to, RunConfig};

fn config(args: &[&str]) -> RunConfig {
    let argv = std::iter::once("cvwl").chain(args.iter().copied());
    Cli::try_parse_from(argv).unwrap().into_config(None).unwrap()
}

fn csv(args: &[&str]) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    run_to(&config(args), &mut out).unwrap();
    String::from_utf8(out).unwrap().lines().map(|l| l.split(',').map(String::from).collect()).collect()
}

fn cell(table: &[Vec<String>], row: usize, column: &str) -> String {
    let idx = table[0].iter().position(|h| h == column).unwrap_or_else(|| panic!("no column {column}"));
    table[row][idx].clone()
}

fn num(table: &[Vec<String>], row: usize, column: &str) -> f64 {
    cell(table, row, column).parse().unwrap()
}

fn cvwl(args: &[&str], threads: Option<&str>) -> std::process::Output {
    let mut cmd = Process::new(env!("CARGO_BIN_EXE_cvwl"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("CVWL_THREADS", t),
        None => cmd.env_remove("CVWL_THREADS"),
    };
    cmd.output().unwrap()
}

#[test]
fn ghz_witness_with_optimised_gains() {
    let t = csv(&["witness", "--state", "ghz", "--n", "3", "--r", "1", "--criterion", "c5", "--gains", "auto"]);
    assert_eq!(t.len(), 2);
    assert!((num(&t, 1, "g2") - 0.95).abs() <= 0.01);
    assert!((num(&t, 1, "h2") + 0.49).abs() <= 0.01);
    assert_eq!(cell(&t, 1, "ent_verdict"), "true");
}

#[test]
fn vacuum_is_not_entangled() {
    let t = csv(&["witness", "--state", "vacuum", "--n", "3", "--criterion", "c3"]);
    assert_eq!(num(&t, 1, "ent"), 2.0);
    assert_eq!(cell(&t, 1, "ent_verdict"), "false");
}

#[test]
fn explicit_gains_reach_the_criterion() {
    let t = csv(&["witness", "--state", "ghz", "--r", "0.5", "--criterion", "c5", "--gains", "1,-0.5,-0.5,1,1,1"]);
    let expected = 4.5 * (-1.0f64).exp();
    assert!((num(&t, 1, "lhs") - expected).abs() < 1e-5);
    let p_only = csv(&["witness", "--state", "ghz", "--r", "0.5", "--criterion", "c1", "--gains", "1,1,1"]);
    assert_eq!(cell(&p_only, 1, "h1"), "0");
}

#[test]
fn table1_matches_printed_gains() {
    let printed = [
        [0.0, 0.0, 0.0, 0.0],
        [0.36, -0.27, 0.33, -0.33],
        [0.68, -0.40, 0.54, -0.54],
        [0.86, -0.46, 0.64, -0.64],
        [0.95, -0.49, 0.68, -0.68],
        [0.99, -0.50, 0.70, -0.70],
        [1.00, -0.50, 0.70, -0.70],
    ];
    let t = csv(&["reproduce", "table1"]);
    assert_eq!(t[0], ["r", "ghz_g", "ghz_h", "epr_g", "epr_h", "provenance"]);
    assert_eq!(t.len(), 8);
    for (k, row) in printed.iter().enumerate() {
        for (col, &want) in ["ghz_g", "ghz_h", "epr_g", "epr_h"].iter().zip(row) {
            assert!((num(&t, k + 1, col) - want).abs() <= 0.01, "row {k} {col}");
        }
        assert_eq!(cell(&t, k + 1, "provenance"), "Table I");
    }
}

#[test]
fn sweep_header_and_rows() {
    let t = csv(&["sweep", "--state", "epr1", "--criterion", "c5", "--from", "0", "--to", "1", "--steps", "5"]);
    assert_eq!(t[0].join(","), "param,g1,g2,g3,h1,h2,h3,lhs,bound,ent,steer_verdict");
    assert_eq!(t.len(), 6);
    assert_eq!(cell(&t, 5, "param"), "1");
}

#[test]
fn efficiency_sweep_on_a_network_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ghz.net");
    std::fs::write(
        &path,
        "input squeeze p 1\ninput squeeze x 1\ninput squeeze x 1\nbs 1 2 0.3333333333333333\nbs 2 3 0.5\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let t = csv(&[
        "sweep",
        "--network",
        p,
        "--criterion",
        "c5",
        "--axis",
        "eta",
        "--from",
        "0",
        "--to",
        "1",
        "--steps",
        "3",
        "--modes",
        "2,3",
    ]);
    assert_eq!(t.len(), 4);
    let preset = csv(&[
        "sweep",
        "--state",
        "ghz",
        "--r",
        "1",
        "--criterion",
        "c5",
        "--axis",
        "eta",
        "--from",
        "0",
        "--to",
        "1",
        "--steps",
        "3",
        "--modes",
        "2,3",
    ]);
    assert_eq!(t, preset);
}

#[test]
fn build_emits_the_covariance() {
    let t = csv(&["build", "--state", "ghz", "--n", "3", "--r", "0"]);
    assert_eq!(t[0].join(","), "row,x1,x2,x3,p1,p2,p3");
    for (i, row) in t.iter().enumerate().skip(1) {
        for (j, value) in row.iter().enumerate().skip(1) {
            assert_eq!(value, if i == j { "1" } else { "0" });
        }
    }
}

#[test]
fn output_is_byte_stable_across_runs_and_thread_caps() {
    let args = ["reproduce", "fig7"];
    let a = cvwl(&args, Some("1"));
    let b = cvwl(&args, Some("4"));
    let c = cvwl(&args, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(cvwl(&["witness", "--state", "ghz", "--criterion", "c42"], None).status.code(), Some(2));
    assert_eq!(
        cvwl(&["witness", "--state", "ghz", "--criterion", "c5", "--gains", "1,2"], None).status.code(),
        Some(2)
    );
    assert_eq!(cvwl(&["reproduce", "table9"], None).status.code(), Some(2));
    assert_eq!(cvwl(&["build", "--state", "ghz", "--loss", "7:0.5"], None).status.code(), Some(2));
    assert_eq!(cvwl(&["build", "--state", "ghz"], Some("zero")).status.code(), Some(2));
    assert_eq!(cvwl(&["build", "--network", "/nonexistent/file.net"], None).status.code(), Some(2));
    let bad = cvwl(&["witness", "--state", "counterexample", "--n", "4", "--criterion", "c1"], None);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("3 modes"));
    assert_eq!(cvwl(&["build", "--state", "ghz", "--r", "0.5"], None).status.code(), Some(0));
}

#[test]
fn network_errors_carry_locations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.net");
    std::fs::write(&path, "input vacuum\ninput vacuum\nbs 1 3 0.5\n").unwrap();
    let out = cvwl(&["build", "--network", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3:6"));
}

#[test]
fn overflowing_squeeze_is_a_numerical_failure() {
    let out = cvwl(&["build", "--state", "ghz", "--r", "400"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("overflows"));
}
