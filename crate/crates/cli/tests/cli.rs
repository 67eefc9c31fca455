//! End-to-end tests for the `softpolar` binary: subcommand output shapes,
//! config precedence, determinism guarantees, and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

fn softpolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softpolar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout_of(out),
        stderr_of(out)
    );
}

fn write_lines(path: &Path, lines: &[&str]) {
    std::fs::write(path, lines.join("\n") + "\n").expect("write file");
}

#[test]
fn construct_matches_reference_sets() {
    let out = softpolar(&["construct", "--n", "2", "--k", "2", "--method", "bhattacharyya", "--p", "0.5"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("frozen: {0,1}"), "{text}");
    assert!(text.contains("N=4 K=2"), "{text}");

    let out = softpolar(&["construct", "--n", "1", "--k", "2"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("frozen: {}"), "{text}");
    assert!(text.contains("rate1=3"), "{text}");

    let out = softpolar(&["construct", "--n", "3", "--k", "3"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("frozen: {0,1,2,3,4}"), "{text}");
    assert!(text.contains("tree nodes: rate0=8 rate1=4 mixed=3"), "{text}");
}

#[test]
fn construct_round_trips_through_a_frozen_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let frz = dir.path().join("code.frz");
    let frz_str = frz.to_str().unwrap();

    let out = softpolar(&["construct", "--n", "3", "--k", "3", "--out", frz_str]);
    assert_exit(&out, 0);

    let out = softpolar(&["construct", "--n", "3", "--k", "3", "--method", "explicit", "--in", frz_str]);
    assert_exit(&out, 0);
    assert!(stdout_of(&out).contains("frozen: {0,1,2,3,4}"));

    // Mismatched construction parameters against the file are a usage error.
    let out = softpolar(&["construct", "--n", "3", "--k", "4", "--method", "explicit", "--in", frz_str]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("disagrees"));
}

#[test]
fn count_verifies_the_closed_forms() {
    let out = softpolar(&["count", "--n", "10"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("15872/15872"), "{text}");
    assert!(text.contains("5117/5117"), "{text}");
    assert!(!text.contains("MISMATCH"), "{text}");

    let out = softpolar(&["count", "--n", "3", "--format", "csv"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("rcsc,40,40,48,48,37,37"), "{text}");
    assert!(text.contains("bp,48,48,48,48,32,64"), "{text}");
    assert!(text.contains("scan,48,48,48,48,42,42"), "{text}");
}

#[test]
fn decode_reports_the_two_bit_traces() {
    let dir = tempfile::tempdir().expect("tempdir");
    let llrs = dir.path().join("llrs.txt");
    let llrs_str = llrs.to_str().unwrap();

    // Both positions carry information: the soft outputs repeat the inputs.
    write_lines(&llrs, &["1.0", "2.0"]);
    let out = softpolar(&["decode", "--llrs", llrs_str, "--n", "1", "--k", "2", "--algorithm", "rcsc"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("x_hat: 00"), "{text}");
    assert!(text.contains("soft: 1 2"), "{text}");
    assert!(text.contains("valid: true"), "{text}");
    assert!(text.contains("iterations: 1"), "{text}");

    // Freezing the first input bit pools both observations.
    write_lines(&llrs, &["-1.0", "2.0"]);
    let out = softpolar(&["decode", "--llrs", llrs_str, "--n", "1", "--k", "1", "--algorithm", "srcsc"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("x_hat: 00"), "{text}");
    assert!(text.contains("soft: 1 1"), "{text}");

    // Every algorithm echoes its own name in the resolved config.
    for name in ["bp", "scan", "rcsc", "srcsc"] {
        let out = softpolar(&["decode", "--llrs", llrs_str, "--n", "1", "--k", "1", "--algorithm", name]);
        assert_exit(&out, 0);
        assert!(stdout_of(&out).contains(&format!("# decoder.algorithm={name}")));
    }
}

#[test]
fn decode_rejects_bad_llr_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let llrs = dir.path().join("llrs.txt");
    let llrs_str = llrs.to_str().unwrap();

    write_lines(&llrs, &["1.0"]);
    let out = softpolar(&["decode", "--llrs", llrs_str, "--n", "1", "--k", "2"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("expected 2 LLR lines, got 1"));

    write_lines(&llrs, &["1.0", "oops"]);
    let out = softpolar(&["decode", "--llrs", llrs_str, "--n", "1", "--k", "2"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("invalid LLR"));

    let out = softpolar(&["decode", "--llrs", "/nonexistent/llrs.txt", "--n", "1", "--k", "2"]);
    assert_exit(&out, 2);
}

#[test]
fn simulate_output_is_byte_identical_across_runs_and_worker_counts() {
    let dir = tempfile::tempdir().expect("tempdir");
    let config = dir.path().join("sim.cfg");
    write_lines(
        &config,
        &[
            "# reference sweep",
            "code.n = 4",
            "code.k = 8",
            "decoder.algorithm = srcsc",
            "decoder.i_max = 4",
            "sim.snr_list = 1.0, 2.0",
            "sim.min_frame_errors = 10",
            "sim.max_frames = 8192",
            "sim.seed = 11",
            "sim.workers = 1",
        ],
    );
    let cfg = config.to_str().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    let out_c = dir.path().join("c.csv");

    let run = softpolar(&["simulate", "--config", cfg, "--out", out_a.to_str().unwrap()]);
    assert_exit(&run, 0);
    let run = softpolar(&["simulate", "--config", cfg, "--out", out_b.to_str().unwrap()]);
    assert_exit(&run, 0);
    let run = softpolar(&[
        "simulate", "--config", cfg,
        "--workers", "4",
        "--out", out_c.to_str().unwrap(),
    ]);
    assert_exit(&run, 0);

    let a = std::fs::read(&out_a).expect("read a");
    let b = std::fs::read(&out_b).expect("read b");
    let c = std::fs::read(&out_c).expect("read c");
    assert_eq!(a, b, "repeat run changed the artifact");
    assert_eq!(a, c, "worker count changed the artifact");

    let text = String::from_utf8(a).expect("utf8 csv");
    assert!(text.contains("# code.n=4\n"), "{text}");
    assert!(text.contains("# sim.seed=11\n"), "{text}");
    assert!(!text.contains("workers"), "worker count must not be echoed: {text}");
    assert!(text.contains("snr_db,frames,frame_errors,bit_errors,fer,ber,avg_iters"), "{text}");
}

#[test]
fn flags_override_config_file_values() {
    let dir = tempfile::tempdir().expect("tempdir");
    let config = dir.path().join("sim.cfg");
    write_lines(
        &config,
        &[
            "code.n = 3",
            "code.k = 4",
            "decoder.algorithm = bp",
            "decoder.i_max = 2",
            "sim.snr_list = 1.0",
            "sim.min_frame_errors = 5",
            "sim.max_frames = 4096",
            "sim.seed = 1",
        ],
    );
    let cfg = config.to_str().unwrap();

    let out = softpolar(&["simulate", "--config", cfg, "--i-max", "5", "--algorithm", "scan"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("# decoder.i_max=5"), "{text}");
    assert!(text.contains("# decoder.algorithm=scan"), "{text}");
}

#[test]
fn invalid_configs_exit_with_usage_errors() {
    let dir = tempfile::tempdir().expect("tempdir");
    let config = dir.path().join("bad.cfg");

    write_lines(&config, &["code.m = 3"]);
    let out = softpolar(&["simulate", "--config", config.to_str().unwrap()]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("unknown config key"));

    write_lines(&config, &["code.n = 3", "code.n = 4"]);
    let out = softpolar(&["simulate", "--config", config.to_str().unwrap()]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("duplicate config key"));

    // No SNR points anywhere is a validation error.
    let out = softpolar(&["simulate", "--n", "3", "--k", "4"]);
    assert_exit(&out, 2);

    let out = softpolar(&["simulate", "--n", "3", "--k", "4", "--snr", "1.0", "--algorithm", "viterbi"]);
    assert_exit(&out, 2);

    let out = softpolar(&["simulate", "--n", "3", "--k", "4", "--snr", "1.0,banana"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("invalid SNR"));

    // A code must come from somewhere.
    let out = softpolar(&["simulate", "--snr", "1.0"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("code.n and code.k"));

    // Unknown subcommands are a usage error too.
    let out = softpolar(&["transmogrify"]);
    assert_exit(&out, 2);
}

#[test]
fn simulate_emits_json_with_the_resolved_config() {
    let out = softpolar(&[
        "simulate",
        "--n", "3", "--k", "4",
        "--algorithm", "rcsc",
        "--i-max", "2",
        "--arithmetic", "fixed",
        "--snr", "2.0",
        "--min-frame-errors", "5",
        "--max-frames", "4096",
        "--seed", "2",
        "--format", "json",
    ]);
    assert_exit(&out, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    let config = doc["config"].as_object().expect("config map");
    assert_eq!(config["decoder.algorithm"], "rcsc");
    assert_eq!(config["decoder.arithmetic"], "fixed");
    assert_eq!(config["quant.q_channel"], "5");
    assert_eq!(config["quant.q_internal"], "7");
    assert!(config.get("sim.workers").is_none());
    let points = doc["points"].as_array().expect("points array");
    assert_eq!(points.len(), 1);
    assert_eq!(points[0]["snr_db"], 2.0);
    assert!(points[0]["fer"].as_f64().unwrap() > 0.0);
    assert!(points[0]["frames"].as_u64().unwrap() >= 4096);
}
