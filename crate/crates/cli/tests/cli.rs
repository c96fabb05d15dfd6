//! End-to-end tests of the binary: exit codes, output determinism, format
//! equivalence, and table-file handling.

use std::path::PathBuf;
use std::process::Command;

fn qbos(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qbos"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn parse(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("valid json report")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("qbos-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn mw_payoff_matched_play() {
    let (code, stdout, _) = qbos(&["mw-payoff", "--p", "0", "--q", "0"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["payoffs"][0], 4.0);
    assert_eq!(doc["results"]["payoffs"][1], 4.0);
    assert_eq!(doc["config"]["seed"], 42);
    assert_eq!(doc["artifact"]["name"], "qbos");
    assert!(doc["artifact"]["version"].is_string());
}

#[test]
fn mw_payoff_mismatch_play() {
    let (code, stdout, _) = qbos(&["mw-payoff", "--p", "1", "--q", "0"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["payoffs"][0], 1.0);
    assert_eq!(doc["results"]["payoffs"][1], 1.0);
}

#[test]
fn mw_payoff_closed_form_cross_check() {
    let (code, stdout, _) = qbos(&["mw-payoff", "--p", "0.25", "--q", "0.75"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["closed_form"]["matched_weight"], 0.375);
    assert_eq!(doc["results"]["payoffs"][0], 2.125);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "closed_form_matches" && c["pass"] == true));
}

#[test]
fn out_of_range_probability_is_an_input_error() {
    let (code, _, stderr) = qbos(&["mw-payoff", "--p", "1.5", "--q", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("probability"), "stderr: {stderr}");
}

#[test]
fn classical_eq_finds_three_equilibria() {
    let (code, stdout, _) = qbos(&["classical-eq"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["classical"]["count"], 3);
    assert_eq!(doc["results"]["dilemma"]["unique_solution"], false);
    assert_eq!(doc["results"]["dilemma"]["all_payoffs_equal"], false);
    let eqs = doc["results"]["classical"]["equilibria"].as_array().unwrap();
    assert_eq!(eqs[0]["payoffs"][0], 5.0);
    assert_eq!(eqs[0]["payoffs"][1], 3.0);
    assert_eq!(eqs[2]["payoffs"][0], 3.0);
    assert_eq!(eqs[2]["payoffs"][1], 5.0);
    // interior equilibrium at (1/3, 2/3)
    assert_eq!(eqs[1]["interior"], true);
    assert_eq!(eqs[1]["p1"], 0.333333333333);
    assert_eq!(eqs[1]["p2"], 0.666666666667);
}

#[test]
fn mw_eq_reports_the_shared_payoff_equilibria() {
    let (code, stdout, _) = qbos(&["mw-eq"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["restricted"]["count"], 3);
    assert_eq!(doc["results"]["dilemma"]["unique_solution"], false);
    assert_eq!(doc["results"]["dilemma"]["all_payoffs_equal"], true);
    let eqs = doc["results"]["restricted"]["equilibria"].as_array().unwrap();
    assert_eq!(eqs[0]["p"], 0.0);
    assert_eq!(eqs[0]["q"], 0.0);
    assert_eq!(eqs[0]["payoffs"][0], 4.0);
    assert_eq!(eqs[2]["p"], 1.0);
    assert_eq!(eqs[2]["payoffs"][1], 4.0);
}

#[test]
fn eisert_identity_keeps_the_classical_outcome() {
    let (code, stdout, _) = qbos(&["eisert"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["distribution"][0], 1.0);
    assert_eq!(doc["results"]["payoffs"][0], 5.0);
    assert_eq!(doc["results"]["payoffs"][1], 3.0);
}

#[test]
fn bridge_reports_the_frozen_gap() {
    // A = su2(pi/2, pi/4, 0), B = I at maximal entanglement: the two
    // pipelines differ by total variation 1/4.
    let (code, stdout, _) = qbos(&[
        "bridge",
        "--a-theta",
        "1.5707963267948966",
        "--a-phi",
        "0.7853981633974483",
    ]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["tv_mw_vs_eisert"], 0.25);
    assert_eq!(doc["results"]["tv_mw_vs_no_inverse"], 0.0);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn conjugate_check_passes_at_stated_tolerance() {
    let (code, stdout, _) = qbos(&["conjugate-check", "--samples", "200"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["pass"], true);
}

#[test]
fn failing_check_exits_one() {
    // An overlap within 1e-18 of 1 is beyond double precision, so the check
    // legitimately fails and the run must exit 1 while still reporting.
    let (code, stdout, _) = qbos(&["conjugate-check", "--samples", "50", "--tol", "1e-18"]);
    assert_eq!(code, 1);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["pass"], false);
}

#[test]
fn unitary_max_respects_the_bound() {
    let (code, stdout, _) = qbos(&["unitary-max", "--restarts", "8", "--iters", "80"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    let best = doc["results"]["supremum"]["best_value"].as_f64().unwrap();
    assert!((best - 4.0).abs() < 1e-3);
}

#[test]
fn channel_max_demo_reaches_alpha() {
    let (code, stdout, _) = qbos(&["channel-max"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["supremum"]["best_value"], 5.0);
    assert_eq!(doc["results"]["witness"]["before"], 0.5);
    assert_eq!(doc["results"]["witness"]["after_player1"], 0.0);
}

#[test]
fn suite_passes_on_defaults() {
    let (code, stdout, _) = qbos(&["suite", "--samples", "200"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let doc = parse(&stdout);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 14);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn identical_config_gives_byte_identical_output() {
    let args = ["unitary-max", "--restarts", "8", "--iters", "60", "--seed", "7"];
    let (c1, out1, _) = qbos(&args);
    let (c2, out2, _) = qbos(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);

    let (_, sampled1, _) = qbos(&["mw-payoff", "--p", "0.3", "--q", "0.6", "--shots", "500"]);
    let (_, sampled2, _) = qbos(&["mw-payoff", "--p", "0.3", "--q", "0.6", "--shots", "500"]);
    assert_eq!(sampled1, sampled2);
}

#[test]
fn csv_and_table_formats_carry_the_json_numbers() {
    let (code, json_out, _) = qbos(&["mw-payoff", "--p", "0", "--q", "0", "--format", "json"]);
    assert_eq!(code, 0);
    let (code, csv_out, _) = qbos(&["mw-payoff", "--p", "0", "--q", "0", "--format", "csv"]);
    assert_eq!(code, 0);
    let (code, table_out, _) = qbos(&["mw-payoff", "--p", "0", "--q", "0", "--format", "table"]);
    assert_eq!(code, 0);

    assert!(csv_out.starts_with("key,value\n"));
    for row in [
        "results.payoffs.0,4.0",
        "results.payoffs.1,4.0",
        "results.distribution.0,0.5",
        "config.seed,42",
    ] {
        assert!(csv_out.contains(row), "csv missing {row}:\n{csv_out}");
    }
    assert!(table_out.contains("results.payoffs.0"));

    // every scalar in the csv matches the json document exactly
    let doc = parse(&json_out);
    for line in csv_out.lines().skip(1) {
        let (key, value) = line.split_once(',').expect("two columns");
        // outcome labels like "00" collide with array-index path steps, and
        // the format field necessarily names the format of its own document
        if key.starts_with("config.table.outcomes") || key == "config.format" {
            continue;
        }
        let mut node = &doc;
        for part in key.split('.') {
            node = match part.parse::<usize>() {
                Ok(i) => &node[i],
                Err(_) => &node[part],
            };
        }
        let json_repr = match node {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        assert_eq!(json_repr, value, "mismatch at {key}");
    }
}

#[test]
fn table_file_with_outcomes_is_used() {
    let path = write_temp(
        "outcomes.json",
        r#"{"outcomes": {"00": [2,1], "01": [0,0], "10": [0,0], "11": [1,2]}}"#,
    );
    let (code, stdout, _) =
        qbos(&["mw-payoff", "--p", "0", "--q", "0", "--table", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    assert_eq!(doc["results"]["payoffs"][0], 1.5);
    assert_eq!(doc["config"]["table"]["outcomes"]["00"][0], 2.0);
    std::fs::remove_file(path).ok();
}

#[test]
fn malformed_table_names_the_missing_key() {
    let path = write_temp(
        "missing-10.json",
        r#"{"outcomes": {"00": [5,3], "01": [1,1], "11": [3,5]}}"#,
    );
    let (code, _, stderr) = qbos(&["classical-eq", "--table", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("\"10\""), "stderr: {stderr}");
    std::fs::remove_file(path).ok();
}

#[test]
fn tampered_ordering_is_rejected_at_load() {
    let path = write_temp("tampered.json", r#"{"bos": {"alpha": 3, "beta": 5, "gamma_mis": 1}}"#);
    let (code, _, stderr) = qbos(&["suite", "--table", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("ordering"), "stderr: {stderr}");
    std::fs::remove_file(path).ok();
}

#[test]
fn equal_alpha_beta_needs_the_flag() {
    let (code, _, _) = qbos(&["classical-eq", "--alpha", "3", "--beta", "3"]);
    assert_eq!(code, 2);

    let (code, stdout, _) = qbos(&[
        "classical-eq",
        "--alpha",
        "3",
        "--beta",
        "3",
        "--allow-equal-alpha-beta",
    ]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    // symmetric game: both pure equilibria pay (3,3)
    let eqs = doc["results"]["classical"]["equilibria"].as_array().unwrap();
    assert_eq!(eqs[0]["payoffs"][0], 3.0);
    assert_eq!(eqs[0]["payoffs"][1], 3.0);
}

#[test]
fn table_and_params_conflict() {
    let path = write_temp("conflict.json", r#"{"bos": {"alpha": 5, "beta": 3, "gamma_mis": 1}}"#);
    let (code, _, stderr) =
        qbos(&["classical-eq", "--table", path.to_str().unwrap(), "--alpha", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("conflicts"));
    std::fs::remove_file(path).ok();
}

#[test]
fn suite_requires_a_bos_shaped_table() {
    let path = write_temp(
        "custom.json",
        r#"{"outcomes": {"00": [5,3], "01": [1,2], "10": [0,0], "11": [3,5]}}"#,
    );
    let (code, _, stderr) = qbos(&["suite", "--table", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("Battle of the Sexes"), "stderr: {stderr}");
    std::fs::remove_file(path).ok();
}

#[test]
fn monte_carlo_sampler_is_labeled_and_seeded() {
    let (code, stdout, _) =
        qbos(&["mw-payoff", "--p", "0", "--q", "0", "--shots", "2000", "--seed", "9"]);
    assert_eq!(code, 0);
    let doc = parse(&stdout);
    let mc = &doc["results"]["monte_carlo"];
    assert!(mc["note"].as_str().unwrap().contains("demonstration"));
    assert_eq!(mc["seed"], 9);
    assert_eq!(mc["shots"], 2000);
    let counts: Vec<u64> =
        mc["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    assert_eq!(counts.iter().sum::<u64>(), 2000);
    // matched outcomes only, roughly half/half
    assert_eq!(counts[1], 0);
    assert_eq!(counts[2], 0);
    assert!(counts[0] > 800 && counts[3] > 800);
}
