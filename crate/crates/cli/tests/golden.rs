//! End-to-end checks of the binary: exit-code discipline, deterministic
//! reports, file-format round trips, and the worked examples' headline
//! numbers.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use multigame_cli::gamefile::{parse_game_file, realize, serialize_game, to_toml_string, ParsedGame};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multigame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn solve_market_m3_finds_the_production_equilibrium() {
    let out = run(&["solve", fixture("market_m3.toml").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("(s3, s3) payoffs (6, 7)"), "{text}");
}

#[test]
fn solve_reports_mixed_equilibria_from_support_enumeration() {
    let out = run(&[
        "solve",
        fixture("diag_coordination.toml").to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let support = v["solve"]["support_equilibria"].as_array().unwrap();
    assert_eq!(support.len(), 3);
    // hand support enumeration: indifference 2q = 1 - q gives q = 1/3
    let mixed: Vec<&serde_json::Value> =
        support.iter().filter(|e| e["pure"] == false).collect();
    assert_eq!(mixed.len(), 1);
    assert_eq!(
        mixed[0]["strategies"],
        serde_json::json!([["1/3", "2/3"], ["1/3", "2/3"]])
    );
    assert_eq!(mixed[0]["payoffs"], serde_json::json!(["2/3", "2/3"]));
}

#[test]
fn solve_rejects_incomplete_tables_with_the_missing_cell() {
    let out = run(&["solve", fixture("broken_missing_cell.toml").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("expected 9 entries, got 8"), "{err}");
    assert!(err.contains("(s3, s3)"), "{err}");
}

#[test]
fn solve_rejects_wrong_kind_with_exit_two() {
    let out = run(&["solve", fixture("markets.toml").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn check_regularity_markets_certifies_vertices_and_refutes_the_grid() {
    let out = run(&[
        "check-regularity",
        fixture("markets.toml").to_str().unwrap(),
        "--grid",
        "4",
        "--format",
        "structured",
    ]);
    assert_eq!(exit_code(&out), 1, "grid violations refute full regularity");
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["regularity"]["vertex_status"], "certified");
    assert_eq!(v["regularity"]["vertex_profiles_checked"], 9);
    assert_eq!(v["regularity"]["grid"]["profiles_checked"], 225);
    assert_eq!(v["regularity"]["grid"]["violation_count"], 212);
}

#[test]
fn check_regularity_conflicting_instance_is_refuted_at_the_vertices() {
    let out = run(&[
        "check-regularity",
        fixture("conflicting.toml").to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["regularity"]["vertex_status"], "refuted");
    assert!(v["regularity"]["counterexample"].is_object());
}

#[test]
fn check_regularity_accepts_own_type_linear_input() {
    let direct = run(&[
        "check-regularity",
        fixture("pd_sg.toml").to_str().unwrap(),
        "--grid",
        "2",
        "--format",
        "structured",
    ]);
    let linear = run(&[
        "check-regularity",
        fixture("pd_sg_linear.toml").to_str().unwrap(),
        "--grid",
        "2",
        "--format",
        "structured",
    ]);
    let d: serde_json::Value = serde_json::from_str(&stdout_of(&direct)).unwrap();
    let l: serde_json::Value = serde_json::from_str(&stdout_of(&linear)).unwrap();
    // identical verdicts and witness through either representation
    assert_eq!(d["regularity"], l["regularity"]);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec![
            "check-regularity",
            fixture("markets.toml").to_str().unwrap(),
            "--grid",
            "4",
            "--format",
            "structured",
        ],
        vec![
            "verify-bne",
            fixture("pd_sg_types.toml").to_str().unwrap(),
            fixture("pd_sg_witness_map.toml").to_str().unwrap(),
            "--seed",
            "3",
            "--format",
            "structured",
        ],
        vec!["example", "trust", "--belief", "2/3", "--format", "structured"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
        assert_eq!(exit_code(&a), exit_code(&b));
    }
}

#[test]
fn verify_bne_accepts_the_witness_map_and_rejects_the_corrupted_one() {
    let good = run(&[
        "verify-bne",
        fixture("pd_sg_types.toml").to_str().unwrap(),
        fixture("pd_sg_witness_map.toml").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&good), 0);
    let bad = run(&[
        "verify-bne",
        fixture("pd_sg_types.toml").to_str().unwrap(),
        fixture("pd_sg_bad_map.toml").to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert_eq!(exit_code(&bad), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&bad)).unwrap();
    assert_eq!(v["status"], "invalid");
    assert_eq!(v["bne"]["local_ne_everywhere"], false);
    assert_eq!(v["bne"]["agreement"], true);
}

#[test]
fn verify_bne_rejects_a_map_missing_a_type() {
    let dir = std::env::temp_dir().join("multigame-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("short_map.toml");
    std::fs::write(
        &path,
        "kind = \"strategy_map\"\n\n[strategy_map]\nmaps = [[[\"0\", \"1\"]], [[\"0\", \"1\"], [\"1\", \"0\"]]]\n",
    )
    .unwrap();
    let out = run(&[
        "verify-bne",
        fixture("pd_sg_types.toml").to_str().unwrap(),
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("has 2 types"), "{err}");
}

#[test]
fn unknown_example_name_is_a_usage_error() {
    let out = run(&["example", "zermelo"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn trust_example_reproduces_the_belief_switch() {
    let below = run(&["example", "trust", "--belief", "1/2", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&below)).unwrap();
    assert_eq!(v["trust"]["sender_optimal"], serde_json::json!(["1"]));
    assert_eq!(v["trust"]["threshold"], "7/9");

    let above = run(&["example", "trust", "--belief", "8/9", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&above)).unwrap();
    assert_eq!(v["trust"]["sender_optimal"], serde_json::json!(["0"]));

    let at = run(&["example", "trust", "--belief", "7/9", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&at)).unwrap();
    assert_eq!(v["trust"]["sender_optimal"], serde_json::json!(["0", "1"]));
    assert_eq!(v["trust"]["sender_value"], "0");
}

#[test]
fn trust_example_with_finer_grid_keeps_the_threshold() {
    let out = run(&[
        "example", "trust", "--steps", "4", "--belief", "7/9", "--format", "structured",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["trust"]["threshold"], "7/9");
    assert_eq!(
        v["trust"]["sender_optimal"],
        serde_json::json!(["0", "1/4", "1/2", "3/4", "1"])
    );
}

#[test]
fn markets_example_prints_the_diagonal_witness() {
    let out = run(&["example", "markets", "--grid", "4"]);
    assert_eq!(exit_code(&out), 0, "headline vertex certification");
    let text = stdout_of(&out);
    assert!(text.contains("sigma_1(theta) = theta_1*(s1) + theta_2*(s2) + theta_3*(s3)"));
    assert!(text.contains("grid d=4: 225 profiles, 212 violations"), "{text}");
}

#[test]
fn pd_example_evaluates_the_extended_witness_at_given_types() {
    let out = run(&[
        "example", "pd",
        "--params", "5,3,1,0,2,0",
        "--theta1", "1/3",
        "--theta2", "2/3",
        "--format", "structured",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(
        v["local_game"]["extended_strategies"],
        serde_json::json!([["1/3", "2/3"], ["2/3", "1/3"]])
    );
    // exact arithmetic shows the blended profile is not an equilibrium of
    // that local game
    assert_eq!(v["local_game"]["is_nash"], false);
    assert_eq!(v["local_game"]["profitable_deviation"]["gain"], "4/27");
}

#[test]
fn pd_example_rejects_parameters_violating_the_orderings() {
    let out = run(&["example", "pd", "--params", "3,5,1,0,2,0"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("t > r"), "{err}");
}

#[test]
fn every_fixture_round_trips_through_serialization() {
    for name in [
        "market_m1.toml",
        "market_m2.toml",
        "market_m3.toml",
        "markets.toml",
        "pd_sg.toml",
        "coordination.toml",
        "conflicting.toml",
        "pd_sg_types.toml",
        "pd_sg_linear.toml",
        "gmg_small.toml",
        "trust.toml",
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let parsed = realize(&parse_game_file(&text).unwrap())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let serialized = to_toml_string(&serialize_game(&parsed, Some(name)));
        let reparsed = realize(&parse_game_file(&serialized).unwrap())
            .unwrap_or_else(|e| panic!("{name} reparse: {e}"));
        let same = match (&parsed, &reparsed) {
            (ParsedGame::NormalForm(a), ParsedGame::NormalForm(b)) => a == b,
            (ParsedGame::Multi(a), ParsedGame::Multi(b)) => a == b,
            // a pd_dg file serializes as the multi-game it denotes
            (ParsedGame::Pd(a), ParsedGame::Multi(b)) => a == b,
            (ParsedGame::Generalized(a), ParsedGame::Generalized(b)) => a == b,
            (ParsedGame::Bayesian(a, pa), ParsedGame::Bayesian(b, pb)) => a == b && pa == pb,
            (ParsedGame::TypeLinear(a), ParsedGame::TypeLinear(b)) => a == b,
            (ParsedGame::OwnTypeLinear(a), ParsedGame::OwnTypeLinear(b)) => a == b,
            (ParsedGame::Trust(a), ParsedGame::Trust(b)) => a == b,
            _ => false,
        };
        assert!(same, "{name} did not round-trip semantically");
    }
}
