//! End-to-end tests of the `postlie` binary: frozen outputs for each
//! subcommand, output-format stability, and exit codes.

use std::process::{Command, Output};

fn postlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = postlie(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn post_applies_the_direction_inside_the_plant() {
    assert_eq!(
        stdout_of(&["post", "X_0", "I[(1,0)](Xi)", "--dim", "1"]),
        "I[(1,0)](X^(1,0) Xi)\n"
    );
}

#[test]
fn post_of_two_directions_is_zero() {
    assert_eq!(stdout_of(&["post", "X_0", "X_1"]), "0\n");
    assert_eq!(
        stdout_of(&["post", "X_0", "X_1", "--format", "json"]),
        "{\"terms\":[]}\n"
    );
}

#[test]
fn star_has_the_empty_word_as_unit() {
    assert_eq!(stdout_of(&["star", "1", "I[(0,0)](Xi)"]), "I[(0,0)](Xi)\n");
    assert_eq!(stdout_of(&["star", "I[(0,0)](Xi)", "1"]), "I[(0,0)](Xi)\n");
}

#[test]
fn bracket_lowers_the_decoration_and_grafts() {
    // [[I_{(1,0)}(Ξ), X₀]] = I_{(0,0)}(Ξ) − I_{(1,0)}(X^{(1,0)} Ξ).
    assert_eq!(
        stdout_of(&["bracket", "I[(1,0)](Xi)", "X_0"]),
        "I[(0,0)](Xi) + -1 * I[(1,0)](X^(1,0) Xi)\n"
    );
}

#[test]
fn up_decorates_every_eligible_node() {
    assert_eq!(stdout_of(&["up", "0", "Xi"]), "X^(1,0) Xi\n");
    assert_eq!(
        stdout_of(&["up", "0", "I[(0,1)](Xi)"]),
        "I[(0,1)](X^(1,0) Xi) + X^(1,0) I[(0,1)](Xi)\n"
    );
}

#[test]
fn grafting_skips_noise_leaves() {
    assert_eq!(
        stdout_of(&["graft", "Xi", "(0,1)", "X^(1,0) Xi"]),
        "X^(1,0) Xi I[(0,1)](Xi)\n"
    );
    // Deformed grafting onto the same target adds the lowering correction.
    assert_eq!(
        stdout_of(&["dgraft", "Xi", "(1,1)", "X^(1,0) Xi"]),
        "Xi I[(0,1)](Xi) + X^(1,0) Xi I[(1,1)](Xi)\n"
    );
}

#[test]
fn delta_makes_generators_primitive() {
    assert_eq!(
        stdout_of(&["delta", "X_0"]),
        "1 (x) X^(1,0) + X^(1,0) (x) 1\n"
    );
    assert_eq!(
        stdout_of(&["delta", "I[(1,0)](Xi)"]),
        "1 (x) I[(1,0)](Xi) + I[(1,0)](Xi) (x) 1\n"
    );
}

#[test]
fn normalize_straightens_into_the_pbw_basis() {
    // I_{(1,0)}(Ξ) · X₀ = X₀ · I_{(1,0)}(Ξ) + [I_{(1,0)}(Ξ), X₀]₀.
    assert_eq!(
        stdout_of(&["normalize", "I[(1,0)](Xi) ; X_0"]),
        "I[(0,0)](Xi) + X^(1,0) I[(1,0)](Xi)\n"
    );
    assert_eq!(
        stdout_of(&["normalize", "X_0 ; I[(1,0)](Xi)"]),
        "X^(1,0) I[(1,0)](Xi)\n"
    );
}

#[test]
fn star2_of_a_direction_word_inserts_decorations() {
    assert_eq!(stdout_of(&["star2", "X_0", "Xi", "(1,0)"]), "X^(1,0) Xi\n");
}

#[test]
fn psi_maps_the_noise_to_the_zero_arity_variable() {
    assert_eq!(stdout_of(&["psi", "Xi"]), "z_0\n");
}

#[test]
fn mi_act_matches_the_frozen_derivation_values() {
    // D⁽⁰⁾ z₁ = 2 z₂ and ∂₀ z_{(1,0)} = 2 z_{(2,0)}.
    assert_eq!(stdout_of(&["mi-act", "D^(0,0)", "z_1"]), "2 * z_2\n");
    assert_eq!(stdout_of(&["mi-act", "d_0", "z_(1,0)"]), "2 * z_(2,0)\n");
}

#[test]
fn mi_bracket_is_the_operator_commutator() {
    // [∂₀, D^{(1,0)}] = −D^{(0,0)}.
    assert_eq!(
        stdout_of(&["mi-bracket", "d_0", "D^(1,0)"]),
        "-1 * D^(0,0)\n"
    );
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["post", "X_0", "I[(1,0)](Xi)", "--format", "json"];
    let first = stdout_of(&args);
    assert_eq!(
        first,
        "{\"terms\":[{\"coef\":\"1\",\"elem\":\"I[(1,0)](X^(1,0) Xi)\"}]}\n"
    );
    assert_eq!(stdout_of(&args), first);
}

#[test]
fn verify_reports_pass_and_exits_zero() {
    let out = postlie(&["verify", "--suite", "golden-figures"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("golden-figures"), "{text}");
    assert!(text.contains("0 failures"), "{text}");
}

#[test]
fn verify_json_report_carries_the_case_count() {
    let out = postlie(&["verify", "--suite", "brackets-equal", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    let v: serde_json::Value = serde_json::from_str(text.trim()).expect("valid json");
    assert_eq!(v["suite"], "brackets-equal");
    assert_eq!(v["failure_count"], 0);
    assert!(v["cases"].as_u64().unwrap() > 1000);
}

#[test]
fn errors_exit_with_code_two() {
    let out = postlie(&["post", "X_0", "I[(1,0)](Xi"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error at byte 11"), "{err}");

    let out = postlie(&["graft", "Xi", "(0,1)", "Xi", "--dim", "0"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("width is 1"), "{err}");

    let out = postlie(&["verify", "--suite", "nope"]);
    assert_eq!(exit_code(&out), 2);

    let out = postlie(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);
}
