//! Command-level behavior: file parsing, report lines, and exit codes.

use std::io::Write;

use constacyclic_cli::commands::{
    cmd_check, cmd_classify, cmd_dual, cmd_enumerate, cmd_sweep, parse_sigma, CheckMode,
};
use constacyclic_cli::CliError;

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

const FIXTURE_SPEC: &str = r#"{
    "field": {"p": 3, "m": 2, "modulus": [1,0,1]},
    "s": 2,
    "lambda": {"a": [0,1], "b": [0,0]},
    "kind": "type4", "i": 7, "t": 0, "h": [], "omega": 5
}"#;

#[test]
fn classify_reports_normalized_record() {
    let file = write_temp(FIXTURE_SPEC);
    let out = cmd_classify(file.path()).unwrap();
    assert_eq!(out.exit, 0);
    assert!(out.text.contains("kind: type4"));
    assert!(out.text.contains("i: 7"));
    assert!(out.text.contains("omega: 5"));
    assert!(out.text.contains("T: 7"));
    assert!(out.text.contains("size: 3^12"));
    assert!(out.text.contains("base: [0,2]"));
    assert_eq!(out.text.matches("generator:").count(), 2);
}

#[test]
fn classify_zero_code() {
    let file = write_temp(
        r#"{"field": {"p": 3, "m": 1, "modulus": [0,1]}, "s": 1,
            "lambda": {"a": [1], "b": [0]}, "kind": "type1_zero"}"#,
    );
    let out = cmd_classify(file.path()).unwrap();
    assert!(out.text.contains("kind: type1_zero"));
    assert!(out.text.contains("size: 3^0"));
}

#[test]
fn classify_rejects_omega_at_torsion_exponent() {
    let file = write_temp(
        r#"{"field": {"p": 3, "m": 2, "modulus": [1,0,1]}, "s": 2,
            "lambda": {"a": [0,1], "b": [0,0]},
            "kind": "type4", "i": 7, "t": 0, "h": [], "omega": 7}"#,
    );
    let err = cmd_classify(file.path()).unwrap_err();
    let message = format!("{err}");
    assert!(message.contains("omega >= T"), "{message}");
}

#[test]
fn check_exit_codes() {
    let file = write_temp(FIXTURE_SPEC);
    let out = cmd_check(file.path(), "h=1,eps=1,0", CheckMode::SelfOrthogonal).unwrap();
    assert_eq!(out.exit, 0);
    assert!(out.text.starts_with("true"));
    assert!(out.text.contains("exponents_cover_length"));

    let out = cmd_check(file.path(), "h=0,eps=1,0", CheckMode::SelfOrthogonal).unwrap();
    assert_eq!(out.exit, 1);
    assert!(out.text.starts_with("false"));
    assert!(out.text.contains("base_not_fixed"));

    let out = cmd_check(file.path(), "h=1,eps=1,0", CheckMode::SelfDual).unwrap();
    assert_eq!(out.exit, 1);
}

#[test]
fn chain_middle_power_is_self_dual_for_every_sigma() {
    let chain = r#"{"field": {"p": 3, "m": 1, "modulus": [0,1]}, "s": 1,
        "lambda": {"a": [1], "b": [1]}, "kind": "chain", "i": 3}"#;
    let file = write_temp(chain);
    for sigma in ["h=0,eps=1", "h=0,eps=2"] {
        let out = cmd_check(file.path(), sigma, CheckMode::SelfDual).unwrap();
        assert_eq!(out.exit, 0, "{sigma}");
        assert!(out.text.contains("unique_middle_power"));
    }
}

#[test]
fn dual_with_verification_matches() {
    let file = write_temp(FIXTURE_SPEC);
    let json_out = tempfile::NamedTempFile::new().unwrap();
    let out = cmd_dual(file.path(), "h=1,eps=1,0", true, Some(json_out.path())).unwrap();
    assert_eq!(out.exit, 0, "{}", out.text);
    assert!(out.text.contains("verify: MATCH"));
    assert!(out.text.contains("clause: nonprincipal_plain"));
    // The serialized result parses back and names the same clause.
    let text = std::fs::read_to_string(json_out.path()).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["clause"], "nonprincipal_plain");
    assert_eq!(value["dual_spec"]["kind"], "type4");
}

#[test]
fn dual_of_whole_ring_is_zero_ideal() {
    let file = write_temp(
        r#"{"field": {"p": 3, "m": 1, "modulus": [0,1]}, "s": 1,
            "lambda": {"a": [1], "b": [0]}, "kind": "type1_whole"}"#,
    );
    let out = cmd_dual(file.path(), "h=0,eps=1", true, None).unwrap();
    assert_eq!(out.exit, 0);
    assert!(out.text.contains("kind: type1_zero"));
    assert!(out.text.contains("verify: MATCH"));
}

#[test]
fn chain_dual_exponent_reported() {
    let chain = r#"{"field": {"p": 3, "m": 1, "modulus": [0,1]}, "s": 1,
        "lambda": {"a": [1], "b": [1]}, "kind": "chain", "i": 2}"#;
    let file = write_temp(chain);
    let out = cmd_dual(file.path(), "h=0,eps=1", true, None).unwrap();
    assert!(out.text.contains("kind: chain"));
    assert!(out.text.contains("i: 4")); // 2 p^s - i = 4
    assert!(out.text.contains("verify: MATCH"));
}

#[test]
fn enumerate_counts_words() {
    let file = write_temp(
        r#"{"field": {"p": 3, "m": 1, "modulus": [0,1]}, "s": 1,
            "lambda": {"a": [1], "b": [0]}, "kind": "type2", "i": 2}"#,
    );
    let out = cmd_enumerate(file.path(), None).unwrap();
    assert!(out.text.ends_with("count: 3\n"));

    let err = cmd_enumerate(file.path(), Some(2)).unwrap_err();
    assert!(format!("{err}").contains("cap"));
}

#[test]
fn sweep_smallest_field_is_clean() {
    let config = write_temp(
        r#"{"targets": [{"p": 3, "m": 1, "s": 1}], "cap": 10000}"#,
    );
    let log = tempfile::NamedTempFile::new().unwrap();
    let out = cmd_sweep(config.path(), None, Some(log.path())).unwrap();
    assert_eq!(out.exit, 0, "{}", out.text);
    assert!(out.text.contains("cases: 120"));
    assert!(out.text.contains("mismatches: 0"));
    // The record log is line-delimited JSON with the documented fields.
    let text = std::fs::read_to_string(log.path()).unwrap();
    let first = text.lines().next().unwrap();
    let value: serde_json::Value = serde_json::from_str(first).unwrap();
    for key in ["spec", "sigma", "check", "expected", "got", "pass"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(text.lines().count(), 120 * 11);
}

#[test]
fn sweep_refuses_above_cap() {
    let config = write_temp(r#"{"targets": [{"p": 3, "m": 1, "s": 1}], "cap": 5}"#);
    let out = cmd_sweep(config.path(), None, None).unwrap();
    assert_eq!(out.exit, 2);
    assert!(out.text.contains("refused"));
    assert!(out.text.contains("120"));
}

#[test]
fn sweep_respects_selections() {
    let config = write_temp(
        r#"{"targets": [{"p": 3, "m": 1, "s": 1}],
            "lambda": [{"a": [2], "b": [0]}],
            "sigma": [{"h": 0, "epsilon": [2]}],
            "cap": 1000}"#,
    );
    let out = cmd_sweep(config.path(), None, None).unwrap();
    assert_eq!(out.exit, 0);
    assert!(out.text.contains("cases: 16"));
    assert!(out.text.contains("mismatches: 0"));
}

#[test]
fn sigma_flag_parsing() {
    let ctx = constacyclic_core::FieldCtx::with_builtin_modulus(3, 2).unwrap();
    let aut = parse_sigma("h=1,eps=1,0", &ctx).unwrap();
    assert_eq!(aut.theta().h, 1);
    assert!(aut.epsilon().is_one());
    assert!(matches!(
        parse_sigma("frob", &ctx),
        Err(CliError::Parse(_))
    ));
    assert!(matches!(
        parse_sigma("h=1,eps=", &ctx),
        Err(CliError::Parse(_))
    ));
}

#[test]
fn reports_are_byte_deterministic() {
    let file = write_temp(FIXTURE_SPEC);
    let a = cmd_classify(file.path()).unwrap().text;
    let b = cmd_classify(file.path()).unwrap().text;
    assert_eq!(a, b);
    let a = constacyclic_cli::commands::cmd_example(3).unwrap().text;
    let b = constacyclic_cli::commands::cmd_example(3).unwrap().text;
    assert_eq!(a, b);
}
