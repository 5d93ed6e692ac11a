use std::process::{Command, Output};

use serde_json::Value;
use superbgg_cli::{execute, parse_command, CliError, Format, Verb};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superbgg")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn parses_each_verb() {
    let cases: [(&[&str], Verb); 9] = [
        (&["resolve", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "2"], Verb::Resolve),
        (&["verify-euler", "-m", "1", "-n", "2", "--lambda", "2,1", "--depth", "4"], Verb::VerifyEuler),
        (&["verify-incomparable", "-m", "2", "--lambda", "2,1", "--kmax", "3"], Verb::VerifyIncomparable),
        (&["hs", "-m", "1", "-n", "1", "--lambda", "2,1"], Verb::Hs),
        (&["casimir", "--weights", "1,0|2;-1|1,1"], Verb::Casimir),
        (&["bruhat", "-m", "1", "--weights", "0|1;1|0"], Verb::Bruhat),
        (&["replab-kac", "-m", "1", "-n", "1", "--lambda", "1"], Verb::ReplabKac),
        (&["replab-cohomology", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "2"], Verb::ReplabCohomology),
        (&["replab-verma-gl12", "--depth", "6"], Verb::ReplabVermaGl12),
    ];
    for (argv, verb) in cases {
        let c = parse_command(argv).unwrap_or_else(|e| panic!("{argv:?}: {e}"));
        assert_eq!(c.verb, verb);
        assert_eq!(c.params.format, Format::Json);
    }
}

#[test]
fn usage_errors() {
    let bad: [&[&str]; 10] = [
        &["resolve", "-n", "1", "--lambda", "", "--kmax", "2"],
        &["resolve", "-m", "1", "-m", "2", "--lambda", "", "--kmax", "2"],
        &["resolve", "-m", "0", "--lambda", "", "--kmax", "2"],
        &["resolve", "-m", "1", "--lambda", "2,3", "--kmax", "2"],
        &["hs", "-m", "1", "--lambda", "1", "--depth", "3"],
        &["bruhat", "--weights", "0|1"],
        &["replab-kac", "-m", "1", "-n", "1"],
        &["replab-kac", "-m", "1", "--lambda", "1"],
        &["frobnicate"],
        &["resolve", "-m", "1", "-n", "zero", "--lambda", "", "--kmax", "1"],
    ];
    for argv in bad {
        assert!(matches!(parse_command(argv), Err(CliError::Usage(_))), "{argv:?}");
        assert_eq!(code(argv), 2, "{argv:?}");
    }
}

#[test]
fn help_is_not_an_error() {
    assert!(matches!(parse_command(&["--help"]), Err(CliError::Help(_))));
    assert_eq!(code(&["resolve", "--help"]), 0);
}

#[test]
fn exit_codes_follow_outcome() {
    assert_eq!(code(&["verify-euler", "-m", "1", "-n", "2", "--lambda", "2,1", "--depth", "4"]), 0);
    assert_eq!(code(&["replab-verma-gl12", "--depth", "2"]), 3);
    assert_eq!(code(&["replab-verma-gl12", "--depth", "9"]), 4);
    assert_eq!(code(&["resolve", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "1", "--out", "/nonexistent/dir/x.json"]), 1);
}

#[test]
fn failing_check_still_prints_the_report() {
    let out = run(&["replab-verma-gl12", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pass"], false);
}

#[test]
fn output_is_deterministic() {
    let argv = ["resolve", "-m", "2", "-n", "2", "--lambda", "2,1", "--kmax", "3"];
    let a = run(&argv);
    let b = run(&argv);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn out_flag_writes_the_document() {
    let path = std::env::temp_dir().join(format!("superbgg-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["hs", "-m", "1", "-n", "1", "--lambda", "1", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(doc["command"], "hs");
    assert_eq!(doc["results"]["dim"], 2);
}

#[test]
fn resolve_schema() {
    let doc = json(&["resolve", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "3"]);
    assert_eq!(doc["command"], "resolve");
    assert_eq!(doc["params"]["m"], 1);
    assert_eq!(doc["params"]["n"], "1");
    assert!(doc.get("pass").is_none());
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for (k, row) in rows.iter().enumerate() {
        for key in ["k", "eta", "eta_natural", "casimir_s", "z_degree", "dim_l0", "truncated"] {
            assert!(row.get(key).is_some(), "{key}");
        }
        assert_eq!(row["k"], k);
        assert_eq!(row["eta_natural"], if k == 0 { "0|".to_string() } else { format!("-{k}|{k}") });
        assert_eq!(row["truncated"], false);
    }
}

#[test]
fn verification_schemas() {
    let euler = json(&["verify-euler", "-m", "2", "-n", "1", "--lambda", "2,1", "--depth", "5"]);
    assert_eq!(euler["pass"], true);
    assert_eq!(euler["residual"], Value::Array(vec![]));

    let inc = json(&["verify-incomparable", "-m", "1", "--lambda", "1,1,1", "--kmax", "3"]);
    assert_eq!(inc["pass"], true);
    assert_eq!(inc["results"].as_array().unwrap().len(), 4);

    let cas = json(&["casimir", "--weights", "1,0|2;-1|1,1"]);
    assert_eq!(cas["pass"], true);
    assert_eq!(cas["results"][0]["natural"], "1,0|1,1");

    let br = json(&["bruhat", "--weights", "0|1;1|0"]);
    assert!(br["results"]["u_leq_v"].is_boolean());

    let kac = json(&["replab-kac", "-m", "1", "-n", "1", "--lambda", ""]);
    assert_eq!(kac["pass"], true);
    assert_eq!(kac["results"]["dim"], 2);
    assert_eq!(kac["results"]["quotient_dim"], 1);

    let coh = json(&["replab-cohomology", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "2"]);
    assert_eq!(coh["pass"], true);
    assert_eq!(coh["results"]["layers"].as_array().unwrap().len(), 3);
}

#[test]
fn table_and_json_carry_the_same_values() {
    let argv = ["replab-verma-gl12", "--depth", "6"];
    let doc = execute(&parse_command(&argv).unwrap()).unwrap();
    let mut targv = argv.to_vec();
    targv.extend(["--format", "table"]);
    let table = String::from_utf8(run(&targv).stdout).unwrap();
    for key in ["window_dim", "submodule_dim", "quotient_dim", "irreducible_dim", "kac_dim"] {
        let line = format!("{key}: {}", doc.json["results"][key]);
        assert!(table.contains(&line), "{line}\n{table}");
    }
    for line in doc.json["results"]["singular_lines"].as_array().unwrap() {
        assert!(table.contains(line["expression"].as_str().unwrap()));
    }
    assert!(table.contains("pass: true"));
}
