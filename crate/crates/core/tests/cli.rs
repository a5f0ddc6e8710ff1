use std::process::{Command, Output};

use lieproj::cli::output::weight_from_json;
use lieproj::WeightVector;
use serde_json::Value;

fn lieproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieproj")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn lambda_examples() {
    for (cfg, mu, expect) in [("sl2", "5", "3"), ("sp4", "5,-1", "(2,0)"), ("u11", "4,0", "(3,1)")] {
        let o = lieproj(&["--config", cfg, "lambda", "u", mu]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        let line = s.lines().find(|l| l.starts_with("lambda_u")).unwrap();
        assert_eq!(line.split_whitespace().last(), Some(expect), "{s}");
    }
}

#[test]
fn json_records_round_trip() {
    let o = lieproj(&["--config", "sp4", "--json", "lambda", "a", "(3,-3)"]);
    let r = &records(&o)[0];
    assert_eq!(r["record"], "lambda");
    assert_eq!(weight_from_json(&r["mu"]).unwrap(), WeightVector::from_ints(&[3, -3]));
    assert_eq!(weight_from_json(&r["mu_plus_2rho_c"]).unwrap(), WeightVector::from_ints(&[4, -4]));
    assert_eq!(r["positive"].as_array().unwrap().len(), 4);
    // no decimal points anywhere: rationals are string pairs
    assert!(!stdout(&o).contains('.'));

    let o = lieproj(&["--config", "u11", "--json", "lambda", "u", "1,0"]);
    let lu = weight_from_json(&records(&o)[0]["lambda"]).unwrap();
    assert_eq!(lu.to_string(), "(1/2,1/2)");
}

#[test]
fn enumerate_modes() {
    let o = lieproj(&["--config", "sp4", "--json", "enumerate", "unitarily-small"]);
    let recs = records(&o);
    assert_eq!(recs.len(), 26);
    assert_eq!(recs[25]["count"], 25);
    assert!(recs[..25].iter().all(|r| ["b", "c", "d", "e", "f", "g"].iter().all(|c| r[c] == true)));
    let mus: Vec<WeightVector> = recs[..25].iter().map(|r| weight_from_json(&r["mu"]).unwrap()).collect();
    let mut sorted = mus.clone();
    sorted.sort();
    assert_eq!(mus, sorted);

    let o = lieproj(&["--config", "sp4", "enumerate", "small"]);
    assert!(stdout(&o).lines().last().unwrap().starts_with("5 K-types"));
    let o = lieproj(&["--config", "sl2", "enumerate", "fiber", "0"]);
    assert!(stdout(&o).lines().last().unwrap().starts_with("5 K-types"));
    let o = lieproj(&["--config", "sl2", "enumerate", "fiber", "-3"]);
    assert!(stdout(&o).contains("\n-5 "), "{}", stdout(&o));
}

#[test]
fn exit_codes_for_bad_input() {
    let o = lieproj(&["--config", "sp4", "lambda", "u", "-1,5"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("(1,-1)"), "diagnostic names the compact root: {err}");
    assert_eq!(lieproj(&["--config", "nowhere.json", "spin"]).status.code(), Some(2));
    assert_eq!(lieproj(&["--config", "sl2", "lambda", "u", "1,2"]).status.code(), Some(2));
    assert_eq!(lieproj(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(lieproj(&["--config", "sl2", "enumerate", "fiber"]).status.code(), Some(2));
}

#[test]
fn inconsistent_grading_is_rejected() {
    let dir = std::env::temp_dir().join(format!("lieproj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // (1,1) + (1,-1) is a root, so these compact roots do not grade the root system
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"cartan_label": "A2", "compact_roots": [["1","1"],["-1","-1"],["1","-1"],["-1","1"]], "k_positive": []}"#,
    )
    .unwrap();
    assert_eq!(lieproj(&["--config", bad.to_str().unwrap(), "spin"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suites() {
    let o = lieproj(&["verify", "--suite", "thm6.7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("PASS").count(), 4);

    let o = lieproj(&["--config", "sp4", "--json", "verify", "--suite", "bottom-layer", "--lambda-u", "4,0"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = records(&o);
    assert!(recs.iter().all(|r| r["passed"] == true));
    assert_eq!(recs[0]["checked"], 1);

    let o = lieproj(&["verify", "--suite", "clifford", "--clifford-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m = 1..6"));

    let o = lieproj(&["--config", "su21", "verify", "--suite", "projections", "--samples", "50"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reference_tables() {
    let o = lieproj(&["reference-tables"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for (name, rows) in [("sl2", 17), ("sp4", 153), ("u11", 289)] {
        assert!(s.contains(&format!("{name:<4} {rows} rows match")), "{s}");
    }
    let o = lieproj(&["--json", "paper-examples"]);
    assert!(records(&o).iter().all(|r| r["match"] == true));
}

#[test]
fn spin_and_dirac() {
    let o = lieproj(&["--config", "sp4", "spin"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dimension 8 (sp4)"));
    assert!(s.contains("wedge p = spin x spin: true"));

    let o = lieproj(&["--config", "sl2", "--json", "dirac", "1", "2"]);
    let r = &records(&o)[0];
    assert_eq!(r["eigenvalue"], serde_json::json!(["-3", "1"]));
    assert_eq!(r["inequality"], false);
    assert_eq!(r["hull"], false);
}
