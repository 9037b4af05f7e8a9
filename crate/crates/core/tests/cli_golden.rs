use qforms::cli::{run, Outcome};
use serde_json::Value;
use std::process::Command;

fn qforms(args: &str) -> Outcome {
    run(std::iter::once("qforms").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = qforms(args);
    assert!(out.stdout.ends_with('\n'));
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn theta_coefficients() {
    let out = qforms("coeffs --series theta3 --order 10");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1 + 2*q + 2*q^4 + 2*q^9\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn coefficient_json_schema() {
    let v = json("coeffs --series theta3 --order 10 --json");
    assert_eq!(v["series"], "theta3");
    assert_eq!(v["order"], 10);
    assert_eq!(v["window"], serde_json::json!([0, 10]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert_eq!(terms[3]["exp"], 9);
    assert_eq!(terms[3]["value"], serde_json::json!({"num": 2, "den": 1}));
}

#[test]
fn named_series_agree_with_known_counts() {
    let v = json("coeffs --series partition --order 11 --json");
    let p: Vec<i64> = v["terms"].as_array().unwrap().iter().map(|t| t["value"]["num"].as_i64().unwrap()).collect();
    assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let out = qforms("coeffs --series phi_nu --nu 3 --order 30");
    assert_eq!(out.stdout, "q + q^8 + q^27\n");
    assert_eq!(qforms("coeffs --series product:jacobi:5 --order 6").code, 0);
    assert_eq!(qforms("coeffs --series lambert:lambda:3 --order 6").code, 0);
}

#[test]
fn representation_count() {
    let out = qforms("rep --form x^2+y^2 --n 5");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "count=8\n");
    let out = qforms("rep --form x^3+y^3 --n 1729 --domain x=N1,y=N1 --witnesses");
    assert_eq!(out.stdout, "count=4\n(1, 12)\n(9, 10)\n(10, 9)\n(12, 1)\n");
}

#[test]
fn representation_json_schema() {
    let v = json("rep --form x^2+y^2 --n 5 --json");
    assert_eq!(v, serde_json::json!({"form": "x^2+y^2", "n": 5, "count": 8}));
    let v = json("rep --form x^2+y^2 --n 1 --witnesses --json");
    assert_eq!(v["witnesses"], serde_json::json!([[-1, 0], [0, -1], [0, 1], [1, 0]]));
}

#[test]
fn table_of_c_nu() {
    let out = qforms("table --fn c_nu --nu 3 --to 8");
    assert_eq!(out.stdout, "1 0\n2 0\n3 0\n4 0\n5 0\n6 0\n7 0\n8 1\n");
    let v = json("table --fn mu --to 6 --json");
    let values: Vec<i64> = v.as_array().unwrap().iter().map(|r| r["value"]["num"].as_i64().unwrap()).collect();
    assert_eq!(values, [1, -1, -1, 0, -1, 1]);
    assert_eq!(v[5]["n"], 6);
}

#[test]
fn verify_exit_codes() {
    let out = qforms("verify --id th47 --param nu=3 --order 64");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("PASS th47"));
    let out = qforms("verify --id th47_corrupted");
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "FAIL th47_corrupted [nu=3] order=64 window=[0,64) first_diff: q^8 lhs=1 rhs=-1\n");
    let v = json("verify --id th47_corrupted --json");
    assert_eq!(v["first_diff"]["exp"], 8);
}

#[test]
fn suite_runs_and_summarises() {
    let out = qforms("suite --filter th4");
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().last().unwrap().starts_with("passed "));
    assert!(out.stdout.ends_with(" failed 0\n"));
    let v = json("suite --order 48 --json");
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"].as_u64().unwrap() as usize, v["reports"].as_array().unwrap().len());
    for r in v["reports"].as_array().unwrap() {
        assert_eq!(r["equal"], true);
        assert!(r["first_diff"].is_null());
        assert!(r["window"].is_array());
    }
}

#[test]
fn suite_listing() {
    let out = qforms("suite --list");
    assert!(out.stdout.contains("th29_2 order="));
    assert!(out.stdout.contains("(experimental)"));
    assert!(out.stdout.contains("(negative control)"));
    let v = json("suite --list --filter th47 --json");
    assert!(v.as_array().unwrap().iter().any(|e| e["negative_control"] == true));
}

#[test]
fn residue_commands() {
    let out = qforms("residues classify --t 7");
    assert_eq!(out.stdout, "t=7\nS1=[1, 2, 4]\nSm1=[3, 5, 6]\nS0=[7]\nS11=[1, 4]\nS12=[2]\n");
    let v = json("residues classify --t 31 --json");
    assert_eq!(v["S11"], serde_json::json!([1, 4, 9, 16, 25]));
    assert_eq!(v["S12"], serde_json::json!([2, 5, 7, 8, 10, 14, 18, 19, 20, 28]));
    assert_eq!(v["S0"], serde_json::json!([31]));
    assert_eq!(qforms("residues res --a 1 --n 8").stdout, "count=4 rule=agrees\n");
    assert_eq!(qforms("residues res --a 3 --n 5").stdout, "count=0 rule=not_applicable\n");
    assert_eq!(qforms("residues th75 --p 3 --q 7").stdout, "count=12 rule=12\n");
    let out = qforms("residues th75 --p 7 --q 7");
    assert_eq!((out.code, out.stdout.as_str()), (1, "count=6 rule=12\n"));
    assert_eq!(qforms("residues lemma --a 1 --b 1 --n 3").stdout, "consistent_with_lemma\n");
    assert_eq!(json("residues lemma --a 1 --b 1 --n 3 --json"), serde_json::json!({"outcome": "consistent_with_lemma"}));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "bogus",
        "coeffs --series nope",
        "coeffs --series theta3 --order 0",
        "rep --form x^2+ --n 5",
        "rep --form x^3+y --n 5",
        "verify --id th999",
        "verify --id th47 --param nu",
        "table --fn nope",
        "residues classify --t 5",
        "residues lemma --a 1 --b 3 --n 7",
    ] {
        let out = qforms(args);
        assert_eq!(out.code, 2, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert!(out.stderr.starts_with("error:"), "{args}: {}", out.stderr);
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = qforms("--help");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("coeffs"));
    let out = qforms("coeffs --help");
    assert!(out.stdout.contains("theta3"));
    assert_eq!(qforms("--version").code, 0);
}

#[test]
fn output_is_deterministic() {
    for args in ["suite --filter th5 --json", "rep --form x^2+2*y^2 --n 33 --witnesses", "table --fn lambda --nu 3 --to 100"] {
        assert_eq!(qforms(args), qforms(args), "{args}");
    }
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_qforms"))
        .args(["verify", "--id", "th47_corrupted"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), qforms("verify --id th47_corrupted").stdout);
    let out = Command::new(env!("CARGO_BIN_EXE_qforms")).args(["rep", "--form", "x^2+y^2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
