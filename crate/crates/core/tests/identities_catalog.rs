use qforms::identities::{catalog, run_suite, suite_jobs, verify, verify_mutated, IdentityError};
use qforms::rational::rat;

fn params(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v.to_string())).collect()
}

fn note<'a>(r: &'a qforms::identities::IdentityReport, key: &str) -> Option<&'a str> {
    r.notes.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

#[test]
fn jacobi_two_squares_passes() {
    let r = verify("jacobi2sq", &[], Some(200)).unwrap();
    assert!(r.equal);
    assert_eq!(r.window, (0, 200));
    assert!(r.first_diff.is_none());
}

#[test]
fn cubes_lambert_passes() {
    let r = verify("th47", &params(&[("nu", "3")]), Some(64)).unwrap();
    assert!(r.equal, "{r}");
}

#[test]
fn corrupted_lambda_fails_at_eight() {
    let r = verify("th47_corrupted", &params(&[("nu", "3")]), Some(64)).unwrap();
    assert!(!r.equal);
    let d = r.first_diff.unwrap();
    assert_eq!(d.exp, 8);
    assert_eq!((d.lhs, d.rhs), (rat(1), rat(-1)));
}

#[test]
fn whole_suite_passes_at_default_orders() {
    let reports = run_suite(None, None);
    assert_eq!(reports.len(), suite_jobs(None).len());
    let failed: Vec<String> = reports.iter().filter(|r| !r.equal).map(|r| r.to_string()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn suite_passes_at_order_48() {
    let failed: Vec<String> = run_suite(None, Some(48)).iter().filter(|r| !r.equal).map(|r| r.to_string()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn default_orders_are_at_least_48() {
    for e in catalog() {
        assert!(e.default_order >= 48, "{}", e.id);
    }
}

#[test]
fn every_entry_detects_a_mutation() {
    for (id, inst) in suite_jobs(None) {
        let m = verify_mutated(id, &inst, None).unwrap();
        assert!(m.detected(), "{id} {inst:?}: {}", m.report);
        let d = m.report.first_diff.as_ref().unwrap();
        assert_eq!(&d.rhs - &d.lhs, rat(1), "{id}");
    }
    for id in ["th29_2"] {
        assert!(verify_mutated(id, &[], None).unwrap().detected());
    }
}

#[test]
fn filtering_selects_by_prefix() {
    let th5: Vec<String> = run_suite(Some("th5"), None).into_iter().map(|r| r.id).collect();
    assert!(!th5.is_empty());
    assert!(th5.iter().all(|id| id.starts_with("th5")));
    assert!(th5.contains(&"th54".to_string()));
    assert!(run_suite(Some("no_such_prefix"), None).is_empty());
    assert!(run_suite(Some("th6"), Some(48)).iter().all(|r| r.equal));
}

#[test]
fn suite_skips_experimental_and_controls() {
    let jobs: Vec<&str> = suite_jobs(None).into_iter().map(|(id, _)| id).collect();
    assert!(!jobs.contains(&"th29_2"));
    assert!(!jobs.contains(&"th47_corrupted"));
    for e in catalog() {
        assert_eq!(jobs.contains(&e.id), !(e.experimental || e.negative_control), "{}", e.id);
    }
}

#[test]
fn errors_for_unknown_ids_and_params() {
    assert_eq!(verify("th999", &[], None), Err(IdentityError::UnknownIdentity("th999".into())));
    assert!(matches!(verify("th47", &params(&[("mu", "2")]), None), Err(IdentityError::BadParams(_))));
    assert!(matches!(verify("th47", &params(&[("nu", "1")]), None), Err(IdentityError::BadParams(_))));
    assert!(matches!(verify("th47", &[], Some(1)), Err(IdentityError::BadParams(_))));
    assert!(matches!(verify("th51", &params(&[("chi", "nope")]), None), Err(IdentityError::BadParams(_))));
}

#[test]
fn parameters_override_defaults() {
    for nu in ["2", "3", "4", "5"] {
        let r = verify("th47", &params(&[("nu", nu)]), Some(300)).unwrap();
        assert!(r.equal, "{r}");
    }
    for chi in ["one", "liouville", "jacobi:7", "mu"] {
        let r = verify("th51", &params(&[("nu", "2"), ("chi", chi)]), None).unwrap();
        assert!(r.equal, "{r}");
    }
}

#[test]
fn odd_square_sign_pattern_through_841() {
    let r = verify("eq166", &[], None).unwrap();
    assert!(r.equal, "{r}");
    assert!(r.window.1 > 841);
}

#[test]
fn jacobi_products_report_their_constant() {
    let r = verify("th67", &params(&[("g", "5")]), Some(200)).unwrap();
    assert!(r.equal);
    assert_eq!(note(&r, "A"), Some("1/5"));
    let r = verify("th67", &params(&[("g", "13")]), Some(200)).unwrap();
    assert!(r.equal);
    let r = verify("th71_form", &[], None).unwrap();
    assert!(r.equal);
    assert_eq!(note(&r, "A"), Some("1/5"));
}

#[test]
fn sign_pairing_experiment_records_the_matching_reading() {
    let r = verify("th29_2", &[], None).unwrap();
    assert!(r.equal);
    assert_eq!(note(&r, "matching"), Some("reading_a"));
    let r = verify("th29_2", &params(&[("a", "0")]), None).unwrap();
    assert!(!r.equal);
    assert_eq!(note(&r, "matching"), Some("none"));
}

#[test]
fn literal_product_reading_fails() {
    let literal = params(&[("a1", "1"), ("b1", "0"), ("c1", "1"), ("d1", "0"), ("literal", "1")]);
    assert!(!verify("th38", &literal, None).unwrap().equal);
    let literal = params(&[("literal", "1")]);
    assert!(!verify("th71_form", &literal, None).unwrap().equal);
}

#[test]
fn reports_serialize_to_the_fixed_schema() {
    let r = verify("th47_corrupted", &[], None).unwrap();
    let j = r.to_json();
    assert_eq!(j["id"], "th47_corrupted");
    assert_eq!(j["equal"], false);
    assert_eq!(j["window"][0], 0);
    assert_eq!(j["first_diff"]["exp"], 8);
    assert_eq!(j["first_diff"]["rhs"]["num"], -1);
    assert_eq!(j["first_diff"]["rhs"]["den"], 1);
    assert_eq!(j["params"]["nu"], 3);
    let ok = verify("cor53", &[], None).unwrap().to_json();
    assert!(ok["first_diff"].is_null());
}

#[test]
fn verify_is_deterministic() {
    let a = verify("th60", &[], None).unwrap();
    let b = verify("th60", &[], None).unwrap();
    assert_eq!(a, b);
}
