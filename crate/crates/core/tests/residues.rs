use qforms::residues::{
    impossibility_check, is_prime, res_count, residue_rule, rule_consistent, sum_with_t_square, th75_count, th75_rule,
    th78_classify, LemmaOutcome, ResidueError,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn square_root_counts() {
    assert_eq!(res_count(1, 8), 4);
    assert_eq!(res_count(1, 15), 4);
    assert_eq!(res_count(3, 5), 0);
    assert_eq!(res_count(-1, 5), 2);
    assert_eq!(res_count(0, 9), 3);
    assert_eq!(residue_rule(8), 4);
    assert_eq!(residue_rule(15), 4);
    assert_eq!(residue_rule(12), 4);
}

#[test]
fn unit_root_counts_follow_the_power_of_two_rule() {
    let mut checked = 0;
    for n in 2..=500u64 {
        for a in 1..n as i64 {
            match rule_consistent(a, n) {
                Some(ok) => {
                    assert!(ok, "a={a} n={n}: {} vs {}", res_count(a, n), residue_rule(n));
                    checked += 1;
                }
                None => assert!(gcd(a as u64, n) != 1 || res_count(a, n) == 0),
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn rule_does_not_apply_to_non_units() {
    assert_eq!(rule_consistent(0, 9), None);
    assert_eq!(rule_consistent(3, 5), None);
    assert_eq!(res_count(4, 8), 2);
}

#[test]
fn two_variable_congruence_examples() {
    assert_eq!(th75_count(3, 7), Ok(12));
    assert_eq!(th75_rule(3, 7), Ok(12));
    assert_eq!(th75_count(3, 5), Ok(0));
    assert_eq!(th75_rule(3, 5), Ok(0));
    assert!(matches!(th75_count(4, 7), Err(ResidueError::HypothesisViolated(_))));
    assert!(matches!(th75_rule(3, 2), Err(ResidueError::HypothesisViolated(_))));
}

#[test]
fn two_variable_congruence_rule_for_distinct_primes() {
    let primes: Vec<u64> = (2..=100).filter(|&n| is_prime(n)).collect();
    for &p in &primes {
        for &q in primes.iter().filter(|&&q| q != 2 && q != p) {
            assert_eq!(th75_count(p, q), th75_rule(p, q), "p={p} q={q}");
        }
    }
}

#[test]
fn equal_primes_break_the_rule() {
    assert_eq!(th75_count(7, 7), Ok(6));
    assert_eq!(th75_rule(7, 7), Ok(12));
    for q in [3u64, 5, 11, 13] {
        assert_eq!(th75_count(q, q), Ok(q - 1));
    }
}

#[test]
fn impossibility_examples() {
    assert!(matches!(impossibility_check(1, 3, 7), Err(ResidueError::HypothesisViolated(_))));
    assert!(matches!(impossibility_check(1, 1, 5), Err(ResidueError::HypothesisViolated(_))));
    assert!(matches!(impossibility_check(1, 1, 51), Err(ResidueError::HypothesisViolated(_))));
    assert_eq!(impossibility_check(1, 1, 3), Ok(LemmaOutcome::ConsistentWithLemma));
    assert_eq!(impossibility_check(1, 2, 13), Ok(LemmaOutcome::ConsistentWithLemma));
}

#[test]
fn impossibility_holds_on_a_sweep() {
    let mut applicable = 0;
    for a in 1..=8u64 {
        for b in 1..=8u64 {
            for n in (1..=1_000u64).step_by(2) {
                match impossibility_check(a, b, n) {
                    Ok(outcome) => {
                        assert_eq!(outcome, LemmaOutcome::ConsistentWithLemma, "a={a} b={b} n={n}");
                        applicable += 1;
                    }
                    Err(ResidueError::HypothesisViolated(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(applicable > 5_000);
}

#[test]
fn classification_for_31() {
    let c = th78_classify(31).unwrap();
    assert_eq!(c.s11, vec![1, 4, 9, 16, 25]);
    assert_eq!(c.s12, vec![2, 5, 7, 8, 10, 14, 18, 19, 20, 28]);
    assert_eq!(c.s0, vec![31]);
    assert_eq!(c.sm1.len(), 15);
    let json = serde_json::to_value(&c).unwrap();
    assert_eq!(json["S0"], serde_json::json!([31]));
    assert_eq!(json["S11"][4], 25);
}

#[test]
fn classification_for_small_moduli() {
    let c = th78_classify(3).unwrap();
    assert_eq!((c.s1, c.sm1, c.s0), (vec![1], vec![2], vec![3]));
    let c = th78_classify(7).unwrap();
    assert_eq!(c.s1, vec![1, 2, 4]);
    assert_eq!(c.s11, vec![1, 4]);
    assert_eq!(c.s12, vec![2]);
    assert_eq!(c.sm1, vec![3, 5, 6]);
    assert_eq!(th78_classify(5), Err(ResidueError::BadModulus(5)));
    assert_eq!(th78_classify(15), Err(ResidueError::BadModulus(15)));
}

#[test]
fn classification_partitions_one_to_t() {
    for t in (3..=200u64).filter(|&t| is_prime(t) && t % 4 == 3) {
        let c = th78_classify(t).unwrap();
        let mut all: Vec<u64> = c.s1.iter().chain(&c.sm1).chain(&c.s0).copied().collect();
        all.sort();
        assert_eq!(all, (1..=t).collect::<Vec<_>>());
        assert_eq!(c.s0, vec![t]);
        assert_eq!(c.s1.len() as u64, (t - 1) / 2);
        assert_eq!(c.s11.len() + c.s12.len(), c.s1.len());
        for k in (1..).take_while(|k| k * k < t) {
            assert!(c.s11.contains(&(k * k)), "t={t}");
        }
        assert!(c.s12.iter().all(|&n| !sum_with_t_square(t, n)));
    }
}

#[test]
fn representability_is_not_a_residue_class_property() {
    let c = th78_classify(31).unwrap();
    assert!(c.s11.contains(&(63 % 31)));
    assert!(!sum_with_t_square(31, 63));
    assert!(sum_with_t_square(31, 32));
}
