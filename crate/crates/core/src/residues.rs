//! Quadratic congruences, the two-variable impossibility lemmas and the
//! classification of 1..t by the symbol (−t|n).

use crate::arith::{factor, gcd, jacobi_symbol, kronecker_symbol};
use num_integer::Roots;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bad modulus {0}: expected a prime congruent to 3 mod 4")]
    BadModulus(u64),
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n).pairs() == [(n, 1)]
}

/// #{x ∈ [0, n): x² ≡ a (mod n)}.
pub fn res_count(a: i64, n: u64) -> u64 {
    assert!(n >= 2, "modulus must be at least 2");
    let m = n as i128;
    let target = (a as i128).rem_euclid(m);
    (0..m).filter(|&x| x * x % m == target).count() as u64
}

/// 2^{r+u}: r the number of odd prime divisors of n, u = 0, 1, 2 as 4 ∤ n, 4 ∥ n, 8 | n.
pub fn residue_rule(n: u64) -> u64 {
    let r = factor(n).pairs().iter().filter(|&&(p, _)| p != 2).count() as u32;
    let u = if n % 8 == 0 {
        2
    } else if n % 4 == 0 {
        1
    } else {
        0
    };
    1 << (r + u)
}

/// Whether the scan agrees with [`residue_rule`]; `None` when the rule does
/// not apply (a not a unit, or no solutions).
pub fn rule_consistent(a: i64, n: u64) -> Option<bool> {
    if gcd(a, n as i64) != 1 {
        return None;
    }
    let count = res_count(a, n);
    (count > 0).then(|| count == residue_rule(n))
}

fn require_primes(p: u64, q: u64) -> Result<(), ResidueError> {
    if !is_prime(p) || !is_prime(q) || q == 2 {
        return Err(ResidueError::HypothesisViolated(format!("need p prime and q an odd prime, got p={p}, q={q}")));
    }
    Ok(())
}

/// #{(x, y): 0 ≤ x < q, 1 ≤ y < q, x² + py² ≡ 0 (mod q)} by scan.
pub fn th75_count(p: u64, q: u64) -> Result<u64, ResidueError> {
    require_primes(p, q)?;
    let (p, q) = (p as u128, q as u128);
    let mut count = 0;
    for y in 1..q {
        let py2 = p * y * y % q;
        count += (0..q).filter(|&x| (x * x + py2) % q == 0).count() as u64;
    }
    Ok(count)
}

/// 2c(p, q)(q − 1), with c = 1 when (−p|q) ∈ {0, 1} and c = 0 otherwise.
pub fn th75_rule(p: u64, q: u64) -> Result<u64, ResidueError> {
    require_primes(p, q)?;
    let symbol = jacobi_symbol(-(p as i64), q as i64).expect("q is odd");
    Ok(if symbol >= 0 { 2 * (q - 1) } else { 0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LemmaOutcome {
    ConsistentWithLemma,
    Counterexample { x: u64, y: u64 },
}

/// Searches ax² + by² = n for a solution with x, y ≥ 0 under the
/// hypotheses gcd(n, 2·5·17) = 1 and (−ab|n) = −1.
pub fn impossibility_check(a: u64, b: u64, n: u64) -> Result<LemmaOutcome, ResidueError> {
    let violated = |m: String| Err(ResidueError::HypothesisViolated(m));
    if a == 0 || b == 0 || n == 0 {
        return violated("a, b, n must be positive".to_string());
    }
    if [2, 5, 17].iter().any(|&p| n % p == 0) {
        return violated(format!("n={n} shares a factor with 2, 5 or 17"));
    }
    let ab = i64::try_from(a as i128 * b as i128).map_err(|_| ResidueError::HypothesisViolated("ab too large".into()))?;
    let symbol = jacobi_symbol(-ab, n as i64).expect("n is odd");
    if symbol != -1 {
        return violated(format!("(-{ab}|{n}) = {symbol}, not -1"));
    }
    let (a, b, n) = (a as u128, b as u128, n as u128);
    for x in 0..=(n / a).sqrt() {
        let rest = n - a * x * x;
        if rest % b == 0 {
            let y2 = rest / b;
            let y = y2.sqrt();
            if y * y == y2 {
                return Ok(LemmaOutcome::Counterexample { x: x as u64, y: y as u64 });
            }
        }
    }
    Ok(LemmaOutcome::ConsistentWithLemma)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueClassification {
    pub t: u64,
    #[serde(rename = "S1")]
    pub s1: Vec<u64>,
    #[serde(rename = "Sm1")]
    pub sm1: Vec<u64>,
    #[serde(rename = "S0")]
    pub s0: Vec<u64>,
    #[serde(rename = "S11")]
    pub s11: Vec<u64>,
    #[serde(rename = "S12")]
    pub s12: Vec<u64>,
}

fn represented(t: u64, n: u64) -> bool {
    (0..=(n / t).sqrt()).any(|y| {
        let rest = n - t * y * y;
        rest.sqrt().pow(2) == rest
    })
}

/// Splits 1..t by the Kronecker symbol (−t|n) and S₁ further by whether
/// x² + ty² = n is solvable.
pub fn th78_classify(t: u64) -> Result<ResidueClassification, ResidueError> {
    if !is_prime(t) || t % 4 != 3 {
        return Err(ResidueError::BadModulus(t));
    }
    let mut c = ResidueClassification { t, s1: vec![], sm1: vec![], s0: vec![], s11: vec![], s12: vec![] };
    for n in 1..=t {
        match kronecker_symbol(-(t as i64), n as i64) {
            1 => {
                c.s1.push(n);
                if represented(t, n) {
                    c.s11.push(n);
                } else {
                    c.s12.push(n);
                }
            }
            -1 => c.sm1.push(n),
            _ => c.s0.push(n),
        }
    }
    Ok(c)
}

/// Whether x² + ty² = n is solvable, for testing S₁₁ beyond 1..t.
pub fn sum_with_t_square(t: u64, n: u64) -> bool {
    represented(t, n)
}
