//! Divisor-restricted root counts and the convolutions built from them.
//!
//! A polynomial P with P(0) = 0 satisfies d | P(d), so every integer
//! solution of P(d) = n ≠ 0 is a divisor of n (up to sign). All counts here
//! rest on that observation.

use super::{cross_check, RepError, RepResult};
use crate::arith::{divisors, moebius, nu_split, seq::ArithSeq};
use crate::poly::{BivarPoly, Domain, IntPoly};
use crate::rational::{rat, Rational};
use num_traits::Zero;

fn candidates(m: i64, domain: Domain) -> Vec<i64> {
    let pos: Vec<i64> = divisors(m.unsigned_abs()).into_iter().map(|d| d as i64).collect();
    match domain {
        Domain::AllIntegers => pos.iter().flat_map(|&d| [-d, d]).collect(),
        _ => pos,
    }
}

/// Counts d in `domain`, d ≠ 0, |d| | n with P(d) − P(0) = n; at n = 0 the
/// number of distinct roots of P − P(0) in the domain.
fn divisor_root_count(p: &IntPoly, domain: Domain, m: i64) -> u64 {
    let star = p.without_constant();
    if m == 0 {
        return star.integer_roots().into_iter().filter(|&x| domain.contains(x)).count() as u64;
    }
    candidates(m, domain).into_iter().filter(|&d| star.eval(d) == m as i128).count() as u64
}

/// n ↦ #{d: P*(d) = n} with P* = P − P(0), as a sequence defined on all of ℤ.
pub fn root_count_seq(p: &IntPoly, domain: Domain) -> ArithSeq {
    let p = p.clone();
    ArithSeq::new(format!("roots[{}|{}]", p, domain), move |m| rat(divisor_root_count(&p, domain, m) as i64))
}

fn nondecreasing_from(diff: &IntPoly, from: i64) -> bool {
    (from..=diff.tail_radius().max(from)).all(|x| diff.eval(x) >= 0)
}

/// Σ over divisors d of n (positive, or nonzero with |d| | n when `signed`)
/// with P(d) = n, checked against a direct solve.
pub fn poly_rep_r(p: &IntPoly, n: i64, signed: bool) -> RepResult<u64> {
    let violated = |m: &str| Err(RepError::HypothesisViolated(m.to_string()));
    let Some(deg) = p.degree().filter(|&d| d >= 1) else { return violated("P must be nonconstant") };
    if p.constant() != 0 {
        return violated("P must have zero constant term");
    }
    if p.leading() <= 0 {
        return violated("the leading coefficient must be positive");
    }
    if n < 1 {
        return violated("n must be positive");
    }
    // P(x+1) − P(x)
    let shifted: Vec<i64> = (0..=deg as usize)
        .map(|k| (k..=deg as usize).map(|j| p.coeffs()[j] * binomial(j, k)).sum())
        .collect();
    let diff = IntPoly::new(shifted.iter().zip(p.coeffs()).map(|(a, b)| a - b).collect());
    let domain = if signed {
        if deg % 2 == 1 {
            return violated("P must have even degree");
        }
        if !unimodal(&diff, diff.tail_radius() + 1) {
            return violated("P must decrease up to some c and increase after it");
        }
        Domain::AllIntegers
    } else {
        if !nondecreasing_from(&diff, 1) {
            return violated("P must be nondecreasing on the positive integers");
        }
        Domain::NaturalsFrom1
    };
    let formula = divisor_root_count(p, domain, n);
    let r = p.search_radius(n as u128).expect("nonconstant");
    let start = if signed { -r } else { 1 };
    let oracle = (start..=r).filter(|&x| p.eval(x) == n as i128).count() as u64;
    cross_check("poly_rep_R", formula, oracle)
}

fn unimodal(diff: &IntPoly, r: i64) -> bool {
    let mut rising = false;
    for x in -r..=r {
        let v = diff.eval(x);
        if v > 0 {
            rising = true;
        } else if v < 0 && rising {
            return false;
        }
    }
    true
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Σ_{l=0}^{n} R₁(l) R₂(n−l) with R₁(0), R₂(0) supplied.
pub fn conv_sum_count(r1: &ArithSeq, r2: &ArithSeq, n: i64, r1_0: &Rational, r2_0: &Rational) -> Rational {
    let at = |s: &ArithSeq, zero: &Rational, k: i64| if k == 0 { zero.clone() } else { s.at(k) };
    (0..=n).map(|l| at(r1, r1_0, l) * at(r2, r2_0, n - l)).sum()
}

/// Σ_{d | n} R₁(d) R₂(n/d).
pub fn conv_prod_count(r1: &ArithSeq, r2: &ArithSeq, n: u64) -> Rational {
    divisors(n).into_iter().map(|d| r1.at(d as i64) * r2.at((n / d) as i64)).sum()
}

/// Σ_{0 < |d|, d | n} R₁(d − c₁) R₂(n/d − c₂), for P₁(x)P₂(y) = n with
/// constants c₁ = P₁(0), c₂ = P₂(0).
pub fn conv_prod_count_shifted(r1: &ArithSeq, r2: &ArithSeq, c1: i64, c2: i64, n: i64) -> Rational {
    candidates(n, Domain::AllIntegers)
        .into_iter()
        .map(|d| r1.at(d - c1) * r2.at(n / d - c2))
        .sum()
}

/// Σ over divisor pairs (d, δ) of n with f(d, δ) = n.
pub fn general_f2_count(f: &BivarPoly, n: u64) -> RepResult<u64> {
    if !f.vanishes_on_axes() {
        return Err(RepError::HypothesisViolated("f(x,0) and f(0,y) must vanish".to_string()));
    }
    let ds = divisors(n);
    let mut count = 0;
    for &d in &ds {
        for &e in &ds {
            if f.eval(d as i64, e as i64) == n as i128 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// #{(x, y) ∈ ℕ₁²: x^ν + xy = n} = #{d | n: n/d − d^{ν−1} ≥ 1}.
pub fn xnu_xy_count(n: u64, nu: u32) -> u64 {
    divisors(n)
        .into_iter()
        .filter(|&d| (n / d) as i128 - (d as i128).pow(nu - 1) >= 1)
        .count() as u64
}

/// A*_ν(t) = Σ_{d | t} χ(n⁽¹⁾(d)) μ(n⁽²⁾(d)) for 0 ≤ t ≤ l, with A*_ν(0) = 0.
pub fn theorem57_terms(l: u64, nu: u32, chi: &ArithSeq) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); l as usize + 1];
    for d in 1..=l {
        let s = nu_split(d, nu);
        let mu = moebius(s.n2);
        if mu == 0 {
            continue;
        }
        let g = chi.at(s.n1 as i64) * rat(mu);
        if g.is_zero() {
            continue;
        }
        for t in (d..=l).step_by(d as usize) {
            a[t as usize] += &g;
        }
    }
    a
}

/// Σ_{t=0}^{l} A*_ν(t) A*_ν(l−t).
pub fn theorem57_count(l: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let a = theorem57_terms(l, nu, chi);
    (0..=l as usize).map(|t| &a[t] * &a[l as usize - t]).sum()
}

/// Σ_{n^ν + m^ν = l, n, m ≥ 1} χ(n)χ(m), by enumeration.
pub fn power_pair_weight(l: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let mut total = Rational::zero();
    let mut n = 1u64;
    while n.pow(nu) < l {
        let rest = l - n.pow(nu);
        if let Some(m) = crate::arith::perfect_power_root(rest, nu) {
            total += chi.at(n as i64) * chi.at(m as i64);
        }
        n += 1;
    }
    total
}
