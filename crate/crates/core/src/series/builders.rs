//! Generating-function builders: theta sums, polynomial-exponent sums,
//! Lambert series and infinite products.

use super::functions::exp_weighted;
use super::{LaurentSeries, SeriesError, SeriesResult};
use crate::arith::seq::ArithSeq;
use crate::poly::{Domain, IntPoly};
use crate::rational::{neg_one_pow, rat, Rational};
use num_traits::{Signed, ToPrimitive, Zero};

/// Collects `(exponent, coefficient)` terms below `prec`, offset at the
/// lowest attained exponent.
fn collect(terms: Vec<(i64, Rational)>, prec: i64) -> SeriesResult<LaurentSeries> {
    let lo = terms.iter().map(|&(e, _)| e).min().unwrap_or(prec - 1).min(prec - 1);
    LaurentSeries::from_terms(lo, prec, terms)
}

/// Σ_{n∈ℤ} (±1)^n q^{a n² + b n}, truncated at `prec`.
pub fn theta_series(a: &Rational, b: &Rational, alternating: bool, prec: i64) -> SeriesResult<LaurentSeries> {
    if !a.is_positive() {
        return Err(SeriesError::NonpositiveA);
    }
    let two = rat(2);
    let four = rat(4);
    if !(a + b).is_integer() || !(a - b).is_integer() || !(a * &four + b * &two).is_integer() {
        return Err(SeriesError::NonIntegralExponent);
    }
    let exponent = |n: i64| -> i64 {
        let n = rat(n);
        (a * &n * &n + b * &n).to_integer().to_i64().expect("exponent fits in i64")
    };
    let vertex = (-b / (a * &two)).floor().to_integer().to_i64().expect("vertex fits in i64");
    let mut terms = Vec::new();
    let sign = |n: i64| rat(if alternating { neg_one_pow(n) } else { 1 });
    let mut n = vertex;
    loop {
        let e = exponent(n);
        if e < prec {
            terms.push((e, sign(n)));
        } else if n > vertex {
            break;
        }
        n += 1;
    }
    let mut n = vertex - 1;
    loop {
        let e = exponent(n);
        if e >= prec {
            break;
        }
        terms.push((e, sign(n)));
        n -= 1;
    }
    collect(terms, prec)
}

/// Σ χ(n) q^{P(n)} over `domain`, truncated at `prec`.
pub fn poly_theta(p: &IntPoly, chi: &ArithSeq, domain: Domain, prec: i64) -> SeriesResult<LaurentSeries> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 || p.leading() <= 0 || (domain == Domain::AllIntegers && deg % 2 == 1) {
        return Err(SeriesError::UnboundedBelow);
    }
    let radius = p.search_radius(prec.max(0) as u128).expect("nonconstant polynomial");
    let start = domain.min().unwrap_or(-radius);
    let mut terms = Vec::new();
    for x in start..=radius {
        let v = p.eval(x);
        if v < prec as i128 {
            terms.push((v as i64, chi.at(x)));
        }
    }
    collect(terms, prec)
}

/// Σ_{n≥1} a(n) qⁿ/(1−qⁿ); the coefficient of q^m is Σ_{d|m} a(d).
pub fn lambert(a: &ArithSeq, prec: i64) -> LaurentSeries {
    if prec < 1 {
        return LaurentSeries::zero(prec);
    }
    let mut coeffs = vec![Rational::zero(); prec as usize];
    for d in 1..prec {
        let v = a.at(d);
        if v.is_zero() {
            continue;
        }
        for m in (d..prec).step_by(d as usize) {
            coeffs[m as usize] += &v;
        }
    }
    LaurentSeries::from_coeffs(0, coeffs).expect("nonempty window")
}

/// ∏_{n≥1} (1−qⁿ)^{e(n)} to precision `prec`.
pub fn product_expand(e: &ArithSeq, prec: i64) -> LaurentSeries {
    if prec < 1 {
        return LaurentSeries::zero(prec);
    }
    // N times the q^N coefficient of the logarithm: −Σ_{n|N} n·e(n).
    let mut c = vec![Rational::zero(); prec as usize];
    for n in 1..prec {
        let v = e.at(n);
        if v.is_zero() {
            continue;
        }
        let w = -(v * rat(n));
        for m in (n..prec).step_by(n as usize) {
            c[m as usize] += &w;
        }
    }
    LaurentSeries::from_coeffs(0, exp_weighted(&c)).expect("nonempty window")
}

/// Substitutes q → q^k.
pub fn inflate(s: &LaurentSeries, k: i64) -> LaurentSeries {
    assert!(k >= 1, "inflate needs k >= 1");
    if k == 1 {
        return s.clone();
    }
    let lo = s.offset() * k;
    let hi = k * (s.prec() - 1) + 1;
    let mut coeffs = vec![Rational::zero(); (hi - lo) as usize];
    for (e, c) in s.terms() {
        coeffs[(e * k - lo) as usize] = c.clone();
    }
    let mut out = LaurentSeries::from_coeffs(lo, coeffs).expect("nonempty window");
    out.exact_below = s.is_exact_below();
    out
}
