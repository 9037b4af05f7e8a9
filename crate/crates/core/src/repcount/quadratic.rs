//! Two-square counts and their weighted generalizations.

use super::{brute_force_count, cross_check, FormPart, FormSpec, RepError, RepResult};
use crate::arith::{divisors, gcd};
use crate::poly::{Domain, IntPoly};
use crate::rational::{rat, Rational};
use crate::series::{inflate, sqrt_t, theta_series, LaurentSeries};
use num_traits::ToPrimitive;

/// r(n) = 4 Σ_{d | n, d odd} (−1)^{(d−1)/2}, r(0) = 1.
pub fn r2_jacobi(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let s: i64 = divisors(n)
        .into_iter()
        .filter(|d| d % 2 == 1)
        .map(|d| if d % 4 == 1 { 1 } else { -1 })
        .sum();
    (4 * s) as u64
}

fn theta3(prec: i64) -> LaurentSeries {
    theta_series(&rat(1), &rat(0), false, prec).expect("valid theta parameters")
}

/// Number of representations of n by Σ A_i x_i² over ℤ^N, from the
/// square-root transform of the product of the θ₃² expansions, checked
/// against the direct product of θ₃(q^{A_i}).
pub fn r2_multi(coeffs: &[u64], n: u64) -> RepResult<u64> {
    let g = coeffs.iter().fold(0i64, |acc, &a| gcd(acc, a as i64));
    if coeffs.is_empty() || coeffs.contains(&0) || g != 1 {
        return Err(RepError::GcdNotOne);
    }
    let prec = n as i64 + 1;
    let squared = LaurentSeries::from_fn(0, prec, |k| rat(r2_jacobi(k as u64) as i64)).expect("nonempty");
    let conv = LaurentSeries::product(coeffs.iter().map(|&a| inflate(&squared, a as i64)).collect::<Vec<_>>().iter())
        .expect("power series")
        .truncate(prec)
        .expect("nonempty");
    let formula = count_at(&sqrt_t(&conv).expect("constant term 1"), n);
    let direct = LaurentSeries::product(coeffs.iter().map(|&a| inflate(&theta3(prec), a as i64)).collect::<Vec<_>>().iter())
        .expect("power series");
    cross_check("r2_multi", formula, count_at(&direct, n))
}

fn count_at(s: &LaurentSeries, n: u64) -> u64 {
    let c: Rational = s.coeff(n as i64).expect("inside the window");
    c.to_integer().to_u64().expect("a count is a nonnegative integer")
}

/// r_{A,B}(n) = #{(x, y) ∈ ℤ²: Ax² + By² = n}.
pub fn r_quadratic_t(a: u64, b: u64, n: u64) -> RepResult<u64> {
    r2_multi(&[a, b], n)
}

/// #{(x, y) ∈ ℤ²: Ax² + By² + Cx + Dy + E = n} as r_{A,B}(n + C²/4A + D²/4B − E),
/// checked against enumeration.
pub fn shift_count(a: i64, b: i64, c: i64, d: i64, e: i64, n: i64) -> RepResult<u64> {
    if a < 1 || b < 1 || gcd(a, b) != 1 {
        return Err(RepError::GcdNotOne);
    }
    if c % (2 * a) != 0 || d % (2 * b) != 0 {
        return Err(RepError::CongruenceViolated);
    }
    let m = n + c * c / (4 * a) + d * d / (4 * b) - e;
    let formula = if m < 0 { 0 } else { r_quadratic_t(a as u64, b as u64, m as u64)? };
    let form = FormSpec::sum(
        vec![
            FormPart { var: 'x', poly: IntPoly::new(vec![0, c, a]), domain: Domain::AllIntegers },
            FormPart { var: 'y', poly: IntPoly::new(vec![0, d, b]), domain: Domain::AllIntegers },
        ],
        e,
    );
    let oracle = brute_force_count(&form, n, false)?.count;
    cross_check("shift_count", formula, oracle)
}
