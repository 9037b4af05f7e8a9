//! Cubic and quintic counts and the starred divisor sums.
//!
//! For d | n put Δ = (4n/d − d²)/3. The starred sum runs over the d with
//! Δ = k² ≠ 0 and 2 ≤ d − k even, i.e. over the unordered pairs
//! x⁻ = (d−k)/2 < x⁺ = (d+k)/2 of positive integers with x⁻³ + x⁺³ = n and
//! x⁻ + x⁺ = d. The diagonal divisor d³ = 4n gives x⁻ = x⁺ = d/2.

use super::{cross_check, FormPart, FormSpec, RepError, RepResult};
use crate::arith::{divisors, exact_root, exact_sqrt, gcd};
use crate::poly::{Domain, IntPoly};
use crate::rational::{pow_i, rat, Rational};
use crate::series::{sqrt_t, LaurentSeries};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarredDivisor {
    pub d: u64,
    pub k: u64,
    pub x_minus: u64,
    pub x_plus: u64,
}

/// The divisors contributing to the starred sum of n, ascending in d.
pub fn starred_divisors(n: u64) -> Vec<StarredDivisor> {
    divisors(n)
        .into_iter()
        .filter_map(|d| {
            let num = 4 * (n / d) as i128 - (d as i128).pow(2);
            if num <= 0 || num % 3 != 0 {
                return None;
            }
            let k = exact_sqrt(num / 3)? as u64;
            (d > k && (d - k) % 2 == 0).then(|| StarredDivisor { d, k, x_minus: (d - k) / 2, x_plus: (d + k) / 2 })
        })
        .collect()
}

/// The divisor d with d³ = 4n, if there is one.
pub fn diagonal_divisor(n: u64) -> Option<u64> {
    let d = exact_root(4 * n as i128, 3)? as u64;
    (n % d == 0).then_some(d)
}

/// s_ν(n) = Σ_{d | n, d³ = 4n} d^ν.
pub fn s_nu_fn(n: u64, nu: u32) -> BigInt {
    diagonal_divisor(n).map_or_else(BigInt::zero, |d| BigInt::from(d).pow(nu))
}

/// σ*_ν(n) = Σ*_{d | n} d^ν.
pub fn sigma_star(n: u64, nu: i32) -> Rational {
    starred_divisors(n).iter().map(|s| pow_i(&rat(s.d as i64), nu as i64)).sum()
}

/// r⁺₃(n) = #{(x, y) ∈ ℕ₁²: x³ + y³ = n}, via the divisor sum with exact
/// square-root membership tests.
pub fn r_plus3(n: u64) -> u64 {
    let diagonal = u64::from(diagonal_divisor(n).is_some());
    diagonal + 2 * starred_divisors(n).len() as u64
}

/// r₃(n) over ℤ²: one for d³ = 4n, two for each d with 4n/d − d² = 3k² > 0, d ≡ k (mod 2).
pub fn r3_signed(n: u64) -> u64 {
    let mut count = u64::from(diagonal_divisor(n).is_some());
    for d in divisors(n) {
        let num = 4 * (n / d) as i128 - (d as i128).pow(2);
        if num <= 0 || num % 3 != 0 {
            continue;
        }
        if let Some(k) = exact_sqrt(num / 3) {
            if (d as i128 - k) % 2 == 0 {
                count += 2;
            }
        }
    }
    count
}

/// r₅(n) = #{(x, y) ∈ ℕ₀²: x⁵ + y⁵ = n}, r₅(0) = 1.
pub fn r5(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut count = 0;
    for d in divisors(n) {
        let d128 = d as i128;
        if d128.pow(5) == 16 * n as i128 {
            count += 1;
            continue;
        }
        let Some(s) = exact_sqrt(5 * d128.pow(4) + 20 * (n / d) as i128) else { continue };
        let Some(t) = exact_sqrt(10 * s - 25 * d128 * d128) else { continue };
        let num = 5 * d128 - t;
        if num >= 0 && num % 10 == 0 {
            count += 2;
        }
    }
    count
}

/// d₃(n) = r⁺₃(n) − 2σ*₀(n), the diagonal count; it vanishes at odd n.
pub fn d3_fn(n: u64) -> u64 {
    r_plus3(n) - 2 * starred_divisors(n).len() as u64
}

/// #{1 ≤ n, m ≤ k: n + m = u, n² − nm + m² = v}.
pub fn h_kuv(k: u64, u: u64, v: u64) -> u64 {
    h_pairs(k, u, v).count() as u64
}

/// [`h_kuv`] restricted to coprime pairs.
pub fn h_star(k: u64, u: u64, v: u64) -> u64 {
    h_pairs(k, u, v).filter(|&(n, m)| gcd(n as i64, m as i64) == 1).count() as u64
}

fn h_pairs(k: u64, u: u64, v: u64) -> impl Iterator<Item = (u64, u64)> {
    let lo = 1.max(u.saturating_sub(k));
    let hi = k.min(u.saturating_sub(1));
    (lo..=hi).map(move |n| (n, u - n)).filter(move |&(n, m)| n * n + m * m - n * m == v)
}

/// #{(x, y) ∈ ℕ₁²: Ax³ + By³ = n} by the square-root transform of the
/// r⁺₃ convolution, checked against enumeration.
///
/// f(q^A)²f(q^B)² starts at q^{2(A+B)} with coefficient 1, so it is shifted
/// down by 2(A+B) before the transform and the root shifted up by A+B.
pub fn s_cubic_ab(a: u64, b: u64, n: u64) -> RepResult<u64> {
    if a == 0 || b == 0 || gcd(a as i64, b as i64) != 1 {
        return Err(RepError::GcdNotOne);
    }
    let formula = if n < a + b {
        0
    } else {
        let len = n - (a + b) + 1;
        let conv: Vec<Rational> = (0..len)
            .map(|t| {
                let total = t + 2 * (a + b);
                let mut acc = 0u64;
                let mut k = 1;
                while k * a < total {
                    let rest = total - k * a;
                    if rest % b == 0 {
                        acc += r_plus3(k) * r_plus3(rest / b);
                    }
                    k += 1;
                }
                rat(acc as i64)
            })
            .collect();
        let root = sqrt_t(&LaurentSeries::from_coeffs(0, conv).expect("nonempty"))
            .expect("constant term is r⁺₃(2)² = 1");
        let c = root.coeff((n - (a + b)) as i64).expect("inside the window");
        u64::try_from(c.to_integer()).expect("a count is a nonnegative integer")
    };
    let form = FormSpec::sum(
        vec![
            FormPart { var: 'x', poly: IntPoly::monomial(a as i64, 3), domain: Domain::NaturalsFrom1 },
            FormPart { var: 'y', poly: IntPoly::monomial(b as i64, 3), domain: Domain::NaturalsFrom1 },
        ],
        0,
    );
    let oracle = super::brute_force_count(&form, n as i64, false)?.count;
    cross_check("s_cubic_AB", formula, oracle)
}
