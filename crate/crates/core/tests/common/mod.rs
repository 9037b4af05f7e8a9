//! Independent oracles and the arithmetic property suite shared by
//! `arith_props` and `acceptance`.

#![allow(dead_code)]

use qforms::arith::seq::{character, ArithSeq};
use qforms::arith::{
    a_nu, a_nu_closed, c_nu, lambda_nu, moebius, mu_nu, mu_star_nu, nu_split, sigma_nu, y_nu, y_nu_closed,
};
use qforms::rational::{rat, ratio, Rational};

/// μ by trial division, sharing no code with the library.
pub fn naive_mu(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn naive_divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether n is a perfect ν-th power, by scanning bases.
pub fn naive_is_power(n: u64, nu: u32) -> bool {
    (1..).map(|b: u64| b.pow(nu)).take_while(|&p| p <= n).any(|p| p == n)
}

fn pow_divisors(n: u64, nu: u32) -> impl Iterator<Item = u64> {
    (1..).take_while(move |d: &u64| d.pow(nu) <= n).filter(move |d| n % d.pow(nu) == 0)
}

/// Runs `check` for every n in 1..=limit and reports the first failure.
fn each(limit: u64, what: &str, check: impl Fn(u64) -> bool) -> Result<(), String> {
    match (1..=limit).find(|&n| !check(n)) {
        Some(n) => Err(format!("{what} fails at n = {n}")),
        None => Ok(()),
    }
}

/// Σ_{d|n} λ_ν(d) = X_ν(n).
pub fn lambda_sums_to_power_indicator(limit: u64, nu: u32) -> Result<(), String> {
    let lambda: Vec<i64> = (0..=limit).map(|n| if n == 0 { 0 } else { lambda_nu(n, nu) }).collect();
    let mut sums = vec![0i64; limit as usize + 1];
    for d in 1..=limit {
        for m in (d..=limit).step_by(d as usize) {
            sums[m as usize] += lambda[d as usize];
        }
    }
    each(limit, "Σ λ_ν(d) = X_ν", |n| sums[n as usize] == i64::from(naive_is_power(n, nu)))?;
    each(limit, "λ_ν against its definition", |n| {
        lambda[n as usize] == pow_divisors(n, nu).map(|d| naive_mu(n / d.pow(nu))).sum::<i64>()
    })
}

/// λ_ν(nm) = λ_ν(n)λ_ν(m) for coprime n, m ≤ side, and λ_ν(m^ν) = 1.
pub fn lambda_multiplicative(side: u64, nu: u32) -> Result<(), String> {
    for n in 1..=side {
        for m in 1..=side {
            if gcd(n, m) == 1 && lambda_nu(n * m, nu) != lambda_nu(n, nu) * lambda_nu(m, nu) {
                return Err(format!("λ_{nu} not multiplicative at ({n}, {m})"));
            }
        }
    }
    let top = (1u64..).take_while(|m| m.checked_pow(nu).map_or(false, |p| p <= 1 << 40)).last().unwrap_or(1);
    match (1..=top.min(2000)).find(|&m| lambda_nu(m.pow(nu), nu) != 1) {
        Some(m) => Err(format!("λ_{nu}({m}^{nu}) ≠ 1")),
        None => Ok(()),
    }
}

/// μ*_ν(n) = (−1)^{n⁽¹⁾} μ_ν(n), and μ_ν(n) = μ(n*_ν) when the ν-th power part is nontrivial.
pub fn mu_star_sign_rule(limit: u64, nu: u32) -> Result<(), String> {
    each(limit, "μ*_ν = (−1)^{n1} μ_ν", |n| {
        let s = nu_split(n, nu);
        let sign = if s.n1 % 2 == 0 { 1 } else { -1 };
        mu_star_nu(n, nu) == sign * mu_nu(n, nu)
    })?;
    each(limit, "μ_ν = μ(n*_ν)", |n| {
        let s = nu_split(n, nu);
        let expected = if s.nu_part_is_trivial { 0 } else { naive_mu(s.star_part) };
        mu_nu(n, nu) == expected && s.n1.pow(nu) * s.n2 == n
    })
}

/// Σ_{d²|n} μ(d) = |μ(n)|.
pub fn squarefree_indicator(limit: u64) -> Result<(), String> {
    each(limit, "Σ_{d²|n} μ(d) = |μ(n)|", |n| pow_divisors(n, 2).map(naive_mu).sum::<i64>() == naive_mu(n).abs())
}

/// (1/n) Σ_{d|n} σ_{ν−1}(d) μ(n/d) = n^{ν−2}.
pub fn sigma_inversion(limit: u64, nu: u32) -> Result<(), String> {
    let sigma: Vec<Rational> =
        (0..=limit).map(|n| if n == 0 { rat(0) } else { sigma_nu(n, nu as i32 - 1) }).collect();
    let mu: Vec<i64> = (0..=limit).map(|n| if n == 0 { 0 } else { moebius(n) }).collect();
    let mut inv = vec![rat(0); limit as usize + 1];
    for d in 1..=limit {
        for k in 1..=limit / d {
            if mu[k as usize] != 0 {
                inv[(d * k) as usize] += &sigma[d as usize] * rat(mu[k as usize]);
            }
        }
    }
    each(limit, "σ_{ν−1} inversion", |n| {
        &inv[n as usize] / rat(n as i64) == Rational::from_integer((n as i64).pow(nu - 2).into())
    })
}

/// λ_ν(n) μ(n)² = μ(n).
pub fn lambda_on_squarefree(limit: u64, nu: u32) -> Result<(), String> {
    each(limit, "λ_ν μ² = μ", |n| {
        let m = naive_mu(n);
        lambda_nu(n, nu) * m * m == m
    })
}

pub fn test_characters() -> Vec<ArithSeq> {
    ["one", "mu", "id"].iter().map(|id| character(id).expect("registered")).collect()
}

/// Y_ν and A_ν divisor sums against their closed forms and a direct oracle.
pub fn y_a_closed_forms(limit: u64, nu: u32) -> Result<(), String> {
    for chi in test_characters() {
        each(limit, &format!("Y_ν closed form, χ = {}", chi.id()), |n| y_nu(n, nu, &chi) == y_nu_closed(n, nu, &chi))?;
        each(limit, &format!("A_ν closed form, χ = {}", chi.id()), |n| {
            let direct: Rational = pow_divisors(n, nu)
                .filter(|&d| d > 1)
                .map(|d| chi.at(d as i64) * rat(naive_mu(n / d.pow(nu))))
                .sum();
            let a = a_nu(n, nu, &chi);
            a == a_nu_closed(n, nu, &chi) && a == direct
        })?;
    }
    Ok(())
}

/// c_ν(n) + μ(n)/n multiplicative on coprime pairs with n, m ≤ side.
pub fn c_nu_shift_multiplicative(side: u64, nu: u32) -> Result<(), String> {
    let f = |n: u64| c_nu(n, nu) + ratio(naive_mu(n), n as i64);
    for n in 1..=side {
        for m in 1..=side {
            if gcd(n, m) == 1 && f(n * m) != f(n) * f(m) {
                return Err(format!("c_{nu} + μ/n not multiplicative at ({n}, {m})"));
            }
        }
    }
    Ok(())
}

/// μ(n) + μ_ν(n) multiplicative on coprime pairs with n, m ≤ side.
pub fn mu_plus_mu_nu_multiplicative(side: u64, nu: u32) -> Result<(), String> {
    let f = |n: u64| naive_mu(n) + mu_nu(n, nu);
    for n in 1..=side {
        for m in 1..=side {
            if gcd(n, m) == 1 && f(n * m) != f(n) * f(m) {
                return Err(format!("μ + μ_{nu} not multiplicative at ({n}, {m})"));
            }
        }
    }
    Ok(())
}

/// Every property at n ≤ limit for one ν; the multiplicativity checks use
/// pairs up to `side`.
pub fn property_suite(limit: u64, side: u64, nu: u32) -> Result<(), String> {
    lambda_sums_to_power_indicator(limit, nu)?;
    lambda_multiplicative(side, nu)?;
    mu_star_sign_rule(limit, nu)?;
    squarefree_indicator(limit)?;
    sigma_inversion(limit, nu)?;
    lambda_on_squarefree(limit, nu)?;
    y_a_closed_forms(limit, nu)?;
    c_nu_shift_multiplicative(side, nu)?;
    mu_plus_mu_nu_multiplicative(side, nu)
}

/// Coefficient-free brute-force lattice count of x² + y² = n.
pub fn lattice_two_squares(n: u64) -> u64 {
    let n = n as i64;
    let mut r = 0i64;
    while r * r <= n {
        r += 1;
    }
    let mut count = 0;
    for x in -r..=r {
        for y in -r..=r {
            if x * x + y * y == n {
                count += 1;
            }
        }
    }
    count
}

/// Ordered integer pairs with x³ + y³ = n, scanning |x| up to the bound
/// from x² − xy + y² ≤ n.
pub fn cube_pairs(n: i64) -> u64 {
    let mut b = 0i64;
    while 3 * b * b <= 4 * n + 12 {
        b += 1;
    }
    let mut count = 0;
    for x in -2 * b..=2 * b {
        let rest = n - x * x * x;
        let mut y = icbrt(rest);
        while y * y * y > rest {
            y -= 1;
        }
        while (y + 1) * (y + 1) * (y + 1) <= rest {
            y += 1;
        }
        if y * y * y == rest {
            count += 1;
        }
    }
    count
}

fn icbrt(v: i64) -> i64 {
    let mut lo = -(1i64 << 21);
    let mut hi = 1i64 << 21;
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if mid.checked_pow(3).map_or(v < 0, |c| c <= v) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}
