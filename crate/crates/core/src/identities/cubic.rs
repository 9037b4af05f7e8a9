//! Sums over two cubes: the starred divisor expansions and the σ* relations.

use super::{bad, dense, pair, power_sum, seq, sparse, square, Built, Entry, IdentityResult, Params};
use crate::arith::{divisors, moebius};
use crate::rational::{pow_i, rat, ratio, Rational};
use crate::repcount::{d3_fn, diagonal_divisor, h_kuv, r_plus3, s_nu_fn, sigma_star, starred_divisors};
use crate::series::LaurentSeries;
use num_traits::Zero;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry::new(
            "th8_sym",
            "Σ X(n,m) q^{n³+m³} = Σ qⁿ [Σ_{d³=4n} X(d/2,d/2) + 2Σ* SymX(x⁻,x⁺)]",
            200,
            th8_sym,
        )
        .defaults(&[("x", "nm")])
        .instances(&[&[("x", "nm")], &[("x", "n2_m1")]]),
        Entry::new("th9", "Σ 2^ν n^ν q^{2n³} = Σ s_ν(n) qⁿ", 128, th9)
            .defaults(&[("nu", "1")])
            .instances(&[&[("nu", "0")], &[("nu", "1")], &[("nu", "2")], &[("nu", "3")]]),
        Entry::new("th10", "σ*₀ = (r₃ − s₀)/2 and σ*₁ = −s₁/2 + ½Σ s₁(2n−k)s₀(k)", 200, th10).seq_eq(),
        Entry::new("th11", "σ*₂ and σ*₋₁ through r₃, s_ν and their self-convolutions", 200, th11).seq_eq(),
        Entry::new("th12", "(Σ(−1)ⁿ q^{n³})² = Σ (−1)ⁿ r₃(n) qⁿ and Σ*(−1)^d = (−1)ⁿ σ*₀", 200, th12),
        Entry::new("th13", "Σ f(2n) q^{2n³} = Σ s_f(n) qⁿ", 128, th13)
            .defaults(&[("f", "id")])
            .instances(&[&[("f", "id")], &[("f", "square")]]),
        Entry::new("th15_2", "(Σ zⁿ q^{n³})² = Σ qⁿ [Σ_{d³=4n} z^d + 2Σ* z^d]", 200, th15_2)
            .defaults(&[("z", "-1")])
            .instances(&[&[("z", "-1")], &[("z", "2")], &[("z", "1/3")]]),
        Entry::new("th16", "(Σ zⁿ q^{n³})² = Σ qⁿ Σ_{d|n} z^d h(n, d, n/d)", 200, th16)
            .defaults(&[("z", "-1")])
            .instances(&[&[("z", "-1")], &[("z", "2")], &[("z", "1/3")]]),
        Entry::new(
            "th17_gen",
            "Σ f(n+m) q^{n³+m³} = Σ qⁿ Σ_{d|n} f(d) h(n,d,n/d) = Σ qⁿ [Σ_{A³=4n} f(A) + 2Σ* f(A)]",
            200,
            th17_gen,
        )
        .defaults(&[("f", "id")])
        .instances(&[&[("f", "id")], &[("f", "mu")]]),
    ]
}

fn cube_pairs(prec: i64, mut x: impl FnMut(i64, i64) -> Rational) -> IdentityResult<LaurentSeries> {
    let mut terms = Vec::new();
    let mut n = 1i64;
    while n.pow(3) + 1 < prec {
        let mut m = 1i64;
        while n.pow(3) + m.pow(3) < prec {
            terms.push((n.pow(3) + m.pow(3), x(n, m)));
            m += 1;
        }
        n += 1;
    }
    sparse(prec, terms)
}

/// Σ_n qⁿ [diag(d) + 2 Σ* star(d, x⁻, x⁺)].
fn starred_series(
    prec: i64,
    diag: impl Fn(u64) -> Rational,
    star: impl Fn(u64, u64, u64) -> Rational,
) -> IdentityResult<LaurentSeries> {
    seq(prec, |n| {
        let mut total = diagonal_divisor(n).map_or_else(Rational::zero, &diag);
        for s in starred_divisors(n) {
            total += rat(2) * star(s.d, s.x_minus, s.x_plus);
        }
        total
    })
}

fn th8_sym(p: &Params, order: i64) -> IdentityResult<Built> {
    let x: fn(i64, i64) -> i64 = match p.text("x")?.as_str() {
        "nm" => |n, m| n * m,
        "n2_m1" => |n, m| n * n - (m + 1) * (m + 1),
        other => return bad(format!("x={other}: expected nm or n2_m1")),
    };
    let sym = move |a: i64, b: i64| ratio(x(a, b) + x(b, a), 2);
    let lhs = cube_pairs(order, |n, m| rat(x(n, m)))?;
    let rhs = starred_series(order, |d| rat(x(d as i64 / 2, d as i64 / 2)), |_, a, b| sym(a as i64, b as i64))?;
    Ok(Built::new(vec![pair("starred", lhs, rhs)]))
}

fn s_val(m: u64, nu: u32) -> Rational {
    if m == 0 {
        return Rational::zero();
    }
    Rational::from_integer(s_nu_fn(m, nu))
}

fn th9(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = p.int_in("nu", 0, 12)? as u32;
    let lhs = power_sum(order, |n| 2 * n.pow(3), |n| rat(2 * n).pow(nu as i32))?;
    let rhs = seq(order, |n| s_val(n, nu))?;
    Ok(Built::new(vec![pair("diagonal", lhs, rhs)]))
}

/// s_ν(m) for 0 <= m <= max.
fn s_table(max: u64, nu: u32) -> Vec<Rational> {
    (0..=max).map(|m| s_val(m, nu)).collect()
}

/// Σ_{k=1}^{2n} a(2n−k) b(k).
fn conv(a: &[Rational], b: &[Rational], n: u64) -> Rational {
    let n2 = 2 * n as usize;
    (1..=n2).filter(|&k| !b[k].is_zero() && !a[n2 - k].is_zero()).map(|k| &a[n2 - k] * &b[k]).sum()
}

struct Tables {
    s0: Vec<Rational>,
    s1: Vec<Rational>,
    s2: Vec<Rational>,
}

impl Tables {
    fn new(order: i64) -> Self {
        let max = 2 * order.max(1) as u64;
        Tables { s0: s_table(max, 0), s1: s_table(max, 1), s2: s_table(max, 2) }
    }
}

fn r3(n: u64) -> Rational {
    rat(r_plus3(n) as i64)
}

fn th10(_: &Params, order: i64) -> IdentityResult<Built> {
    let t = Tables::new(order);
    let half = ratio(1, 2);
    let sigma0 = seq(order, |n| sigma_star(n, 0))?;
    let sigma0_rhs = seq(order, |n| (r3(n) - &t.s0[n as usize]) * &half)?;
    let sigma1 = seq(order, |n| sigma_star(n, 1))?;
    let sigma1_rhs = seq(order, |n| (conv(&t.s1, &t.s0, n) - &t.s1[n as usize]) * &half)?;
    Ok(Built::new(vec![pair("sigma0", sigma0, sigma0_rhs), pair("sigma1", sigma1, sigma1_rhs)]))
}

fn th11(_: &Params, order: i64) -> IdentityResult<Built> {
    let t = Tables::new(order);
    let parts = |n: u64| {
        let i = n as usize;
        [
            conv(&t.s1, &t.s1, n),
            conv(&t.s1, &t.s0, n),
            conv(&t.s2, &t.s0, n),
            r3(n),
            t.s0[i].clone(),
            t.s1[i].clone(),
            t.s2[i].clone(),
            sigma_star(n, 0),
            sigma_star(n, 1),
        ]
    };
    let combine = |n: u64, w: [(i64, i64); 9]| -> Rational {
        parts(n).iter().zip(w).map(|(v, (a, b))| v * ratio(a, b)).sum()
    };
    let sigma2 = seq(order, |n| sigma_star(n, 2))?;
    let sigma2_rhs = seq(order, |n| {
        combine(n, [(1, 4), (1, 2), (1, 4), (1, 3), (-1, 3), (-1, 2), (-1, 2), (-2, 3), (-1, 1)])
    })?;
    let sigma_m1 = seq(order, |n| sigma_star(n, -1))?;
    let sigma_m1_rhs = seq(order, |n| {
        combine(n, [(-1, 8), (1, 2), (1, 4), (1, 3), (-1, 3), (-1, 2), (-1, 8), (-2, 3), (-1, 1)]) / rat(n as i64)
    })?;
    Ok(Built::new(vec![pair("sigma2", sigma2, sigma2_rhs), pair("sigma_minus1", sigma_m1, sigma_m1_rhs)]))
}

fn alt(n: u64) -> Rational {
    rat(if n % 2 == 0 { 1 } else { -1 })
}

fn th12(_: &Params, order: i64) -> IdentityResult<Built> {
    let cubes = power_sum(order, |n| n.pow(3), |n| alt(n as u64))?;
    let lhs = square(&cubes)?;
    let rhs = dense(0, order, |n| if n == 0 { Rational::zero() } else { alt(n as u64) * r3(n as u64) })?;
    let starred = seq(order, |n| starred_divisors(n).iter().map(|s| alt(s.d)).sum())?;
    let signed = seq(order, |n| alt(n) * sigma_star(n, 0))?;
    let via_r3 = seq(order, |n| alt(n) * ratio(r_plus3(n) as i64 - d3_fn(n) as i64, 2))?;
    Ok(Built::new(vec![
        pair("square", lhs, rhs),
        pair("starred_sign", starred.clone(), signed),
        pair("starred_r3", starred, via_r3),
    ]))
}

fn th13(p: &Params, order: i64) -> IdentityResult<Built> {
    let f: fn(i64) -> i64 = match p.text("f")?.as_str() {
        "id" => |n| n,
        "square" => |n| n * n,
        other => return bad(format!("f={other}: expected id or square")),
    };
    let lhs = power_sum(order, |n| 2 * n.pow(3), |n| rat(f(2 * n)))?;
    let rhs = seq(order, |n| diagonal_divisor(n).map_or_else(Rational::zero, |d| rat(f(d as i64))))?;
    Ok(Built::new(vec![pair("diagonal", lhs, rhs)]))
}

fn z_cubes(p: &Params, order: i64) -> IdentityResult<(Rational, LaurentSeries)> {
    let z = p.rational("z")?;
    if z.is_zero() {
        return bad("z must be nonzero");
    }
    let cubes = power_sum(order, |n| n.pow(3), |n| pow_i(&z, n))?;
    Ok((z, square(&cubes)?))
}

fn th15_2(p: &Params, order: i64) -> IdentityResult<Built> {
    let (z, lhs) = z_cubes(p, order)?;
    let zd = |d: u64| pow_i(&z, d as i64);
    let rhs = starred_series(order, zd, |d, _, _| zd(d))?;
    Ok(Built::new(vec![pair("starred", lhs, rhs)]))
}

/// Σ_{d|n} w(d) h(n, d, n/d).
fn h_sum(n: u64, w: impl Fn(u64) -> Rational) -> Rational {
    divisors(n)
        .into_iter()
        .filter_map(|d| {
            let h = h_kuv(n, d, n / d);
            (h > 0).then(|| w(d) * rat(h as i64))
        })
        .sum()
}

fn th16(p: &Params, order: i64) -> IdentityResult<Built> {
    let (z, lhs) = z_cubes(p, order)?;
    let rhs = seq(order, |n| h_sum(n, |d| pow_i(&z, d as i64)))?;
    Ok(Built::new(vec![pair("h_form", lhs, rhs)]))
}

fn th17_gen(p: &Params, order: i64) -> IdentityResult<Built> {
    let f: fn(u64) -> Rational = match p.text("f")?.as_str() {
        "id" => |n| rat(n as i64),
        "mu" => |n| rat(moebius(n)),
        other => return bad(format!("f={other}: expected id or mu")),
    };
    let lhs = cube_pairs(order, |n, m| f((n + m) as u64))?;
    let h_form = seq(order, |n| h_sum(n, f))?;
    let starred = starred_series(order, f, |d, _, _| f(d))?;
    let h_count = seq(order, |n| h_sum(n, |_| rat(1)))?;
    let r3_series = seq(order, r3)?;
    Ok(Built::new(vec![
        pair("h_form", lhs.clone(), h_form),
        pair("starred", lhs, starred),
        pair("h_counts_r3", h_count, r3_series),
    ]))
}
