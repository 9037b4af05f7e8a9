//! Power sums rewritten as Lambert series Σ a(n) qⁿ/(1−qⁿ).

use super::{dense, pair, power_sum, seq, sparse, Built, Entry, IdentityResult, Params};
use crate::arith::seq::{character, ArithSeq};
use crate::arith::{a_nu, a_nu_closed, divisors, moebius, nu_split, perfect_power_root};
use crate::rational::{neg_one_pow, rat, Rational};
use crate::series::{lambert, LaurentSeries};
use num_traits::Zero;

pub(super) fn entries() -> Vec<Entry> {
    const NU_23: &[&[(&str, &str)]] = &[&[("nu", "2")], &[("nu", "3")]];
    vec![
        Entry::new("th47", "Σ q^{n^ν} = Σ λ_ν(n) qⁿ/(1−qⁿ)", 100, th47)
            .defaults(&[("nu", "3")])
            .instances(&[&[("nu", "2")], &[("nu", "3")], &[("nu", "4")]]),
        Entry::new("th47_corrupted", "Σ q^{n³} against a Lambert series with λ₃(8) flipped", 64, th47_corrupted)
            .defaults(&[("nu", "3")])
            .negative_control(),
        Entry::new("th51", "Σ χ(n) q^{n^ν} = χ(1)q + Σ A_ν(n) qⁿ/(1−qⁿ)", 100, th51)
            .defaults(&[("nu", "2"), ("chi", "jacobi:5")])
            .instances(&[&[("nu", "2"), ("chi", "jacobi:5")], &[("nu", "3"), ("chi", "liouville")]]),
        Entry::new("cor53", "θ₃ = 1 + 2q + 2Σ μ₂(n) qⁿ/(1−qⁿ)", 100, cor53),
        Entry::new("th54", "Σ_{n∈ℤ} q^{|n|^ν} = 1 + 2q + 2Σ μ_ν(n) qⁿ/(1−qⁿ)", 100, th54)
            .defaults(&[("nu", "2")])
            .instances(NU_23),
        Entry::new("cor55", "θ₄ = 1 − 2q + 2Σ μ*₂(n) qⁿ/(1−qⁿ)", 100, cor55),
        Entry::new("th56", "Σ_{n∈ℤ} (−1)ⁿ q^{|n|^ν} = 1 − 2q + 2Σ μ*_ν(n) qⁿ/(1−qⁿ)", 100, th56)
            .defaults(&[("nu", "2")])
            .instances(NU_23),
        Entry::new("th60", "Σ χ(n) q^{f(n)} = Σ qⁿ Σ_{d|n} Σ_{f(δ)|d} χ(δ) μ(d/f(δ)) and its ν-th power closed form", 100, th60)
            .defaults(&[("chi", "mu"), ("nu", "2")]),
        Entry::new("th64", "(Σ χ(n) q^{f(n)})(Σ ψ(n) q^{g(n)}) = Σ qⁿ Σ_{n₁+n₂=n} A(n₁) B(n₂)", 100, th64),
    ]
}

fn nu_of(p: &Params) -> IdentityResult<u32> {
    Ok(p.int_in("nu", 2, 8)? as u32)
}

fn powers(order: i64, nu: u32) -> IdentityResult<LaurentSeries> {
    power_sum(order, |n| n.pow(nu), |_| rat(1))
}

fn lambda_seq(nu: u32) -> IdentityResult<ArithSeq> {
    Ok(character(&format!("lambda:{nu}")).expect("nu >= 2 is valid"))
}

fn th47(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = nu_of(p)?;
    Ok(Built::new(vec![pair("lambert", powers(order, nu)?, lambert(&lambda_seq(nu)?, order))]))
}

fn th47_corrupted(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = nu_of(p)?;
    let spot = 2i64.pow(nu);
    let flipped = lambda_seq(nu)?;
    let flipped = flipped.with_override(spot, -flipped.at(spot));
    Ok(Built::new(vec![pair("lambert", powers(order, nu)?, lambert(&flipped, order))]))
}

/// c·q plus the Lambert series of `a`.
fn q_plus_lambert(c: Rational, a: &ArithSeq, order: i64) -> IdentityResult<LaurentSeries> {
    Ok(sparse(order, vec![(1, c)])?.add(&lambert(a, order))?)
}

fn th51(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = nu_of(p)?;
    let chi = p.chi("chi")?;
    let lhs = power_sum(order, |n| n.pow(nu), |n| chi.at(n))?;
    let pos = |n: i64| n.max(1) as u64;
    let (c1, c2) = (chi.clone(), chi.clone());
    let divisor = ArithSeq::new("A_nu", move |n| if n < 1 { Rational::zero() } else { a_nu(pos(n), nu, &c1) });
    let closed = ArithSeq::new("A_nu_closed", move |n| if n < 1 { Rational::zero() } else { a_nu_closed(pos(n), nu, &c2) });
    Ok(Built::new(vec![
        pair("divisor_sum", lhs.clone(), q_plus_lambert(chi.at(1), &divisor, order)?),
        pair("closed_form", lhs, q_plus_lambert(chi.at(1), &closed, order)?),
    ]))
}

/// Σ_{n∈ℤ} s(n) q^{|n|^ν} for an even sign pattern s.
fn symmetric_powers(order: i64, nu: u32, alternating: bool) -> IdentityResult<LaurentSeries> {
    let sign = |n: i64| rat(if alternating { neg_one_pow(n) } else { 1 });
    let half = power_sum(order, |n| n.pow(nu), sign)?;
    Ok(sparse(order, vec![(0, rat(1))])?.add(&half.scale(&rat(2)))?)
}

/// 1 ± 2q + 2 Σ a(n) qⁿ/(1−qⁿ).
fn doubled_lambert(linear: i64, a: &ArithSeq, order: i64) -> IdentityResult<LaurentSeries> {
    let tail = q_plus_lambert(rat(linear), a, order)?.scale(&rat(2));
    Ok(sparse(order, vec![(0, rat(1))])?.add(&tail)?)
}

fn cor53(_: &Params, order: i64) -> IdentityResult<Built> {
    let theta3 = symmetric_powers(order, 2, false)?;
    let mu2 = character("mu_nu:2").expect("valid character");
    let two = character("const:2").expect("valid character");
    let a2 = ArithSeq::new("A_2", move |n| if n < 1 { Rational::zero() } else { a_nu(n as u64, 2, &two) });
    let twice_squares = power_sum(order, |n| n * n, |_| rat(2))?;
    Ok(Built::new(vec![
        pair("mu_2", theta3, doubled_lambert(1, &mu2, order)?),
        pair("constant_two", twice_squares, q_plus_lambert(rat(2), &a2, order)?),
    ]))
}

fn th54(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = nu_of(p)?;
    let mu_nu = character(&format!("mu_nu:{nu}")).expect("valid character");
    Ok(Built::new(vec![pair("mu_nu", symmetric_powers(order, nu, false)?, doubled_lambert(1, &mu_nu, order)?)]))
}

fn alternating(order: i64, nu: u32) -> IdentityResult<Built> {
    let mu_star = character(&format!("mu_star:{nu}")).expect("valid character");
    Ok(Built::new(vec![pair("mu_star", symmetric_powers(order, nu, true)?, doubled_lambert(-1, &mu_star, order)?)]))
}

fn cor55(_: &Params, order: i64) -> IdentityResult<Built> {
    alternating(order, 2)
}

fn th56(p: &Params, order: i64) -> IdentityResult<Built> {
    alternating(order, nu_of(p)?)
}

/// χ(n⁽¹⁾) μ(n⁽²⁾) with n = (n⁽¹⁾)^ν n⁽²⁾.
fn split_weight(d: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let s = nu_split(d, nu);
    let mu = moebius(s.n2);
    if mu == 0 {
        return Rational::zero();
    }
    chi.at(s.n1 as i64) * rat(mu)
}

/// Σ_{f(δ)|d} χ(δ) μ(d/f(δ)) for f(x) = x^ν.
fn power_inverse(d: u64, nu: u32, chi: &ArithSeq) -> Rational {
    crate::arith::power_divisors(d, nu)
        .into_iter()
        .filter_map(|delta| {
            let mu = moebius(d / delta.pow(nu));
            (mu != 0).then(|| chi.at(delta as i64) * rat(mu))
        })
        .sum()
}

fn th60(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let nu = nu_of(p)?;
    let lhs = power_sum(order, |n| n.pow(nu), |n| chi.at(n))?;
    let double_sum = seq(order, |n| divisors(n).into_iter().map(|d| power_inverse(d, nu, &chi)).sum())?;
    let closed = seq(order, |n| divisors(n).into_iter().map(|d| split_weight(d, nu, &chi)).sum())?;
    // Σ_{d|n, f(d)|n} χ(d) μ(n/f(d)) against Σ_{d|n} μ(n/d) Σ_{δ|d, f(δ)=d} χ(δ).
    let direct = seq(order, |n| power_inverse(n, nu, &chi))?;
    let inverted = seq(order, |n| {
        divisors(n)
            .into_iter()
            .filter_map(|d| {
                let delta = perfect_power_root(d, nu)?;
                let mu = moebius(n / d);
                (mu != 0).then(|| chi.at(delta as i64) * rat(mu))
            })
            .sum()
    })?;
    let indicator = seq(order, |n| perfect_power_root(n, nu).map_or_else(Rational::zero, |m| chi.at(m as i64)))?;
    Ok(Built::new(vec![
        pair("double_divisor_sum", lhs.clone(), double_sum),
        pair("power_split", lhs, closed.clone()),
        pair("inversion", direct, inverted),
        pair("power_indicator", closed, indicator),
    ]))
}

fn th64(_: &Params, order: i64) -> IdentityResult<Built> {
    let one = character("one").expect("valid character");
    let squares = power_sum(order, |n| n * n, |_| rat(1))?;
    let cubes = power_sum(order, |n| n.pow(3), |_| rat(1))?;
    let lhs = squares.mul(&cubes)?.truncate(order)?;
    let a: Vec<Rational> =
        (0..order).map(|n| if n < 1 { Rational::zero() } else { double_sum(n as u64, 2, &one) }).collect();
    let b: Vec<Rational> =
        (0..order).map(|n| if n < 1 { Rational::zero() } else { double_sum(n as u64, 3, &one) }).collect();
    let rhs = dense(0, order, |n| (1..n).map(|n1| &a[n1 as usize] * &b[(n - n1) as usize]).sum())?;
    Ok(Built::new(vec![pair("convolution", lhs, rhs)]))
}

/// Σ_{d|n} Σ_{δ^ν|d} χ(δ) μ(d/δ^ν).
fn double_sum(n: u64, nu: u32, chi: &ArithSeq) -> Rational {
    divisors(n).into_iter().map(|d| power_inverse(d, nu, chi)).sum()
}
