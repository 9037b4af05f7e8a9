//! ν-th power parts and the generalized Liouville/Moebius functions.
//!
//! Divisor-sum definitions are evaluated by enumerating the `d` with
//! `d^ν | n`; closed forms go through [`nu_split`]. The two routes are
//! kept separate so tests can compare them.

use super::{factor, moebius, seq::ArithSeq};
use crate::rational::{pow_i, rat, ratio, Rational};
use num_traits::Zero;

/// Per-prime split a = bν + k of n's exponents.
///
/// `nu_part` is ∏p^b and is 1 when no prime reaches exponent ν; that case is
/// flagged by `nu_part_is_trivial` (the value the paper writes as 0).
/// `n1`/`n2` satisfy `n1^ν · n2 = n` with `n1 = 1` in the trivial case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuSplit {
    pub nu_part: u64,
    pub nu_part_is_trivial: bool,
    pub star_part: u64,
    pub n1: u64,
    pub n2: u64,
}

pub fn nu_split(n: u64, nu: u32) -> NuSplit {
    assert!(nu >= 2, "nu_split needs nu >= 2");
    let mut nu_part = 1u64;
    let mut star_part = 1u64;
    for &(p, a) in factor(n).pairs() {
        nu_part *= p.pow(a / nu);
        star_part *= p.pow(a % nu);
    }
    let trivial = nu_part == 1;
    NuSplit {
        nu_part,
        nu_part_is_trivial: trivial,
        star_part,
        n1: nu_part,
        n2: n / nu_part.pow(nu),
    }
}

/// Every d ≥ 1 with d^ν | n, ascending.
pub fn power_divisors(n: u64, nu: u32) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, a) in factor(n).pairs() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..a / nu {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// λ_ν(n) = Σ_{d^ν|n} μ(n/d^ν).
pub fn lambda_nu(n: u64, nu: u32) -> i64 {
    power_divisors(n, nu)
        .into_iter()
        .map(|d| moebius(n / d.pow(nu)))
        .sum()
}

/// 1 iff n is a perfect ν-th power.
pub fn x_nu(n: u64, nu: u32) -> u8 {
    u8::from(super::perfect_power_root(n, nu).is_some())
}

/// μ_ν(n) = μ(n*_ν(n)) when the ν-th power part exceeds 1, else 0.
pub fn mu_nu(n: u64, nu: u32) -> i64 {
    let s = nu_split(n, nu);
    if s.nu_part_is_trivial {
        0
    } else {
        moebius(s.star_part)
    }
}

/// μ*_ν(n) = (-1)^{n_ν(n)} μ_ν(n).
pub fn mu_star_nu(n: u64, nu: u32) -> i64 {
    let s = nu_split(n, nu);
    let sign = if s.nu_part % 2 == 0 { 1 } else { -1 };
    sign * mu_nu(n, nu)
}

/// c_ν(n) = (1/n) Σ_{d>1, d^ν|n} d^ν μ(n/d^ν).
pub fn c_nu(n: u64, nu: u32) -> Rational {
    let total: i64 = power_divisors(n, nu)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| {
            let dn = d.pow(nu);
            dn as i64 * moebius(n / dn)
        })
        .sum();
    ratio(total, n as i64)
}

/// Y_ν(n) = (1/n) Σ_{d>1, d^ν|n} χ(d) d^ν μ(n/d^ν).
pub fn y_nu(n: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let mut total = Rational::zero();
    for d in power_divisors(n, nu).into_iter().filter(|&d| d > 1) {
        let dn = d.pow(nu);
        let m = moebius(n / dn);
        if m != 0 {
            total += chi.at(d as i64) * rat(dn as i64 * m);
        }
    }
    total / rat(n as i64)
}

/// χ(n_ν)·μ(n*_ν)/n*_ν, or 0 when the ν-th power part is trivial.
pub fn y_nu_closed(n: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let s = nu_split(n, nu);
    if s.nu_part_is_trivial {
        return Rational::zero();
    }
    chi.at(s.nu_part as i64) * ratio(moebius(s.star_part), s.star_part as i64)
}

/// A_ν(n) = Σ_{d>1, d^ν|n} χ(d) μ(n/d^ν).
pub fn a_nu(n: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let mut total = Rational::zero();
    for d in power_divisors(n, nu).into_iter().filter(|&d| d > 1) {
        let m = moebius(n / d.pow(nu));
        if m != 0 {
            total += chi.at(d as i64) * rat(m);
        }
    }
    total
}

/// χ(n_ν)·μ(n*_ν), or 0 when the ν-th power part is trivial.
pub fn a_nu_closed(n: u64, nu: u32, chi: &ArithSeq) -> Rational {
    let s = nu_split(n, nu);
    if s.nu_part_is_trivial {
        return Rational::zero();
    }
    chi.at(s.nu_part as i64) * rat(moebius(s.star_part))
}

/// h_a(n) = Σ_{d|n} d^a μ(n/d).
pub fn h_a(n: u64, a: i32) -> Rational {
    super::divisors(n)
        .into_iter()
        .filter_map(|d| {
            let m = moebius(n / d);
            (m != 0).then(|| pow_i(&rat(d as i64), a as i64) * rat(m))
        })
        .sum()
}

/// μ_k(n) = Σ_{d^k|n} μ(d).
pub fn mu_k(n: u64, k: u32) -> i64 {
    if k == 0 {
        return 0;
    }
    power_divisors(n, k).into_iter().map(moebius).sum()
}

/// μ_{k,v}(n) = Σ_{d^k|n} μ(d)/d^v.
pub fn mu_kv(n: u64, k: u32, v: i32) -> Rational {
    power_divisors(n, k.max(1))
        .into_iter()
        .filter_map(|d| {
            let m = moebius(d);
            (m != 0).then(|| rat(m) * pow_i(&rat(d as i64), -(v as i64)))
        })
        .sum()
}

/// g(n) = Σ_{d|n} f(d) μ(n/d).
pub fn moebius_invert(f: &ArithSeq) -> ArithSeq {
    let f = f.clone();
    ArithSeq::new(format!("invert({})", f.id()), move |n| {
        if n < 1 {
            return Rational::zero();
        }
        let n = n as u64;
        super::divisors(n)
            .into_iter()
            .filter_map(|d| {
                let m = moebius(n / d);
                (m != 0).then(|| f.at(d as i64) * rat(m))
            })
            .sum()
    })
}
