//! Sums of two squares and polynomial theta sums.

use super::{bad, dense, inflate_to, pair, seq, sparse, square, Built, Entry, IdentityResult, Params};
use crate::arith::{divisors, exact_sqrt, seq::ArithSeq};
use crate::poly::{Domain, IntPoly};
use crate::rational::{neg_one_pow, rat, ratio, Rational};
use crate::repcount::r2_jacobi;
use crate::series::{poly_theta, theta_series, LaurentSeries};
use num_integer::Roots;
use num_traits::Zero;

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry::new("jacobi2sq", "θ₃² = 1 + 4Σ qᵐ/(1+q²ᵐ) = Σ r₂(n) qⁿ", 200, jacobi2sq),
        Entry::new("th18", "Σ_{n≥1} χ(n) q^{P(n)} = Σ qⁿ Σ_{d|n, P(d)=n} χ(d)", 200, th18)
            .defaults(&[("chi", "jacobi:5")]),
        Entry::new("th20", "Σ_{n∈ℤ} χ(n) q^{P(n)} = Σ χ(roots) + Σ_{P(r)<0} χ(r) q^{P(r)} + Σ R₁(n) qⁿ", 200, th20)
            .defaults(&[("p", "x^2-2x"), ("chi", "alt")])
            .instances(&[&[("p", "x^2-2x")], &[("p", "x^4-2x^3")]]),
        Entry::new("cor21", "Σ_{n∈ℤ} χ(n) q^{an²+bn} by the case split on the minimum of ax²+bx", 200, cor21)
            .defaults(&[("a", "1"), ("b", "-2"), ("chi", "alt")])
            .instances(&[
                &[("a", "1"), ("b", "-2")],
                &[("a", "1"), ("b", "-1")],
                &[("a", "1"), ("b", "0")],
                &[("a", "2"), ("b", "-3")],
                &[("a", "2"), ("b", "1")],
            ]),
        Entry::new("th29_1", "Σ_{n,m∈ℤ} X(n,m) q^{n²+m²} = Σ qᴺ Σ_{k²+l²=2N} Sym X(x⁻,x⁺)", 100, th29_1)
            .defaults(&[("x", "nm")])
            .instances(&[&[("x", "nm")], &[("x", "poly")]]),
        Entry::new(
            "th29_2",
            "(Σ(−1)ⁿ q^{pn(n+1)/2−an})² at q^{8p}, shifted, against the signed divisor count C(a,p,N)",
            480,
            th29_2,
        )
        .defaults(&[("a", "1"), ("p", "3")])
        .experimental(),
        Entry::new("th29_3", "(Σ_{n∈ℤ} χ(n) q^{n²})² at q^{16} = Σ C_χ(N) qᴺ", 400, th29_3)
            .defaults(&[("chi", "liouville")])
            .instances(&[&[("chi", "liouville")], &[("chi", "jacobi:5")], &[("chi", "jacobi:3")]]),
        Entry::new("eq166", "q⁹ Σ(−1)ⁿ q^{64n²+48n} = Σ_{m≡3 (8)} (−1)^{(m−3)/8} q^{m²}", 842, eq166),
    ]
}

fn theta3(prec: i64) -> IdentityResult<LaurentSeries> {
    Ok(theta_series(&rat(1), &rat(0), false, prec)?)
}

fn jacobi2sq(_: &Params, order: i64) -> IdentityResult<Built> {
    let lhs = square(&theta3(order)?)?;
    let mut terms = vec![(0, rat(1))];
    for m in 1..order {
        let mut l = 0;
        while (2 * l + 1) * m < order {
            terms.push(((2 * l + 1) * m, rat(4 * neg_one_pow(l))));
            l += 1;
        }
    }
    let lambert_form = sparse(order, terms)?;
    let divisor_form = dense(0, order, |n| rat(r2_jacobi(n as u64) as i64))?;
    Ok(Built::new(vec![pair("lambert", lhs.clone(), lambert_form), pair("divisor", lhs, divisor_form)]))
}

/// Σ over d ≠ 0 (or d > 0) with |d| | n and P(d) = n of χ(d).
fn divisor_roots(p: &IntPoly, chi: &ArithSeq, n: u64, signed: bool) -> Rational {
    divisors(n)
        .into_iter()
        .flat_map(|d| {
            let d = d as i64;
            if signed {
                vec![d, -d]
            } else {
                vec![d]
            }
        })
        .filter(|&d| p.eval(d) == n as i128)
        .map(|d| chi.at(d))
        .sum()
}

fn th18(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let poly = IntPoly::new(vec![0, 1, 2]);
    let lhs = poly_theta(&poly, &chi, Domain::NaturalsFrom1, order)?;
    let rhs = seq(order, |n| divisor_roots(&poly, &chi, n, false))?;
    Ok(Built::new(vec![pair("divisor", lhs, rhs)]))
}

/// Integer points where P is negative.
fn negative_points(p: &IntPoly) -> Vec<i64> {
    let r = p.tail_radius();
    (-r..=r).filter(|&x| p.eval(x) < 0).collect()
}

/// The divisor side with the given constant term.
fn signed_rhs(p: &IntPoly, chi: &ArithSeq, constant: Rational, order: i64) -> IdentityResult<LaurentSeries> {
    let mut terms = vec![(0, constant)];
    terms.extend(negative_points(p).into_iter().map(|x| (p.eval(x) as i64, chi.at(x))));
    terms.extend((1..order).map(|n| (n, divisor_roots(p, chi, n as u64, true))));
    sparse(order, terms)
}

fn th20(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let poly = match p.text("p")?.as_str() {
        "x^2-2x" => IntPoly::new(vec![0, -2, 1]),
        "x^4-2x^3" => IntPoly::new(vec![0, 0, 0, -2, 1]),
        other => return bad(format!("p={other}: expected x^2-2x or x^4-2x^3")),
    };
    let lhs = poly_theta(&poly, &chi, Domain::AllIntegers, order)?;
    let constant = poly.integer_roots().into_iter().map(|x| chi.at(x)).sum();
    let rhs = signed_rhs(&poly, &chi, constant, order)?;
    Ok(Built::new(vec![pair("divisor", lhs, rhs)]))
}

fn cor21(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let a = p.int_in("a", 1, 1000)?;
    let b = p.int_in("b", -1000, 1000)?;
    let poly = IntPoly::new(vec![0, b, a]);
    let r = poly.tail_radius();
    let m = (-r..=r).map(|x| poly.eval(x)).min().expect("nonempty range");
    let other_root = (b % a == 0).then(|| -b / a);
    let (case, constant) = match (m, other_root) {
        (0, Some(c)) if c.abs() == 1 => ("zero_minimum_unit_root", chi.at(0) + chi.at(c)),
        (0, _) => ("zero_minimum", chi.at(0)),
        (_, Some(c)) => ("negative_minimum_integer_root", chi.at(0) + chi.at(c)),
        (_, None) => ("negative_minimum", chi.at(0)),
    };
    let lhs = poly_theta(&poly, &chi, Domain::AllIntegers, order)?;
    let rhs = signed_rhs(&poly, &chi, constant, order)?;
    Ok(Built::new(vec![pair("divisor", lhs, rhs)]).note("case", case))
}

fn th29_1(p: &Params, order: i64) -> IdentityResult<Built> {
    let x: fn(i64, i64) -> i64 = match p.text("x")?.as_str() {
        "nm" => |n, m| n * m,
        "poly" => |n, m| n * n + 3 * m.pow(4) + n * m * m,
        other => return bad(format!("x={other}: expected nm or poly")),
    };
    let r = order.sqrt() + 1;
    let mut terms = Vec::new();
    for n in -r..=r {
        for m in -r..=r {
            if n * n + m * m < order {
                terms.push((n * n + m * m, rat(x(n, m))));
            }
        }
    }
    let lhs = sparse(order, terms)?;
    let sym = |a: i64, b: i64| ratio(x(a, b) + x(b, a) + x(-a, -b) + x(-b, -a), 2);
    let rhs = dense(0, order, |n| {
        let mut total = Rational::zero();
        let kmax = (2 * n).sqrt() + 1;
        for k in -kmax..=kmax {
            let l2 = 2 * n - k * k;
            if l2 < 0 {
                continue;
            }
            let Some(l) = exact_sqrt(l2 as i128).map(|l| l as i64) else { continue };
            if (k - l) % 2 != 0 {
                continue;
            }
            let term = sym((k - l) / 2, (-k - l) / 2);
            total += if l == 0 { term * ratio(1, 2) } else { term };
        }
        total
    })?;
    Ok(Built::new(vec![pair("symmetrized", lhs, rhs)]))
}

/// C(a, p, N) under either sign convention for the exponent 4a ∓ l.
fn c_apn(a: i64, p: i64, n: i64, flipped: bool) -> Rational {
    if n <= 0 {
        return Rational::zero();
    }
    let kmax = (2 * n).sqrt() + 1;
    let mut total = 0i64;
    for k in -kmax..=kmax {
        let l2 = 2 * n - k * k;
        if l2 < 1 || k % (2 * p) != 0 {
            continue;
        }
        let Some(l) = exact_sqrt(l2 as i128).map(|l| l as i64) else { continue };
        for pm in [1, -1] {
            if (l - k - (2 * p + pm * 4 * a)).rem_euclid(4 * p) != 0 {
                continue;
            }
            let ex = if flipped { 4 * a + pm * l } else { 4 * a - pm * l };
            if ex % (2 * p) == 0 {
                total += neg_one_pow(ex / (2 * p));
            }
        }
    }
    rat(-total)
}

fn th29_2(p: &Params, order: i64) -> IdentityResult<Built> {
    let a = p.int("a")?;
    let pp = p.int("p")?;
    if pp <= 2 * a.abs() {
        return bad(format!("need p > 2|a|, got a={a}, p={pp}"));
    }
    let base_prec = (order - 1) / (8 * pp) + 2;
    let theta = theta_series(&ratio(pp, 2), &ratio(pp - 2 * a, 2), true, base_prec)?;
    let lhs = inflate_to(&square(&theta)?, 8 * pp, 2 * (2 * a - pp).pow(2), order)?;
    let lo = lhs.offset().min(0);
    let hi = lhs.prec();
    let reading = |flipped| dense(lo, hi, |n| c_apn(a, pp, n, flipped));
    let (ra, rb) = (reading(false)?, reading(true)?);
    Ok(Built::new(vec![pair("reading_a", lhs.clone(), ra), pair("reading_b", lhs, rb)]))
}

fn th29_3(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let base = poly_theta(&IntPoly::new(vec![0, 0, 1]), &chi, Domain::AllIntegers, (order - 1) / 16 + 1)?;
    let lhs = inflate_to(&square(&base)?, 16, 0, order)?;
    let rhs = dense(0, lhs.prec(), |n| {
        let mut total = Rational::zero();
        let mmax = (2 * n).sqrt() + 1;
        for m in -mmax..=mmax {
            let l2 = 2 * n - m * m;
            if l2 < 0 || m % 4 != 0 {
                continue;
            }
            let Some(l) = exact_sqrt(l2 as i128).map(|l| l as i64) else { continue };
            if l == 0 {
                if m % 8 == 0 {
                    total += chi.at(-m * m / 64);
                }
            } else if (l - m) % 8 == 0 {
                total += rat(2) * chi.at((l * l - m * m) / 64);
            }
        }
        total
    })?;
    Ok(Built::new(vec![pair("class_sum", lhs, rhs)]))
}

const EQ166_PATTERN: [(i64, i64); 8] = [(9, 1), (25, -1), (121, -1), (169, 1), (361, 1), (441, -1), (729, -1), (841, 1)];

fn eq166(_: &Params, order: i64) -> IdentityResult<Built> {
    let lhs = theta_series(&rat(64), &rat(48), true, order - 9)?.shift(9);
    let mut terms = Vec::new();
    let mut k = 0i64;
    while (8 * k + 3).pow(2) < order {
        terms.push(((8 * k + 3).pow(2), rat(neg_one_pow(k))));
        terms.push(((8 * k + 5).pow(2), rat(neg_one_pow(k + 1))));
        k += 1;
    }
    let rhs = sparse(order, terms)?;
    let pattern_prec = order.min(1225);
    let pattern = sparse(pattern_prec, EQ166_PATTERN.iter().map(|&(e, c)| (e, rat(c))).collect())?;
    let lhs_short = lhs.truncate(pattern_prec)?;
    Ok(Built::new(vec![pair("odd_squares", lhs, rhs), pair("sign_pattern", lhs_short, pattern)]))
}
