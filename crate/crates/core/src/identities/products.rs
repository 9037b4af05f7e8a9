//! Exponentials of q-series written as infinite products ∏(1−qⁿ)^{X(n)}.

use super::{bad, exp_of, pair, power_sum, product_of, seq, sparse, Built, Entry, IdentityResult, Pair, Params};
use crate::arith::seq::ArithSeq;
use crate::arith::{
    c_nu, divisors, gcd, jacobi_symbol, lambda_nu, moebius, mu_kv, perfect_power_root, power_divisors, sigma_nu,
    y_nu, y_nu_closed,
};
use crate::rational::{pow_i, rat, ratio, Rational};
use crate::series::{pow_rational, q_integrate, theta_series, LaurentSeries};
use num_traits::{One, Zero};
use std::sync::Arc;

pub(super) fn entries() -> Vec<Entry> {
    const LINEAR: &[&[(&str, &str)]] = &[
        &[("a1", "1"), ("b1", "0"), ("c1", "1"), ("d1", "0")],
        &[("a1", "2"), ("b1", "1"), ("c1", "1"), ("d1", "1")],
    ];
    const LINEAR_DEFAULTS: &[(&str, &str)] = &[("a1", "1"), ("b1", "0"), ("c1", "1"), ("d1", "0"), ("chi", "mu")];
    vec![
        Entry::new("prop3", "exp(−Σ aₙ qⁿ/n) = ∏(1−qⁿ)^{(1/n)Σ_{d|n} a_d μ(n/d)}", 64, prop3)
            .defaults(&[("f", "u")])
            .instances(&[&[("f", "u")], &[("f", "geometric")]]),
        Entry::new("cor25", "e^{−f(q)} = ∏(1−qⁿ)^{(1/n)Σ_{d|n} d a_d μ(n/d)}", 64, cor25)
            .defaults(&[("f", "u")])
            .instances(&[&[("f", "u")], &[("f", "geometric")]]),
        Entry::new("th26", "exp(Σ χ(n) q^{n²}) = ∏(1−qⁿ)^{−X(n)}, X summed over k with k²|n", 64, th26)
            .defaults(&[("chi", "mu")]),
        Entry::new("th28", "exp(Σ χ(n) q^{n²}) = ∏(1−qⁿ)^{−X(n)}, X summed over square divisors of n", 64, th28)
            .defaults(&[("chi", "mu")]),
        Entry::new("app4_i", "exp(Σ q^{n²l} μ(n) σ₁(l)/l) = ∏_{a squarefree} 1/(1−qᵃ)", 64, app4_i),
        Entry::new("prop4", "exp(Σ χ(n) q^{f(n)}/(1−q^{f(n)})) = ∏(1−qⁿ)^{−X(n)}, X through gcd(n,k)", 64, prop4)
            .defaults(&[("chi", "jacobi:5")]),
        Entry::new("lemma32", "exp(Σ q^{nᵏl} μ(n) σ_{ν−1}(l)/(l^ν n^s)) = ∏(1−qⁿ)^{−μ_{k,v}(n)/n^ν}", 64, lemma32)
            .defaults(&[("k", "2"), ("nu", "2"), ("v", "1")]),
        Entry::new("th33", "exp(Σ q^{nᵏl} h(n)/(nᵛl) Σ_{d|l} f(nᵏd)d) = ∏(1−qⁿ)^{−ĥ_{k,v}(n)f(n)}", 64, th33)
            .defaults(&[("k", "2"), ("v", "1"), ("h", "mu"), ("f", "square")]),
        Entry::new("th34", "exp(Σ q^{g(n)l} h(n)/l Σ_{d|l} f(g(n)d)d) = ∏(1−qⁿ)^{−h̃_g(n)f(n)}", 64, th34)
            .defaults(&[("g", "n"), ("h", "mu"), ("f", "square")])
            .instances(&[&[("g", "n")], &[("g", "n2")]]),
        Entry::new("th37", "Σ χ(n) q^{f(n)g₁(n)}/(1−q^{f(n)}) as divisor sums over f(k)|N", 64, th37)
            .defaults(LINEAR_DEFAULTS)
            .instances(LINEAR),
        Entry::new("th38", "exp(Σ χ(n) q^{(a₁n+b₁)(c₁n+d₁)}/(1−q^{a₁n+b₁})) = ∏(1−qⁿ)^{−X(n)}", 64, th38)
            .defaults(&[("a1", "1"), ("b1", "0"), ("c1", "1"), ("d1", "0"), ("chi", "mu"), ("literal", "0")])
            .instances(LINEAR),
        Entry::new("th38_1", "Σ q^{f(n)(l+g₁(n))} χ(n) g(l)/l as a divisor sum and as a product", 64, th38_1),
        Entry::new("th39", "exp(Σ χ(n) q^{f(n)g₁(n)}/(1−q^{f(n)})) = ∏(1−qⁿ)^{−X(n)} with the X₀ cutoff", 64, th39)
            .defaults(LINEAR_DEFAULTS)
            .instances(LINEAR),
        Entry::new("th44", "exp(Σ q^{n^ν}/n^ν) = ∏(1−qⁿ)^{−λ_ν(n)/n}", 64, th44)
            .defaults(&[("nu", "2")])
            .instances(&[&[("nu", "2")], &[("nu", "3")]]),
        Entry::new("th45", "exp(Σ χ(n) q^{n^ν}) = ∏(1−qⁿ)^{−X(n)}, X(n) = (1/n)Σ_{d^ν|n} χ(d)d^ν μ(n/d^ν)", 128, th45)
            .defaults(&[("nu", "3"), ("chi", "mu")]),
        Entry::new("th48", "exp(Σ q^{n³}) = e^q ∏(1−qⁿ)^{−c₃(n)}", 128, th48).defaults(&[("nu", "3")]),
        Entry::new("th49", "exp(Σ q^{n^ν}) = e^q ∏(1−qⁿ)^{−c_ν(n)}", 256, th48)
            .defaults(&[("nu", "4")])
            .instances(&[&[("nu", "4")], &[("nu", "5")]]),
        Entry::new("th50", "exp(Σ χ(n) q^{n^ν}) = e^{χ(1)q} ∏(1−qⁿ)^{−Y_ν(n)}", 64, th50)
            .defaults(&[("nu", "2"), ("chi", "jacobi:5")])
            .instances(&[&[("nu", "2"), ("chi", "jacobi:5")], &[("nu", "3"), ("chi", "liouville")]]),
        Entry::new("cor52", "exp(Σ χ(n) q^{n²}) = e^{χ(1)q} ∏(1−qⁿ)^{−χ(n₂)ε(n₂*)}", 64, th50)
            .defaults(&[("nu", "2"), ("chi", "jacobi:5")]),
        Entry::new("th67", "∏(1−qⁿ)^{(n|G)} = ∏_j θ(G/2, G/2−j)^{(j|G)}", 200, th67)
            .defaults(&[("g", "5")])
            .instances(&[&[("g", "5")], &[("g", "13")]]),
        Entry::new("th71_form", "(qᵃ;qᵖ)(q^{p−a};qᵖ)/((qᵇ;qᵖ)(q^{p−b};qᵖ)) = ∏(1−qⁿ)^{X(a,b;p;n)}", 64, th71_form)
            .defaults(&[("a", "1"), ("b", "2"), ("p", "5"), ("literal", "0")]),
    ]
}

type Exponent = Arc<dyn Fn(u64) -> Rational + Send + Sync>;

fn exponent(f: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Exponent {
    Arc::new(f)
}

/// exp(log) against ∏(1−qⁿ)^{x(n)}.
fn exp_pair(label: &str, log: &LaurentSeries, order: i64, x: Exponent) -> IdentityResult<Pair> {
    Ok(pair(label, exp_of(log)?, product_of(order, move |n| x(n))))
}

fn negated(x: Exponent) -> Exponent {
    exponent(move |n| -x(n))
}

/// Σ_{d|n} w(d) μ(n/d).
fn invert(n: u64, w: impl Fn(u64) -> Rational) -> Rational {
    divisors(n)
        .into_iter()
        .filter_map(|d| {
            let m = moebius(n / d);
            (m != 0).then(|| w(d) * rat(m))
        })
        .sum()
}

fn taylor(p: &Params) -> IdentityResult<fn(u64) -> Rational> {
    match p.text("f")?.as_str() {
        "u" => Ok(|n| if n == 1 { rat(1) } else { Rational::zero() }),
        "geometric" => Ok(|_| rat(1)),
        other => bad(format!("f={other}: expected u or geometric")),
    }
}

fn prop3(p: &Params, order: i64) -> IdentityResult<Built> {
    let a = taylor(p)?;
    let f = seq(order, a)?;
    let log = q_integrate(&f)?.negate();
    let x = exponent(move |n| invert(n, a) / rat(n as i64));
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

fn cor25(p: &Params, order: i64) -> IdentityResult<Built> {
    let a = taylor(p)?;
    let log = seq(order, a)?.negate();
    let x = exponent(move |n| invert(n, |d| rat(d as i64) * a(d)) / rat(n as i64));
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

fn squares_log(chi: &ArithSeq, order: i64) -> IdentityResult<LaurentSeries> {
    power_sum(order, |n| n * n, |n| chi.at(n))
}

fn th26(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let log = squares_log(&chi, order)?;
    let x = exponent(move |n| {
        let total: Rational = power_divisors(n, 2)
            .into_iter()
            .map(|k| chi.at(k as i64) * rat((k * k) as i64 * moebius(n / (k * k))))
            .sum();
        total / rat(n as i64)
    });
    Ok(Built::new(vec![exp_pair("product", &log, order, negated(x))?]))
}

fn th28(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let log = squares_log(&chi, order)?;
    let x = exponent(move |n| {
        let total: Rational = divisors(n)
            .into_iter()
            .filter_map(|d| perfect_power_root(d, 2).map(|r| chi.at(r as i64) * rat(d as i64 * moebius(n / d))))
            .sum();
        total / rat(n as i64)
    });
    Ok(Built::new(vec![exp_pair("product", &log, order, negated(x))?]))
}

fn app4_i(_: &Params, order: i64) -> IdentityResult<Built> {
    let mut terms = Vec::new();
    let mut n = 1i64;
    while n * n < order {
        let mu = moebius(n as u64);
        if mu != 0 {
            let mut l = 1;
            while n * n * l < order {
                terms.push((n * n * l, rat(mu) * sigma_nu(l as u64, 1) / rat(l)));
                l += 1;
            }
        }
        n += 1;
    }
    let log = sparse(order, terms)?;
    let x = exponent(|n| -power_divisors(n, 2).into_iter().map(|d| rat(moebius(d))).sum::<Rational>());
    let mut direct = vec![Rational::zero(); order as usize];
    direct[0] = rat(1);
    for a in (1..order as usize).filter(|&a| moebius(a as u64) != 0) {
        for e in a..order as usize {
            let prev = direct[e - a].clone();
            direct[e] += prev;
        }
    }
    let direct = LaurentSeries::from_coeffs(0, direct)?;
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?, pair("squarefree_product", exp_of(&log)?, direct)]))
}

fn prop4(p: &Params, order: i64) -> IdentityResult<Built> {
    let chi = p.chi("chi")?;
    let f = |n: i64| n * n + n;
    let mut terms = Vec::new();
    let mut n = 1;
    while f(n) < order {
        let mut j = 1;
        while j * f(n) < order {
            terms.push((j * f(n), chi.at(n)));
            j += 1;
        }
        n += 1;
    }
    let log = sparse(order, terms)?;
    let x = exponent(move |n| {
        let total: Rational = (1..=n)
            .filter_map(|k| {
                let g = gcd(n as i64, k as i64);
                let root = crate::arith::exact_sqrt(1 + 4 * g as i128)?;
                let m = (root - 1) / 2;
                (m >= 1 && m * (m + 1) == g as i128).then(|| rat(g) * chi.at(m as i64))
            })
            .sum();
        -total / rat(n as i64)
    });
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

fn lemma32(p: &Params, order: i64) -> IdentityResult<Built> {
    let k = p.int_in("k", 1, 6)? as u32;
    let nu = p.int_in("nu", 1, 6)? as u32;
    let v = p.int_in("v", -6, 6)? as i32;
    let s = (k * nu) as i64 + v as i64;
    let mut terms = Vec::new();
    let mut n = 1i64;
    while n.pow(k) < order {
        let mu = moebius(n as u64);
        if mu != 0 {
            let mut l = 1;
            while n.pow(k) * l < order {
                let c = rat(mu) * pow_i(&rat(n), -s) * sigma_nu(l as u64, nu as i32 - 1) * pow_i(&rat(l), -(nu as i64));
                terms.push((n.pow(k) * l, c));
                l += 1;
            }
        }
        n += 1;
    }
    let log = sparse(order, terms)?;
    let x = exponent(move |n| -mu_kv(n, k, v) * pow_i(&rat(n as i64), -(nu as i64)));
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

/// Σ_{n,l} q^{g(n)l}/(w(n) l) h(n) Σ_{d|l} f(g(n)d)d.
fn weighted_log(
    order: i64,
    g: impl Fn(i64) -> i64,
    w: impl Fn(i64) -> Rational,
    h: &ArithSeq,
    f: &ArithSeq,
) -> IdentityResult<LaurentSeries> {
    let mut terms = Vec::new();
    let mut n = 1i64;
    while g(n) < order {
        let hn = h.at(n);
        if !hn.is_zero() {
            let mut l = 1;
            while g(n) * l < order {
                let inner: Rational =
                    divisors(l as u64).into_iter().map(|d| f.at(g(n) * d as i64) * rat(d as i64)).sum();
                terms.push((g(n) * l, &hn * inner / (w(n) * rat(l))));
                l += 1;
            }
        }
        n += 1;
    }
    sparse(order, terms)
}

fn th33(p: &Params, order: i64) -> IdentityResult<Built> {
    let k = p.int_in("k", 1, 6)? as u32;
    let v = p.int_in("v", -6, 6)? as i32;
    let h = p.chi("h")?;
    let f = p.chi("f")?;
    let log = weighted_log(order, |n| n.pow(k), |n| pow_i(&rat(n), v as i64), &h, &f)?;
    let hat = move |n: u64| -> Rational {
        power_divisors(n, k).into_iter().map(|d| h.at(d as i64) * pow_i(&rat(d as i64), -(v as i64))).sum()
    };
    let x = exponent(move |n| -hat(n) * f.at(n as i64));
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

fn th34(p: &Params, order: i64) -> IdentityResult<Built> {
    let g: fn(i64) -> i64 = match p.text("g")?.as_str() {
        "n" => |n| n,
        "n2" => |n| n * n,
        other => return bad(format!("g={other}: expected n or n2")),
    };
    let h = p.chi("h")?;
    let f = p.chi("f")?;
    let log = weighted_log(order, g, |_| rat(1), &h, &f)?;
    let tilde = move |n: u64| -> Rational {
        (1..=n as i64).take_while(|&d| g(d) <= n as i64).filter(|&d| n as i64 % g(d) == 0).map(|d| h.at(d)).sum()
    };
    let x = exponent(move |n| -tilde(n) * f.at(n as i64));
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

/// f(k) = a₁k + b₁ and g₁(k) = c₁k + d₁ with their validity conditions.
#[derive(Clone, Copy)]
struct Linear {
    a1: i64,
    b1: i64,
    c1: i64,
    d1: i64,
}

impl Linear {
    fn from(p: &Params) -> IdentityResult<Self> {
        let l = Linear { a1: p.int("a1")?, b1: p.int("b1")?, c1: p.int("c1")?, d1: p.int("d1")? };
        if l.a1 < 1 || l.c1 < 1 || l.a1 + l.b1 < 1 || l.c1 + l.d1 < 1 {
            return bad("need a1, c1 > 0, a1 + b1 >= 1 and c1 + d1 >= 1");
        }
        Ok(l)
    }

    fn f(&self, k: i64) -> i64 {
        self.a1 * k + self.b1
    }

    fn g1(&self, k: i64) -> i64 {
        self.c1 * k + self.d1
    }

    /// k ≥ 1 with f(k) = d.
    fn f_inv(&self, d: i64) -> Option<i64> {
        let k = (d - self.b1).checked_div(self.a1)?;
        ((d - self.b1) % self.a1 == 0 && k >= 1).then_some(k)
    }

    /// Σ χ(k) q^{f(k)g₁(k)}/(1−q^{f(k)}).
    fn series(&self, chi: &ArithSeq, order: i64) -> IdentityResult<LaurentSeries> {
        let mut terms = Vec::new();
        let mut k = 1;
        while self.f(k) * self.g1(k) < order {
            let mut e = self.f(k) * self.g1(k);
            while e < order {
                terms.push((e, chi.at(k)));
                e += self.f(k);
            }
            k += 1;
        }
        sparse(order, terms)
    }

    /// Σ_{1≤k≤N, f(k)|N, N ≥ f(k)g₁(k)} χ(k).
    fn k_form(&self, chi: &ArithSeq, order: i64) -> IdentityResult<LaurentSeries> {
        seq(order, |n| {
            let n = n as i64;
            (1..=n)
                .filter(|&k| n % self.f(k) == 0 && n >= self.f(k) * self.g1(k))
                .map(|k| chi.at(k))
                .sum()
        })
    }

    /// (1/n) Σ_{d|n} Σ_{δ|(n/d)} dδ χ(f⁻¹(d)) [cutoff] μ((n/d)/δ).
    fn exponent(self, chi: ArithSeq, literal: bool) -> Exponent {
        exponent(move |n| {
            let mut total = Rational::zero();
            for d in divisors(n) {
                let Some(k) = self.f_inv(d as i64) else { continue };
                let c = chi.at(k);
                if c.is_zero() {
                    continue;
                }
                for delta in divisors(n / d) {
                    let keep = if literal { delta as i64 - k >= 1 } else { delta as i64 >= self.g1(k) };
                    let mu = moebius(n / d / delta);
                    if keep && mu != 0 {
                        total += &c * rat((d * delta) as i64 * mu);
                    }
                }
            }
            -total / rat(n as i64)
        })
    }
}

fn th37(p: &Params, order: i64) -> IdentityResult<Built> {
    let lin = Linear::from(p)?;
    let chi = p.chi("chi")?;
    let lhs = lin.series(&chi, order)?;
    let divisor_form = seq(order, |n| {
        divisors(n)
            .into_iter()
            .filter_map(|d| {
                let k = lin.f_inv(d as i64)?;
                ((n / d) as i64 - lin.g1(k) >= 0).then(|| chi.at(k))
            })
            .sum()
    })?;
    Ok(Built::new(vec![
        pair("divisor_form", lhs.clone(), divisor_form),
        pair("k_form", lhs, lin.k_form(&chi, order)?),
    ]))
}

fn th38(p: &Params, order: i64) -> IdentityResult<Built> {
    let lin = Linear::from(p)?;
    let chi = p.chi("chi")?;
    let literal = p.int_in("literal", 0, 1)? == 1;
    let lhs = lin.series(&chi, order)?;
    let k_form = lin.k_form(&chi, order)?;
    let product = exp_pair("product", &lhs, order, lin.exponent(chi, literal))?;
    Ok(Built::new(vec![pair("k_form", lhs, k_form), product]))
}

fn th39(p: &Params, order: i64) -> IdentityResult<Built> {
    let lin = Linear::from(p)?;
    let chi = p.chi("chi")?;
    let lhs = lin.series(&chi, order)?;
    Ok(Built::new(vec![exp_pair("product", &lhs, order, lin.exponent(chi, false))?]))
}

fn th38_1(_: &Params, order: i64) -> IdentityResult<Built> {
    // f(x) = x + 1, g₁(x) = x, χ ≡ 1, g(l) = l.
    let mut terms = Vec::new();
    let mut n = 1i64;
    while (n + 1) * (n + 1) < order {
        let mut l = 1;
        while (n + 1) * (l + n) < order {
            terms.push(((n + 1) * (l + n), rat(1)));
            l += 1;
        }
        n += 1;
    }
    let lhs = sparse(order, terms)?;
    let divisor_form = seq(order, |n| {
        let count = divisors(n).into_iter().filter(|&d| d >= 2 && (n / d) as i64 - (d as i64 - 1) >= 1).count();
        rat(count as i64)
    })?;
    let x = exponent(|n| {
        let mut total = 0i64;
        for d in divisors(n).into_iter().filter(|&d| d >= 2) {
            let k = d - 1;
            for delta in divisors(n / d).into_iter().filter(|&delta| delta > k) {
                total += (d * delta) as i64 * moebius(n / d / delta);
            }
        }
        ratio(-total, n as i64)
    });
    let product = exp_pair("product", &lhs, order, x)?;
    Ok(Built::new(vec![pair("divisor_form", lhs, divisor_form), product]))
}

fn th44(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = p.int_in("nu", 2, 8)? as u32;
    let phi = power_sum(order, |n| n.pow(nu), |_| rat(1))?;
    let log = q_integrate(&phi)?;
    let x = exponent(move |n| ratio(-lambda_nu(n, nu), n as i64));
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

fn th45(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = p.int_in("nu", 2, 8)? as u32;
    let chi = p.chi("chi")?;
    let log = power_sum(order, |n| n.pow(nu), |n| chi.at(n))?;
    let x = exponent(move |n| {
        let total: Rational = power_divisors(n, nu)
            .into_iter()
            .map(|d| chi.at(d as i64) * rat(d.pow(nu) as i64 * moebius(n / d.pow(nu))))
            .sum();
        -total / rat(n as i64)
    });
    Ok(Built::new(vec![exp_pair("product", &log, order, x)?]))
}

/// e^{c q} times ∏(1−qⁿ)^{x(n)}.
fn exp_linear_times(c: Rational, order: i64, x: Exponent) -> IdentityResult<LaurentSeries> {
    let linear = sparse(order, vec![(1, c)])?;
    Ok(exp_of(&linear)?.mul(&product_of(order, move |n| x(n)))?)
}

fn th48(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = p.int_in("nu", 2, 8)? as u32;
    let log = power_sum(order, |n| n.pow(nu), |_| rat(1))?;
    let rhs = exp_linear_times(rat(1), order, exponent(move |n| -c_nu(n, nu)))?;
    Ok(Built::new(vec![pair("product", exp_of(&log)?, rhs)]))
}

fn th50(p: &Params, order: i64) -> IdentityResult<Built> {
    let nu = p.int_in("nu", 2, 8)? as u32;
    let chi = p.chi("chi")?;
    let log = power_sum(order, |n| n.pow(nu), |n| chi.at(n))?;
    let lhs = exp_of(&log)?;
    let c1 = chi.at(1);
    let closed_chi = chi.clone();
    let divisor = exp_linear_times(c1.clone(), order, exponent(move |n| -y_nu(n, nu, &chi)))?;
    let closed = exp_linear_times(c1, order, exponent(move |n| -y_nu_closed(n, nu, &closed_chi)))?;
    Ok(Built::new(vec![pair("divisor_sum", lhs.clone(), divisor), pair("closed_form", lhs, closed)]))
}

fn th67(p: &Params, order: i64) -> IdentityResult<Built> {
    let g = p.int_in("g", 3, 199)?;
    let valid = g % 2 == 1 && crate::arith::factor(g as u64).pairs().iter().all(|&(q, _)| q % 4 == 1);
    if !valid {
        return bad(format!("g={g}: need an odd G whose prime factors are 1 mod 4"));
    }
    let symbol = move |n: i64| jacobi_symbol(n, g).expect("odd modulus") as i64;
    let lhs = product_of(order, move |n| rat(symbol(n as i64)));
    let mut rhs = LaurentSeries::one(order)?;
    let mut a = Rational::zero();
    for j in 1..=(g - 1) / 2 {
        let e = symbol(j);
        if e == 0 {
            continue;
        }
        let theta = theta_series(&ratio(g, 2), &ratio(g - 2 * j, 2), true, order)?;
        rhs = rhs.mul(&pow_rational(&theta, &rat(e))?)?;
        a += (ratio(-j, 2) + ratio(j * j, 2 * g) + ratio(g, 12)) * rat(e);
    }
    Ok(Built::new(vec![pair("theta_quotient", lhs, rhs)]).note("A", crate::rational::fmt_rational(&a)))
}

fn th71_form(p: &Params, order: i64) -> IdentityResult<Built> {
    let a = p.int("a")?;
    let b = p.int("b")?;
    let pm = p.int("p")?;
    let literal = p.int_in("literal", 0, 1)? == 1;
    if !(0 < a && a < b && a + b < pm) {
        return bad(format!("need 0 < a < b < a + b < p, got a={a}, b={b}, p={pm}"));
    }
    let hit = move |n: i64, r: i64| i64::from(n.rem_euclid(pm) == r);
    let x = move |n: i64| {
        if literal {
            hit(n, a) - hit(n, pm - a) + hit(n, b) - hit(n, pm - b)
        } else {
            hit(n, a) + hit(n, pm - a) - hit(n, b) - hit(n, pm - b)
        }
    };
    let mut direct = vec![Rational::zero(); order as usize];
    direct[0] = Rational::one();
    for n in 1..order as usize {
        let r = (n as i64).rem_euclid(pm);
        if r == a || r == pm - a {
            for e in (n..order as usize).rev() {
                let prev = direct[e - n].clone();
                direct[e] -= prev;
            }
        }
        if r == b || r == pm - b {
            for e in n..order as usize {
                let prev = direct[e - n].clone();
                direct[e] += prev;
            }
        }
    }
    let direct = LaurentSeries::from_coeffs(0, direct)?;
    let product = product_of(order, move |n| rat(x(n as i64)));
    let shift = ratio(-(a - b), 2) + ratio(a * a - b * b, 2 * pm);
    Ok(Built::new(vec![pair("pochhammer_quotient", direct, product)]).note("A", crate::rational::fmt_rational(&shift)))
}
