//! Exhaustive enumeration over a finite, provably complete box.

use super::form::{Combiner, FormPart, FormSpec};
use super::{RepError, RepResult};
use crate::arith::exact_root;
use crate::poly::{BivarPoly, Domain, IntPoly};
use num_integer::Roots;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub n: i64,
    pub count: u64,
    /// Solution tuples in part order, when requested.
    pub witnesses: Option<Vec<Vec<i64>>>,
}

/// Lower bound of P on its domain, or `None` if P is unbounded below there.
fn lower_bound(p: &IntPoly, d: Domain) -> Option<i128> {
    let deg = p.degree().filter(|&d| d > 0)?;
    if p.leading() < 0 || (deg % 2 == 1 && d == Domain::AllIntegers) {
        return None;
    }
    let r = p.tail_radius();
    let lo = d.min().unwrap_or(-r).max(-r);
    let inner = (lo..=r).map(|x| p.eval(x)).min().unwrap_or(0);
    Some(inner.min(0))
}

/// Every x in the domain with lo ≤ P(x) ≤ hi, ascending in x.
fn solutions_between(p: &IntPoly, d: Domain, lo: i128, hi: i128) -> Vec<(i128, i64)> {
    if hi < lo {
        return Vec::new();
    }
    let limit = lo.unsigned_abs().max(hi.unsigned_abs());
    let Some(r) = p.search_radius(limit) else { return Vec::new() };
    let start = d.min().unwrap_or(-r).max(-r);
    (start..=r)
        .filter_map(|x| {
            let v = p.eval(x);
            (lo <= v && v <= hi).then_some((v, x))
        })
        .collect()
}

fn is_scaled_cube(p: &IntPoly) -> Option<i64> {
    (p.degree() == Some(3) && p.coeffs()[..3].iter().all(|&c| c == 0)).then(|| p.leading())
}

struct Tally {
    count: u64,
    witnesses: Option<Vec<Vec<i64>>>,
}

impl Tally {
    fn new(want: bool) -> Self {
        Tally { count: 0, witnesses: want.then(Vec::new) }
    }

    fn hit(&mut self, xs: &[i64]) {
        self.count += 1;
        if let Some(w) = &mut self.witnesses {
            w.push(xs.to_vec());
        }
    }
}

/// Counts solutions of `form = n` in the declared domains.
pub fn brute_force_count(form: &FormSpec, n: i64, want_witnesses: bool) -> RepResult<CountResult> {
    let mut tally = Tally::new(want_witnesses);
    let target = n as i128 - form.constant as i128;
    match &form.combiner {
        Combiner::Mixed(f) => {
            let doms = [form.parts[0].domain, form.parts[1].domain];
            mixed(f, doms, target, &mut tally)?;
        }
        Combiner::Sum if two_equal_cubes(&form.parts).is_some() => {
            cubes(&form.parts, two_equal_cubes(&form.parts).expect("checked"), target, &mut tally)?;
        }
        Combiner::Sum => sum_then(&form.parts, None, target, &mut tally)?,
        Combiner::ProductPair | Combiner::SumThenProductPair => {
            let k = form.sum_len();
            let pair = (&form.parts[k], &form.parts[k + 1]);
            sum_then(&form.parts[..k], Some(pair), target, &mut tally)?;
        }
    }
    Ok(CountResult { n, count: tally.count, witnesses: tally.witnesses })
}

fn two_equal_cubes(parts: &[FormPart]) -> Option<i64> {
    match parts {
        [a, b] => {
            let ca = is_scaled_cube(&a.poly)?;
            (is_scaled_cube(&b.poly)? == ca).then_some(ca)
        }
        _ => None,
    }
}

/// a·x³ + a·y³ = t: since x + y ≠ 0 divides t/a, x² − xy + y² ≤ |t/a|,
/// which bounds |x|, |y| by 2⌈√(|t/a|/3)⌉ + 1.
fn cubes(parts: &[FormPart], a: i64, t: i128, tally: &mut Tally) -> RepResult<()> {
    if t == 0 {
        return Err(RepError::UnboundedEnumeration);
    }
    if t % a as i128 != 0 {
        return Ok(());
    }
    let m = t / a as i128;
    let third = m.unsigned_abs().div_ceil(3);
    let s = third.sqrt() + u128::from(third.sqrt().pow(2) < third);
    let bound = 2 * s as i64 + 1;
    for x in -bound..=bound {
        if !parts[0].domain.contains(x) {
            continue;
        }
        if let Some(y) = exact_root(m - (x as i128).pow(3), 3) {
            let y = y as i64;
            if parts[1].domain.contains(y) {
                tally.hit(&[x, y]);
            }
        }
    }
    Ok(())
}

type PairRef<'a> = (&'a FormPart, &'a FormPart);

/// Σ parts + optional product pair = t.
fn sum_then(parts: &[FormPart], pair: Option<PairRef<'_>>, t: i128, tally: &mut Tally) -> RepResult<()> {
    let mins: Vec<i128> = parts
        .iter()
        .map(|p| lower_bound(&p.poly, p.domain).ok_or(RepError::UnboundedEnumeration))
        .collect::<RepResult<_>>()?;
    let pair_min = match pair {
        None => 0,
        Some(_) if parts.is_empty() => i128::MIN,
        Some((f, g)) => {
            let (mf, mg) = (lower_bound(&f.poly, f.domain), lower_bound(&g.poly, g.domain));
            let nonneg = |p: &FormPart, m: Option<i128>| m.is_some() && min_value(&p.poly, p.domain) >= 0;
            if !(nonneg(f, mf) && nonneg(g, mg)) {
                return Err(RepError::UnboundedEnumeration);
            }
            0
        }
    };
    let total_min: i128 = mins.iter().sum::<i128>() + if pair_min == i128::MIN { 0 } else { pair_min };
    let lists: Vec<Vec<(i128, i64)>> = parts
        .iter()
        .zip(&mins)
        .map(|(p, &m)| solutions_between(&p.poly, p.domain, m, t - (total_min - m)))
        .collect();
    let mut xs = Vec::with_capacity(parts.len() + 2);
    match pair {
        None => {
            if parts.is_empty() {
                return Ok(());
            }
            let last = parts.len() - 1;
            let mut index: HashMap<i128, Vec<i64>> = HashMap::new();
            for &(v, x) in &lists[last] {
                index.entry(v).or_default().push(x);
            }
            walk(&lists[..last], 0, &mut xs, &mut |xs, s| {
                if let Some(ys) = index.get(&(t - s)) {
                    for &y in ys {
                        let mut full = xs.to_vec();
                        full.push(y);
                        tally.hit(&full);
                    }
                }
                Ok(())
            })
        }
        Some((f, g)) => {
            let mut cache: BTreeMap<i128, Vec<(i64, i64)>> = BTreeMap::new();
            walk(&lists, 0, &mut xs, &mut |xs, s| {
                let rest = t - s;
                if !cache.contains_key(&rest) {
                    cache.insert(rest, product_solutions(f, g, rest)?);
                }
                for &(u, v) in &cache[&rest] {
                    let mut full = xs.to_vec();
                    full.extend([u, v]);
                    tally.hit(&full);
                }
                Ok(())
            })
        }
    }
}

fn min_value(p: &IntPoly, d: Domain) -> i128 {
    let r = p.tail_radius().max(1);
    let lo = d.min().unwrap_or(-r).max(-r);
    (lo..=r).map(|x| p.eval(x)).min().unwrap_or(0)
}

/// Depth-first over the value lists, calling `leaf` with the chosen x's and their value sum.
fn walk<F>(lists: &[Vec<(i128, i64)>], s: i128, xs: &mut Vec<i64>, leaf: &mut F) -> RepResult<()>
where
    F: FnMut(&[i64], i128) -> RepResult<()>,
{
    let Some((first, rest)) = lists.split_first() else {
        return leaf(xs, s);
    };
    for &(v, x) in first {
        xs.push(x);
        walk(rest, s + v, xs, leaf)?;
        xs.pop();
    }
    Ok(())
}

/// All (u, v) with f(u)·g(v) = t.
fn product_solutions(f: &FormPart, g: &FormPart, t: i128) -> RepResult<Vec<(i64, i64)>> {
    if f.poly.degree().unwrap_or(0) == 0 || g.poly.degree().unwrap_or(0) == 0 {
        return Err(RepError::UnboundedEnumeration);
    }
    if t == 0 {
        let has_root = |p: &FormPart| !solutions_between(&p.poly, p.domain, 0, 0).is_empty();
        if has_root(f) || has_root(g) {
            return Err(RepError::UnboundedEnumeration);
        }
        return Ok(Vec::new());
    }
    let mut g_index: HashMap<i128, Vec<i64>> = HashMap::new();
    for (v, y) in solutions_between(&g.poly, g.domain, -t.abs(), t.abs()) {
        g_index.entry(v).or_default().push(y);
    }
    let mut out = Vec::new();
    for (fu, u) in solutions_between(&f.poly, f.domain, -t.abs(), t.abs()) {
        if fu == 0 || t % fu != 0 {
            continue;
        }
        if let Some(ys) = g_index.get(&(t / fu)) {
            out.extend(ys.iter().map(|&y| (u, y)));
        }
    }
    Ok(out)
}

/// f(x, y) = t for a general two-variable polynomial over ℕ₁ with
/// nonnegative coefficients: both variables are at most t.
fn mixed(f: &BivarPoly, doms: [Domain; 2], t: i128, tally: &mut Tally) -> RepResult<()> {
    for &(x, y) in &brute_pairs(f, doms, t)? {
        tally.hit(&[x, y]);
    }
    Ok(())
}

fn brute_pairs(f: &BivarPoly, doms: [Domain; 2], t: i128) -> RepResult<Vec<(i64, i64)>> {
    let ok = doms.iter().all(|&d| d == Domain::NaturalsFrom1)
        && f.terms().iter().all(|&(_, _, c)| c >= 0)
        && f.terms().iter().any(|&(i, _, _)| i > 0)
        && f.terms().iter().any(|&(_, j, _)| j > 0);
    if !ok {
        return Err(RepError::UnboundedEnumeration);
    }
    let mut out = Vec::new();
    if t < 1 {
        return Ok(out);
    }
    let t64 = i64::try_from(t).map_err(|_| RepError::UnboundedEnumeration)?;
    for x in 1..=t64 {
        if f.eval(x, 1) > t {
            break;
        }
        for y in 1..=t64 {
            let v = f.eval(x, y);
            if v > t {
                break;
            }
            if v == t {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// #{(x, y) ∈ ℕ₁²: f(x, y) = n} for f with nonnegative coefficients.
pub fn brute_force_bivariate(f: &BivarPoly, n: i64) -> RepResult<u64> {
    Ok(brute_pairs(f, [Domain::NaturalsFrom1; 2], n as i128)?.len() as u64)
}
