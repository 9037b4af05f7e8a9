//! exp, log, rational powers, the square-root transform and q-integration.
//!
//! All four power-series maps use the derivative recursions, O(N²) exact
//! operations for N coefficients.

use super::conv::DotAcc;
use super::{LaurentSeries, SeriesError, SeriesResult};
use crate::rational::{rat, Rational};
use num_traits::{One, Zero};

/// Coefficients of q^0..q^(prec-1), failing with `err` if anything below q^0
/// is nonzero or unknown.
fn power_part(s: &LaurentSeries, err: SeriesError) -> SeriesResult<Vec<Rational>> {
    if s.prec() < 1 || !s.is_exact_below() && s.offset() > 0 {
        return Err(SeriesError::EmptyWindow);
    }
    if s.terms().any(|(e, _)| e < 0) {
        return Err(err);
    }
    Ok((0..s.prec()).map(|e| s.coeff_or_zero(e).clone()).collect())
}

/// b with b₀ = 1 and n·b_n = Σ_{k=1}^{n} c_k b_{n-k}.
pub(crate) fn exp_weighted(c: &[Rational]) -> Vec<Rational> {
    let nz: Vec<usize> = (1..c.len()).filter(|&k| !c[k].is_zero()).collect();
    let mut b = Vec::with_capacity(c.len());
    b.push(Rational::one());
    for n in 1..c.len() {
        let mut acc = DotAcc::default();
        for &k in nz.iter().take_while(|&&k| k <= n) {
            acc.add_prod(&c[k], &b[n - k]);
        }
        b.push(acc.finish() / rat(n as i64));
    }
    b
}

pub fn exp_series(s: &LaurentSeries) -> SeriesResult<LaurentSeries> {
    let a = power_part(s, SeriesError::NonzeroConstantTerm)?;
    if !a[0].is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let c: Vec<Rational> = a.iter().enumerate().map(|(k, x)| x * rat(k as i64)).collect();
    LaurentSeries::from_coeffs(0, exp_weighted(&c))
}

fn unit_part(s: &LaurentSeries, err: SeriesError) -> SeriesResult<Vec<Rational>> {
    let a = power_part(s, err.clone())?;
    if !a[0].is_one() {
        return Err(err);
    }
    Ok(a)
}

pub fn log_series(s: &LaurentSeries) -> SeriesResult<LaurentSeries> {
    let a = unit_part(s, SeriesError::ConstantTermNotOne)?;
    let nz: Vec<usize> = (1..a.len()).filter(|&k| !a[k].is_zero()).collect();
    // c_n = n·L_n
    let mut c = vec![Rational::zero(); a.len()];
    for n in 1..a.len() {
        let mut acc = DotAcc::default();
        for &j in nz.iter().take_while(|&&j| j < n) {
            acc.add_prod(&c[n - j], &a[j]);
        }
        c[n] = &a[n] * rat(n as i64) - acc.finish();
    }
    let out = c
        .into_iter()
        .enumerate()
        .map(|(n, x)| if n == 0 { x } else { x / rat(n as i64) })
        .collect();
    LaurentSeries::from_coeffs(0, out)
}

/// s^r for a unit series s, via n·b_n = Σ_{k=1}^n ((r+1)k − n) a_k b_{n−k}.
pub fn pow_rational(s: &LaurentSeries, r: &Rational) -> SeriesResult<LaurentSeries> {
    let a = unit_part(s, SeriesError::ConstantTermNotOne)?;
    let nz: Vec<usize> = (1..a.len()).filter(|&k| !a[k].is_zero()).collect();
    let r1 = r + Rational::one();
    let mut b = Vec::with_capacity(a.len());
    b.push(Rational::one());
    for n in 1..a.len() {
        let mut acc = DotAcc::default();
        for &k in nz.iter().take_while(|&&k| k <= n) {
            let w = &r1 * rat(k as i64) - rat(n as i64);
            acc.add_prod(&(w * &a[k]), &b[n - k]);
        }
        b.push(acc.finish() / rat(n as i64));
    }
    LaurentSeries::from_coeffs(0, b)
}

/// The coefficient transform T: b₀ = 1, b_n = (a_n − Σ_{m=1}^{n−1} b_m b_{n−m}) / 2.
pub fn sqrt_t(s: &LaurentSeries) -> SeriesResult<LaurentSeries> {
    let a = unit_part(s, SeriesError::BadConstantTerm)?;
    let half = Rational::new(1.into(), 2.into());
    let mut b: Vec<Rational> = Vec::with_capacity(a.len());
    b.push(Rational::one());
    for n in 1..a.len() {
        let mut acc = DotAcc::default();
        for m in 1..n {
            acc.add_prod(&b[m], &b[n - m]);
        }
        b.push((&a[n] - acc.finish()) * &half);
    }
    LaurentSeries::from_coeffs(0, b)
}

/// a_n q^n ↦ (a_n / n) q^n.
pub fn q_integrate(s: &LaurentSeries) -> SeriesResult<LaurentSeries> {
    if !s.is_exact_below() && s.offset() < 1 {
        return Err(SeriesError::NonpositiveExponentPresent);
    }
    if s.terms().any(|(e, _)| e <= 0) {
        return Err(SeriesError::NonpositiveExponentPresent);
    }
    let lo = s.offset().max(1).min(s.prec() - 1);
    let mut out = LaurentSeries::from_fn(lo, s.prec(), |e| {
        if e >= 1 {
            s.coeff_or_zero(e) / rat(e)
        } else {
            Rational::zero()
        }
    })?;
    out.exact_below = s.is_exact_below();
    Ok(out)
}
