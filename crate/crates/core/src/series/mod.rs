//! Truncated Laurent series in q with exact rational coefficients.
//!
//! A [`LaurentSeries`] knows its coefficients on the window
//! `offset <= e < prec`. Series built by this crate are also *exact below*
//! their offset: every lower coefficient is known to be zero. Only
//! [`LaurentSeries::forget_below`] produces a series without that guarantee,
//! and such a series cannot take part in a product.
//!
//! Binary operations return the largest window both operands justify;
//! [`compare`] reports the window it actually inspected.

mod builders;
mod conv;
mod display;
mod functions;

pub use builders::{inflate, lambert, poly_theta, product_expand, theta_series};
pub use functions::{exp_series, log_series, pow_rational, q_integrate, sqrt_t};

use crate::rational::Rational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("exponent {e} is outside the known window [{lo}, {hi})")]
    OutOfWindow { e: i64, lo: i64, hi: i64 },
    #[error("the result window is empty")]
    EmptyWindow,
    #[error("exp needs a zero constant term and no negative exponents")]
    NonzeroConstantTerm,
    #[error("the constant term must be 1 with no negative exponents")]
    ConstantTermNotOne,
    #[error("the square-root transform needs constant term 1 and no negative exponents")]
    BadConstantTerm,
    #[error("q-integration needs every exponent to be positive")]
    NonpositiveExponentPresent,
    #[error("theta exponents a*n^2 + b*n are not all integers")]
    NonIntegralExponent,
    #[error("theta needs a > 0")]
    NonpositiveA,
    #[error("the exponent polynomial is unbounded below on its domain")]
    UnboundedBelow,
}

pub type SeriesResult<T> = Result<T, SeriesError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    offset: i64,
    prec: i64,
    coeffs: Vec<Rational>,
    exact_below: bool,
}

impl LaurentSeries {
    /// Dense coefficients starting at `offset`; `prec = offset + len`.
    pub fn from_coeffs(offset: i64, coeffs: Vec<Rational>) -> SeriesResult<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyWindow);
        }
        let prec = offset + coeffs.len() as i64;
        Ok(LaurentSeries { offset, prec, coeffs, exact_below: true })
    }

    pub fn from_fn(offset: i64, prec: i64, mut f: impl FnMut(i64) -> Rational) -> SeriesResult<Self> {
        if prec <= offset {
            return Err(SeriesError::EmptyWindow);
        }
        Self::from_coeffs(offset, (offset..prec).map(&mut f).collect())
    }

    /// Sparse terms on `[offset, prec)`; terms at or beyond `prec` are dropped.
    pub fn from_terms<I>(offset: i64, prec: i64, terms: I) -> SeriesResult<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        if prec <= offset {
            return Err(SeriesError::EmptyWindow);
        }
        let mut coeffs = vec![Rational::zero(); (prec - offset) as usize];
        for (e, c) in terms {
            if e >= prec {
                continue;
            }
            if e < offset {
                return Err(SeriesError::OutOfWindow { e, lo: offset, hi: prec });
            }
            coeffs[(e - offset) as usize] += c;
        }
        Ok(LaurentSeries { offset, prec, coeffs, exact_below: true })
    }

    pub fn zero(prec: i64) -> Self {
        let offset = prec.min(1) - 1;
        Self::from_terms(offset, prec, []).expect("nonempty window")
    }

    /// The constant 1, known up to `prec` (needs `prec >= 1`).
    pub fn one(prec: i64) -> SeriesResult<Self> {
        Self::monomial(Rational::one(), 0, prec)
    }

    /// c·q^e truncated at `prec`.
    pub fn monomial(c: Rational, e: i64, prec: i64) -> SeriesResult<Self> {
        let offset = e.min(prec - 1);
        Self::from_terms(offset, prec, [(e, c)])
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_exact_below(&self) -> bool {
        self.exact_below
    }

    /// Lowest exponent whose coefficient is known.
    pub fn known_low(&self) -> Option<i64> {
        (!self.exact_below).then_some(self.offset)
    }

    pub fn coeff(&self, e: i64) -> SeriesResult<Rational> {
        if e >= self.prec || (e < self.offset && !self.exact_below) {
            let lo = if self.exact_below { i64::MIN } else { self.offset };
            return Err(SeriesError::OutOfWindow { e, lo, hi: self.prec });
        }
        if e < self.offset {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(e - self.offset) as usize].clone())
    }

    fn coeff_or_zero(&self, e: i64) -> &Rational {
        static ZERO: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();
        if e < self.offset || e >= self.prec {
            return ZERO.get_or_init(Rational::zero);
        }
        &self.coeffs[(e - self.offset) as usize]
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e)
    }

    /// Keeps the window below `prec` (never extends it).
    pub fn truncate(&self, prec: i64) -> SeriesResult<Self> {
        let prec = prec.min(self.prec);
        if prec <= self.offset {
            return Err(SeriesError::EmptyWindow);
        }
        let mut out = self.clone();
        out.coeffs.truncate((prec - self.offset) as usize);
        out.prec = prec;
        Ok(out)
    }

    /// Drops everything below `lo` and stops claiming those coefficients are zero.
    pub fn forget_below(&self, lo: i64) -> SeriesResult<Self> {
        if lo >= self.prec {
            return Err(SeriesError::EmptyWindow);
        }
        let coeffs = (lo..self.prec).map(|e| self.coeff_or_zero(e).clone()).collect();
        Ok(LaurentSeries { offset: lo, prec: self.prec, coeffs, exact_below: false })
    }

    /// Re-bases the dense storage at `lo` without changing the series.
    pub fn reoffset(&self, lo: i64) -> SeriesResult<Self> {
        if lo >= self.prec {
            return Err(SeriesError::EmptyWindow);
        }
        if lo > self.offset && self.coeffs[..(lo - self.offset) as usize].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::OutOfWindow { e: lo, lo: self.offset, hi: self.prec });
        }
        if lo < self.offset && !self.exact_below {
            return Err(SeriesError::OutOfWindow { e: lo, lo: self.offset, hi: self.prec });
        }
        let coeffs = (lo..self.prec).map(|e| self.coeff_or_zero(e).clone()).collect();
        Ok(LaurentSeries { offset: lo, prec: self.prec, coeffs, exact_below: self.exact_below })
    }

    /// Same series with the coefficient of q^e replaced.
    pub fn with_coeff(&self, e: i64, value: Rational) -> SeriesResult<Self> {
        self.coeff(e)?;
        let mut out = if e < self.offset { self.reoffset(e)? } else { self.clone() };
        let idx = (e - out.offset) as usize;
        out.coeffs[idx] = value;
        Ok(out)
    }

    fn sum_window(&self, other: &Self) -> SeriesResult<(i64, i64)> {
        let lo = match (self.known_low(), other.known_low()) {
            (None, None) => self.offset.min(other.offset),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.max(b),
        };
        let hi = self.prec.min(other.prec);
        if lo >= hi {
            return Err(SeriesError::EmptyWindow);
        }
        Ok((lo, hi))
    }

    pub fn add(&self, other: &Self) -> SeriesResult<Self> {
        let (lo, hi) = self.sum_window(other)?;
        let coeffs = (lo..hi).map(|e| self.coeff_or_zero(e) + other.coeff_or_zero(e)).collect();
        Ok(LaurentSeries { offset: lo, prec: hi, coeffs, exact_below: self.exact_below && other.exact_below })
    }

    pub fn sub(&self, other: &Self) -> SeriesResult<Self> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -std::mem::take(c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x *= c;
        }
        out
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.offset += k;
        out.prec += k;
        out
    }

    /// Cauchy product on `offset₁+offset₂ <= e < min(prec₁+offset₂, prec₂+offset₁)`.
    pub fn mul(&self, other: &Self) -> SeriesResult<Self> {
        if !self.exact_below || !other.exact_below {
            return Err(SeriesError::EmptyWindow);
        }
        let lo = self.offset + other.offset;
        let hi = (self.prec + other.offset).min(other.prec + self.offset);
        if lo >= hi {
            return Err(SeriesError::EmptyWindow);
        }
        let coeffs = conv::convolve(&self.coeffs, &other.coeffs, (hi - lo) as usize);
        Ok(LaurentSeries { offset: lo, prec: hi, coeffs, exact_below: true })
    }

    /// Product of many series, left to right.
    pub fn product<'a, I>(factors: I) -> SeriesResult<Self>
    where
        I: IntoIterator<Item = &'a LaurentSeries>,
    {
        let mut it = factors.into_iter();
        let first = it.next().ok_or(SeriesError::EmptyWindow)?.clone();
        it.try_fold(first, |acc, s| acc.mul(s))
    }
}

/// Window and first mismatch of an exact comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub lo: i64,
    pub hi: i64,
    pub first_diff: Option<(i64, Rational, Rational)>,
}

/// Compares two series on the intersection of their known windows.
pub fn compare(a: &LaurentSeries, b: &LaurentSeries) -> SeriesResult<Comparison> {
    let (lo, hi) = a.sum_window(b)?;
    let first_diff = (lo..hi).find_map(|e| {
        let (x, y) = (a.coeff_or_zero(e), b.coeff_or_zero(e));
        (x != y).then(|| (e, x.clone(), y.clone()))
    });
    Ok(Comparison { lo, hi, first_diff })
}
