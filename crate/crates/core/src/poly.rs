//! Integer polynomials in one and two variables.
//!
//! Evaluation saturates to `i128::MIN`/`i128::MAX` instead of wrapping, so
//! bound checks stay correct far outside the enumeration box.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// `coeffs[i]` is the coefficient of x^i; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn monomial(c: i64, k: u32) -> Self {
        let mut v = vec![0; k as usize + 1];
        v[k as usize] = c;
        Self::new(v)
    }

    /// Sum of `(degree, coefficient)` terms; repeated degrees add up.
    pub fn from_terms(terms: &[(u32, i64)]) -> Self {
        let top = terms.iter().map(|&(k, _)| k as usize).max().unwrap_or(0);
        let mut v = vec![0; top + 1];
        for &(k, c) in terms {
            v[k as usize] += c;
        }
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        (!self.coeffs.is_empty()).then(|| (self.coeffs.len() - 1) as u32)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn constant(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn without_constant(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        if let Some(c) = v.first_mut() {
            *c = 0;
        }
        Self::new(v)
    }

    pub fn eval_big(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * &x + BigInt::from(c))
    }

    pub fn eval(&self, x: i64) -> i128 {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            match acc.checked_mul(x as i128).and_then(|v| v.checked_add(c as i128)) {
                Some(v) => acc = v,
                None => {
                    let v = self.eval_big(x);
                    return v.to_i128().unwrap_or(if v.is_negative() { i128::MIN } else { i128::MAX });
                }
            }
        }
        acc
    }

    /// R such that |P(x)| ≥ |lead|·|x|^deg / 2 whenever |x| ≥ R.
    pub fn tail_radius(&self) -> i64 {
        let Some(deg) = self.degree() else { return 0 };
        let lead = self.leading().unsigned_abs() as u128;
        let lower: u128 = self.coeffs[..deg as usize].iter().map(|c| c.unsigned_abs() as u128).sum();
        (1 + (2 * lower).div_ceil(lead)) as i64
    }

    /// Every x with |P(x)| ≤ limit has |x| ≤ the returned radius.
    /// `None` for constant polynomials.
    pub fn search_radius(&self, limit: u128) -> Option<i64> {
        use num_integer::Roots;
        let deg = self.degree().filter(|&d| d >= 1)?;
        let lead = self.leading().unsigned_abs() as u128;
        let root = (2 * limit / lead).nth_root(deg) as i64 + 1;
        Some(root.max(self.tail_radius()))
    }

    /// Integer roots, ascending.
    pub fn integer_roots(&self) -> Vec<i64> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let r = self.tail_radius();
        (-r..=r).filter(|&x| self.eval(x) == 0).collect()
    }

    pub fn fmt_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => var.to_string(),
                (1, m) => format!("{m}*{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, m) => format!("{m}*{var}^{k}"),
            };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("x"))
    }
}

/// Σ c·x^i·y^j with like terms combined.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: Vec<(u32, u32, i64)>,
}

impl BivarPoly {
    pub fn new(terms: &[(u32, u32, i64)]) -> Self {
        let mut acc: std::collections::BTreeMap<(u32, u32), i64> = Default::default();
        for &(i, j, c) in terms {
            *acc.entry((i, j)).or_default() += c;
        }
        BivarPoly {
            terms: acc.into_iter().filter(|&(_, c)| c != 0).map(|((i, j), c)| (i, j, c)).collect(),
        }
    }

    pub fn terms(&self) -> &[(u32, u32, i64)] {
        &self.terms
    }

    /// True when f(x,0) and f(0,y) vanish identically.
    pub fn vanishes_on_axes(&self) -> bool {
        self.terms.iter().all(|&(i, j, _)| i >= 1 && j >= 1)
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let mut acc: i128 = 0;
        for &(i, j, c) in &self.terms {
            let term = (x as i128)
                .checked_pow(i)
                .and_then(|a| (y as i128).checked_pow(j).and_then(|b| a.checked_mul(b)))
                .and_then(|v| v.checked_mul(c as i128));
            match term.and_then(|t| acc.checked_add(t)) {
                Some(v) => acc = v,
                None => return if c > 0 { i128::MAX } else { i128::MIN },
            }
        }
        acc
    }

    /// Parses sums of monomials such as `x^2*y + 3*x*y^2 - x*y`.
    pub fn parse(src: &str) -> Option<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (mono, tail) = rest.split_at(end);
            terms.push(parse_monomial(mono, sign)?);
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -1 } else { 1 };
            rest = &tail[1..];
        }
        Some(Self::new(&terms))
    }
}

fn parse_monomial(m: &str, sign: i64) -> Option<(u32, u32, i64)> {
    let (mut i, mut j, mut c) = (0u32, 0u32, sign);
    for factor in m.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().ok()?),
            None => (factor, 1),
        };
        match base {
            "x" => i += exp,
            "y" => j += exp,
            num => c = c.checked_mul(num.parse::<i64>().ok()?.checked_pow(exp)?)?,
        }
    }
    Some((i, j, c))
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, &(i, j, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            if c.unsigned_abs() != 1 || (i == 0 && j == 0) {
                factors.push(c.unsigned_abs().to_string());
            }
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    e => factors.push(format!("{v}^{e}")),
                }
            }
            let body = factors.join("*");
            match (idx, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Where a form variable ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    NaturalsFrom1,
    NaturalsFrom0,
    AllIntegers,
}

impl Domain {
    /// Accepts `Z`, `N1`/`N` and `N0`.
    pub fn parse(s: &str) -> Option<Domain> {
        match s.trim() {
            "Z" => Some(Domain::AllIntegers),
            "N1" | "N" => Some(Domain::NaturalsFrom1),
            "N0" => Some(Domain::NaturalsFrom0),
            _ => None,
        }
    }

    pub fn min(self) -> Option<i64> {
        match self {
            Domain::NaturalsFrom1 => Some(1),
            Domain::NaturalsFrom0 => Some(0),
            Domain::AllIntegers => None,
        }
    }

    pub fn contains(self, x: i64) -> bool {
        self.min().map_or(true, |m| x >= m)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::NaturalsFrom1 => "N1",
            Domain::NaturalsFrom0 => "N0",
            Domain::AllIntegers => "Z",
        })
    }
}
