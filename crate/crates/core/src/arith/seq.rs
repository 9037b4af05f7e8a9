//! Memoized arithmetic sequences and the character registry.
//!
//! An [`ArithSeq`] wraps a pure rule `n -> Rational`. Values for
//! `1 <= n <= CACHE_LIMIT` are memoized behind a lock so clones can be
//! shared across threads; other arguments are computed on demand.
//!
//! Characters are looked up by id with [`character`]:
//!
//! | id | value at n |
//! |----|------------|
//! | `one` | 1 |
//! | `const:<r>` | the rational r |
//! | `mu`, `abs_mu` | μ(\|n\|), \|μ(\|n\|)\| |
//! | `liouville` | λ(\|n\|) |
//! | `id` | n |
//! | `alt` | (-1)^n |
//! | `jacobi:<k>` | (n\|k) |
//! | `class:<r>:<m>` | 1 if n ≡ r mod m |
//! | `square` | 1 if n is a perfect square |
//! | `lambda:<ν>`, `mu_nu:<ν>`, `mu_star:<ν>` | λ_ν, μ_ν, μ*_ν at \|n\| |
//!
//! Every character is 0 at n = 0 except `one`, `const`, `alt` and `class`.

use super::{jacobi_symbol, liouville, moebius, power, ArithError};
use crate::rational::{parse_rational, rat, Rational};
use num_traits::Zero;
use std::fmt;
use std::sync::{Arc, RwLock};

const CACHE_LIMIT: i64 = 1 << 20;

type Rule = dyn Fn(i64) -> Rational + Send + Sync;

#[derive(Clone)]
pub struct ArithSeq {
    id: Arc<str>,
    rule: Arc<Rule>,
    cache: Arc<RwLock<Vec<Option<Rational>>>>,
}

impl fmt::Debug for ArithSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArithSeq").field("id", &self.id).finish()
    }
}

impl ArithSeq {
    pub fn new(id: impl Into<String>, rule: impl Fn(i64) -> Rational + Send + Sync + 'static) -> Self {
        ArithSeq {
            id: Arc::from(id.into()),
            rule: Arc::new(rule),
            cache: Arc::new(RwLock::new(Vec::new())),
        }
    }

    pub fn from_int(id: impl Into<String>, rule: impl Fn(i64) -> i64 + Send + Sync + 'static) -> Self {
        Self::new(id, move |n| rat(rule(n)))
    }

    pub fn constant(c: Rational) -> Self {
        let id = format!("const:{}", crate::rational::fmt_rational(&c));
        Self::new(id, move |_| c.clone())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn at(&self, n: i64) -> Rational {
        if !(1..=CACHE_LIMIT).contains(&n) {
            return (self.rule)(n);
        }
        let idx = (n - 1) as usize;
        if let Some(Some(v)) = self.cache.read().expect("cache lock").get(idx) {
            return v.clone();
        }
        let v = (self.rule)(n);
        let mut cache = self.cache.write().expect("cache lock");
        if cache.len() <= idx {
            cache.resize(idx + 1, None);
        }
        cache[idx].get_or_insert_with(|| v.clone());
        v
    }

    /// Same sequence with one value replaced.
    pub fn with_override(&self, n: i64, value: Rational) -> ArithSeq {
        let base = self.clone();
        let id = format!("{}[{}:={}]", self.id, n, crate::rational::fmt_rational(&value));
        ArithSeq::new(id, move |m| if m == n { value.clone() } else { base.at(m) })
    }

    /// Pointwise product with another sequence.
    pub fn times(&self, other: &ArithSeq) -> ArithSeq {
        let (a, b) = (self.clone(), other.clone());
        ArithSeq::new(format!("{}*{}", a.id(), b.id()), move |n| a.at(n) * b.at(n))
    }

    pub fn scaled(&self, c: Rational) -> ArithSeq {
        let a = self.clone();
        ArithSeq::new(format!("{}*{}", crate::rational::fmt_rational(&c), a.id()), move |n| {
            a.at(n) * &c
        })
    }
}

fn abs_u(n: i64) -> u64 {
    n.unsigned_abs()
}

fn parse_nu(s: &str, id: &str) -> Result<u32, ArithError> {
    s.parse::<u32>()
        .ok()
        .filter(|&v| v >= 2)
        .ok_or_else(|| ArithError::UnknownCharacter(id.to_string()))
}

/// Ids accepted by [`character`], with a parameter placeholder where needed.
pub const CHARACTER_IDS: &[&str] = &[
    "one", "const:<r>", "mu", "abs_mu", "liouville", "id", "alt", "jacobi:<k>", "class:<r>:<m>",
    "square", "lambda:<nu>", "mu_nu:<nu>", "mu_star:<nu>",
];

pub fn character(id: &str) -> Result<ArithSeq, ArithError> {
    let unknown = || ArithError::UnknownCharacter(id.to_string());
    let parts: Vec<&str> = id.split(':').collect();
    let seq = match parts.as_slice() {
        ["one"] | ["1"] => ArithSeq::from_int("one", |_| 1),
        ["const", r] => {
            let c = parse_rational(r).ok_or_else(unknown)?;
            ArithSeq::new(id, move |_| c.clone())
        }
        ["mu"] => ArithSeq::from_int("mu", |n| if n == 0 { 0 } else { moebius(abs_u(n)) }),
        ["abs_mu"] => ArithSeq::from_int("abs_mu", |n| if n == 0 { 0 } else { moebius(abs_u(n)).abs() }),
        ["liouville"] => ArithSeq::from_int("liouville", |n| if n == 0 { 0 } else { liouville(abs_u(n)) }),
        ["id"] => ArithSeq::from_int("id", |n| n),
        ["alt"] => ArithSeq::from_int("alt", crate::rational::neg_one_pow),
        ["jacobi", k] => {
            let k: i64 = k.parse().map_err(|_| unknown())?;
            jacobi_symbol(1, k)?;
            ArithSeq::from_int(id, move |n| jacobi_symbol(n, k).expect("validated modulus") as i64)
        }
        ["class", r, m] => {
            let r: i64 = r.parse().map_err(|_| unknown())?;
            let m: i64 = m.parse().map_err(|_| unknown())?;
            if m < 1 {
                return Err(unknown());
            }
            ArithSeq::from_int(id, move |n| i64::from((n - r).rem_euclid(m) == 0))
        }
        ["square"] => ArithSeq::from_int("square", |n| {
            if n < 1 {
                0
            } else {
                power::x_nu(n as u64, 2) as i64
            }
        }),
        ["lambda", nu] => {
            let nu = parse_nu(nu, id)?;
            ArithSeq::from_int(id, move |n| if n == 0 { 0 } else { power::lambda_nu(abs_u(n), nu) })
        }
        ["mu_nu", nu] => {
            let nu = parse_nu(nu, id)?;
            ArithSeq::from_int(id, move |n| if n == 0 { 0 } else { power::mu_nu(abs_u(n), nu) })
        }
        ["mu_star", nu] => {
            let nu = parse_nu(nu, id)?;
            ArithSeq::from_int(id, move |n| if n == 0 { 0 } else { power::mu_star_nu(abs_u(n), nu) })
        }
        _ => return Err(unknown()),
    };
    Ok(seq)
}

/// Zero sequence, handy as a neutral element.
pub fn zero_seq() -> ArithSeq {
    ArithSeq::new("zero", |_| Rational::zero())
}
