//! Factorization and the classical arithmetic functions.
//!
//! Everything here works on `u64` arguments and returns exact values:
//! integers where the function is integral, [`Rational`] otherwise.
//! The generalized ν-th power functions live in [`power`], Jacobi-type
//! symbols in [`symbols`], and memoized sequences plus the character
//! registry in [`seq`].

pub mod power;
pub mod seq;
pub mod symbols;

use crate::rational::{pow_i, rat, Rational};
use num_integer::Integer;
use thiserror::Error;

pub use power::{
    a_nu, a_nu_closed, c_nu, h_a, lambda_nu, moebius_invert, mu_k, mu_kv, mu_nu, mu_star_nu,
    nu_split, power_divisors, x_nu, y_nu, y_nu_closed, NuSplit,
};
pub use symbols::{jacobi_guarded, jacobi_symbol, kronecker_symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    EvenModulus(i64),
    #[error("unknown character id `{0}`")]
    UnknownCharacter(String),
}

/// Prime factorization as sorted `(prime, exponent)` pairs; `1` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, a)| p.pow(a)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, a)| a == 1)
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, a) in &self.pairs {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..a {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Trial division over 2, 3 and the 6k±1 wheel.
pub fn factor(n: u64) -> Factorization {
    assert!(n >= 1, "factor needs n >= 1");
    let mut pairs = Vec::new();
    let mut m = n;
    for p in [2u64, 3] {
        let mut a = 0;
        while m % p == 0 {
            m /= p;
            a += 1;
        }
        if a > 0 {
            pairs.push((p, a));
        }
    }
    let mut p = 5u64;
    while p.saturating_mul(p) <= m {
        for q in [p, p + 2] {
            let mut a = 0;
            while m % q == 0 {
                m /= q;
                a += 1;
            }
            if a > 0 {
                pairs.push((q, a));
            }
        }
        p += 6;
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Factorization { pairs }
}

pub fn divisors(n: u64) -> Vec<u64> {
    factor(n).divisors()
}

pub fn moebius(n: u64) -> i64 {
    let f = factor(n);
    if f.is_squarefree() {
        if f.pairs.len() % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// λ(n) = (-1)^Ω(n).
pub fn liouville(n: u64) -> i64 {
    let omega: u32 = factor(n).pairs.iter().map(|&(_, a)| a).sum();
    if omega % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> u64 {
    factor(n)
        .pairs
        .iter()
        .map(|&(p, a)| (p - 1) * p.pow(a - 1))
        .product()
}

pub fn radical(n: u64) -> u64 {
    factor(n).pairs.iter().map(|&(p, _)| p).product()
}

/// σ_ν(n) = Σ_{d|n} d^ν, exact for negative ν too.
pub fn sigma_nu(n: u64, nu: i32) -> Rational {
    divisors(n)
        .into_iter()
        .map(|d| pow_i(&rat(d as i64), nu as i64))
        .sum()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Exact integer square root of a nonnegative value.
pub fn exact_sqrt(n: i128) -> Option<i128> {
    use num_integer::Roots;
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Exact integer k-th root (negative inputs allowed for odd k).
pub fn exact_root(n: i128, k: u32) -> Option<i128> {
    use num_integer::Roots;
    if n < 0 {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (r.checked_pow(k) == Some(n)).then_some(r)
}

/// `Some(m)` when n = m^k with m ≥ 1.
pub fn perfect_power_root(n: u64, k: u32) -> Option<u64> {
    exact_root(n as i128, k).map(|r| r as u64)
}
