//! Exact convolution kernels.
//!
//! Rational inputs are scaled to integers by the lcm of their denominators
//! when that lcm is small; small integers then run in `i128`, larger ones in
//! `BigInt`. Only genuinely large denominators fall back to rational sums.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SCALED_DENOM_BITS: u64 = 512;

/// Sum of products that keeps integer terms out of rational arithmetic.
#[derive(Default)]
pub(crate) struct DotAcc {
    int: BigInt,
    frac: Option<Rational>,
}

impl DotAcc {
    pub(crate) fn add_prod(&mut self, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.denom().is_one() && b.denom().is_one() {
            self.int += a.numer() * b.numer();
        } else {
            let p = a * b;
            match &mut self.frac {
                Some(r) => *r += p,
                None => self.frac = Some(p),
            }
        }
    }

    pub(crate) fn finish(self) -> Rational {
        let int = Rational::from_integer(self.int);
        match self.frac {
            Some(r) => r + int,
            None => int,
        }
    }
}

fn denom_lcm(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, r| if r.denom().is_one() { acc } else { acc.lcm(r.denom()) })
}

fn scaled(v: &[Rational], l: &BigInt) -> Vec<BigInt> {
    v.iter()
        .map(|r| if r.denom().is_one() { r.numer() * l } else { r.numer() * (l / r.denom()) })
        .collect()
}

fn nonzero<T: Zero>(v: &[T]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

/// `out[k] = Σ_{i+j=k} a[i]·b[j]` for `k < n_out`.
pub(crate) fn convolve(a: &[Rational], b: &[Rational], n_out: usize) -> Vec<Rational> {
    let (la, lb) = (denom_lcm(a), denom_lcm(b));
    if la.bits() + lb.bits() <= SCALED_DENOM_BITS {
        let (ia, ib) = (scaled(a, &la), scaled(b, &lb));
        let den = la * lb;
        let ints = convolve_int(&ia, &ib, n_out);
        return ints.into_iter().map(|n| Rational::new(n, den.clone())).collect();
    }
    let (nza, nzb) = (nonzero(a), nonzero(b));
    let mut acc: Vec<DotAcc> = (0..n_out).map(|_| DotAcc::default()).collect();
    for &i in &nza {
        for &j in &nzb {
            if i + j >= n_out {
                break;
            }
            acc[i + j].add_prod(&a[i], &b[j]);
        }
    }
    acc.into_iter().map(DotAcc::finish).collect()
}

fn convolve_int(a: &[BigInt], b: &[BigInt], n_out: usize) -> Vec<BigInt> {
    let (nza, nzb) = (nonzero(a), nonzero(b));
    let max_bits = |v: &[BigInt], idx: &[usize]| idx.iter().map(|&i| v[i].bits()).max().unwrap_or(0);
    let terms = nza.len().min(nzb.len()).max(1) as u64;
    let headroom = 64 - terms.leading_zeros() as u64;
    if max_bits(a, &nza) + max_bits(b, &nzb) + headroom < 126 {
        let small = |v: &[BigInt]| -> Vec<i128> { v.iter().map(|x| x.to_i128().expect("fits")).collect() };
        let (sa, sb) = (small(a), small(b));
        let mut out = vec![0i128; n_out];
        for &i in &nza {
            for &j in &nzb {
                if i + j >= n_out {
                    break;
                }
                out[i + j] += sa[i] * sb[j];
            }
        }
        return out.into_iter().map(BigInt::from).collect();
    }
    let mut out = vec![BigInt::zero(); n_out];
    for &i in &nza {
        for &j in &nzb {
            if i + j >= n_out {
                break;
            }
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}
