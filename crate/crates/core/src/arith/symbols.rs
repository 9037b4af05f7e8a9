//! Jacobi and Kronecker symbols.

use super::ArithError;
use crate::rational::Rational;

/// Classical Jacobi symbol (n|k) for odd positive k.
pub fn jacobi_symbol(n: i64, k: i64) -> Result<i32, ArithError> {
    if k <= 0 || k % 2 == 0 {
        return Err(ArithError::EvenModulus(k));
    }
    let mut a = n.rem_euclid(k);
    let mut m = k;
    let mut t = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = m % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            t = -t;
        }
        a %= m;
    }
    Ok(if m == 1 { t } else { 0 })
}

/// (x|k) extended to rational x: zero whenever x is not an integer.
pub fn jacobi_guarded(x: &Rational, k: i64) -> Result<i32, ArithError> {
    if !x.is_integer() {
        if k <= 0 || k % 2 == 0 {
            return Err(ArithError::EvenModulus(k));
        }
        return Ok(0);
    }
    let n = x.to_integer();
    let k_big = num_bigint::BigInt::from(k);
    let reduced: i64 = num_integer::Integer::mod_floor(&n, &k_big)
        .try_into()
        .expect("residue fits in i64");
    jacobi_symbol(reduced, k)
}

/// Kronecker symbol (a|n) for any integer n.
pub fn kronecker_symbol(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1i32;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            let r = a.rem_euclid(8);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
    }
    if n == 1 {
        return result;
    }
    result * jacobi_symbol(a, n).expect("odd positive modulus")
}
