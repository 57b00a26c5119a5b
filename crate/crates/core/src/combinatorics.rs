//! Binomial and multinomial coefficients, exact over arbitrary precision.
//!
//! The out-of-range convention `C(n, k) = 0` for `k > n` is load-bearing: the
//! identity sums written "to infinity" terminate precisely because their
//! binomial factors vanish.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

pub(crate) fn binomial_int(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // Exact at every step: acc * (n-k+i) is divisible by i.
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

/// Multinomial coefficient `n! / (parts[0]! * ... * parts[m]!)`.
///
/// # Panics
///
/// Panics unless the parts sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Rational {
    let total: usize = parts.iter().sum();
    assert_eq!(
        total, n,
        "multinomial parts must sum to n (got {total}, expected {n})"
    );
    let mut acc = BigInt::one();
    let mut remaining = n;
    for &part in parts {
        acc *= binomial_int(remaining, part);
        remaining -= part;
    }
    Rational::from_integer(acc)
}
