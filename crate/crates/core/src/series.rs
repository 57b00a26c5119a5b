//! Truncated formal power series over the rationals.
//!
//! A `TruncatedSeries` holds the coefficients `a_0 .. a_N` of a formal power
//! series in `t`, truncated at order `N` inclusive; the coefficient vector
//! always has length exactly `N + 1`. Arithmetic is exact up to and including
//! `t^N`, which is all the generating-function definitions here ever need:
//! the callers pick `N` equal to the highest coefficient they will read, and
//! exact arithmetic needs no guard terms.
//!
//! Convolution is the naive `O(N^2)` product; orders stay small enough at
//! desk scale that nothing fancier pays for itself.

use std::fmt;

use crate::combinatorics::factorial;
use crate::rational::Rational;

/// Coefficients `a_0 .. a_N` of a series truncated at order `N` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

/// Error from inverting a series whose constant term is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotInvertible;

impl fmt::Display for NotInvertible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("series is not invertible: constant term is zero")
    }
}

impl std::error::Error for NotInvertible {}

impl TruncatedSeries {
    /// Wraps explicit coefficients; the truncation order is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// Panics on an empty vector (every series carries at least `a_0`).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs a_0");
        TruncatedSeries { coeffs }
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = value;
        TruncatedSeries { coeffs }
    }

    /// The multiplicative identity `1 + 0t + ... + 0t^N`.
    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `e^t` truncated: coefficient `k` is `1/k!`.
    pub fn exp(order: usize) -> Self {
        Self::scaled_exp(&Rational::one(), order)
    }

    /// `e^{xt}` truncated: coefficient `k` is `x^k / k!`.
    pub fn scaled_exp(x: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Rational::one());
        for k in 1..=order {
            let prev = &coeffs[k - 1];
            coeffs.push(prev * x / Rational::from_integer(k as i64));
        }
        TruncatedSeries { coeffs }
    }

    /// Truncation order `N` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Cauchy product, exact through `t^N`.
    ///
    /// # Panics
    ///
    /// Panics when the truncation orders differ.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series truncation orders must match"
        );
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse through `t^N`, by the standard recurrence
    /// `b_0 = 1/a_0`, `b_k = -(1/a_0) * sum_{i=1..k} a_i b_{k-i}`.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, NotInvertible> {
        if self.coeffs[0].is_zero() {
            return Err(NotInvertible);
        }
        let inv_a0 = self.coeffs[0].recip();
        let mut b = Vec::with_capacity(self.coeffs.len());
        b.push(inv_a0.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(-(acc * &inv_a0));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `r`-fold product; `r = 0` gives the identity series.
    pub fn pow(&self, r: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order());
        for _ in 0..r {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reads `n! * a_n`, the `n`-th coefficient in the exponential
    /// (divided-by-`n!`) convention.
    ///
    /// # Panics
    ///
    /// Panics when `n` exceeds the truncation order.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        assert!(
            n <= self.order(),
            "coefficient {n} is beyond truncation order {}",
            self.order()
        );
        Rational::from_integer(factorial(n)) * &self.coeffs[n]
    }
}
