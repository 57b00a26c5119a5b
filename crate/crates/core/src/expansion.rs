//! Expansion of polynomials in the order-`r` Euler basis.
//!
//! `{E_0^{(r)}(x), ..., E_n^{(r)}(x)}` is a basis of the degree-`<= n`
//! polynomials because each member is monic of its degree. For
//! `p(x) = sum_k b_k E_k^{(r)}(x)` the coefficients come out of
//!
//! ```text
//! b_k = 1/(2^r k!) * sum_{j=0}^{r} C(r,j) (D^k p)(j)
//! ```
//!
//! computed here literally by repeated differentiation and Horner evaluation
//! at the integer nodes `j = 0..r` ([`expand_theorem1`]). A second,
//! independent route reads the same coefficients off the monomial form of the
//! `r`-fold sum-shift, `delta_tilde^r p = 2^r sum_k b_k x^k`
//! ([`expand_via_delta`]); the two must agree coefficientwise.
//!
//! The expansion length is always inferred from `deg p` — coefficient vectors
//! are never zero-padded, so the zero polynomial has an empty expansion and
//! `b_n` is the (nonzero) leading coefficient of `p` otherwise.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, factorial};
use crate::families::{bernoulli_poly_order, euler_poly_order};
use crate::operators::delta_tilde_pow;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Coefficients `b_0 .. b_n` of a polynomial over the order-`r` Euler basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerExpansion {
    order: usize,
    coeffs: Vec<Rational>,
}

impl EulerExpansion {
    /// Wraps coefficients over the order-`order` basis, stripping trailing
    /// zeros so that the last coefficient, when present, is the leading
    /// coefficient of the represented polynomial.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        EulerExpansion { order, coeffs }
    }

    /// The basis order `r`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `b_0 .. b_n`; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Reassembles `sum_k b_k E_k^{(r)}(x)`.
    pub fn synthesize(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (k, b) in self.coeffs.iter().enumerate() {
            if !b.is_zero() {
                acc += &euler_poly_order(k, self.order).scale(b);
            }
        }
        acc
    }
}

/// Expands `p` over the order-`r` Euler basis by evaluating
/// `b_k = 1/(2^r k!) sum_j C(r,j) (D^k p)(j)`.
pub fn expand_theorem1(p: &Polynomial, r: usize) -> EulerExpansion {
    let Some(n) = p.degree() else {
        return EulerExpansion::new(r, Vec::new());
    };
    let two_pow_r = Rational::from(2).pow(r as u32);
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut derivative = p.clone();
    for k in 0..=n {
        let mut node_sum = Rational::zero();
        for j in 0..=r {
            node_sum += binomial(r, j) * derivative.eval(&Rational::from_integer(j as i64));
        }
        let scale = &two_pow_r * Rational::from_integer(factorial(k));
        coeffs.push(node_sum / scale);
        derivative = derivative.derivative();
    }
    EulerExpansion::new(r, coeffs)
}

/// Expands `p` by reading monomial coefficients off `delta_tilde^r p / 2^r`.
/// Same result as [`expand_theorem1`] along an independent computation path.
pub fn expand_via_delta(p: &Polynomial, r: usize) -> EulerExpansion {
    let collapsed = delta_tilde_pow(p, r);
    let inv_two_pow_r = Rational::from(2).pow(r as u32).recip();
    let coeffs = collapsed
        .coeffs()
        .iter()
        .map(|c| c * &inv_two_pow_r)
        .collect();
    EulerExpansion::new(r, coeffs)
}

/// Closed-form expansion of `x^n`:
/// `b_k = (1/2^r) C(n,k) sum_j C(r,j) j^{n-k}`, with `0^0 = 1` so the
/// `j = 0` node contributes to the top coefficient.
pub fn monomial_expansion(n: usize, r: usize) -> EulerExpansion {
    let two_pow_r = Rational::from(2).pow(r as u32);
    let coeffs = (0..=n)
        .map(|k| {
            let node_sum: Rational = (0..=r)
                .map(|j| binomial(r, j) * Rational::from_integer(j as i64).pow((n - k) as u32))
                .sum();
            binomial(n, k) * node_sum / &two_pow_r
        })
        .collect();
    EulerExpansion::new(r, coeffs)
}

/// Closed-form expansion of the order-`s` Bernoulli polynomial `B_n^{(s)}(x)`:
/// `b_k = (1/2^r) C(n,k) sum_j C(r,j) B_{n-k}^{(s)}(j)`.
pub fn bernoulli_order_expansion(n: usize, s: usize, r: usize) -> EulerExpansion {
    let two_pow_r = Rational::from(2).pow(r as u32);
    let coeffs = (0..=n)
        .map(|k| {
            let inner = bernoulli_poly_order(n - k, s);
            let node_sum: Rational = (0..=r)
                .map(|j| binomial(r, j) * inner.eval(&Rational::from_integer(j as i64)))
                .sum();
            binomial(n, k) * node_sum / &two_pow_r
        })
        .collect();
    EulerExpansion::new(r, coeffs)
}
