//! The linear operators on polynomials: the sum-shift
//! `delta_tilde: p(x) -> p(x+1) + p(x)` and differentiation, with their
//! powers.
//!
//! Writing `S` for the unit shift `p(x) -> p(x+1)`, the sum-shift is `S + I`,
//! so its `r`-th power expands binomially:
//! `delta_tilde^r p = sum_j C(r,j) p(x+j)`. [`delta_tilde_pow`] computes that
//! closed form directly (it is what turns an order-`r` Euler expansion into
//! plain monomial coefficients); the `r`-fold sequential application is kept
//! as a test oracle.

use crate::combinatorics::binomial;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// `p(x+1) + p(x)`. Degree is preserved; the leading coefficient doubles.
pub fn delta_tilde(p: &Polynomial) -> Polynomial {
    p.shift(&Rational::one()) + p
}

/// `r`-fold sum-shift via the binomial form `sum_j C(r,j) p(x+j)`;
/// `r = 0` is the identity.
pub fn delta_tilde_pow(p: &Polynomial, r: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for j in 0..=r {
        let shifted = p.shift(&Rational::from_integer(j as i64));
        acc += &shifted.scale(&binomial(r, j));
    }
    acc
}

/// `k`-fold derivative; the zero polynomial once `k` exceeds the degree.
pub fn d_pow(p: &Polynomial, k: usize) -> Polynomial {
    let mut acc = p.clone();
    for _ in 0..k {
        if acc.is_zero() {
            break;
        }
        acc = acc.derivative();
    }
    acc
}
