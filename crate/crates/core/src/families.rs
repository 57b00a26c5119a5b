//! The concrete number and polynomial families.
//!
//! Everything here is driven by two generating-function kernels:
//!
//! - order-`r` Euler: `(2/(e^t + 1))^r e^{xt}`, whose exponential
//!   coefficients are the polynomials `E_n^{(r)}(x)`; at `x = 0` they are the
//!   Euler numbers of order `r`
//! - order-`s` Bernoulli (Norlund): `(t/(e^t - 1))^s e^{xt}`, giving
//!   `B_n^{(s)}(x)` and the Bernoulli numbers `B_n = B_n(0)` at `s = 1`
//!
//! Order 0 of either family degenerates to the monomials `x^n`.
//!
//! [`euler_poly_multinomial`] rebuilds `E_n^{(r)}(x)` along a second,
//! series-free route (a multinomial convolution of order-1 Euler numbers
//! obtained from their defining recurrence); it exists purely as an
//! independent cross-check of the kernel path.
//!
//! Number sequences, and the polynomials built from them, are memoized per
//! `(family, order)`. The caches sit behind mutexes, so concurrent callers
//! are safe, and they are observationally pure: cached and freshly computed
//! values are identical.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::combinatorics::{binomial, factorial};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

/// One member of a polynomial family: which family, which degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub degree: usize,
}

/// The polynomial families this crate produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    EulerOrder(usize),
    BernoulliOrder(usize),
    Monomial,
}

impl FamilySpec {
    pub fn polynomial(&self) -> Polynomial {
        match self.family {
            Family::EulerOrder(r) => euler_poly_order(self.degree, r),
            Family::BernoulliOrder(s) => bernoulli_poly_order(self.degree, s),
            Family::Monomial => Polynomial::monomial(Rational::one(), self.degree),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum SequenceKind {
    Euler,
    Bernoulli,
}

/// `(e^t + 1)/2`: constant term 1, so its reciprocal exists.
fn euler_base_series(order: usize) -> TruncatedSeries {
    let half = Rational::new(1, 2);
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                Rational::one()
            } else {
                &half / Rational::from_integer(factorial(k))
            }
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(e^t - 1)/t`: coefficient `k` is `1/(k+1)!`; constant term 1.
fn bernoulli_base_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| Rational::from_integer(factorial(k + 1)).recip())
        .collect();
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(2/(e^t+1))^r` or `(t/(e^t-1))^s`, truncated at `order`.
fn kernel(kind: SequenceKind, power: usize, order: usize) -> TruncatedSeries {
    let base = match kind {
        SequenceKind::Euler => euler_base_series(order),
        SequenceKind::Bernoulli => bernoulli_base_series(order),
    };
    base.reciprocal()
        .expect("kernel base series has constant term 1")
        .pow(power)
}

fn number_tables() -> &'static Mutex<HashMap<(SequenceKind, usize), Vec<Rational>>> {
    static TABLES: OnceLock<Mutex<HashMap<(SequenceKind, usize), Vec<Rational>>>> =
        OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

fn poly_tables() -> &'static Mutex<HashMap<(SequenceKind, usize), Vec<Polynomial>>> {
    static TABLES: OnceLock<Mutex<HashMap<(SequenceKind, usize), Vec<Polynomial>>>> =
        OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Numbers `0..=n` of the given kind and order, from the memo table.
fn cached_numbers(kind: SequenceKind, order: usize, n: usize) -> Vec<Rational> {
    let mut tables = number_tables().lock().expect("number cache lock");
    let entry = tables.entry((kind, order)).or_default();
    if entry.len() <= n {
        // Recompute the whole prefix with some slack; the series path
        // produces all lower coefficients anyway.
        let target = n.max(2 * entry.len()).max(8);
        let series = kernel(kind, order, target);
        *entry = (0..=target).map(|k| series.egf_coeff(k)).collect();
    }
    entry[..=n].to_vec()
}

/// Binomial transform of a number sequence into its Appell polynomial:
/// `p_n(x) = sum_l C(n,l) a_l x^{n-l}`, with the binomials walked as a
/// Pascal row.
fn appell_poly(n: usize, numbers: &[Rational]) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut row = num_bigint::BigInt::from(1);
    for (l, a) in numbers.iter().enumerate().take(n + 1) {
        if l > 0 {
            row = row * num_bigint::BigInt::from(n - l + 1) / num_bigint::BigInt::from(l);
        }
        if !a.is_zero() {
            coeffs[n - l] = Rational::from_integer(row.clone()) * a;
        }
    }
    Polynomial::from_coeffs(coeffs)
}

/// Degree-`n` member of the memoized polynomial family.
fn cached_poly(kind: SequenceKind, order: usize, n: usize) -> Polynomial {
    let mut tables = poly_tables().lock().expect("polynomial cache lock");
    let entry = tables.entry((kind, order)).or_default();
    if entry.len() <= n {
        let numbers = cached_numbers(kind, order, n);
        for degree in entry.len()..=n {
            entry.push(appell_poly(degree, &numbers));
        }
    }
    entry[n].clone()
}

/// The `n`-th Euler number of order `r`: the value `E_n^{(r)}(0)`.
pub fn euler_number_order(n: usize, r: usize) -> Rational {
    cached_numbers(SequenceKind::Euler, r, n)
        .pop()
        .expect("table covers 0..=n")
}

/// The `n`-th Euler polynomial of order `r`, monic of degree `n`.
pub fn euler_poly_order(n: usize, r: usize) -> Polynomial {
    cached_poly(SequenceKind::Euler, r, n)
}

/// The classical Euler polynomial `E_n(x)` (order 1).
pub fn euler_poly(n: usize) -> Polynomial {
    euler_poly_order(n, 1)
}

/// The `n`-th Bernoulli number.
pub fn bernoulli_number(n: usize) -> Rational {
    cached_numbers(SequenceKind::Bernoulli, 1, n)
        .pop()
        .expect("table covers 0..=n")
}

/// The classical Bernoulli polynomial `B_n(x)`.
pub fn bernoulli_poly(n: usize) -> Polynomial {
    bernoulli_poly_order(n, 1)
}

/// The `n`-th Bernoulli polynomial of order `s` (Norlund), monic of degree `n`.
pub fn bernoulli_poly_order(n: usize, s: usize) -> Polynomial {
    cached_poly(SequenceKind::Bernoulli, s, n)
}

/// Order-1 Euler numbers from their defining recurrence
/// `E_0 = 1`, `E_m = -(1/2) sum_{k<m} C(m,k) E_k`, independent of the
/// series machinery.
fn euler_numbers_by_recurrence(n: usize) -> Vec<Rational> {
    let half = Rational::new(1, 2);
    let mut numbers: Vec<Rational> = Vec::with_capacity(n + 1);
    numbers.push(Rational::one());
    for m in 1..=n {
        let sum: Rational = (0..m).map(|k| binomial(m, k) * &numbers[k]).sum();
        numbers.push(-(sum * &half));
    }
    numbers
}

/// `E_n^{(r)}(x)` along the multinomial route: the convolution
/// `sum_{n_1+...+n_r+n_{r+1}=n} multinomial(n; n_1..n_{r+1})
/// E_{n_1} ... E_{n_r} x^{n_{r+1}}` over order-1 Euler numbers.
///
/// This shares nothing with [`euler_poly_order`]'s kernel path; it is the
/// cross-check oracle for the two-form agreement of the binomial and
/// multinomial expansions.
pub fn euler_poly_multinomial(n: usize, r: usize) -> Polynomial {
    let numbers = euler_numbers_by_recurrence(n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    walk_compositions(r, n, Rational::one(), &numbers, &mut coeffs);
    Polynomial::from_coeffs(coeffs)
}

/// Fills in one Euler-number slot per level; the residual after all `r`
/// slots is the monomial power `n_{r+1}`. `weight` carries the partial
/// multinomial coefficient `C(n, n_1) C(n - n_1, n_2) ...` times the Euler
/// numbers chosen so far.
fn walk_compositions(
    slots_left: usize,
    remaining: usize,
    weight: Rational,
    numbers: &[Rational],
    coeffs: &mut [Rational],
) {
    if slots_left == 0 {
        coeffs[remaining] += weight;
        return;
    }
    for part in 0..=remaining {
        if numbers[part].is_zero() {
            continue;
        }
        let w = &weight * binomial(remaining, part) * &numbers[part];
        walk_compositions(slots_left - 1, remaining - part, w, numbers, coeffs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn p(text: &str) -> Polynomial {
        parse_polynomial(text).unwrap()
    }

    #[test]
    fn euler_numbers_spot_values() {
        for r in 0..6 {
            assert_eq!(euler_number_order(0, r), Rational::one());
        }
        assert_eq!(euler_number_order(1, 1), rat(-1, 2));
        assert_eq!(euler_number_order(2, 1), Rational::zero());
        assert_eq!(euler_number_order(3, 1), rat(1, 4));
        assert_eq!(euler_number_order(1, 2), rat(-1, 1));
        assert_eq!(euler_number_order(2, 2), rat(1, 2));
    }

    #[test]
    fn euler_numbers_match_recurrence() {
        let by_recurrence = euler_numbers_by_recurrence(20);
        for (n, expected) in by_recurrence.iter().enumerate() {
            assert_eq!(&euler_number_order(n, 1), expected, "E_{n}");
        }
    }

    #[test]
    fn euler_poly_spot_values() {
        assert_eq!(euler_poly_order(4, 0), p("x^4"));
        assert_eq!(euler_poly_order(0, 3), Polynomial::one());
        assert_eq!(euler_poly_order(1, 1), p("x - 1/2"));
        assert_eq!(euler_poly_order(2, 2), p("x^2 - 2*x + 1/2"));
        assert_eq!(euler_poly(0), Polynomial::one());
        assert_eq!(euler_poly(2), p("x^2 - x"));
        assert_eq!(euler_poly(3), p("x^3 - 3/2*x^2 + 1/4"));
    }

    #[test]
    fn euler_poly_multinomial_spot_values() {
        assert_eq!(euler_poly_multinomial(3, 0), p("x^3"));
        assert_eq!(euler_poly_multinomial(1, 2), p("x - 1"));
        assert_eq!(euler_poly_multinomial(2, 1), p("x^2 - x"));
        assert_eq!(euler_poly_multinomial(0, 4), Polynomial::one());
    }

    #[test]
    fn bernoulli_spot_values() {
        assert_eq!(bernoulli_number(0), Rational::one());
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), Rational::zero());
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_poly(2), p("x^2 - x + 1/6"));
    }

    #[test]
    fn bernoulli_numbers_match_recurrence() {
        // sum_{k=0}^{m-1} C(m+1, k) B_k = -(m+1) B_m for m >= 1
        let mut expected = vec![Rational::one()];
        for m in 1..=20 {
            let sum: Rational = (0..m).map(|k| binomial(m + 1, k) * &expected[k]).sum();
            expected.push(-(sum / Rational::from_integer(m as i64 + 1)));
        }
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(&bernoulli_number(n), want, "B_{n}");
        }
    }

    #[test]
    fn bernoulli_poly_order_spot_values() {
        assert_eq!(bernoulli_poly_order(3, 0), p("x^3"));
        for n in 0..8 {
            assert_eq!(bernoulli_poly_order(n, 1), bernoulli_poly(n));
        }
        assert_eq!(bernoulli_poly_order(1, 2), p("x - 1"));
    }

    #[test]
    fn order_zero_families_are_monomials() {
        for n in 0..6 {
            let spec = FamilySpec {
                family: Family::EulerOrder(0),
                degree: n,
            };
            let mono = FamilySpec {
                family: Family::Monomial,
                degree: n,
            };
            assert_eq!(spec.polynomial(), mono.polynomial());
            assert_eq!(
                FamilySpec {
                    family: Family::BernoulliOrder(0),
                    degree: n
                }
                .polynomial(),
                mono.polynomial()
            );
        }
    }

    #[test]
    fn egf_consistency_at_rational_points() {
        // E_n^{(r)}(x0) equals the EGF coefficient of kernel * e^{x0 t}.
        for &(n, r) in &[(0usize, 1usize), (3, 1), (5, 2), (7, 3)] {
            for x0 in [rat(1, 2), rat(-2, 3), rat(3, 1)] {
                let series = kernel(SequenceKind::Euler, r, n)
                    .mul(&TruncatedSeries::scaled_exp(&x0, n));
                assert_eq!(
                    euler_poly_order(n, r).eval(&x0),
                    series.egf_coeff(n),
                    "n={n} r={r} x0={x0}"
                );
            }
        }
    }
}
