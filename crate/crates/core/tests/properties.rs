//! Property tests for the algebraic invariants on random inputs.

use eulerbasis::{
    expand_theorem1, expand_via_delta, parse_polynomial, render_polynomial, Polynomial, Rational,
    RenderFormat, TruncatedSeries,
};
use proptest::collection::vec;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..=10_000, 1i64..=10_000).prop_map(|(n, d)| Rational::new(n, d))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    vec(rational(), 0..=16).prop_map(Polynomial::from_coeffs)
}

fn invertible_series() -> impl Strategy<Value = TruncatedSeries> {
    (vec(rational(), 1..=12), -10_000i64..=10_000i64)
        .prop_map(|(mut coeffs, lead_numer)| {
            // force a nonzero constant term
            coeffs[0] = Rational::new(if lead_numer == 0 { 1 } else { lead_numer }, 7);
            TruncatedSeries::from_coeffs(coeffs)
        })
}

fn series_pair() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries)> {
    (1usize..=12).prop_flat_map(|len| {
        (vec(rational(), len), vec(rational(), len)).prop_map(|(a, b)| {
            (
                TruncatedSeries::from_coeffs(a),
                TruncatedSeries::from_coeffs(b),
            )
        })
    })
}

proptest! {
    #[test]
    fn render_parse_round_trip(p in polynomial()) {
        let text = render_polynomial(&p, RenderFormat::Plain);
        prop_assert_eq!(parse_polynomial(&text).unwrap(), p);
    }

    #[test]
    fn shift_round_trip(p in polynomial(), a in rational()) {
        prop_assert_eq!(p.shift(&a).shift(&(-&a)), p);
    }

    #[test]
    fn derivative_commutes_with_shift(p in polynomial(), a in rational()) {
        prop_assert_eq!(p.shift(&a).derivative(), p.derivative().shift(&a));
    }

    #[test]
    fn eval_is_multiplicative(p in polynomial(), q in polynomial(), a in rational()) {
        prop_assert_eq!((&p * &q).eval(&a), p.eval(&a) * q.eval(&a));
    }

    #[test]
    fn rational_results_stay_canonical(a in rational(), b in rational()) {
        use num_bigint::BigInt;
        use num_traits::Signed;
        let mut results = vec![&a + &b, &a - &b, &a * &b];
        if !b.is_zero() {
            results.push(&a / &b);
        }
        for r in results {
            prop_assert_eq!(gcd(r.numer().abs(), r.denom().clone()), BigInt::from(1));
            prop_assert!(r.denom() > &BigInt::from(0));
        }
    }

    #[test]
    fn series_reciprocal_inverts(a in invertible_series()) {
        let inv = a.reciprocal().unwrap();
        prop_assert_eq!(a.mul(&inv), TruncatedSeries::one(a.order()));
    }

    #[test]
    fn series_pow_is_additive(a in invertible_series(), r in 0usize..=3, s in 0usize..=3) {
        prop_assert_eq!(a.pow(r + s), a.pow(r).mul(&a.pow(s)));
    }

    #[test]
    fn series_mul_commutes_and_associates((a, b) in series_pair(), c in vec(rational(), 1..=12)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if c.len() == a.coeffs().len() {
            let c = TruncatedSeries::from_coeffs(c);
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }

    #[test]
    fn operators_are_linear(p in polynomial(), q in polynomial(), c in rational()) {
        use eulerbasis::{d_pow, delta_tilde};
        let combo = p.scale(&c) + &q;
        prop_assert_eq!(
            delta_tilde(&combo),
            delta_tilde(&p).scale(&c) + delta_tilde(&q)
        );
        prop_assert_eq!(
            d_pow(&combo, 1),
            d_pow(&p, 1).scale(&c) + d_pow(&q, 1)
        );
    }

    #[test]
    fn delta_pow_matches_sequential(p in polynomial(), r in 0usize..=8) {
        use eulerbasis::{delta_tilde, delta_tilde_pow};
        let mut sequential = p.clone();
        for _ in 0..r {
            sequential = delta_tilde(&sequential);
        }
        prop_assert_eq!(delta_tilde_pow(&p, r), sequential);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_round_trips(p in polynomial(), r in 0usize..=5) {
        let e = expand_theorem1(&p, r);
        prop_assert_eq!(e.synthesize(), p);
    }

    #[test]
    fn expansion_paths_agree(p in polynomial(), r in 0usize..=5) {
        prop_assert_eq!(expand_theorem1(&p, r), expand_via_delta(&p, r));
    }

    #[test]
    fn expansion_keeps_leading_coefficient(p in polynomial(), r in 0usize..=5) {
        let e = expand_theorem1(&p, r);
        prop_assert_eq!(e.coeffs().last(), p.leading_coeff());
    }
}

fn gcd(mut a: num_bigint::BigInt, mut b: num_bigint::BigInt) -> num_bigint::BigInt {
    use num_traits::Zero;
    while !b.is_zero() {
        let t = b.clone();
        b = &a % &b;
        a = t;
    }
    a
}
