//! Exact-rational computation with higher-order Euler and Bernoulli
//! polynomials.
//!
//! The crate computes the families `E_n^{(r)}(x)` and `B_n^{(s)}(x)` from
//! their generating functions, expands arbitrary rational polynomials over
//! the order-`r` Euler basis along two independent routes, and verifies the
//! identities relating these families exactly over parameter grids —
//! including an erratum audit that evaluates the misprinted form of the
//! product identity as typeset and quantifies its defect.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no
//! floating point and no tolerance anywhere. Every value is immutable after
//! construction and every operation is pure, so the whole API is safe to
//! share across threads.
//!
//! # Quick tour
//!
//! ```
//! use eulerbasis::{expand_theorem1, parse_polynomial, Rational};
//!
//! let p = parse_polynomial("x^2").unwrap();
//! let e = expand_theorem1(&p, 1);
//! assert_eq!(
//!     e.coeffs(),
//!     &[Rational::new(1, 2), Rational::one(), Rational::one()]
//! );
//! assert_eq!(e.synthesize(), p);
//! ```

pub mod combinatorics;
pub mod expansion;
pub mod families;
pub mod operators;
pub mod parser;
pub mod polynomial;
pub mod rational;
pub mod series;
pub mod verify;

pub use expansion::{
    bernoulli_order_expansion, expand_theorem1, expand_via_delta, monomial_expansion,
    EulerExpansion,
};
pub use families::{
    bernoulli_number, bernoulli_poly, bernoulli_poly_order, euler_number_order, euler_poly,
    euler_poly_multinomial, euler_poly_order, Family, FamilySpec,
};
pub use operators::{d_pow, delta_tilde, delta_tilde_pow};
pub use parser::{parse_polynomial, render_polynomial, ParseError, RenderFormat};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use verify::{
    check_corollary2, check_corollary3, check_eq17, check_eq19, check_eq20, check_theorem4,
    check_theorem5, check_theorem6, run_grid, GridBounds, IdentityId, IdentityReport,
    Theorem6Mode, VerifyError,
};
