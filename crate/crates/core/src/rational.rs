//! Exact rational scalars.
//!
//! `Rational` is the coefficient field for everything in this crate. It wraps
//! an arbitrary-precision `num_rational::BigRational` and is always kept in
//! canonical form:
//!
//! - `gcd(|numerator|, denominator) = 1`
//! - `denominator >= 1` (the sign lives on the numerator)
//! - zero is `0/1`
//!
//! All arithmetic is exact; nothing in this crate ever rounds.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number in canonical reduced form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom` in canonical form.
    ///
    /// # Panics
    ///
    /// Panics if `denom` is zero. Use [`Rational::checked_new`] for untrusted
    /// input such as parsed text.
    pub fn new<N, D>(numer: N, denom: D) -> Self
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        Self::checked_new(numer, denom).expect("denominator is zero")
    }

    /// Builds `numer/denom`, or `None` when `denom` is zero.
    pub fn checked_new<N, D>(numer: N, denom: D) -> Option<Self>
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        let denom = denom.into();
        if denom.is_zero() {
            return None;
        }
        Some(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer<N: Into<BigInt>>(n: N) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `self^exp` with the convention `0^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        Rational(BigRational::new_raw(
            self.0.numer().pow(exp),
            self.0.denom().pow(exp),
        ))
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "zero has no reciprocal");
        Rational(self.0.recip())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // "numer/denom", or just "numer" for integers.
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

/// Error from parsing a rational out of text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    message: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {}", self.message)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `"a/b"` or `"a"` with optional leading sign on the numerator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |message: &str| ParseRationalError {
            message: format!("{message} in {s:?}"),
        };
        let (numer_text, denom_text) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer = BigInt::from_str(numer_text).map_err(|_| err("bad numerator"))?;
        let denom = match denom_text {
            Some(d) => BigInt::from_str(d).map_err(|_| err("bad denominator"))?,
            None => BigInt::one(),
        };
        Rational::checked_new(numer, denom).ok_or_else(|| err("denominator is zero"))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }

        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                self.0.$assign_method(rhs.0);
            }
        }

        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));

        let z = rat(0, 7);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn arithmetic_stays_canonical() {
        let a = rat(1, 6);
        let b = rat(1, 3);
        let sum = &a + &b;
        assert_eq!(sum, rat(1, 2));
        assert_eq!(sum.denom(), &BigInt::from(2));

        assert_eq!(rat(2, 3) * rat(3, 2), Rational::one());
        assert_eq!(rat(1, 2) - rat(1, 2), Rational::zero());
        assert_eq!(rat(7, 2) / rat(7, 1), rat(1, 2));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Rational::checked_new(1, 0).is_none());
    }

    #[test]
    fn pow_zero_to_zero_is_one() {
        assert_eq!(Rational::zero().pow(0), Rational::one());
        assert_eq!(Rational::zero().pow(3), Rational::zero());
        assert_eq!(rat(-2, 3).pow(2), rat(4, 9));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for r in [rat(3, 2), rat(-3, 2), rat(5, 1), rat(0, 1)] {
            let text = r.to_string();
            assert_eq!(text.parse::<Rational>().unwrap(), r);
        }
        assert_eq!(rat(3, 2).to_string(), "3/2");
        assert_eq!(rat(5, 1).to_string(), "5");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }
}
