use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

/// A characteristic-zero field with exact arithmetic.
///
/// Implemented by [`BigRational`] and [`super::QuadElem`]. Every routine in
/// the crate that works "over the base field" is generic over this trait.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(q: BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// `Some` when the element lies in the prime field Q.
    fn to_rational(&self) -> Option<BigRational>;

    /// The nontrivial Galois automorphism (identity on Q).
    fn conj(&self) -> Self;

    /// Returns a nonzero scalar `c` such that `c * x` has small "integral"
    /// normal form for every `x` in `coeffs`. Used to normalize projective
    /// objects; for Q this clears denominators and removes the content.
    fn normalizer(coeffs: &[Self]) -> Self;

    /// Coordinates over Q in a fixed basis of the field.
    fn q_coords(&self) -> Vec<BigRational>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * &r)
    }

    /// Field-specific monic gcd, `None` to use plain Euclid.
    fn poly_gcd(_a: &Poly<Self>, _b: &Poly<Self>) -> Option<Poly<Self>> {
        None
    }

    /// Field-specific product of coefficient vectors, `None` for schoolbook.
    fn poly_mul(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }
}

// Ratio arithmetic always reduces by a gcd, even for integers; these skip
// that when both operands are integers.

pub(crate) fn q_add(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() + b.numer());
    }
    a + b
}

pub(crate) fn q_sub(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() - b.numer());
    }
    a - b
}

pub(crate) fn q_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() * b.numer());
    }
    a * b
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Field for BigRational {
    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn normalizer(coeffs: &[Self]) -> Self {
        rational_normalizer(coeffs)
    }

    fn q_coords(&self) -> Vec<BigRational> {
        vec![self.clone()]
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Option<Poly<Self>> {
        Some(super::intpoly::gcd_q(a, b))
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        Some(super::intpoly::mul_q(a, b))
    }
}

/// `lcm(denominators) / gcd(numerators)`, signed so that the first nonzero
/// entry becomes positive.
pub(crate) fn rational_normalizer(coeffs: &[BigRational]) -> BigRational {
    let mut l = BigInt::one();
    let mut g = BigInt::zero();
    let mut sign = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        l = l.lcm(c.denom());
        g = g.gcd(c.numer());
        if sign.is_none() {
            sign = Some(c.is_negative());
        }
    }
    if g.is_zero() {
        return BigRational::one();
    }
    let r = BigRational::new(l, g);
    if sign == Some(true) {
        -r
    } else {
        r
    }
}
