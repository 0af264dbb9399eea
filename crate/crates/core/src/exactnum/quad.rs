use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{q_add, q_mul, q_sub, rational_normalizer, Field};
use super::poly::Poly;

/// An element `r + s·√3` of the real quadratic field Q(√3).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadElem {
    pub r: BigRational,
    pub s: BigRational,
}

impl QuadElem {
    pub fn new(r: BigRational, s: BigRational) -> Self {
        QuadElem { r, s }
    }

    pub fn sqrt3() -> Self {
        QuadElem::new(BigRational::zero(), BigRational::one())
    }

    /// N(r + s√3) = r² − 3s².
    pub fn norm(&self) -> BigRational {
        &self.r * &self.r - BigRational::from_integer(3.into()) * &self.s * &self.s
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }
}

impl From<BigRational> for QuadElem {
    fn from(r: BigRational) -> Self {
        QuadElem::new(r, BigRational::zero())
    }
}

impl Zero for QuadElem {
    fn zero() -> Self {
        QuadElem::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        QuadElem::new(BigRational::one(), BigRational::zero())
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.r, -self.s)
    }
}

impl<'a> Add<&'a QuadElem> for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &'a QuadElem) -> QuadElem {
        QuadElem::new(q_add(&self.r, &rhs.r), q_add(&self.s, &rhs.s))
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: QuadElem) -> QuadElem {
        self + &rhs
    }
}

impl<'a> Sub<&'a QuadElem> for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &'a QuadElem) -> QuadElem {
        QuadElem::new(q_sub(&self.r, &rhs.r), q_sub(&self.s, &rhs.s))
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        self - &rhs
    }
}

impl<'a> Mul<&'a QuadElem> for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &'a QuadElem) -> QuadElem {
        if self.s.is_zero() && rhs.s.is_zero() {
            return QuadElem::new(q_mul(&self.r, &rhs.r), BigRational::zero());
        }
        let three = BigRational::from_integer(3.into());
        let r = q_add(&q_mul(&self.r, &rhs.r), &q_mul(&three, &q_mul(&self.s, &rhs.s)));
        let s = q_add(&q_mul(&self.r, &rhs.s), &q_mul(&self.s, &rhs.r));
        QuadElem::new(r, s)
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        self * &rhs
    }
}

impl Div for QuadElem {
    type Output = QuadElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: QuadElem) -> QuadElem {
        let inv = rhs.inv().expect("division by zero in Q(√3)");
        self * &inv
    }
}

impl Field for QuadElem {
    fn from_rational(q: BigRational) -> Self {
        QuadElem::from(q)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.s.is_zero() {
            return Some(QuadElem::from(self.r.recip()));
        }
        let n = self.norm();
        Some(QuadElem::new(&self.r / &n, -(&self.s / &n)))
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.s.is_zero() {
            Some(self.r.clone())
        } else {
            None
        }
    }

    fn conj(&self) -> Self {
        QuadElem::new(self.r.clone(), -self.s.clone())
    }

    fn q_coords(&self) -> Vec<BigRational> {
        vec![self.r.clone(), self.s.clone()]
    }

    fn normalizer(coeffs: &[Self]) -> Self {
        if coeffs.iter().all(|c| c.s.is_zero()) {
            let rs: Vec<BigRational> = coeffs.iter().map(|c| c.r.clone()).collect();
            return QuadElem::from(rational_normalizer(&rs));
        }
        if coeffs.iter().all(|c| c.r.is_zero()) {
            // s√3 · (1/√3) = s, then normalize the rational parts.
            let ss: Vec<BigRational> = coeffs.iter().map(|c| c.s.clone()).collect();
            let third = BigRational::new(1.into(), 3.into());
            return QuadElem::new(BigRational::zero(), rational_normalizer(&ss) * third);
        }
        let lead = coeffs.iter().find(|c| !c.is_zero()).expect("nonzero entry");
        lead.inv().expect("nonzero")
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Option<Poly<Self>> {
        Some(super::intpoly::gcd_quad(a, b))
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        Some(super::intpoly::mul_quad(a, b))
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadElem {
    /// `r`, `s√3`, or `(r)+(s)√3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.r)),
            (true, false) => {
                if self.s.is_one() {
                    write!(f, "√3")
                } else if (-self.s.clone()).is_one() {
                    write!(f, "-√3")
                } else {
                    write!(f, "{}√3", fmt_rat(&self.s))
                }
            }
            (false, false) => {
                if self.s.is_negative() {
                    write!(f, "({})-({})√3", fmt_rat(&self.r), fmt_rat(&-self.s.clone()))
                } else {
                    write!(f, "({})+({})√3", fmt_rat(&self.r), fmt_rat(&self.s))
                }
            }
        }
    }
}
