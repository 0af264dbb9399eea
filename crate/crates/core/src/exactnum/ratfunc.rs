use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Element of `F(t)` in canonical form: monic denominator, coprime parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.lc().unwrap().inv().unwrap();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    /// `num/den` for coprime parts: only makes the denominator monic.
    fn reduced(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.lc().unwrap().inv().unwrap();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_i64(n: i64) -> Self {
        RatFunc::constant(F::from_i64(n))
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.is_poly().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: i32) -> Self {
        let p = RatFunc {
            num: self.num.pow(e.unsigned_abs()),
            den: self.den.pow(e.unsigned_abs()),
        };
        if e < 0 {
            p.inv().expect("nonzero base for negative power")
        } else {
            p
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        RatFunc::from_poly(Poly::constant(c.clone())) * self
    }

    /// Evaluate at a scalar; errors at a pole.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) * &d.inv().unwrap())
    }

    /// Order of vanishing at `t = root` (negative at poles); `None` for zero.
    pub fn ord_at(&self, root: &F) -> Option<i64> {
        let n = self.num.ord_at(root)? as i64;
        let d = self.den.ord_at(root).unwrap() as i64;
        Some(n - d)
    }

    /// Order at infinity, `deg den − deg num`; `None` for zero.
    pub fn ord_inf(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(self.den.degree().unwrap() as i64 - n)
    }

    /// Substitute `t ↦ 1/s`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let n = dn.max(dd);
        let num = self.num.reversed(dn).shift_up(n - dn);
        let den = self.den.reversed(dd).shift_up(n - dd);
        RatFunc::new(num, den).unwrap()
    }

    /// Substitute `t ↦ t + shift`.
    pub fn translate(&self, shift: &F) -> Self {
        // A substitution keeps the parts coprime and the denominator monic.
        RatFunc { num: self.num.translate(shift), den: self.den.translate(shift) }
    }

    /// Substitute `t ↦ g(t)`.
    pub fn compose(&self, g: &RatFunc<F>) -> Result<Self> {
        let horner = |p: &Poly<F>| -> RatFunc<F> {
            let mut acc = RatFunc::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc * g + RatFunc::constant(c.clone());
            }
            acc
        };
        horner(&self.num).checked_div(&horner(&self.den))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den).unwrap()
    }

    pub fn conj(&self) -> Self {
        RatFunc {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f)).unwrap()
    }

    pub fn display_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.display_var(var);
        }
        format!("({})/({})", self.num.display_var(var), self.den.display_var(var))
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("t"))
    }
}

impl<F: Field> From<Poly<F>> for RatFunc<F> {
    fn from(p: Poly<F>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // gcd(n1·d2' + n2·d1', dᵢ) can only share factors with g = gcd(d1, d2).
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let t = &(&self.num * &d2) + &(&rhs.num * &d1);
        if g.is_constant() {
            return RatFunc::reduced(t, &d1 * &d2);
        }
        RatFunc::new(t, &(&d1 * &d2) * &g).unwrap()
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = &self.num.exact_div(&g1).unwrap() * &rhs.num.exact_div(&g2).unwrap();
        let d = &self.den.exact_div(&g2).unwrap() * &rhs.den.exact_div(&g1).unwrap();
        RatFunc::reduced(n, d)
    }
}

impl<'a, F: Field> Div<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

macro_rules! owned_rf_ops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<F: Field> $tr for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: RatFunc<F>) -> RatFunc<F> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, F: Field> $tr<&'a RatFunc<F>> for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
                (&self).$m(rhs)
            }
        }
    )*};
}
owned_rf_ops!(Add::add, Sub::sub, Mul::mul, Div::div);
