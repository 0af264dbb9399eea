use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, RatFunc};

use super::model::WeierstrassModel;

/// A point of the generic fibre over `F(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint<F> {
    Infinity,
    Affine { u: RatFunc<F>, v: RatFunc<F> },
}

impl<F: Field> CurvePoint<F> {
    pub fn affine(u: RatFunc<F>, v: RatFunc<F>) -> Self {
        CurvePoint::Affine { u, v }
    }

    pub fn from_polys(u: Poly<F>, v: Poly<F>) -> Self {
        CurvePoint::Affine { u: u.into(), v: v.into() }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn u(&self) -> Option<&RatFunc<F>> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { u, .. } => Some(u),
        }
    }

    pub fn v(&self) -> Option<&RatFunc<F>> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { v, .. } => Some(v),
        }
    }

    /// Galois conjugate of the coordinates.
    pub fn conj(&self) -> Self {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, v } => CurvePoint::affine(u.conj(), v.conj()),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> CurvePoint<G> {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, v } => CurvePoint::affine(u.map(f), v.map(f)),
        }
    }
}

impl<F: Field> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { u, v } => write!(f, "({u}, {v})"),
        }
    }
}

fn c<F: Field>(p: &Poly<F>) -> RatFunc<F> {
    RatFunc::from_poly(p.clone())
}

impl<F: Field> WeierstrassModel<F> {
    pub fn contains(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, v } => {
                // The residual times du³·dv², so no gcds are needed.
                let (nu, du, nv, dv) = (u.num(), u.den(), v.num(), v.den());
                let du2 = du * du;
                let du3 = &du2 * du;
                let dv2 = dv * dv;
                let du3dv = &du3 * dv;
                let v2 = &(nv * nv) * &du3;
                let uv = &(&self.a1 * &(nu * nv)) * &(&du2 * dv);
                let v1 = &(&self.a3 * nv) * &du3dv;
                let u3 = &(&(nu * nu) * nu) * &dv2;
                let u2 = &(&self.a2 * &(nu * nu)) * &(du * &dv2);
                let u1 = &(&self.a4 * nu) * &(&du2 * &dv2);
                let u0 = &self.a6 * &(&du3 * &dv2);
                &(&v2 + &uv) + &v1 == &(&(&u3 + &u2) + &u1) + &u0
            }
        }
    }

    fn check(&self, p: &CurvePoint<F>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    fn neg_unchecked(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, v } => {
                let v2 = &(&(-v) - &(&c(&self.a1) * u)) - &c(&self.a3);
                CurvePoint::affine(u.clone(), v2)
            }
        }
    }

    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (a1, a2, a3, a4, a6) = (c(&self.a1), c(&self.a2), c(&self.a3), c(&self.a4), c(&self.a6));
        let (u1, v1, u2, v2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { u: u1, v: v1 }, CurvePoint::Affine { u: u2, v: v2 }) => (u1, v1, u2, v2),
        };
        let two = RatFunc::from_i64(2);
        let three = RatFunc::from_i64(3);
        let (lambda, nu) = if u1 == u2 {
            let denom = &(&(&two * v1) + &(&a1 * u1)) + &a3;
            if (&(v1 + v2) + &(&(&a1 * u2) + &a3)).is_zero() {
                return CurvePoint::Infinity;
            }
            let lam = &(&(&(&(&three * u1) * u1) + &(&(&two * &a2) * u1)) + &a4) - &(&a1 * v1);
            let nu = &(&(&(-&(&(u1 * u1) * u1)) + &(&a4 * u1)) + &(&two * &a6)) - &(&a3 * v1);
            (&lam / &denom, &nu / &denom)
        } else {
            let du = u2 - u1;
            let lam = &(v2 - v1) / &du;
            let nu = &(&(v1 * u2) - &(v2 * u1)) / &du;
            (lam, nu)
        };
        let u3 = &(&(&(&(&lambda * &lambda) + &(&a1 * &lambda)) - &a2) - u1) - u2;
        let v3 = &(&(-&(&(&lambda + &a1) * &u3)) - &nu) - &a3;
        CurvePoint::affine(u3, v3)
    }

    pub fn sub(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.add(p, &self.neg(q)?)
    }

    /// `n·p` by double-and-add.
    pub fn mul(&self, n: i64, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.check(p)?;
        let mut base = if n < 0 { self.neg_unchecked(p) } else { p.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Smallest `n ≤ bound` with `n·p = O`.
    pub fn order(&self, p: &CurvePoint<F>, bound: u32) -> Result<Option<u32>> {
        self.check(p)?;
        let mut q = p.clone();
        for n in 1..=bound {
            if q.is_infinity() {
                return Ok(Some(n));
            }
            q = self.add_unchecked(&q, p);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::named;
    use num_rational::BigRational;

    #[test]
    fn identity_and_torsion() {
        let m = WeierstrassModel::<BigRational>::generic_fiber();
        let p = named::p::<BigRational>();
        assert_eq!(m.add(&p, &CurvePoint::Infinity).unwrap(), p);
        let t2 = named::t2::<BigRational>();
        assert!(m.mul(2, &t2).unwrap().is_infinity());
        assert_eq!(m.order(&named::t1(), 10).unwrap(), Some(2));
    }

    #[test]
    fn third_two_torsion_point() {
        let m = WeierstrassModel::<BigRational>::generic_fiber();
        let t3 = m.add(&named::t1(), &named::t2()).unwrap();
        let (e2, _) = super::super::model::two_torsion_roots::<BigRational>();
        assert_eq!(t3.u().unwrap(), &RatFunc::from_poly(e2));
        assert!(m.mul(2, &t3).unwrap().is_infinity());
    }

    #[test]
    fn rejects_foreign_points() {
        let m = WeierstrassModel::<BigRational>::generic_fiber();
        let bad = CurvePoint::from_polys(Poly::one(), Poly::one());
        assert_eq!(m.add(&bad, &CurvePoint::Infinity), Err(Error::NotOnCurve));
    }
}
