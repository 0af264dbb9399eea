use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, RatFunc};
use crate::surface::Parametrization;

use super::point::CurvePoint;

type R<F> = RatFunc<F>;

fn k<F: Field>(n: i64) -> R<F> {
    R::from_i64(n)
}

fn pr<F: Field>(c: &[i64]) -> R<F> {
    R::from_poly(Poly::from_i64s(c))
}

/// The point of the generic fibre corresponding to a section.
///
/// The section must lie in the fibre plane, `x = t·a`. The zero section
/// (`a + b = c − y = 0`) maps to the identity.
pub fn param_to_point<F: Field>(p: &Parametrization<F>) -> Result<CurvePoint<F>> {
    let [x, y, z, a, b, c] = p.polys.clone().map(R::from_poly);
    let t = R::<F>::x();
    let apb = &a + &b;
    if apb.is_zero() {
        if (&c - &y).is_zero() {
            return Ok(CurvePoint::Infinity);
        }
        return Err(Error::DegenerateDenominator("a+b"));
    }
    if x.is_zero() {
        return Err(Error::DegenerateDenominator("x"));
    }
    let t2m4 = pr::<F>(&[-4, 0, 1]);
    let t2m1 = pr::<F>(&[-1, 0, 1]);
    let nu = &(&x - &c) / &apb;
    let lambda = &(&t2m4 * &nu) + &(&k(3) * &t);
    let quad = &(&(&(&t * &nu) * &nu) - &(&k(2) * &nu)) + &t;
    let mu = &(&(&(&t * &t2m4) * &(&z - &y)) * &quad) / &x;
    let half = k::<F>(2).inv()?;
    let l2 = &lambda * &lambda;
    let u = &(&(&mu + &l2) + &(&(&t * &t2m1) * &pr(&[8, 1]))) * &half;
    let v = &(&(&(&(&mu * &lambda) + &(&l2 * &lambda)) + &(&(&t2m1 * &pr(&[-8, 0, 1])) * &lambda))
        - &(&(&k(8) * &t) * &(&t2m1 * &t2m1)))
        * &half;
    Ok(CurvePoint::affine(u, v))
}

/// Inverse of [`param_to_point`]: the section through a point, as primitive
/// polynomials with the leading coefficient of `c` positive.
pub fn point_to_param<F: Field>(pt: &CurvePoint<F>) -> Result<Parametrization<F>> {
    let (u, v) = match pt {
        CurvePoint::Infinity => {
            // a = t, b = −t, y = c = 2 − t², x = t², z = −2.
            let p = |c: &[i64]| Poly::<F>::from_i64s(c);
            let polys = [p(&[0, 0, 1]), p(&[2, 0, -1]), p(&[-2]), p(&[0, 1]), p(&[0, -1]), p(&[2, 0, -1])];
            return Ok(Parametrization::new(polys).primitive());
        }
        CurvePoint::Affine { u, v } => (u, v),
    };
    let t = R::<F>::x();
    let t2m1 = pr::<F>(&[-1, 0, 1]);
    let t2m4 = pr::<F>(&[-4, 0, 1]);
    let den = u - &(&(&k(4) * &pr(&[1, 1])) * &t2m1);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator("u - 4(t+1)(t^2-1)"));
    }
    let lambda = &(v + &(&(&k(4) * &t) * &(&t2m1 * &t2m1))) / &den;
    let mu = &(&(&k(2) * u) - &(&lambda * &lambda)) - &(&(&t * &t2m1) * &pr(&[8, 1]));
    let nu = &(&lambda - &(&k(3) * &t)) / &t2m4;
    let quad = &(&(&(&t * &nu) * &nu) - &(&k(2) * &nu)) + &t;
    if quad.is_zero() {
        return Err(Error::DegenerateDenominator("t*nu^2 - 2*nu + t"));
    }
    // a = 1, x = t.
    let w = &mu / &(&t2m4 * &quad);
    let half = k::<F>(2).inv()?;
    let y = &(&(-&t) - &w) * &half;
    let z = &(&(-&t) + &w) * &half;
    let yz = &y * &z;
    let tmn = &t - &nu;
    let lhs = &(&(&k(2) * &tmn) * &(&R::one() - &(&nu * &nu)));
    if lhs.is_zero() {
        return Err(Error::DegenerateDenominator("2(t-nu)(1-nu^2)"));
    }
    let rhs = &(&(&(&R::one() + &(&nu * &nu)) * &t) * &yz)
        - &(&(&k(2) * &nu) * &(&(&(&(&tmn * &tmn) - &(&t * &t)) + &R::one()) + &yz));
    let b = &rhs / lhs;
    let c = &t - &(&nu * &(&R::one() + &b));
    let coords = [t.clone(), y, z, R::one(), b, c];
    let l = coords
        .iter()
        .fold(Poly::<F>::one(), |acc, r| {
            let g = acc.gcd(r.den());
            (&acc * r.den()).exact_div(&g).unwrap()
        });
    let lr = R::from_poly(l);
    let polys = coords.map(|r| (&r * &lr).as_poly().expect("cleared denominators").clone());
    Ok(Parametrization::new(polys).primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{named, WeierstrassModel};
    use crate::exactnum::QuadElem;
    use num_rational::BigRational;

    type Q = BigRational;

    fn section(cs: [&[i64]; 6]) -> Parametrization<Q> {
        Parametrization::new(cs.map(Poly::from_i64s))
    }

    #[test]
    fn p_section_maps_to_p() {
        // a = t, b = t² − 2, c = t, x = t², y = 2 − t², z = −2.
        let s = section([&[0, 0, 1], &[2, 0, -1], &[-2], &[0, 1], &[-2, 0, 1], &[0, 1]]);
        assert!(s.verify() && s.is_section());
        assert_eq!(param_to_point(&s).unwrap(), named::p());
    }

    #[test]
    fn round_trips() {
        let m = WeierstrassModel::<Q>::generic_fiber();
        let p = named::p::<Q>();
        for pt in [p.clone(), m.mul(2, &p).unwrap(), m.add(&p, &named::t1()).unwrap(), named::t2(), named::t1()] {
            let s = point_to_param(&pt).unwrap();
            assert!(s.verify(), "{pt}");
            assert!(s.is_section());
            assert_eq!(param_to_point(&s).unwrap(), pt);
        }
    }

    #[test]
    fn zero_section() {
        let o = point_to_param::<Q>(&CurvePoint::Infinity).unwrap();
        assert!(o.verify() && o.is_section());
        assert_eq!(param_to_point(&o).unwrap(), CurvePoint::Infinity);
    }

    #[test]
    fn q_round_trip() {
        let q = named::q();
        let s = point_to_param(&q).unwrap();
        assert!(s.verify());
        assert_eq!(param_to_point::<QuadElem>(&s).unwrap(), q);
    }

    #[test]
    fn doubled_p_has_degree_eight() {
        let m = WeierstrassModel::<Q>::generic_fiber();
        let s = point_to_param(&m.mul(2, &named::p()).unwrap()).unwrap();
        let t = Poly::<Q>::x();
        let a = &t * &Poly::from_i64s(&[-12, 0, 20, 0, -8, 0, 1]);
        let b = -&(&t * &Poly::from_i64s(&[4, 0, 0, 0, -4, 0, 1]));
        let c = &Poly::from_i64s(&[-2, 0, 1]) * &Poly::from_i64s(&[-4, 0, 8, 0, -6, 0, 1]);
        assert_eq!([s.a().clone(), s.b().clone(), s.c().clone()], [a, b, c]);
        assert_eq!(s.degree(), 8);
    }

    #[test]
    fn t2_lies_on_a_plus_c() {
        let s = point_to_param::<Q>(&named::t2()).unwrap();
        assert!((s.a() + s.c()).is_zero());
        assert!((s.b() - s.z()).is_zero());
    }

    #[test]
    fn conjugate_of_q_is_minus_q() {
        let m = WeierstrassModel::<QuadElem>::generic_fiber();
        let q = named::q();
        assert!(m.contains(&q));
        assert_eq!(q.conj(), m.neg(&q).unwrap());
    }
}
