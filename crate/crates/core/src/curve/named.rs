//! The named sections of the generic fibre.

use crate::exactnum::{Field, Poly, QuadElem};

use super::point::CurvePoint;

fn poly<F: Field>(c: &[i64]) -> Poly<F> {
    Poly::from_i64s(c)
}

/// `T₁ = ((t²−1)(t+2)², 0)`.
pub fn t1<F: Field>() -> CurvePoint<F> {
    CurvePoint::from_polys(&poly::<F>(&[-1, 0, 1]) * &poly(&[4, 4, 1]), Poly::zero())
}

/// `T₂ = (0, 0)`.
pub fn t2<F: Field>() -> CurvePoint<F> {
    CurvePoint::from_polys(Poly::zero(), Poly::zero())
}

/// `T₁ + T₂ = (8t(t²−1), 0)`.
pub fn t3<F: Field>() -> CurvePoint<F> {
    CurvePoint::from_polys(&poly::<F>(&[0, 8]) * &poly(&[-1, 0, 1]), Poly::zero())
}

/// `P = (2t³(t+1), 2t²(t+1)²(t−2)²)`.
pub fn p<F: Field>() -> CurvePoint<F> {
    let u = &poly::<F>(&[0, 0, 0, 2]) * &poly(&[1, 1]);
    let v = &(&poly::<F>(&[0, 0, 2]) * &poly(&[1, 1]).pow(2)) * &poly(&[-2, 1]).pow(2);
    CurvePoint::from_polys(u, v)
}

/// `Q = (2t(t+1)(t+2), 2√3·t(t²−4)(t+1)²)`, defined over Q(√3).
pub fn q() -> CurvePoint<QuadElem> {
    let u = &(&poly::<QuadElem>(&[0, 2]) * &poly(&[1, 1])) * &poly(&[2, 1]);
    let v = &(&(&poly::<QuadElem>(&[0, 2]) * &poly(&[-4, 0, 1])) * &poly(&[1, 1]).pow(2))
        * &Poly::constant(QuadElem::sqrt3());
    CurvePoint::from_polys(u, v)
}

/// The four 2-torsion points `O, T₁, T₂, T₁+T₂`.
pub fn two_torsion<F: Field>() -> [CurvePoint<F>; 4] {
    [CurvePoint::Infinity, t1(), t2(), t3()]
}
