//! Property checks shared by the proptest suite and the acceptance binary.

#![allow(dead_code, clippy::needless_range_loop)]

use k3mat::curve::{named, CurvePoint, WeierstrassModel};
use k3mat::exactnum::{BigRational, Matrix, QuadElem};
use k3mat::lattice::{naive_short_vectors, short_vectors, Lattice};
use k3mat::mwlat::HeightContext;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Q = BigRational;

/// `a·P + b·Q + T` with `T` one of the four 2-torsion points.
#[derive(Clone, Copy, Debug)]
pub struct Combo {
    pub a: i64,
    pub b: i64,
    pub t: usize,
}

pub fn combo(r: i64) -> impl Strategy<Value = Combo> {
    (-r..=r, -r..=r, 0usize..4).prop_map(|(a, b, t)| Combo { a, b, t })
}

pub fn model() -> WeierstrassModel<QuadElem> {
    WeierstrassModel::generic_fiber()
}

pub fn point(e: &WeierstrassModel<QuadElem>, c: Combo) -> CurvePoint<QuadElem> {
    let ap = e.mul(c.a, &named::p()).unwrap();
    let bq = e.mul(c.b, &named::q()).unwrap();
    e.add(&e.add(&ap, &bq).unwrap(), &named::two_torsion()[c.t]).unwrap()
}

pub fn associativity(x: Combo, y: Combo, z: Combo) -> Result<(), TestCaseError> {
    let e = model();
    let (p, q, r) = (point(&e, x), point(&e, y), point(&e, z));
    let lhs = e.add(&e.add(&p, &q).unwrap(), &r).unwrap();
    let rhs = e.add(&p, &e.add(&q, &r).unwrap()).unwrap();
    prop_assert!(e.contains(&lhs));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// `<A+B, C> = <A, C> + <B, C>` and both agree with `(3ac + bd)/2`.
pub fn bilinearity(ctx: &HeightContext<QuadElem>, x: Combo, y: Combo, z: Combo) -> Result<(), TestCaseError> {
    let e = model();
    let (p, q, r) = (point(&e, x), point(&e, y), point(&e, z));
    let pq = e.add(&p, &q).unwrap();
    let lhs = ctx.pairing(&pq, &r).unwrap();
    let rhs = ctx.pairing(&p, &r).unwrap() + ctx.pairing(&q, &r).unwrap();
    prop_assert_eq!(&lhs, &rhs);
    let gram = |u: Combo, v: Combo| Q::new((3 * u.a * v.a + u.b * v.b).into(), 2.into());
    prop_assert_eq!(ctx.pairing(&p, &r).unwrap(), gram(x, z));
    prop_assert_eq!(ctx.pairing(&r, &p).unwrap(), gram(x, z));
    Ok(())
}

/// A positive definite integral Gram matrix `MᵀM` of rank at most 4, with
/// a box small enough for the scan oracle up to norm 20.
pub fn definite_gram() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4)
        .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n))
        .prop_filter_map("singular", |m| {
            let n = m.len();
            let g: Vec<Vec<i64>> =
                (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| m[k][i] * m[k][j]).sum()).collect()).collect();
            let m = Matrix::<Q>::from_i64_rows(&g);
            let det = m.det().ok()?;
            (!det.is_zero() && box_radius(&m, 20) <= 6).then_some(g)
        })
}

/// Coordinate bound `|x_i| ≤ sqrt(N · (G⁻¹)_ii)` for vectors of norm `N`.
fn box_radius(g: &Matrix<Q>, norm: i64) -> i64 {
    let inv = g.inverse().unwrap();
    (0..g.rows())
        .map(|i| (norm as f64 * inv[(i, i)].to_f64().unwrap()).sqrt().floor() as i64 + 1)
        .max()
        .unwrap()
}

pub fn short_vectors_match(g: &[Vec<i64>], norm: i64) -> Result<(), TestCaseError> {
    let m = Matrix::<Q>::from_i64_rows(g);
    let r = box_radius(&m, norm);
    let l = Lattice::new(m).unwrap();
    let n = Q::from_integer(norm.into());
    prop_assert_eq!(short_vectors(&l, &n).unwrap(), naive_short_vectors(&l, &n, r));
    Ok(())
}

/// A product of elementary integer matrices: determinant ±1.
pub fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, k, flip) in ops {
            if i != j {
                for c in 0..n {
                    t[i][c] += k * t[j][c];
                }
            } else if flip {
                t[i].iter_mut().for_each(|c| *c = -*c);
            }
        }
        t
    })
}

pub fn disc_invariant(l: &Lattice, t: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let t = Matrix::<Q>::from_i64_rows(t);
    prop_assert_eq!(t.det().unwrap().abs(), Q::from_integer(1.into()));
    let l2 = l.change_basis(&t).unwrap();
    prop_assert_eq!(l2.disc(), l.disc());
    prop_assert_eq!(l2.signature(), l.signature());
    Ok(())
}
