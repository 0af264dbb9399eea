//! Polynomial kernels over Q and Q(√3) that clear denominators once and
//! work over Z and Z[√3]: products, and gcds by subresultant sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::quad::QuadElem;

/// An integral domain with exact division.
trait Ring: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    /// `self / o`, assuming `o` divides `self`.
    fn div_exact(&self, o: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

/// `a + b√3` with integer `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Z3 {
    a: BigInt,
    b: BigInt,
}

impl Ring for Z3 {
    fn zero() -> Self {
        Z3 { a: Zero::zero(), b: Zero::zero() }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        Z3 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn mul(&self, o: &Self) -> Self {
        Z3 { a: &self.a * &o.a + 3 * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }
    fn sub(&self, o: &Self) -> Self {
        Z3 { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn div_exact(&self, o: &Self) -> Self {
        let num = self.mul(&Z3 { a: o.a.clone(), b: -&o.b });
        let d = &o.a * &o.a - 3 * &o.b * &o.b;
        Z3 { a: num.a / &d, b: num.b / &d }
    }
}

/// `lc(b)^(deg a − deg b + 1) · a mod b`, trailing zeros trimmed.
fn pseudo_rem<R: Ring>(mut a: Vec<R>, b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lb = &b[db];
    for _ in db..a.len() {
        let la = a.pop().unwrap();
        let off = a.len() - db;
        for x in a.iter_mut() {
            *x = x.mul(lb);
        }
        for (j, bc) in b[..db].iter().enumerate() {
            a[off + j] = a[off + j].sub(&la.mul(bc));
        }
    }
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn convolve<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn pow<R: Ring>(x: &R, e: usize, one: &R) -> R {
    (0..e).fold(one.clone(), |acc, _| acc.mul(x))
}

/// Subresultant PRS: every division is exact, so no content gcds are
/// needed and coefficients stay polynomially bounded.
fn subresultant<R: Ring>(mut a: Vec<R>, mut b: Vec<R>, one: R) -> Vec<R> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return a;
    }
    let (mut g, mut h) = (one.clone(), one.clone());
    loop {
        let delta = a.len() - b.len();
        let r = pseudo_rem(a, &b);
        if r.is_empty() {
            return b;
        }
        let d = g.mul(&pow(&h, delta, &one));
        a = b;
        b = r.iter().map(|c| c.div_exact(&d)).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 { h } else { pow(&g, delta, &one).div_exact(&pow(&h, delta - 1, &one)) };
    }
}

pub(crate) fn gcd_q(a: &Poly<BigRational>, b: &Poly<BigRational>) -> Poly<BigRational> {
    let mut g = subresultant(a.primitive_integer(), b.primitive_integer(), BigInt::one());
    let c = g.iter().fold(<BigInt as Zero>::zero(), |c, x| c.gcd(x));
    if !Zero::is_zero(&c) {
        g.iter_mut().for_each(|x| *x /= &c);
    }
    Poly::from_integers(&g).monic()
}

/// `(integers, L)` with `coeffs = integers / L`.
fn to_z(cs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let l = cs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    (cs.iter().map(|c| c.numer() * (&l / c.denom())).collect(), l)
}

fn from_z(c: BigInt, l: &BigInt) -> BigRational {
    if l.is_one() {
        BigRational::from_integer(c)
    } else {
        BigRational::new(c, l.clone())
    }
}

pub(crate) fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let ((za, la), (zb, lb)) = (to_z(a), to_z(b));
    let l = la * lb;
    convolve(&za, &zb).into_iter().map(|c| from_z(c, &l)).collect()
}

fn to_z3(cs: &[QuadElem]) -> (Vec<Z3>, BigInt) {
    let l = cs.iter().fold(BigInt::one(), |l, c| l.lcm(c.r.denom()).lcm(c.s.denom()));
    let z = |q: &BigRational| q.numer() * (&l / q.denom());
    (cs.iter().map(|c| Z3 { a: z(&c.r), b: z(&c.s) }).collect(), l.clone())
}

pub(crate) fn mul_quad(a: &[QuadElem], b: &[QuadElem]) -> Vec<QuadElem> {
    let ((za, la), (zb, lb)) = (to_z3(a), to_z3(b));
    let l = la * lb;
    convolve(&za, &zb).into_iter().map(|c| QuadElem::new(from_z(c.a, &l), from_z(c.b, &l))).collect()
}

pub(crate) fn gcd_quad(a: &Poly<QuadElem>, b: &Poly<QuadElem>) -> Poly<QuadElem> {
    let g = subresultant(to_z3(a.coeffs()).0, to_z3(b.coeffs()).0, Z3 { a: 1.into(), b: 0.into() });
    let q = |n: &BigInt| BigRational::from_integer(n.clone());
    Poly::new(g.iter().map(|c| QuadElem::new(q(&c.a), q(&c.b))).collect()).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{from_roots, int, Field};
    use proptest::prelude::*;

    #[test]
    fn rational_gcd_with_high_degree_gap() {
        let f: Poly<BigRational> = &from_roots(&[3, 3, -1]) * &Poly::from_i64s(&[1, 0, 0, 0, 0, 7]);
        let g: Poly<BigRational> = &from_roots(&[3, 5]) * &Poly::from_i64s(&[2, 1]);
        assert_eq!(gcd_q(&f, &g), from_roots(&[3]));
    }

    fn euclid<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).unwrap();
            x = y;
            y = r.monic();
        }
        x
    }

    fn quad_poly(max_len: usize) -> impl Strategy<Value = Poly<QuadElem>> {
        proptest::collection::vec((-3i64..=3, -3i64..=3), 0..max_len).prop_map(|cs| {
            Poly::new(cs.into_iter().map(|(r, s)| QuadElem::new(int(r), int(s))).collect())
        })
    }

    proptest! {
        #[test]
        fn subresultant_gcds_match_euclid(c in quad_poly(4), a in quad_poly(7), b in quad_poly(6)) {
            let (a, b) = (&a * &c, &b * &c);
            prop_assert_eq!(gcd_quad(&a, &b), euclid(&a, &b));
            let (ra, rb) = (a.map(|x| x.r.clone()), b.map(|x| x.r.clone()));
            prop_assert_eq!(gcd_q(&ra, &rb), euclid(&ra, &rb));
        }
    }

    #[test]
    fn quadratic_gcd_matches_euclid() {
        let s = Poly::constant(QuadElem::sqrt3());
        let lin = &Poly::<QuadElem>::x() - &s;
        let f = &(&lin * &lin) * &from_roots(&[1, 2]);
        let g = &(&lin * &from_roots::<QuadElem>(&[2, 7])) * &Poly::constant(QuadElem::from_i64(3));
        let want = &lin * &from_roots(&[2]);
        assert_eq!(gcd_quad(&f, &g), want);
        assert_eq!(gcd_quad(&f, &Poly::zero()), f.monic());
    }
}
