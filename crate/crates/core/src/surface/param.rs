use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{rational_roots_in, Field, Poly};

use super::group::GroupElement;
use super::point::{ProjPoint, COORD_NAMES};

/// Six polynomials `(x, y, z, a, b, c)` in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parametrization<F> {
    pub polys: [Poly<F>; 6],
}

impl<F: Field> Parametrization<F> {
    pub fn new(polys: [Poly<F>; 6]) -> Self {
        Parametrization { polys }
    }

    pub fn x(&self) -> &Poly<F> {
        &self.polys[0]
    }
    pub fn y(&self) -> &Poly<F> {
        &self.polys[1]
    }
    pub fn z(&self) -> &Poly<F> {
        &self.polys[2]
    }
    pub fn a(&self) -> &Poly<F> {
        &self.polys[3]
    }
    pub fn b(&self) -> &Poly<F> {
        &self.polys[4]
    }
    pub fn c(&self) -> &Poly<F> {
        &self.polys[5]
    }

    /// The degree-4 family through `(a, b, c) = (125, 99, 57)` at `t = 3`.
    pub fn lowest_degree() -> Self {
        let p = |c: &[i64]| Poly::<F>::from_i64s(c);
        let l1 = p(&[-7, 4]); // 4t − 7
        let l2 = p(&[2, 1]); // t + 2
        let l3 = p(&[-6, 5]); // 5t − 6
        let q1 = p(&[4, -6, 1]); // t² − 6t + 4
        let q2 = p(&[-4, -10, 5]); // 5t² − 10t − 4
        let q3 = p(&[4, -4, 3]); // 3t² − 4t + 4
        let q4 = p(&[6, -4, 1]); // t² − 4t + 6
        let a = -(&(&l1 * &l2) * &q1);
        let b = &l3 * &q2;
        let c = &q3 * &q4;
        let x = &(&q3 * &l1) * &Poly::constant(F::from_i64(2));
        let y = &q1 * &q2;
        let z = -(&(&l2 * &l3) * &q4);
        Parametrization::new([x, y, z, a, b, c])
    }

    /// Evaluate at a rational parameter value.
    pub fn eval(&self, t0: &BigRational) -> Result<ProjPoint<F>> {
        let t = F::from_rational(t0.clone());
        ProjPoint::new(self.polys.clone().map(|p| p.eval(&t)))
            .ok_or_else(|| Error::BasePoint(t0.to_string()))
    }

    /// The three defining identities, evaluated as polynomials in `t`.
    pub fn residuals(&self) -> [Poly<F>; 3] {
        let [x, y, z, a, b, c] = &self.polys;
        let e1 = &(x + y) + z;
        let e2 = &(&(&(&(x * y) + &(y * z)) + &(z * x)) + &(a * a)) + &(&(b * b) + &(c * c));
        let e3 = &(&(x * y) * z) - &(&(&(a * b) * c) * &Poly::constant(F::from_i64(2)));
        [e1, e2, e3]
    }

    pub fn verify(&self) -> bool {
        !self.polys.iter().all(|p| p.is_zero()) && self.residuals().iter().all(|r| r.is_zero())
    }

    /// The nine linear factors `a, b, c, a∓b, b∓c, c∓a` of `q(a, b, c)`.
    pub fn q_factors(&self) -> Vec<(&'static str, Poly<F>)> {
        let [_, _, _, a, b, c] = &self.polys;
        vec![
            ("a", a.clone()),
            ("b", b.clone()),
            ("c", c.clone()),
            ("a-b", a - b),
            ("a+b", a + b),
            ("b-c", b - c),
            ("b+c", b + c),
            ("c-a", c - a),
            ("c+a", c + a),
        ]
    }

    /// All rational `t₀` at which the point is a trivial matrix, computed on
    /// the parametrization with the common factor of its coordinates removed.
    pub fn trivial_locus(&self) -> Result<BTreeSet<BigRational>> {
        let p = self.primitive();
        let mut out = BTreeSet::new();
        for (name, f) in p.q_factors() {
            if f.is_zero() {
                return Err(Error::IdenticallyTrivial(name.to_string()));
            }
            out.extend(rational_roots_in(&f)?);
        }
        Ok(out)
    }

    /// Integral members of [`Self::trivial_locus`].
    pub fn integral_trivial_locus(&self) -> Result<BTreeSet<BigRational>> {
        Ok(self.trivial_locus()?.into_iter().filter(|t| t.is_integer()).collect())
    }

    /// Common monic gcd of the six coordinates.
    pub fn content(&self) -> Poly<F> {
        self.polys.iter().fold(Poly::zero(), |g, p| g.gcd(p))
    }

    /// Divide out the common factor and normalize the scalar.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        let polys = self.polys.clone().map(|p| p.exact_div(&g).unwrap());
        let all: Vec<F> = polys.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
        let mut n = F::normalizer(&all);
        if let Some(lc) = polys[5].lc() {
            if (lc.clone() * &n).q_coords()[0].is_negative() {
                n = -n;
            }
        }
        Parametrization::new(polys.map(|p| p.scale(&n)))
    }

    pub fn degree(&self) -> usize {
        self.primitive()
            .polys
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    /// Componentwise image under a symmetry.
    pub fn apply(&self, g: &GroupElement) -> Self {
        Parametrization::new(g.apply(&self.polys))
    }

    /// `x = t·a` identically: the family lies in the fibre plane `x = a·t`.
    pub fn is_section(&self) -> bool {
        self.x() == &(&Poly::x() * self.a())
    }

    /// Equal up to a nonzero scalar and a common polynomial factor.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        (0..6).all(|i| {
            (0..6).all(|j| &self.polys[i] * &other.polys[j] == &self.polys[j] * &other.polys[i])
        })
    }

    /// Same as [`Self::projectively_equal`] restricted to `(a : b : c)`.
    pub fn abc_projectively_equal(&self, other: &Self) -> bool {
        (3..6).all(|i| {
            (3..6).all(|j| &self.polys[i] * &other.polys[j] == &self.polys[j] * &other.polys[i])
        })
    }

    pub fn conj(&self) -> Self {
        Parametrization::new(self.polys.clone().map(|p| p.conj()))
    }

    /// `name = polynomial` lines.
    pub fn display_lines(&self) -> Vec<String> {
        COORD_NAMES
            .iter()
            .zip(&self.polys)
            .map(|(n, p)| format!("{n} = {p}"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, QuadElem};
    use crate::surface::g_elements;

    type P = Parametrization<BigRational>;

    #[test]
    fn lowest_degree_at_three() {
        let p = P::lowest_degree();
        assert!(p.verify());
        assert!(!p.is_section());
        let pt = p.eval(&int(3)).unwrap();
        let c: Vec<i64> = pt.integer_coords().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, vec![190, -55, -135, 125, 99, 57]);
    }

    #[test]
    fn trivial_locus_contents() {
        let p = P::lowest_degree();
        let ints: Vec<_> = p.integral_trivial_locus().unwrap().into_iter().collect();
        assert_eq!(ints, [-2, -1, 0, 1, 2, 4, 10].map(int).to_vec());
        let all = p.trivial_locus().unwrap();
        assert!(all.contains(&rat(7, 4)) && all.contains(&rat(6, 5)));
        for t in &all {
            assert!(p.eval(t).unwrap().is_trivial());
        }
    }

    #[test]
    fn perturbation_breaks_identities() {
        let mut p = P::lowest_degree();
        p.polys[3] = &p.polys[3] + &Poly::one();
        assert!(!p.verify());
    }

    #[test]
    fn group_preserves_validity() {
        let p = P::lowest_degree();
        for g in g_elements() {
            assert!(p.apply(&g).verify());
        }
        let pq = Parametrization::<QuadElem>::lowest_degree();
        assert!(pq.verify());
    }

    #[test]
    fn constant_family_has_empty_locus() {
        let c = |v: i64| Poly::<BigRational>::from_i64s(&[v]);
        let p = P::new([c(1), c(1), c(1), c(26), c(51), c(114)]);
        assert!(p.trivial_locus().unwrap().is_empty());
        let zero = P::new([c(0), c(0), c(0), c(0), c(1), c(2)]);
        assert_eq!(zero.trivial_locus(), Err(Error::IdenticallyTrivial("a".into())));
    }
}
