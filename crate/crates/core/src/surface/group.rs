use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use std::ops::Neg;

use crate::exactnum::{Field, Matrix};

use super::point::ProjPoint;

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

const SIGNS: [[i8; 3]; 4] = [[1, 1, 1], [-1, -1, 1], [-1, 1, -1], [1, -1, -1]];

/// A symmetry of the surface: permute `(x, y, z)`, permute `(a, b, c)`, and
/// flip the signs of an even number of `a, b, c`.
///
/// Acting on coordinates: `x'ᵢ = x_{π(i)}` and `a'ᵢ = sᵢ · a_{τ(i)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub eigen_perm: [usize; 3],
    pub abc_perm: [usize; 3],
    pub signs: [i8; 3],
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { eigen_perm: PERMS[0], abc_perm: PERMS[0], signs: SIGNS[0] }
    }

    pub fn apply<T: Clone + Neg<Output = T>>(&self, p: &[T; 6]) -> [T; 6] {
        std::array::from_fn(|i| {
            if i < 3 {
                p[self.eigen_perm[i]].clone()
            } else {
                let v = p[3 + self.abc_perm[i - 3]].clone();
                if self.signs[i - 3] < 0 {
                    -v
                } else {
                    v
                }
            }
        })
    }

    pub fn apply_point<F: Field>(&self, p: &ProjPoint<F>) -> ProjPoint<F> {
        ProjPoint::new(self.apply(p.coords())).unwrap()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let g = self;
        let h = other;
        GroupElement {
            eigen_perm: std::array::from_fn(|i| h.eigen_perm[g.eigen_perm[i]]),
            abc_perm: std::array::from_fn(|i| h.abc_perm[g.abc_perm[i]]),
            signs: std::array::from_fn(|i| g.signs[i] * h.signs[g.abc_perm[i]]),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        *g_elements()
            .iter()
            .find(|h| self.compose(h) == GroupElement::identity())
            .expect("group is closed under inverses")
    }

    /// The form `ℓ ∘ self` for a linear form with coefficient vector `w`.
    pub fn pull_back_form<F: Field>(&self, w: &[F; 6]) -> [F; 6] {
        let mut out: [F; 6] = std::array::from_fn(|_| F::zero());
        for i in 0..3 {
            out[self.eigen_perm[i]] = w[i].clone();
            let v = w[3 + i].clone();
            out[3 + self.abc_perm[i]] = if self.signs[i] < 0 { -v } else { v };
        }
        out
    }
}

/// The 144 elements of the symmetry group.
pub fn g_elements() -> Vec<GroupElement> {
    let mut out = Vec::with_capacity(144);
    for eigen_perm in PERMS {
        for abc_perm in PERMS {
            for signs in SIGNS {
                out.push(GroupElement { eigen_perm, abc_perm, signs });
            }
        }
    }
    out
}

/// Orbit of a point, in order of first appearance.
pub fn point_orbit<F: Field>(p: &ProjPoint<F>) -> Vec<ProjPoint<F>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in g_elements() {
        let q = g.apply_point(p);
        if seen.insert(q.clone()) {
            out.push(q);
        }
    }
    out
}

/// A curve on the surface cut out by linear forms together with the
/// hyperplane `x + y + z = 0`. Compared by the reduced row echelon form of
/// the span of all its forms, so any choice of defining equations agrees.
#[derive(Clone, Debug)]
pub struct LinearCurve<F> {
    forms: Vec<[F; 6]>,
    key: Vec<Vec<F>>,
}

impl<F: Field> LinearCurve<F> {
    pub fn new(forms: Vec<[F; 6]>) -> Self {
        let mut rows = vec![[F::one(), F::one(), F::one(), F::zero(), F::zero(), F::zero()].to_vec()];
        rows.extend(forms.iter().map(|f| f.to_vec()));
        let (r, piv) = Matrix::from_rows(rows).rref();
        let key = (0..piv.len()).map(|i| r.row(i).to_vec()).collect();
        LinearCurve { forms, key }
    }

    pub fn forms(&self) -> &[[F; 6]] {
        &self.forms
    }

    /// Codimension of the linear span in P⁵ (3 for a conic on the surface).
    pub fn codim(&self) -> usize {
        self.key.len()
    }

    /// Basis of the linear span: reduced rows of all defining forms.
    pub fn span(&self) -> &[Vec<F>] {
        &self.key
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        self.key
            .iter()
            .all(|row| row.iter().zip(p.coords()).fold(F::zero(), |acc, (w, c)| acc + &(w.clone() * c)).is_zero())
    }

    /// The image `g(C) = { g·p : p ∈ C }`.
    pub fn image(&self, g: &GroupElement) -> Self {
        let h = g.inverse();
        LinearCurve::new(self.forms.iter().map(|f| h.pull_back_form(f)).collect())
    }

    pub fn conj(&self) -> Self {
        LinearCurve::new(self.forms.iter().map(|f| f.clone().map(|c| c.conj())).collect())
    }
}

impl<F: Field> PartialEq for LinearCurve<F> {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl<F: Field> Eq for LinearCurve<F> {}

impl<F: Field> Hash for LinearCurve<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state)
    }
}

/// Orbit of a curve, in order of first appearance; the first entry is the
/// curve itself.
pub fn curve_orbit<F: Field>(c: &LinearCurve<F>) -> Vec<LinearCurve<F>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in g_elements() {
        let d = c.image(&g);
        if seen.insert(d.clone()) {
            out.push(d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = ProjPoint<BigRational>;

    #[test]
    fn group_has_144_distinct_actions() {
        let g = g_elements();
        assert_eq!(g.len(), 144);
        let generic = P::from_i64([2, 3, 5, 7, 11, 13]);
        let images: HashSet<_> = g.iter().map(|e| e.apply(generic.coords())).collect();
        assert_eq!(images.len(), 144);
    }

    #[test]
    fn composition_matches_action() {
        let p = P::from_i64([2, 3, 5, 7, 11, 13]);
        let els = g_elements();
        for g in els.iter().step_by(7) {
            for h in els.iter().step_by(11) {
                let gh = g.compose(h);
                assert!(els.contains(&gh));
                assert_eq!(gh.apply(p.coords()), g.apply(&h.apply(p.coords())));
            }
            assert_eq!(g.compose(&g.inverse()), GroupElement::identity());
        }
    }

    #[test]
    fn singular_orbit_size() {
        assert_eq!(point_orbit(&P::from_i64([2, -1, -1, 1, 1, 1])).len(), 12);
    }

    #[test]
    fn pulled_back_form_vanishes_on_preimage() {
        let w = [1i64, 0, 0, -1, 0, 0].map(crate::exactnum::int);
        let p = P::from_i64([2, 3, 5, 7, 11, 13]);
        for g in g_elements() {
            let f = g.pull_back_form(&w);
            let gp = g.apply(p.coords());
            let lhs = crate::exactnum::dot(&f, p.coords());
            let rhs = crate::exactnum::dot(&w, &gp);
            assert_eq!(lhs, rhs);
        }
    }
}
