use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, RatFunc};

/// Long Weierstrass equation `v² + a1·uv + a3·v = u³ + a2·u² + a4·u + a6`
/// with coefficients in `F[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassModel<F> {
    pub a1: Poly<F>,
    pub a2: Poly<F>,
    pub a3: Poly<F>,
    pub a4: Poly<F>,
    pub a6: Poly<F>,
}

/// The `b` and `c` invariants and the discriminant.
#[derive(Clone, Debug)]
pub struct Invariants<F> {
    pub b2: Poly<F>,
    pub b4: Poly<F>,
    pub b6: Poly<F>,
    pub b8: Poly<F>,
    pub c4: Poly<F>,
    pub c6: Poly<F>,
    pub disc: Poly<F>,
}

fn k<F: Field>(n: i64) -> Poly<F> {
    Poly::constant(F::from_i64(n))
}

impl<F: Field> WeierstrassModel<F> {
    /// Errors if the discriminant vanishes identically.
    pub fn new(a1: Poly<F>, a2: Poly<F>, a3: Poly<F>, a4: Poly<F>, a6: Poly<F>) -> Result<Self> {
        let m = WeierstrassModel { a1, a2, a3, a4, a6 };
        if m.discriminant().is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(m)
    }

    /// `v² = u³ + a2·u² + a4·u + a6`.
    pub fn short(a2: Poly<F>, a4: Poly<F>, a6: Poly<F>) -> Result<Self> {
        WeierstrassModel::new(Poly::zero(), a2, Poly::zero(), a4, a6)
    }

    /// `v² = u(u − e2)(u − e3)` with `e2 = 8t(t²−1)`, `e3 = (t²−1)(t+2)²`.
    pub fn generic_fiber() -> Self {
        let (e2, e3) = two_torsion_roots::<F>();
        WeierstrassModel::short(-(&e2 + &e3), &e2 * &e3, Poly::zero()).expect("nonsingular")
    }

    pub fn coeffs(&self) -> [&Poly<F>; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn invariants(&self) -> Invariants<F> {
        let WeierstrassModel { a1, a2, a3, a4, a6 } = self;
        let b2 = &(a1 * a1) + &(&k(4) * a2);
        let b4 = &(&k(2) * a4) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(&k(4) * a6);
        let b8 = &(&(&(&(&(a1 * a1) * a6) + &(&(&k(4) * a2) * a6)) - &(&(a1 * a3) * a4)) + &(&(a2 * a3) * a3))
            - &(a4 * a4);
        let c4 = &(&b2 * &b2) - &(&k(24) * &b4);
        let c6 = &(&(-&(&(&b2 * &b2) * &b2)) + &(&(&k(36) * &b2) * &b4)) - &(&k(216) * &b6);
        let disc = &(&(&(-&(&(&b2 * &b2) * &b8)) - &(&(&k(8) * &b4) * &(&b4 * &b4))) - &(&(&k(27) * &b6) * &b6))
            + &(&(&k(9) * &b2) * &(&b4 * &b6));
        Invariants { b2, b4, b6, b8, c4, c6, disc }
    }

    pub fn discriminant(&self) -> Poly<F> {
        self.invariants().disc
    }

    /// `j = c4³ / Δ` in canonical form.
    pub fn j_invariant(&self) -> Result<RatFunc<F>> {
        let inv = self.invariants();
        if inv.disc.is_zero() {
            return Err(Error::SingularModel);
        }
        RatFunc::new(&(&inv.c4 * &inv.c4) * &inv.c4, inv.disc)
    }

    /// Right-hand side minus left-hand side at `(u, v)`.
    pub fn residual(&self, u: &RatFunc<F>, v: &RatFunc<F>) -> RatFunc<F> {
        let c = |p: &Poly<F>| RatFunc::from_poly(p.clone());
        let lhs = &(&(v * v) + &(&(&c(&self.a1) * u) * v)) + &(&c(&self.a3) * v);
        let rhs = &(&(&(&(u * u) * u) + &(&(&c(&self.a2) * u) * u)) + &(&c(&self.a4) * u)) + &c(&self.a6);
        &rhs - &lhs
    }

    /// Smallest `k` with `deg aᵢ ≤ k·i` for all coefficients.
    pub fn weight(&self) -> usize {
        [(1, &self.a1), (2, &self.a2), (3, &self.a3), (4, &self.a4), (6, &self.a6)]
            .iter()
            .filter_map(|(i, p)| p.degree().map(|d| d.div_ceil(*i)))
            .max()
            .unwrap_or(0)
    }

    /// The model in `s = 1/t`: `aᵢ ↦ s^{k·i} aᵢ(1/s)` with `k` the weight,
    /// matched by `u ↦ s^{2k} u`, `v ↦ s^{3k} v` on points.
    pub fn at_infinity(&self) -> Self {
        let w = self.weight();
        let tr = |p: &Poly<F>, i: usize| -> Poly<F> {
            if p.is_zero() {
                return Poly::zero();
            }
            p.reversed(w * i)
        };
        WeierstrassModel {
            a1: tr(&self.a1, 1),
            a2: tr(&self.a2, 2),
            a3: tr(&self.a3, 3),
            a4: tr(&self.a4, 4),
            a6: tr(&self.a6, 6),
        }
    }

    /// Substitute `t ↦ t + α` in all coefficients.
    pub fn translate(&self, alpha: &F) -> Self {
        WeierstrassModel {
            a1: self.a1.translate(alpha),
            a2: self.a2.translate(alpha),
            a3: self.a3.translate(alpha),
            a4: self.a4.translate(alpha),
            a6: self.a6.translate(alpha),
        }
    }

    /// Change of variables `u = u' + r`, `v = v' + s·u' + t`.
    pub fn rst_transform(&self, r: &Poly<F>, s: &Poly<F>, t: &Poly<F>) -> Self {
        let WeierstrassModel { a1, a2, a3, a4, a6 } = self;
        let a1n = a1 + &(&k(2) * s);
        let a2n = &(&(a2 - &(s * a1)) + &(&k(3) * r)) - &(s * s);
        let a3n = &(a3 + &(r * a1)) + &(&k(2) * t);
        let a4n = &(&(&(&(a4 - &(s * a3)) + &(&(&k(2) * r) * a2)) - &(&(t + &(r * s)) * a1)) + &(&(&k(3) * r) * r))
            - &(&(&k(2) * s) * t);
        let a6n = &(&(&(&(&(a6 + &(r * a4)) + &(&(r * r) * a2)) + &(&(r * r) * r)) - &(t * a3)) - &(t * t))
            - &(&(r * t) * a1);
        WeierstrassModel { a1: a1n, a2: a2n, a3: a3n, a4: a4n, a6: a6n }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> WeierstrassModel<G> {
        WeierstrassModel {
            a1: self.a1.map(f),
            a2: self.a2.map(f),
            a3: self.a3.map(f),
            a4: self.a4.map(f),
            a6: self.a6.map(f),
        }
    }

    /// Over Q, the same model with coefficients read in another field.
    pub fn base_change<G: Field>(&self) -> WeierstrassModel<G> {
        self.map(|c| G::from_rational(c.to_rational().expect("rational coefficient")))
    }

    pub fn display(&self) -> String {
        let mut lhs = "v^2".to_string();
        if !self.a1.is_zero() {
            lhs += &format!(" + ({})*u*v", self.a1);
        }
        if !self.a3.is_zero() {
            lhs += &format!(" + ({})*v", self.a3);
        }
        let mut rhs = "u^3".to_string();
        for (p, m) in [(&self.a2, "*u^2"), (&self.a4, "*u"), (&self.a6, "")] {
            if !p.is_zero() {
                rhs += &format!(" + ({}){}", p, m);
            }
        }
        format!("{lhs} = {rhs}")
    }
}

/// `e2 = 8t(t²−1)` and `e3 = (t²−1)(t+2)²`, the nonzero roots of the model's
/// cubic.
pub fn two_torsion_roots<F: Field>() -> (Poly<F>, Poly<F>) {
    let t2m1 = Poly::<F>::from_i64s(&[-1, 0, 1]);
    let e2 = &Poly::from_i64s(&[0, 8]) * &t2m1;
    let e3 = &t2m1 * &Poly::from_i64s(&[4, 4, 1]);
    (e2, e3)
}
