use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::curve::{CurvePoint, KodairaFiber, KodairaKind, Place, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Field, Poly, RatFunc};

/// Euler characteristic of the structure sheaf of a K3 surface.
pub const K3_CHI: i64 = 2;

/// The fibre component met by a section.
///
/// `I_n` components are numbered cyclically from the identity; only
/// `min(i, n − i)` is visible to the local criteria, and that is what
/// `Cyclic` records. For `I_n*`, `Near` is the simple component adjacent to
/// the identity through the same end of the chain and `Far` one of the two at
/// the other end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Identity,
    Cyclic(u32),
    Near,
    Far,
    NonIdentity,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Identity => write!(f, "0"),
            Component::Cyclic(i) => write!(f, "{i}"),
            Component::Near => write!(f, "near"),
            Component::Far => write!(f, "far"),
            Component::NonIdentity => write!(f, "1"),
        }
    }
}

/// Correction terms of the non-identity components that a section can meet
/// on a fibre of the given type. The identity component always contributes 0.
pub fn contribution_table(kind: KodairaKind) -> Vec<(Component, BigRational)> {
    match kind {
        KodairaKind::I(n) => (1..=n / 2)
            .map(|i| (Component::Cyclic(i), rat((i * (n - i)) as i64, n as i64)))
            .collect(),
        KodairaKind::IStar(n) => vec![
            (Component::Near, rat(1, 1)),
            (Component::Far, rat(4 + n as i64, 4)),
        ],
        KodairaKind::IV => vec![(Component::NonIdentity, rat(2, 3))],
        KodairaKind::IVStar => vec![(Component::NonIdentity, rat(4, 3))],
        KodairaKind::III => vec![(Component::NonIdentity, rat(1, 2))],
        KodairaKind::IIIStar => vec![(Component::NonIdentity, rat(3, 2))],
        KodairaKind::II | KodairaKind::IIStar => vec![],
    }
}

/// How a section meets one singular fibre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHit {
    pub place: Place,
    pub kind: KodairaKind,
    pub component: Component,
    pub contribution: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionLocalData<F> {
    pub point: CurvePoint<F>,
    pub hits: Vec<LocalHit>,
    pub zero_intersection: BigRational,
}

impl<F> SectionLocalData<F> {
    pub fn total_contribution(&self) -> BigRational {
        self.hits.iter().map(|h| h.contribution.clone()).sum()
    }
}

/// The fibre configuration needed by the height pairing.
#[derive(Clone, Debug)]
pub struct HeightContext<F> {
    pub chi: i64,
    pub model: WeierstrassModel<F>,
    pub fibers: Vec<KodairaFiber>,
}

fn ord0<F: Field>(f: &RatFunc<F>) -> Option<i64> {
    f.ord_at(&F::zero())
}

fn ord_poly<F: Field>(p: &Poly<F>) -> Option<i64> {
    p.ord_at(&F::zero()).map(|o| o as i64)
}

/// Orders at `t = 0` of ψ₂, ∂ψ/∂u and, if asked, ψ₃ at `(u, v)`; `None`
/// for zero. The numerators over the unreduced denominators du·dv, du²·dv
/// and du⁴ are computed mod tⁿ, doubling `n` until every order shows up or
/// `n` exceeds their degrees.
fn local_orders<F: Field>(m: &WeierstrassModel<F>, u: &RatFunc<F>, v: &RatFunc<F>, with_psi3: bool) -> [Option<i64>; 3] {
    let inv = m.invariants();
    let deg = |p: &Poly<F>| p.degree().unwrap_or(0);
    let limit = 4 * [u.num(), u.den(), v.num(), v.den()].map(deg).into_iter().max().unwrap()
        + [&m.a1, &m.a2, &m.a3, &m.a4, &inv.b2, &inv.b4, &inv.b6, &inv.b8].map(deg).into_iter().max().unwrap()
        + 1;
    let (od, ov) = (ord_poly(u.den()).unwrap(), ord_poly(v.den()).unwrap());
    let k = |c: i64, p: &Poly<F>| p.scale(&F::from_i64(c));
    let mut n = 8 + 4 * od as usize + ov as usize;
    loop {
        let mul = |a: &Poly<F>, b: &Poly<F>| (a * b).truncated(n);
        let (nu, du, nv, dv) = (u.num().truncated(n), u.den().truncated(n), v.num().truncated(n), v.den().truncated(n));
        let dudv = mul(&du, &dv);
        let du2 = mul(&du, &du);
        let nu2 = mul(&nu, &nu);
        let psi2 = &(&k(2, &mul(&nv, &du)) + &mul(&m.a1, &mul(&nu, &dv))) + &mul(&m.a3, &dudv);
        let deriv = &(&(&k(3, &mul(&nu2, &dv)) + &k(2, &mul(&m.a2, &mul(&nu, &dudv)))) + &mul(&m.a4, &mul(&du2, &dv)))
            - &mul(&m.a1, &mul(&nv, &du2));
        let psi3 = with_psi3.then(|| {
            let du3 = mul(&du2, &du);
            &(&(&(&k(3, &mul(&nu2, &nu2)) + &mul(&inv.b2, &mul(&nu2, &mul(&nu, &du))))
                + &k(3, &mul(&inv.b4, &mul(&nu2, &du2))))
                + &k(3, &mul(&inv.b6, &mul(&nu, &du3))))
                + &mul(&inv.b8, &mul(&du3, &du))
        });
        let o = [ord_poly(&psi2), ord_poly(&deriv), psi3.as_ref().and_then(ord_poly)];
        if n >= limit || (o[0].is_some() && o[1].is_some() && (!with_psi3 || o[2].is_some())) {
            return [o[0].map(|x| x - od - ov), o[1].map(|x| x - 2 * od - ov), o[2].map(|x| x - 4 * od)];
        }
        n *= 2;
    }
}

fn half(n: i64) -> BigRational {
    rat(n, 2)
}

impl<F: Field> HeightContext<F> {
    /// Classifies the singular fibres. Requires the model to be minimal at
    /// every place and the Euler numbers to add up to `12χ`.
    pub fn new(model: &WeierstrassModel<F>) -> Result<Self> {
        let fibers = model.tate_classify()?;
        if let Some(f) = fibers.iter().find(|f| f.rescalings > 0) {
            return Err(Error::NotMinimal(f.place.to_string()));
        }
        let euler: u32 = fibers.iter().map(|f| f.kind.euler_number()).sum();
        if euler as i64 != 12 * K3_CHI {
            return Err(Error::CheckFailed(format!("Euler numbers sum to {euler}, not {}", 12 * K3_CHI)));
        }
        Ok(HeightContext { chi: K3_CHI, model: model.clone(), fibers })
    }

    /// `(kind, component, value)` for every non-identity entry of every fibre.
    pub fn contributions(&self) -> Vec<(Place, KodairaKind, Component, BigRational)> {
        self.fibers
            .iter()
            .flat_map(|f| {
                contribution_table(f.kind)
                    .into_iter()
                    .map(move |(c, v)| (f.place.clone(), f.kind, c, v))
            })
            .collect()
    }

    /// The point in the coordinates of the local model at `place`.
    fn localize(&self, place: &Place, u: &RatFunc<F>, v: &RatFunc<F>) -> (RatFunc<F>, RatFunc<F>) {
        match place {
            Place::Finite(a) => {
                let a = F::from_rational(a.clone());
                (u.translate(&a), v.translate(&a))
            }
            Place::Infinity => {
                let k = self.model.weight();
                let s = RatFunc::<F>::x();
                (&u.invert_variable() * &s.pow(2 * k as i32), &v.invert_variable() * &s.pow(3 * k as i32))
            }
        }
    }

    /// `(P·O)`: half the total pole order of `u(P)`, counted with degree at
    /// finite places and in the weight-normalized chart at ∞.
    pub fn zero_section_intersection(&self, p: &CurvePoint<F>) -> BigRational {
        let Some(u) = p.u() else {
            return BigRational::zero();
        };
        let (dn, dd) = (u.num().degree().map_or(0, |d| d as i64), u.den().degree().unwrap() as i64);
        let at_inf = if u.is_zero() { 0 } else { (dn - dd - 2 * self.model.weight() as i64).max(0) };
        half(dd + at_inf)
    }

    /// The component of the fibre at `fiber.place` met by `p`, and its
    /// correction term.
    pub fn fiber_component(&self, p: &CurvePoint<F>, fiber: &KodairaFiber) -> Result<LocalHit> {
        let hit = |component, contribution| LocalHit {
            place: fiber.place.clone(),
            kind: fiber.kind,
            component,
            contribution,
        };
        let (u, v) = match p {
            CurvePoint::Infinity => return Ok(hit(Component::Identity, BigRational::zero())),
            CurvePoint::Affine { u, v } => self.localize(&fiber.place, u, v),
        };
        if ord0(&u).is_some_and(|o| o < 0) {
            return Ok(hit(Component::Identity, BigRational::zero()));
        }
        let m = self.model.local_model(&fiber.place);
        let with_psi3 = !matches!(fiber.kind, KodairaKind::I(_));
        let [o2, od, o3] = local_orders(&m, &u, &v, with_psi3);
        if o2 == Some(0) || od == Some(0) {
            return Ok(hit(Component::Identity, BigRational::zero()));
        }
        let value = match fiber.kind {
            KodairaKind::I(0) => {
                return Err(Error::UndecidableComponent(format!("singular point on a smooth fibre at {}", fiber.place)))
            }
            KodairaKind::I(n) => {
                let n = n as i64;
                // min(ord ψ₂, n/2), doubled to stay integral.
                let m2 = o2.map_or(n, |o| (2 * o).min(n));
                rat(m2 * (2 * n - m2), 4 * n)
            }
            _ => {
                let o3 = o3.ok_or_else(|| Error::UndecidableComponent(format!("3-torsion section at {}", fiber.place)))?;
                match o2 {
                    Some(o2) if o3 >= 3 * o2 => rat(2 * o2, 3),
                    _ => rat(o3, 4),
                }
            }
        };
        contribution_table(fiber.kind)
            .into_iter()
            .find(|(_, c)| *c == value)
            .map(|(comp, c)| hit(comp, c))
            .ok_or_else(|| {
                Error::UndecidableComponent(format!("correction {value} does not match a component of {} at {}", fiber.kind, fiber.place))
            })
    }

    pub fn local_data(&self, p: &CurvePoint<F>) -> Result<SectionLocalData<F>> {
        if !self.model.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let hits = self.fibers.iter().map(|f| self.fiber_component(p, f)).collect::<Result<Vec<_>>>()?;
        Ok(SectionLocalData { point: p.clone(), hits, zero_intersection: self.zero_section_intersection(p) })
    }

    /// `⟨P,P⟩ = 2χ + 2(P·O) − Σ_v contr_v(P)`.
    pub fn height(&self, p: &CurvePoint<F>) -> Result<BigRational> {
        if p.is_infinity() {
            return Ok(BigRational::zero());
        }
        let d = self.local_data(p)?;
        Ok(BigRational::from_integer((2 * self.chi).into()) + BigRational::from_integer(2.into()) * &d.zero_intersection
            - d.total_contribution())
    }

    /// `⟨P,Q⟩ = χ + (P·O) + (Q·O) − (P·Q) − Σ_v contr_v(P,Q)`, with
    /// `(P·Q) = ((P−Q)·O)` and the pair corrections read off by polarizing
    /// the local corrections through `P − Q`.
    pub fn pairing(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<BigRational> {
        if p.is_infinity() || q.is_infinity() {
            self.model.neg(p)?;
            self.model.neg(q)?;
            return Ok(BigRational::zero());
        }
        if p == q {
            return self.height(p);
        }
        let d = self.model.sub(p, q)?;
        let (lp, lq, ld) = (self.local_data(p)?, self.local_data(q)?, self.local_data(&d)?);
        let pq = ld.zero_intersection.clone();
        let contr = (lp.total_contribution() + lq.total_contribution() - ld.total_contribution()) / rat(2, 1);
        Ok(BigRational::from_integer(self.chi.into()) + &lp.zero_intersection + &lq.zero_intersection - pq - contr)
    }

    /// Gram matrix of the pairing on a list of points.
    pub fn gram(&self, points: &[CurvePoint<F>]) -> Result<Vec<Vec<BigRational>>> {
        let mut g = vec![vec![BigRational::zero(); points.len()]; points.len()];
        for i in 0..points.len() {
            for j in i..points.len() {
                let h = self.pairing(&points[i], &points[j])?;
                g[i][j] = h.clone();
                g[j][i] = h;
            }
        }
        Ok(g)
    }
}

/// `true` when `4·h` is an integer.
pub fn in_quarter_integers(h: &BigRational) -> bool {
    (h * rat(4, 1)).is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::named;
    use crate::exactnum::QuadElem;

    type Q = BigRational;

    fn ctx() -> HeightContext<Q> {
        HeightContext::new(&WeierstrassModel::generic_fiber()).unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(contribution_table(KodairaKind::I(4)), vec![(Component::Cyclic(1), rat(3, 4)), (Component::Cyclic(2), rat(1, 1))]);
        assert_eq!(contribution_table(KodairaKind::IStar(0))[1].1, rat(1, 1));
        assert_eq!(contribution_table(KodairaKind::IStar(2))[1].1, rat(3, 2));
        assert!(contribution_table(KodairaKind::II).is_empty());
    }

    #[test]
    fn chi_is_two() {
        assert_eq!(ctx().chi, 2);
    }

    #[test]
    fn zero_section_numbers() {
        let c = ctx();
        assert_eq!(c.zero_section_intersection(&named::p()), rat(0, 1));
        assert_eq!(c.zero_section_intersection(&named::t2()), rat(0, 1));
        let u = RatFunc::new(crate::exactnum::Poly::one(), crate::exactnum::zpoly(&[0, 0, 1])).unwrap();
        let fake = CurvePoint::affine(u, RatFunc::zero());
        assert_eq!(c.zero_section_intersection(&fake), rat(1, 1));
    }

    #[test]
    fn heights_of_named_points() {
        let c = ctx();
        let p = named::p::<Q>();
        assert_eq!(c.height(&p).unwrap(), rat(3, 2));
        for t in named::two_torsion::<Q>() {
            assert_eq!(c.height(&t).unwrap(), rat(0, 1));
            assert_eq!(c.pairing(&p, &t).unwrap(), rat(0, 1));
        }
        let p2 = c.model.mul(2, &p).unwrap();
        assert_eq!(c.height(&p2).unwrap(), rat(6, 1));
    }

    #[test]
    fn t2_components() {
        let c = ctx();
        let at = |place: Place| {
            let f = c.fibers.iter().find(|f| f.place == place).unwrap();
            c.fiber_component(&named::t2(), f).unwrap()
        };
        // u = 0 meets e3 = (t²−1)(t+2)² at t = −2; at t = 2 the node is at u = 48.
        assert_eq!(at(Place::finite(-2)).component, Component::Cyclic(2));
        assert_eq!(at(Place::finite(2)).component, Component::Identity);
        let total: BigRational = c.local_data(&named::t2()).unwrap().total_contribution();
        assert_eq!(total, rat(4, 1));
        let f = &c.fibers[0];
        assert_eq!(c.fiber_component(&CurvePoint::Infinity, f).unwrap().component, Component::Identity);
    }

    #[test]
    fn heights_with_q() {
        let c = HeightContext::<QuadElem>::new(&WeierstrassModel::generic_fiber()).unwrap();
        let q = named::q();
        let p = named::p::<QuadElem>();
        assert_eq!(c.height(&q).unwrap(), rat(1, 2));
        assert_eq!(c.pairing(&p, &q).unwrap(), rat(0, 1));
        assert_eq!(c.pairing(&q, &p).unwrap(), rat(0, 1));
    }
}
