use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{rational_roots_in, radical, Field, Poly};

use super::model::WeierstrassModel;

/// A rational place of P¹: `t = α` or `t = ∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(BigRational),
    Infinity,
}

impl Place {
    pub fn finite(n: i64) -> Self {
        Place::Finite(BigRational::from_integer(n.into()))
    }
}

impl fmt::Display for Place {
    /// `t`, `t-2`, `t+1`, `t-3/2`, or `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Finite(a) if a.is_zero() => write!(f, "t"),
            Place::Finite(a) => {
                let neg = -a.clone();
                if a > &BigRational::zero() {
                    write!(f, "t-{a}")
                } else {
                    write!(f, "t+{neg}")
                }
            }
        }
    }
}

/// Kodaira symbol of a fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaKind {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaKind {
    /// Number of irreducible components of the geometric fibre.
    pub fn components(&self) -> u32 {
        match *self {
            KodairaKind::I(0) => 1,
            KodairaKind::I(n) => n,
            KodairaKind::IStar(n) => n + 5,
            KodairaKind::II => 1,
            KodairaKind::III => 2,
            KodairaKind::IV => 3,
            KodairaKind::IVStar => 7,
            KodairaKind::IIIStar => 8,
            KodairaKind::IIStar => 9,
        }
    }

    /// Number of components of multiplicity one.
    pub fn simple_components(&self) -> u32 {
        match *self {
            KodairaKind::I(0) => 1,
            KodairaKind::I(n) => n,
            KodairaKind::IStar(_) => 4,
            KodairaKind::II | KodairaKind::IIStar => 1,
            KodairaKind::III | KodairaKind::IIIStar => 2,
            KodairaKind::IV | KodairaKind::IVStar => 3,
        }
    }

    /// Euler number of the fibre, `ord Δ` on a minimal model.
    pub fn euler_number(&self) -> u32 {
        match *self {
            KodairaKind::I(n) => n,
            KodairaKind::IStar(n) => n + 6,
            KodairaKind::II => 2,
            KodairaKind::III => 3,
            KodairaKind::IV => 4,
            KodairaKind::IVStar => 8,
            KodairaKind::IIIStar => 9,
            KodairaKind::IIStar => 10,
        }
    }
}

impl fmt::Display for KodairaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaKind::I(n) => write!(f, "I{n}"),
            KodairaKind::IStar(n) => write!(f, "I{n}*"),
            KodairaKind::II => write!(f, "II"),
            KodairaKind::III => write!(f, "III"),
            KodairaKind::IV => write!(f, "IV"),
            KodairaKind::IVStar => write!(f, "IV*"),
            KodairaKind::IIIStar => write!(f, "III*"),
            KodairaKind::IIStar => write!(f, "II*"),
        }
    }
}

/// Output of Tate's algorithm at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaFiber {
    pub place: Place,
    pub kind: KodairaKind,
    /// Number of components `m`.
    pub m: u32,
    /// Number of multiplicity-one components.
    pub m1: u32,
    /// `ord Δ` on the input model.
    pub ord_disc: u32,
    /// Number of rescalings `aᵢ ↦ aᵢ/tⁱ` needed to reach a minimal model.
    pub rescalings: u32,
}

fn ord<F: Field>(p: &Poly<F>) -> u32 {
    p.ord0().unwrap_or(u32::MAX)
}

fn res<F: Field>(p: &Poly<F>) -> F {
    p.coeff(0)
}

fn konst<F: Field>(c: F) -> Poly<F> {
    Poly::constant(c)
}

/// `π^k · c` for the uniformizer `π = t`.
fn pik<F: Field>(k: usize, c: F) -> Poly<F> {
    Poly::monomial(c, k)
}

/// `p / π^k`; `p` must be divisible.
fn div_pi<F: Field>(p: &Poly<F>, k: usize) -> Poly<F> {
    if p.is_zero() {
        return Poly::zero();
    }
    p.shift_down(k)
}

fn half<F: Field>(x: F) -> F {
    x * &F::from_i64(2).inv().unwrap()
}

/// Tate's algorithm at the place `t = 0` of a model over `F[t]`, with the
/// residue field `F` of characteristic zero.
///
/// Every root the algorithm needs is a multiple root of a quadratic or cubic
/// over the residue field, hence rational over it; no extension is needed.
pub fn tate_at_zero<F: Field>(model: &WeierstrassModel<F>) -> Result<(KodairaKind, u32)> {
    let mut e = model.clone();
    let mut rescalings = 0;
    loop {
        let inv = e.invariants();
        let n = ord(&inv.disc);
        if inv.disc.is_zero() {
            return Err(Error::SingularModel);
        }
        if n == 0 {
            return Ok((KodairaKind::I(0), rescalings));
        }
        // Complete the square: a1 = a3 = 0.
        e = e.rst_transform(
            &Poly::zero(),
            &(-&e.a1).scale(&half(F::one())),
            &(-&e.a3).scale(&half(F::one())),
        );
        // Move the singular point of the reduction to (0, 0).
        let cubic = Poly::new(vec![res(&e.a6), res(&e.a4), res(&e.a2), F::one()]);
        let g = cubic.gcd(&cubic.derivative());
        let x0 = match g.degree() {
            Some(1) => -g.coeff(0),
            Some(2) => -(res(&e.a2) * &F::from_i64(3).inv().unwrap()),
            _ => return Err(Error::CheckFailed("reduction is not singular".into())),
        };
        e = e.rst_transform(&konst(x0), &Poly::zero(), &Poly::zero());
        let inv = e.invariants();
        if ord(&inv.b2) == 0 {
            return Ok((KodairaKind::I(n), rescalings));
        }
        if ord(&e.a6) < 2 {
            return Ok((KodairaKind::II, rescalings));
        }
        if ord(&inv.b8) < 3 {
            return Ok((KodairaKind::III, rescalings));
        }
        if ord(&inv.b6) < 3 {
            return Ok((KodairaKind::IV, rescalings));
        }
        // Now π | a2, π² | a4, π³ | a6 (with a1 = a3 = 0).
        let a21 = res(&div_pi(&e.a2, 1));
        let a42 = res(&div_pi(&e.a4, 2));
        let a63 = res(&div_pi(&e.a6, 3));
        let p = Poly::new(vec![a63, a42, a21.clone(), F::one()]);
        let g = p.gcd(&p.derivative());
        match g.degree() {
            Some(0) => return Ok((KodairaKind::IStar(0), rescalings)),
            Some(1) => {
                let alpha = -g.coeff(0);
                e = e.rst_transform(&pik(1, alpha), &Poly::zero(), &Poly::zero());
                return Ok((KodairaKind::IStar(istar_subprocedure(e)), rescalings));
            }
            _ => {}
        }
        // Triple root −a21/3.
        let alpha = -(a21 * &F::from_i64(3).inv().unwrap());
        e = e.rst_transform(&pik(1, alpha), &Poly::zero(), &Poly::zero());
        let a32 = res(&div_pi(&e.a3, 2));
        let a64 = res(&div_pi(&e.a6, 4));
        if !(a32.clone() * &a32 + F::from_i64(4) * &a64).is_zero() {
            return Ok((KodairaKind::IVStar, rescalings));
        }
        e = e.rst_transform(&Poly::zero(), &Poly::zero(), &pik(2, half(-a32)));
        if ord(&e.a4) < 4 {
            return Ok((KodairaKind::IIIStar, rescalings));
        }
        if ord(&e.a6) < 6 {
            return Ok((KodairaKind::IIStar, rescalings));
        }
        e = WeierstrassModel {
            a1: div_pi(&e.a1, 1),
            a2: div_pi(&e.a2, 2),
            a3: div_pi(&e.a3, 3),
            a4: div_pi(&e.a4, 4),
            a6: div_pi(&e.a6, 6),
        };
        rescalings += 1;
    }
}

/// The `I_n*` ladder: alternately test the `y`- and `x`-quadratics for a
/// double root and translate it away; returns `n ≥ 1`.
fn istar_subprocedure<F: Field>(mut e: WeierstrassModel<F>) -> u32 {
    let (mut ix, mut iy) = (3usize, 3usize);
    loop {
        // mx = π^(ix−1), my = π^(iy−1)
        let a3t = res(&div_pi(&e.a3, iy - 1));
        let a6t = res(&div_pi(&e.a6, ix + iy - 2));
        if !(a3t.clone() * &a3t + F::from_i64(4) * &a6t).is_zero() {
            break;
        }
        e = e.rst_transform(&Poly::zero(), &Poly::zero(), &pik(iy - 1, half(-a3t)));
        iy += 1;
        let a2t = res(&div_pi(&e.a2, 1));
        let a4t = res(&div_pi(&e.a4, ix));
        let a6t = res(&div_pi(&e.a6, ix + iy - 2));
        if !(a4t.clone() * &a4t - F::from_i64(4) * &a2t * &a6t).is_zero() {
            break;
        }
        let r = -(a4t * &(F::from_i64(2) * &a2t).inv().unwrap());
        e = e.rst_transform(&pik(ix - 1, r), &Poly::zero(), &Poly::zero());
        ix += 1;
    }
    (ix + iy - 5) as u32
}

/// Classification from `(ord Δ, ord c4, ord c6)` on a minimal model over a
/// residue field of characteristic zero; used as an independent oracle.
pub fn kodaira_from_orders(ord_disc: u32, ord_c4: u32, ord_c6: u32) -> KodairaKind {
    if ord_disc == 0 {
        return KodairaKind::I(0);
    }
    if ord_c4 == 0 {
        return KodairaKind::I(ord_disc);
    }
    match ord_disc {
        2 => KodairaKind::II,
        3 => KodairaKind::III,
        4 => KodairaKind::IV,
        8 => KodairaKind::IVStar,
        9 => KodairaKind::IIIStar,
        10 => KodairaKind::IIStar,
        n if ord_c4 == 2 && ord_c6 == 3 && n >= 6 => KodairaKind::IStar(n - 6),
        6 => KodairaKind::IStar(0),
        n => panic!("no Kodaira type for ord Δ = {n}, ord c4 = {ord_c4}, ord c6 = {ord_c6}"),
    }
}

impl<F: Field> WeierstrassModel<F> {
    /// Local model centred at a place (`t ↦ t + α`, or the model in `s = 1/t`).
    pub fn local_model(&self, place: &Place) -> Self {
        match place {
            Place::Finite(a) => self.translate(&F::from_rational(a.clone())),
            Place::Infinity => self.at_infinity(),
        }
    }

    /// Places of bad reduction, finite ones ascending then ∞.
    ///
    /// Errors if the discriminant has an irreducible factor of degree > 1
    /// over Q.
    pub fn bad_places(&self) -> Result<Vec<Place>> {
        let disc = self.discriminant();
        let roots = rational_roots_in(&disc)?;
        let rad = radical(&disc)?;
        let mut rest = rad;
        for r in &roots {
            rest = rest.exact_div(&Poly::linear_root(&F::from_rational(r.clone())))?;
        }
        // Over Q(√3) the radical may still split without rational roots; only
        // rational places are supported either way.
        if !rest.is_constant() {
            return Err(Error::ResidueExtension(rest.to_string()));
        }
        let mut out: Vec<Place> = roots.into_iter().map(Place::Finite).collect();
        if ord(&self.at_infinity().discriminant()) > 0 {
            out.push(Place::Infinity);
        }
        Ok(out)
    }

    pub fn classify_place(&self, place: &Place) -> Result<KodairaFiber> {
        let local = self.local_model(place);
        let (kind, rescalings) = tate_at_zero(&local)?;
        Ok(KodairaFiber {
            place: place.clone(),
            kind,
            m: kind.components(),
            m1: kind.simple_components(),
            ord_disc: ord(&local.discriminant()),
            rescalings,
        })
    }

    /// Tate's algorithm at every bad place.
    pub fn tate_classify(&self) -> Result<Vec<KodairaFiber>> {
        self.bad_places()?.iter().map(|p| self.classify_place(p)).collect()
    }
}
