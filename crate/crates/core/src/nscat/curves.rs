//! Curves on the resolved surface and their classes in the D-basis.
//!
//! Every conic used here is `X ∩ Π` for a plane `Π` inside `x + y + z = 0`.
//! Intersection numbers are read off from how two such planes meet.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Poly, QuadElem};
use crate::surface::{equations, singular_points, LinearCurve, ProjPoint};

use super::classes::{ns_lattice, DivisorClass};
use super::data::{ns_basis, RANK};

pub type Conic = LinearCurve<QuadElem>;
pub type Node = ProjPoint<BigRational>;

fn q(n: i64) -> QuadElem {
    QuadElem::from(BigRational::from_integer(n.into()))
}

/// `n·√3/2`.
fn half_s3(n: i64) -> QuadElem {
    QuadElem::new(BigRational::zero(), BigRational::new(n.into(), 2.into()))
}

fn form(c: [i64; 6]) -> [QuadElem; 6] {
    c.map(q)
}

fn conic(forms: [[QuadElem; 6]; 2]) -> Conic {
    LinearCurve::new(forms.to_vec())
}

/// A generator of NS on the resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Curve {
    /// Strict transform of a plane conic.
    Conic(Conic),
    /// Exceptional curve over one of the 12 nodes.
    Exceptional(Node),
    /// The fibre class.
    Fiber,
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Conic(c) => write!(f, "conic {}", conic_equations(c)),
            Curve::Exceptional(p) => {
                let c = p.integer_coords();
                write!(f, "E[{}:{}:{}:{}:{}:{}]", c[0], c[1], c[2], c[3], c[4], c[5])
            }
            Curve::Fiber => write!(f, "F"),
        }
    }
}

/// The defining forms (beyond `x+y+z`) as `lin=0` strings in reduced form.
pub fn conic_equations(c: &Conic) -> String {
    let names = crate::surface::COORD_NAMES;
    let eq: Vec<String> = c.span()[1..]
        .iter()
        .map(|row| {
            let mut s = String::new();
            for (coef, n) in row.iter().zip(names) {
                if coef.is_zero() {
                    continue;
                }
                let t = if coef.is_one() {
                    n.to_string()
                } else if (-coef.clone()).is_one() {
                    format!("-{n}")
                } else {
                    format!("({coef}){n}")
                };
                if !s.is_empty() && !t.starts_with('-') {
                    s.push('+');
                }
                s.push_str(&t);
            }
            format!("{s}=0")
        })
        .collect();
    eq.join(", ")
}

/// The conic `x = a = 0` contained in every member of the pencil `x = t·a`.
pub fn base_conic() -> Conic {
    conic([form([1, 0, 0, 0, 0, 0]), form([0, 0, 0, 1, 0, 0])])
}

/// The twelve conic basis members, keyed by their D-index.
pub fn basis_conics() -> Vec<(usize, Conic)> {
    let z = QuadElem::zero();
    vec![
        // x = −2a, b + c = (√3/2)(y − z)
        (1, conic([form([1, 0, 0, 2, 0, 0]), [z.clone(), half_s3(-1), half_s3(1), q(0), q(1), q(1)]])),
        (3, conic([form([0, 0, 0, 1, 1, 0]), form([0, -1, 0, 0, 0, 1])])),
        (5, conic([form([1, 0, 0, 1, 0, 0]), form([0, 0, 0, 0, 1, -1])])),
        (7, conic([form([0, 0, 0, 1, 0, 1]), form([0, 0, -1, 0, 1, 0])])),
        (10, conic([form([-1, 0, 0, 1, 0, 0]), form([0, 0, 0, 0, 1, 1])])),
        (12, conic([form([0, 0, 0, 1, -1, 0]), form([0, 1, 0, 0, 0, 1])])),
        // x = 2a, 2(b − c) = √3(y − z)
        (14, conic([form([1, 0, 0, -2, 0, 0]), [z.clone(), half_s3(-2), half_s3(2), q(0), q(2), q(-2)]])),
        // z = 2b, c − a = (√3/2)(y − x)
        (15, conic([form([0, 0, 1, 0, -2, 0]), [half_s3(1), half_s3(-1), z.clone(), q(-1), q(0), q(1)]])),
        // x = 2a, 2(b − c) = √3(z − y)
        (16, conic([form([1, 0, 0, -2, 0, 0]), [z, half_s3(2), half_s3(-2), q(0), q(2), q(-2)]])),
        (17, conic([form([1, 0, 0, 0, 0, 0]), form([0, 0, 0, 0, 1, 0])])),
        (18, conic([form([0, 0, 0, 1, 0, 0]), form([0, 1, 0, 0, 0, 0])])),
        (19, conic([form([0, 0, 0, 1, 0, -1]), form([0, 1, 0, 0, 1, 0])])),
    ]
}

fn parse_node(s: &str) -> Result<Node> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let v: Vec<i64> = inner
        .split(':')
        .map(|x| x.trim().parse::<i64>().map_err(|e| Error::Integrity(format!("point {s}: {e}"))))
        .collect::<Result<_>>()?;
    let c: [i64; 6] = v.try_into().map_err(|_| Error::Integrity(format!("point {s}: expected 6 coordinates")))?;
    Ok(ProjPoint::from_i64(c))
}

/// `D₁..D₂₀` as geometric objects.
pub fn basis_curves() -> Result<Vec<Curve>> {
    let b = ns_basis()?;
    let conics = basis_conics();
    (1..=RANK)
        .map(|i| {
            let l = &b.labels[i - 1];
            if l.is_exceptional() {
                let p = parse_node(&l.description)?;
                if !singular_points().contains(&p) {
                    return Err(Error::Integrity(format!("{} = {} is not a node", l.name, l.description)));
                }
                Ok(Curve::Exceptional(p))
            } else if l.kind == "fiber" {
                Ok(Curve::Fiber)
            } else {
                conics
                    .iter()
                    .find(|(j, _)| *j == i)
                    .map(|(_, c)| Curve::Conic(c.clone()))
                    .ok_or_else(|| Error::Integrity(format!("no plane for {}", l.name)))
            }
        })
        .collect()
}

fn node_q(p: &Node) -> ProjPoint<QuadElem> {
    ProjPoint::new(p.coords().clone().map(QuadElem::from)).expect("nonzero")
}

fn is_node(p: &[QuadElem; 6]) -> bool {
    let Some(pp) = ProjPoint::new(p.clone()) else { return false };
    singular_points().iter().any(|n| node_q(n) == pp)
}

pub fn nodes_on(c: &Conic) -> Vec<Node> {
    singular_points().into_iter().filter(|p| c.contains(&node_q(p))).collect()
}

/// `e₂` and `e₃` along the line `p + s·d`.
fn restrict_to_line(p: &[QuadElem; 6], d: &[QuadElem; 6]) -> (Poly<QuadElem>, Poly<QuadElem>) {
    let l: Vec<Poly<QuadElem>> = (0..6).map(|i| Poly::new(vec![p[i].clone(), d[i].clone()])).collect();
    let [x, y, z, a, b, c] = [&l[0], &l[1], &l[2], &l[3], &l[4], &l[5]];
    let e2 = &(&(&(&(x * y) + &(y * z)) + &(z * x)) + &(a * a)) + &(&(b * b) + &(c * c));
    let e3 = &(&(x * y) * z) - (&(&(a * b) * c).scale(&q(2)));
    (e2, e3)
}

/// `C̃·D̃` for two distinct conics.
///
/// Where the planes meet in a point, the tangent lines of the two conics
/// there lie in different planes, so a smooth common point counts once and a
/// node is separated by the blow-up. Where they meet in a line `ℓ`, the
/// common points are `X ∩ ℓ`; tangency happens only at a double root.
pub fn conic_intersection(c: &Conic, d: &Conic) -> Result<i64> {
    let rows: Vec<Vec<QuadElem>> = c.span().iter().chain(d.span()).cloned().collect();
    let ns = Matrix::from_rows(rows).nullspace();
    let as6 = |v: &Vec<QuadElem>| -> [QuadElem; 6] { v.clone().try_into().expect("six coordinates") };
    match ns.len() {
        0 => Ok(0),
        1 => {
            let p = as6(&ns[0]);
            if equations(&p).iter().any(|e| !e.is_zero()) || is_node(&p) {
                Ok(0)
            } else {
                Ok(1)
            }
        }
        2 => {
            let (n0, n1) = (as6(&ns[0]), as6(&ns[1]));
            // A direction off the surface keeps every common point at finite s.
            let dir = (0..8)
                .map(|k| {
                    let mut v = n0.clone();
                    for (a, b) in v.iter_mut().zip(&n1) {
                        *a = a.clone() + &(b.clone() * &q(k));
                    }
                    v
                })
                .find(|v| equations(v).iter().any(|e| !e.is_zero()))
                .ok_or_else(|| Error::CheckFailed("line lies on the surface".into()))?;
            let (e2, e3) = restrict_to_line(&n1, &dir);
            let g = e2.gcd(&e3);
            if g.degree() != Some(2) {
                return Err(Error::CheckFailed(format!(
                    "planes of {} and {} meet in a line with {:?} surface points",
                    conic_equations(c),
                    conic_equations(d),
                    g.degree()
                )));
            }
            if g.gcd(&g.derivative()).degree() != Some(0) {
                return Err(Error::UnresolvedTangency(format!("{} / {}", conic_equations(c), conic_equations(d))));
            }
            let shared = nodes_on(c).iter().filter(|p| d.contains(&node_q(p))).count() as i64;
            Ok(2 - shared)
        }
        _ => Ok(-2),
    }
}

/// Intersection number of two generators on the resolution.
///
/// The fibre is `π*H − B̃` for the base conic `B`, so `F·C = 2 − B̃·C̃` and
/// `F·E = 0`.
pub fn intersection(u: &Curve, v: &Curve) -> Result<i64> {
    use Curve::*;
    match (u, v) {
        (Conic(c), Conic(d)) => {
            if c == d {
                Ok(-2)
            } else {
                conic_intersection(c, d)
            }
        }
        (Conic(c), Exceptional(p)) | (Exceptional(p), Conic(c)) => Ok(c.contains(&node_q(p)) as i64),
        (Exceptional(p), Exceptional(r)) => Ok(if p == r { -2 } else { 0 }),
        (Conic(c), Fiber) | (Fiber, Conic(c)) => {
            let b = base_conic();
            Ok(2 - if *c == b { -2 } else { conic_intersection(c, &b)? })
        }
        (Exceptional(_), Fiber) | (Fiber, Exceptional(_)) => Ok(0),
        (Fiber, Fiber) => Ok(0),
    }
}

/// The vector `(X·Dᵢ)ᵢ` computed geometrically.
pub fn intersection_vector(x: &Curve) -> Result<[i64; RANK]> {
    let basis = basis_curves()?;
    let mut v = [0i64; RANK];
    for (i, d) in basis.iter().enumerate() {
        v[i] = intersection(x, d)?;
    }
    Ok(v)
}

/// The class of a curve: the solution of `Gram·m = (X·Dᵢ)ᵢ`, which must be
/// integral.
pub fn class_of(x: &Curve) -> Result<DivisorClass> {
    let v = intersection_vector(x)?;
    let l = ns_lattice()?;
    let rhs: Vec<BigRational> = v.iter().map(|&n| BigRational::from_integer(n.into())).collect();
    let m = l.gram().solve(&rhs)?;
    if !m.iter().all(|c| c.is_integer()) {
        return Err(Error::Integrity(format!("class of {x} is not integral")));
    }
    DivisorClass::from_slice(&m.iter().map(|c| i64::try_from(c.to_integer()).unwrap_or(i64::MAX)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_reproduces_gram_rows() {
        let basis = basis_curves().unwrap();
        for (i, d) in basis.iter().enumerate() {
            assert_eq!(intersection_vector(d).unwrap(), ns_basis().unwrap().gram[i], "row of D{}", i + 1);
            assert_eq!(class_of(d).unwrap(), DivisorClass::unit(i + 1));
        }
    }

    #[test]
    fn base_conic_is_a_bisection() {
        let b = Curve::Conic(base_conic());
        assert_eq!(intersection(&b, &Curve::Fiber).unwrap(), 4);
    }

    #[test]
    fn node_counts() {
        let c = basis_conics();
        let count = |i: usize| nodes_on(&c.iter().find(|x| x.0 == i).unwrap().1).len();
        assert_eq!(count(17), 0);
        assert_eq!(count(10), 4);
        assert_eq!(count(16), 2);
    }
}
