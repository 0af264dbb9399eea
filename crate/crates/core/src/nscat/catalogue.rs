use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use crate::curve::{KodairaKind, Place, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, QuadElem};
use crate::surface::{curve_orbit, singular_points};

use super::classes::{degree, enumerate_classes, DivisorClass};
use super::curves::{base_conic, basis_conics, class_of, conic_equations, nodes_on, Conic, Curve, Node};

fn basis_conic(i: usize) -> Conic {
    basis_conics().into_iter().find(|(j, _)| *j == i).expect("basis conic").1
}

/// The 63 conics: the orbits of `D₁₇`, `D₁₀` and `D₁₆`, in that order.
pub fn conic_orbits() -> Vec<(&'static str, Vec<Conic>)> {
    [("D17", 17), ("D10", 10), ("D16", 16)].into_iter().map(|(n, i)| (n, curve_orbit(&basis_conic(i)))).collect()
}

/// One class `C + Σ_{p ∈ T} E_p` with `T` a set of nodes on the conic `C`.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    /// `D17`, `D10` or `D16`: the orbit containing `C`.
    pub orbit: &'static str,
    pub conic: Conic,
    pub added: Vec<Node>,
    pub class: DivisorClass,
}

impl CatalogueEntry {
    /// Whether this is the strict transform of a conic on the singular surface.
    pub fn is_curve(&self) -> bool {
        self.added.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CatalogueReport {
    pub entries: Vec<CatalogueEntry>,
    /// Size of each conic orbit.
    pub orbit_sizes: Vec<(&'static str, usize)>,
    /// Entries per orbit.
    pub orbit_counts: Vec<(&'static str, usize)>,
    /// Enumerated classes missing from the catalogue.
    pub missing: Vec<DivisorClass>,
    /// Catalogued classes absent from the enumeration.
    pub extra: Vec<DivisorClass>,
    pub duplicates: usize,
}

impl CatalogueReport {
    pub fn curves(&self) -> impl Iterator<Item = &CatalogueEntry> {
        self.entries.iter().filter(|e| e.is_curve())
    }

    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicates == 0
    }
}

/// Classes of all 12 exceptional curves.
pub fn exceptional_classes() -> Result<Vec<(Node, DivisorClass)>> {
    singular_points().into_iter().map(|p| Ok((p.clone(), class_of(&Curve::Exceptional(p))?))).collect()
}

/// Builds every `C + Σ_{p ∈ T} E_p` and compares with `enumerate_classes(2, 0)`.
pub fn catalogue_441() -> Result<CatalogueReport> {
    let exc: BTreeMap<String, DivisorClass> =
        exceptional_classes()?.into_iter().map(|(p, c)| (format!("{:?}", p.integer_coords()), c)).collect();
    let mut entries = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut orbit_counts = Vec::new();
    for (name, orbit) in conic_orbits() {
        orbit_sizes.push((name, orbit.len()));
        let before = entries.len();
        for c in orbit {
            let base = class_of(&Curve::Conic(c.clone()))?;
            let nodes = nodes_on(&c);
            for mask in 0u32..(1 << nodes.len()) {
                let added: Vec<Node> =
                    nodes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect();
                let class = added.iter().fold(base, |acc, p| acc.add(&exc[&format!("{:?}", p.integer_coords())]));
                if class.square()? != -2 || degree(&class)? != 2 {
                    return Err(Error::CheckFailed(format!(
                        "{} with {} nodes: square {}, degree {}",
                        conic_equations(&c),
                        added.len(),
                        class.square()?,
                        degree(&class)?
                    )));
                }
                entries.push(CatalogueEntry { orbit: name, conic: c.clone(), added, class });
            }
        }
        orbit_counts.push((name, entries.len() - before));
    }
    let cat: BTreeSet<DivisorClass> = entries.iter().map(|e| e.class).collect();
    let duplicates = entries.len() - cat.len();
    let en: BTreeSet<DivisorClass> = enumerate_classes(2, 0)?.into_iter().collect();
    let missing = en.difference(&cat).copied().collect();
    let extra = cat.difference(&en).copied().collect();
    Ok(CatalogueReport { entries, orbit_sizes, orbit_counts, missing, extra, duplicates })
}

/// A component of a singular fibre.
#[derive(Clone, Debug)]
pub struct FiberComponent {
    pub curve: Curve,
    pub multiplicity: i64,
    pub class: DivisorClass,
}

#[derive(Clone, Debug)]
pub struct FiberReconstruction {
    pub place: Place,
    pub kind: KodairaKind,
    pub components: Vec<FiberComponent>,
    /// Intersection matrix of the components.
    pub graph: Vec<Vec<i64>>,
}

/// Value of `x − t·a` (or `a` at infinity) as a linear form.
fn fiber_form(place: &Place) -> [QuadElem; 6] {
    let mut f: [QuadElem; 6] = std::array::from_fn(|_| QuadElem::zero());
    match place {
        Place::Infinity => f[3] = QuadElem::from(BigRational::from_integer(1.into())),
        Place::Finite(t) => {
            f[0] = QuadElem::from(BigRational::from_integer(1.into()));
            f[3] = QuadElem::from(-t.clone());
        }
    }
    f
}

fn in_span(c: &Conic, f: &[QuadElem; 6]) -> bool {
    let mut rows: Vec<Vec<QuadElem>> = c.span().to_vec();
    let r = rows.len();
    rows.push(f.to_vec());
    Matrix::from_rows(rows).rank() == r
}

fn node_in_fiber(p: &Node, place: &Place) -> bool {
    let c = p.coords();
    match place {
        Place::Infinity => c[3].is_zero(),
        Place::Finite(t) => c[0] == t * &c[3],
    }
}

/// Whether an intersection matrix with multiplicities is the dual graph of
/// the given Kodaira type.
fn dual_graph_matches(kind: KodairaKind, g: &[Vec<i64>], mult: &[i64]) -> bool {
    let n = g.len();
    let off = |i: usize| (0..n).filter(|&j| j != i && g[i][j] != 0).collect::<Vec<_>>();
    match kind {
        KodairaKind::I(2) => n == 2 && g[0][1] == 2 && mult == [1, 1],
        KodairaKind::I(k) if k >= 3 => {
            n == k as usize
                && mult.iter().all(|&m| m == 1)
                && (0..n).all(|i| off(i).len() == 2 && off(i).iter().all(|&j| g[i][j] == 1))
                && {
                    // Connected 2-regular graph is a single cycle.
                    let mut seen = vec![false; n];
                    let mut stack = vec![0];
                    while let Some(i) = stack.pop() {
                        if !std::mem::replace(&mut seen[i], true) {
                            stack.extend(off(i));
                        }
                    }
                    seen.iter().all(|&s| s)
                }
        }
        KodairaKind::IStar(0) => {
            let Some(c) = (0..n).find(|&i| mult[i] == 2) else { return false };
            n == 5
                && mult.iter().filter(|&&m| m == 1).count() == 4
                && off(c).len() == 4
                && (0..n).filter(|&i| i != c).all(|i| off(i) == vec![c] && g[i][c] == 1)
        }
        _ => false,
    }
}

/// The components of every singular fibre with their classes, multiplicities
/// and dual graph. Conic components are the conics in the hyperplane
/// `x = t·a` other than the base conic; the others are exceptional curves
/// over nodes with `x = t·a`.
pub fn reconstruct_fiber_classes() -> Result<Vec<FiberReconstruction>> {
    let model: WeierstrassModel<BigRational> = WeierstrassModel::generic_fiber();
    let fibers = model.tate_classify()?;
    let conics: Vec<Conic> = conic_orbits().into_iter().flat_map(|(_, o)| o).collect();
    let fclass = DivisorClass::unit(20);
    let mut out = Vec::new();
    for fib in fibers {
        let f = fiber_form(&fib.place);
        let mut curves: Vec<Curve> = conics
            .iter()
            .filter(|c| in_span(c, &f) && **c != base_conic())
            .map(|c| Curve::Conic(c.clone()))
            .collect();
        curves.extend(
            singular_points().into_iter().filter(|p| node_in_fiber(p, &fib.place)).map(Curve::Exceptional),
        );
        let classes = curves.iter().map(class_of).collect::<Result<Vec<_>>>()?;
        // F = Σ μᵢ Xᵢ, solved exactly in the coordinates.
        let a = Matrix::from_rows(
            (0..20).map(|r| classes.iter().map(|c| BigRational::from_integer(c.m[r].into())).collect()).collect(),
        );
        let at = a.transpose();
        let rhs: Vec<BigRational> = fclass.to_rationals();
        let mu = at.mul(&a)?.solve(&at.mul_vec(&rhs))?;
        if a.mul_vec(&mu) != rhs || !mu.iter().all(|m| m.is_integer()) {
            return Err(Error::CheckFailed(format!("components at {} do not sum to F", fib.place)));
        }
        let mult: Vec<i64> = mu.iter().map(|m| i64::try_from(m.to_integer()).unwrap_or(0)).collect();
        let graph = classes.iter().map(|a| classes.iter().map(|b| a.dot(b)).collect()).collect::<Result<Vec<_>>>()?;
        for (c, x) in curves.iter().zip(&classes) {
            let expect_deg = if matches!(c, Curve::Exceptional(_)) { 0 } else { 2 };
            if x.square()? != -2 || x.dot(&fclass)? != 0 || degree(x)? != expect_deg {
                return Err(Error::CheckFailed(format!("component {c} at {} has class {x}", fib.place)));
            }
        }
        if !dual_graph_matches(fib.kind, &graph, &mult) {
            return Err(Error::CheckFailed(format!("dual graph at {} is not of type {:?}", fib.place, fib.kind)));
        }
        let components = curves
            .into_iter()
            .zip(classes)
            .zip(&mult)
            .map(|((curve, class), &multiplicity)| FiberComponent { curve, multiplicity, class })
            .collect();
        out.push(FiberReconstruction { place: fib.place, kind: fib.kind, components, graph });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nscat::dsq_mismatches;

    #[test]
    fn orbit_sizes() {
        let sizes: Vec<usize> = conic_orbits().iter().map(|(_, o)| o.len()).collect();
        assert_eq!(sizes, vec![9, 18, 36]);
    }

    #[test]
    fn catalogue_matches_enumeration() {
        let r = catalogue_441().unwrap();
        assert_eq!(r.entries.len(), 441);
        assert_eq!(r.orbit_counts, vec![("D17", 9), ("D10", 288), ("D16", 144)]);
        assert!(r.matches(), "missing {:?} extra {:?}", r.missing, r.extra);
        assert_eq!(r.curves().count(), 63);
        assert!(r.entries.iter().any(|e| e.class == DivisorClass::unit(17)));
        let classes: Vec<DivisorClass> = r.entries.iter().map(|e| e.class).collect();
        assert!(dsq_mismatches(&classes, 0).unwrap().is_empty());
    }

    #[test]
    fn fibers() {
        let fs = reconstruct_fiber_classes().unwrap();
        assert_eq!(fs.iter().map(|f| f.components.len()).sum::<usize>(), 22);
        let at2 = fs.iter().find(|f| f.place == Place::finite(2)).unwrap();
        let sum = at2.components.iter().fold(DivisorClass::zero(), |a, c| a.add(&c.class.scaled(c.multiplicity)));
        assert_eq!(sum, DivisorClass::unit(20));
        assert!(at2.components.iter().any(|c| c.class == DivisorClass::unit(14)));
        assert!(at2.components.iter().any(|c| c.class == DivisorClass::unit(16)));
        assert!(at2.components.iter().any(|c| c.class == DivisorClass::unit(13)));
        for t in [1, -1] {
            let f = fs.iter().find(|f| f.place == Place::finite(t)).unwrap();
            assert_eq!(f.components.iter().filter(|c| c.multiplicity == 2).count(), 1);
        }
        let central = fs.iter().find(|f| f.place == Place::finite(1)).unwrap();
        assert!(central.components.iter().any(|c| c.multiplicity == 2 && c.class == DivisorClass::unit(10)));
    }
}
