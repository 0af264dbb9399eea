use num_rational::BigRational;
use num_traits::Zero;

use crate::curve::{named, CurvePoint, KodairaFiber, WeierstrassModel};
use crate::error::{Error, Result};
use crate::exactnum::{is_square_up_to_constant, rat, Field, Matrix, QuadElem};

use super::height::{in_quarter_integers, HeightContext};

/// Whether `u(S) − e` with `e = 0` is a square in `C(t)`: every irreducible
/// factor of numerator and denominator occurs to even multiplicity.
pub fn square_class_test<F: Field>(s: &CurvePoint<F>) -> Result<bool> {
    let u = s.u().ok_or(Error::UseAnotherE)?;
    if u.is_zero() {
        return Err(Error::UseAnotherE);
    }
    Ok(is_square_up_to_constant(u.num())? && is_square_up_to_constant(u.den())?)
}

/// The torsion subgroup `{O, T₁, T₂, T₁+T₂}`.
///
/// Each element is checked to lie on the model and to be killed by 2; that
/// the torsion has order at most 4 is imported, not derived here.
pub fn torsion_subgroup<F: Field>(model: &WeierstrassModel<F>) -> Result<Vec<CurvePoint<F>>> {
    let ts = named::two_torsion::<F>();
    for t in &ts {
        if !model.mul(2, t)?.is_infinity() {
            return Err(Error::CheckFailed(format!("{t} is not 2-torsion")));
        }
    }
    let sum = model.add(&ts[1], &ts[2])?;
    if sum != ts[3] {
        return Err(Error::CheckFailed("T1 + T2 is not the third 2-torsion point".into()));
    }
    Ok(ts.to_vec())
}

/// Assumption recorded in certificates: the torsion order bound.
pub const TORSION_BOUND_NOTE: &str =
    "imported: the torsion subgroup over Q(sqrt3)(t) has order at most 4 (additive reduction)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckStep {
    pub name: String,
    pub detail: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub pp: BigRational,
    pub qq: BigRational,
    pub pq: BigRational,
    /// Gram matrix of `P, Q` in the pairing scaled by 4.
    pub gram: [[BigRational; 2]; 2],
    pub disc: BigRational,
    pub torsion_order: usize,
    pub steps: Vec<CheckStep>,
    pub assumptions: Vec<String>,
    /// `1` when `P, Q` and the torsion generate.
    pub index: Option<u32>,
}

impl SaturationReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed) && self.index == Some(1)
    }

    pub fn failures(&self) -> Vec<&CheckStep> {
        self.steps.iter().filter(|s| !s.passed).collect()
    }
}

/// Shows that `P, Q, T₁, T₂` generate the Mordell-Weil group over
/// `Q(√3)(t)`.
///
/// The sublattice spanned by `P, Q` in the pairing scaled by 4 has Gram
/// `[[6, 0], [0, 2]]` and discriminant 12; its index `n` in the full lattice
/// satisfies `n² | 12`, so `n ∈ {1, 2}`. Of the half-sums `P/2`, `Q/2` and
/// `(P+Q)/2`, only the last has integral scaled norm, and `n = 2` would make
/// `u(P + Q + T)` a square for some torsion `T`.
pub fn saturation_check() -> Result<SaturationReport> {
    let model = WeierstrassModel::<QuadElem>::generic_fiber();
    let ctx = HeightContext::new(&model)?;
    let p = named::p::<QuadElem>();
    let q = named::q();
    let pp = ctx.pairing(&p, &p)?;
    let qq = ctx.pairing(&q, &q)?;
    let pq = ctx.pairing(&p, &q)?;
    let four = rat(4, 1);
    let gram = [[&pp * &four, &pq * &four], [&pq * &four, &qq * &four]];
    let m = Matrix::from_rows(gram.iter().map(|r| r.to_vec()).collect());
    let disc = m.det()?;
    let torsion = torsion_subgroup(&model)?;
    let mut steps = Vec::new();
    let mut step = |name: &str, detail: String, passed: bool| {
        steps.push(CheckStep { name: name.into(), detail, passed });
    };
    step(
        "gram",
        format!("4<P,P> = {}, 4<Q,Q> = {}, 4<P,Q> = {}", gram[0][0], gram[1][1], gram[0][1]),
        gram == [[rat(6, 1), rat(0, 1)], [rat(0, 1), rat(2, 1)]],
    );
    step("disc", format!("disc = {disc}"), disc == rat(12, 1));
    let index_sq_divides: Vec<u32> = (1..=4u32).filter(|n| (&disc / rat((n * n) as i64, 1)).is_integer()).collect();
    step(
        "index",
        format!("n^2 | {disc} gives n in {index_sq_divides:?}"),
        index_sq_divides == vec![1, 2],
    );
    let quarter = [&pp, &qq, &pq].iter().all(|h| in_quarter_integers(h));
    step("quarter-integers", "pairing values lie in (1/4)Z".into(), quarter);
    // Scaled norms of the half-sums a·P/2 + b·Q/2.
    let half_norms: Vec<(String, BigRational)> = [(1, 0, "P"), (0, 1, "Q"), (1, 1, "P+Q")]
        .iter()
        .map(|&(a, b, name)| {
            let n = (&gram[0][0] * rat(a * a, 1) + &gram[1][1] * rat(b * b, 1) + &gram[0][1] * rat(2 * a * b, 1))
                / rat(4, 1);
            (name.to_string(), n)
        })
        .collect();
    let only_pq = half_norms.iter().all(|(name, n)| n.is_integer() == (name == "P+Q"));
    step(
        "half-sums",
        half_norms.iter().map(|(s, n)| format!("|({s})/2|^2 = {n}")).collect::<Vec<_>>().join(", "),
        only_pq,
    );
    let pq_sum = model.add(&p, &q)?;
    let mut all_non_square = true;
    for (i, t) in torsion.iter().enumerate() {
        let s = model.add(&pq_sum, t)?;
        let sq = square_class_test(&s)?;
        all_non_square &= !sq;
        step(&format!("descent-T{i}"), format!("u(P+Q+T{i}) square: {sq}"), !sq);
    }
    let index = if disc == rat(12, 1) && only_pq && all_non_square { Some(1) } else { None };
    Ok(SaturationReport {
        pp,
        qq,
        pq,
        gram,
        disc,
        torsion_order: torsion.len(),
        steps,
        assumptions: vec![TORSION_BOUND_NOTE.to_string()],
        index,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: u32,
    pub sum_m_minus_1: u32,
    pub rho: u32,
    pub at_maximum: bool,
}

/// `ρ = r + 2 + Σ_v (m_v − 1)`; 20 is the largest Picard number in
/// characteristic 0.
pub fn rank_formula_check(fibers: &[KodairaFiber], rank: u32) -> RankReport {
    let sum: u32 = fibers.iter().map(|f| f.m - 1).sum();
    let rho = rank + 2 + sum;
    RankReport { rank, sum_m_minus_1: sum, rho, at_maximum: rho == 20 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{zpoly, RatFunc};

    type Q = BigRational;

    #[test]
    fn square_classes() {
        let pt = |n: &[i64]| CurvePoint::<Q>::affine(RatFunc::from_poly(zpoly(n)), RatFunc::zero());
        assert!(square_class_test(&pt(&[0, 0, 1])).unwrap());
        assert!(!square_class_test(&pt(&[0, 0, 0, 1])).unwrap());
        assert_eq!(square_class_test(&named::t2::<Q>()), Err(Error::UseAnotherE));
        assert_eq!(square_class_test(&CurvePoint::<Q>::Infinity), Err(Error::UseAnotherE));
    }

    #[test]
    fn torsion_has_four_elements() {
        let m = WeierstrassModel::<Q>::generic_fiber();
        let t = torsion_subgroup(&m).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t[3].u().unwrap(), &RatFunc::from_poly(zpoly(&[0, -8, 0, 8])));
    }

    #[test]
    fn saturation() {
        let r = saturation_check().unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.disc, rat(12, 1));
        assert_eq!((r.pp.clone(), r.qq.clone(), r.pq.clone()), (rat(3, 2), rat(1, 2), rat(0, 1)));
    }

    #[test]
    fn rank_formula() {
        let fibers = WeierstrassModel::<Q>::generic_fiber().tate_classify().unwrap();
        let r = rank_formula_check(&fibers, 2);
        assert_eq!((r.sum_m_minus_1, r.rho, r.at_maximum), (16, 20, true));
        assert_eq!(rank_formula_check(&fibers, 1).rho, 19);
    }
}
