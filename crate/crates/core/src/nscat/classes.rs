use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Matrix;
use crate::lattice::{close_vectors_reduced, integer_kernel, Lattice};
use crate::mwlat::CheckStep;

use super::data::{dsq_data, ns_basis, structure_vectors, RANK};

/// A class `Σ mᵢ Dᵢ` in the D-basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub m: [i64; RANK],
}

impl DivisorClass {
    pub fn zero() -> Self {
        DivisorClass { m: [0; RANK] }
    }

    /// `Dᵢ` for `i` in `1..=20`.
    pub fn unit(i: usize) -> Self {
        let mut c = Self::zero();
        c.m[i - 1] = 1;
        c
    }

    pub fn from_slice(m: &[i64]) -> Result<Self> {
        let m: [i64; RANK] =
            m.try_into().map_err(|_| Error::Dimension(format!("class of length {}, expected 20", m.len())))?;
        Ok(DivisorClass { m })
    }

    fn from_bigints(m: &[BigInt]) -> Result<Self> {
        let v = m
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| Error::Dimension("coordinate overflows i64".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_slice(&v)
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.m.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = *self;
        for (a, b) in r.m.iter_mut().zip(o.m) {
            *a += b;
        }
        r
    }

    pub fn neg(&self) -> Self {
        DivisorClass { m: self.m.map(|x| -x) }
    }

    pub fn scaled(&self, k: i64) -> Self {
        DivisorClass { m: self.m.map(|x| k * x) }
    }

    /// Intersection number with respect to the checked-in Gram matrix.
    pub fn dot(&self, o: &Self) -> Result<i64> {
        let g = &ns_basis()?.gram;
        Ok((0..RANK).map(|i| self.m[i] * (0..RANK).map(|j| g[i][j] * o.m[j]).sum::<i64>()).sum())
    }

    pub fn square(&self) -> Result<i64> {
        self.dot(self)
    }
}

impl fmt::Display for DivisorClass {
    /// `D17`, `D10+D11`, `2D10+D2-D3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.m.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}D{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Gram matrix as a lattice, labelled `D1..D20`. Errors if the
/// determinant is not −48.
pub fn ns_lattice() -> Result<Lattice> {
    let b = ns_basis()?;
    let rows: Vec<Vec<i64>> = b.gram.iter().map(|r| r.to_vec()).collect();
    let l = Lattice::from_i64_rows(&rows)?.with_labels(b.labels.iter().map(|l| l.name.clone()).collect())?;
    if l.disc() != BigRational::from_integer((-48).into()) {
        return Err(Error::Integrity(format!("det of the NS Gram matrix is {}, expected -48", l.disc())));
    }
    Ok(l)
}

/// `d = C·H` via the degree functional.
pub fn degree(c: &DivisorClass) -> Result<i64> {
    let w = &structure_vectors()?.degree_functional;
    Ok(c.m.iter().zip(w).map(|(a, b)| a * b).sum())
}

/// The class `H` with `H·Dᵢ` equal to the degree functional. Errors unless
/// it is integral with `H² = 6`.
pub fn hyperplane_class() -> Result<DivisorClass> {
    let l = ns_lattice()?;
    let w: Vec<BigRational> =
        structure_vectors()?.degree_functional.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let h = l.gram().solve(&w)?;
    if let Some(x) = h.iter().find(|x| !x.is_integer()) {
        return Err(Error::Integrity(format!("hyperplane class has non-integral coordinate {x}")));
    }
    let h = DivisorClass::from_bigints(&h.iter().map(|x| x.to_integer()).collect::<Vec<_>>())?;
    let h2 = h.square()?;
    if h2 != 6 {
        return Err(Error::Integrity(format!("H^2 = {h2}, expected 6")));
    }
    Ok(h)
}

/// Whether a `−2`-class is effective: exactly when `H·c > 0`.
pub fn rr_effective(c: &DivisorClass) -> Result<bool> {
    let s = c.square()?;
    if s != -2 {
        return Err(Error::NotMinusTwo(s.to_string()));
    }
    Ok(degree(c)? > 0)
}

/// All classes with `c·H = d` and `c² = 2g_a − 2`, sorted.
///
/// Writes `c = m₀ + Σ kⱼbⱼ` over a basis `bⱼ` of `H⊥`, completes the square
/// in the negative definite form on `H⊥` and enumerates the resulting
/// ellipsoid shell exactly.
pub fn enumerate_classes(d: i64, g_a: i64) -> Result<Vec<DivisorClass>> {
    if d % 2 != 0 {
        return Err(Error::OddDegree);
    }
    let l = ns_lattice()?;
    let g = l.gram();
    let hv = structure_vectors()?.degree_functional;
    let kernel = integer_kernel(&[hv.iter().map(|&x| BigInt::from(x)).collect()]);
    let q = |x: BigInt| BigRational::from_integer(x);
    // Columns of b span H⊥.
    let bt = Matrix::from_rows(kernel.iter().map(|v| v.iter().cloned().map(q).collect()).collect());
    let b = bt.transpose();
    let neg_gk = bt.mul(g)?.mul(&b)?.scale(&-BigRational::from_integer(1.into()));
    // hv·e₁ = 2.
    debug_assert_eq!(hv[0], 2);
    let mut m0 = DivisorClass::zero();
    m0.m[0] = d / 2;
    let m0q = m0.to_rationals();
    let w = bt.mul_vec(&g.mul_vec(&m0q));
    let center = neg_gk.solve(&w)?;
    let m0_sq = g.bilinear(&m0q, &m0q);
    let target = BigRational::from_integer((2 * g_a - 2).into());
    let bound = m0_sq - target + crate::exactnum::dot(&w, &center);
    if bound < BigRational::zero() {
        return Ok(vec![]);
    }
    let ks = close_vectors_reduced(&neg_gk, &center, &bound, true)?;
    let mut out = ks
        .iter()
        .map(|k| {
            let kq: Vec<BigRational> = k.iter().cloned().map(q).collect();
            let m: Vec<BigInt> = m0q.iter().zip(b.mul_vec(&kq)).map(|(a, c)| (a + c).to_integer()).collect();
            DivisorClass::from_bigints(&m)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Classes failing the diagonal form identity `Σ wⱼvⱼ² = 112(3 − 3g_a + k²)`
/// with `k = d/2`. An empty result means the printed forms agree.
pub fn dsq_mismatches(classes: &[DivisorClass], g_a: i64) -> Result<Vec<DivisorClass>> {
    let data = dsq_data()?;
    let mut bad = Vec::new();
    for c in classes {
        let k = degree(c)? / 2;
        let lhs = BigRational::from_integer((112 * (3 - 3 * g_a + k * k)).into());
        let rhs: BigRational = data
            .v
            .iter()
            .zip(&data.weights)
            .map(|(f, w)| {
                let v: i64 = f.m.iter().zip(&c.m).map(|(a, b)| a * b).sum::<i64>() + f.k * k;
                w * BigRational::from_integer((v * v).into())
            })
            .sum();
        if lhs != rhs {
            bad.push(*c);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub steps: Vec<CheckStep>,
    /// `[NS : L]` for `L` spanned by `D₁..D₁₆, C₁..C₄`.
    pub index: BigInt,
    pub disc: BigRational,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed) && self.index == BigInt::from(1)
    }

    pub fn failures(&self) -> Vec<&CheckStep> {
        self.steps.iter().filter(|s| !s.passed).collect()
    }
}

fn step(name: &str, detail: String, passed: bool) -> CheckStep {
    CheckStep { name: name.into(), detail, passed }
}

/// Checks that an 8×8 Gram is `−2` on the diagonal with a tree of `1`s
/// shaped like the E8 diagram (one trivalent node, arms of 1, 2 and 4).
fn e8_diagram(g: &[Vec<i64>], names: &[String]) -> std::result::Result<(), String> {
    let n = g.len();
    let mut adj = vec![vec![]; n];
    for i in 0..n {
        if g[i][i] != -2 {
            return Err(format!("{}^2 = {}, expected -2", names[i], g[i][i]));
        }
        for j in i + 1..n {
            match g[i][j] {
                0 => {}
                1 => {
                    adj[i].push(j);
                    adj[j].push(i);
                }
                v => return Err(format!("{}.{} = {v}, expected 0 or 1", names[i], names[j])),
            }
        }
    }
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 3).collect();
    if edges != n - 1 || branch.len() != 1 || adj.iter().any(|a| a.len() > 3 || a.is_empty()) {
        return Err("intersection graph is not the E8 tree".into());
    }
    let c = branch[0];
    let mut arms: Vec<usize> = adj[c]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                (prev, cur) = (cur, next);
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    if arms != [1, 2, 4] {
        return Err(format!("arms {arms:?}, expected [1, 2, 4]"));
    }
    Ok(())
}

/// Block checks for `E8(−1) ⊕ E8(−1) ⊕ ⟨−2⟩ ⊕ ⟨−24⟩ ⊕ U` in the D-basis.
pub fn decomposition_check() -> Result<DecompositionReport> {
    let l = ns_lattice()?;
    let sv = structure_vectors()?;
    let mut blocks: Vec<(String, Vec<(String, DivisorClass)>)> = Vec::new();
    for (name, r) in [("E8 D1..D8", 1..=8), ("E8 D9..D16", 9..=16)] {
        blocks.push((name.into(), r.map(|i| (format!("D{i}"), DivisorClass::unit(i))).collect()));
    }
    let c = |v: &[i64; RANK]| DivisorClass { m: *v };
    blocks.push(("<-2>".into(), vec![("C1".into(), c(&sv.c1))]));
    blocks.push(("<-24>".into(), vec![("C2".into(), c(&sv.c2))]));
    blocks.push(("U".into(), vec![("C3".into(), c(&sv.c3)), ("C4".into(), c(&sv.c4))]));

    let mut steps = Vec::new();
    let gram_of = |vs: &[(String, DivisorClass)]| -> Result<Vec<Vec<i64>>> {
        vs.iter().map(|(_, a)| vs.iter().map(|(_, b)| a.dot(b)).collect()).collect()
    };
    for (name, vs) in &blocks[..2] {
        let g = gram_of(vs)?;
        let names: Vec<String> = vs.iter().map(|v| v.0.clone()).collect();
        let sub = Lattice::from_i64_rows(&g)?;
        let shape = e8_diagram(&g, &names);
        let det_ok = sub.disc() == BigRational::from_integer(1.into());
        let neg_def = sub.signature() == (0, 8);
        let passed = shape.is_ok() && det_ok && neg_def;
        let detail = match shape {
            Err(e) => e,
            Ok(()) => format!("E8 diagram, det {}, signature {:?}", sub.disc(), sub.signature()),
        };
        steps.push(step(name, detail, passed));
    }
    for (name, vs, want) in [
        ("<-2>", &blocks[2].1, vec![vec![-2]]),
        ("<-24>", &blocks[3].1, vec![vec![-24]]),
        ("U", &blocks[4].1, vec![vec![0, 1], vec![1, 0]]),
    ] {
        let g = gram_of(vs)?;
        let mut detail = format!("Gram {g:?}");
        for i in 0..g.len() {
            for j in 0..g.len() {
                if g[i][j] != want[i][j] && detail.starts_with("Gram") {
                    detail = format!("{}.{} = {}, expected {}", vs[i].0, vs[j].0, g[i][j], want[i][j]);
                }
            }
        }
        steps.push(step(name, detail, g == want));
    }
    let mut offending = None;
    'outer: for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            for (na, a) in &blocks[i].1 {
                for (nb, b) in &blocks[j].1 {
                    let v = a.dot(b)?;
                    if v != 0 {
                        offending = Some(format!("{na}.{nb} = {v}, expected 0"));
                        break 'outer;
                    }
                }
            }
        }
    }
    steps.push(step(
        "orthogonality",
        offending.clone().unwrap_or_else(|| "all five blocks pairwise orthogonal".into()),
        offending.is_none(),
    ));
    let vectors: Vec<Vec<BigRational>> =
        blocks.iter().flat_map(|(_, vs)| vs.iter().map(|(_, v)| v.to_rationals())).collect();
    let rep = l.sublattice_check(&vectors)?;
    steps.push(step(
        "index",
        format!("disc L = {}, disc NS = {}, index {}", rep.disc_sub, rep.disc, rep.index),
        rep.holds,
    ));
    Ok(DecompositionReport { steps, index: rep.index, disc: rep.disc })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_basics() {
        let l = ns_lattice().unwrap();
        assert_eq!(l.disc(), BigRational::from_integer((-48).into()));
        assert!(l.is_even());
        assert_eq!(l.signature(), (1, 19));
        assert_eq!(DivisorClass::unit(3).dot(&DivisorClass::unit(20)).unwrap(), 1);
        assert_eq!(DivisorClass::unit(20).square().unwrap(), 0);
    }

    #[test]
    fn decomposition() {
        let r = decomposition_check().unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.index, BigInt::from(1));
        assert_eq!(r.steps.len(), 7);
    }

    #[test]
    fn degrees_and_h() {
        assert_eq!(degree(&DivisorClass::unit(3)).unwrap(), 2);
        assert_eq!(degree(&DivisorClass::unit(2)).unwrap(), 0);
        assert_eq!(degree(&DivisorClass::unit(20)).unwrap(), 4);
        let h = hyperplane_class().unwrap();
        assert_eq!(h.square().unwrap(), 6);
        assert_eq!(h.dot(&DivisorClass::unit(17)).unwrap(), 2);
        assert_eq!(degree(&h).unwrap(), 6);
        for i in 1..=20 {
            let c = DivisorClass::unit(i);
            assert_eq!(degree(&c).unwrap(), h.dot(&c).unwrap());
        }
    }

    #[test]
    fn effectivity() {
        let d17 = DivisorClass::unit(17);
        assert!(rr_effective(&d17).unwrap());
        assert!(!rr_effective(&d17.neg()).unwrap());
        assert_eq!(rr_effective(&DivisorClass::unit(20)), Err(Error::NotMinusTwo("0".into())));
    }

    #[test]
    fn odd_degree_is_rejected() {
        assert_eq!(enumerate_classes(1, 0), Err(Error::OddDegree));
    }

    #[test]
    fn exceptional_curves_in_degree_zero() {
        // Degree-0 (−2)-classes: ± one exceptional curve, since H⊥ has root system 12A1.
        let roots = enumerate_classes(0, 0).unwrap();
        assert_eq!(roots.len(), 24);
        assert!(roots.contains(&DivisorClass::unit(2)));
    }

    #[test]
    fn display() {
        let mut c = DivisorClass::unit(10).add(&DivisorClass::unit(11).scaled(2));
        c.m[2] = -1;
        assert_eq!(c.to_string(), "-D3+D10+2D11");
        assert_eq!(DivisorClass::zero().to_string(), "0");
    }
}
