use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactnum::Matrix;

use super::gram::Lattice;
use super::snf::smith_normal_form;

/// Representative of `x mod 2Z` in `(−1, 1]`.
pub fn mod2(x: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mut r = x - (x / &two).floor() * &two;
    if r > BigRational::one() {
        r -= two;
    }
    r
}

/// Representative of `x mod Z` in `[0, 1)`.
pub fn mod1(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// `A_L = L*/L` with its quadratic form `q_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    /// Invariant factors `d₁ | d₂ | …`, all `> 1`.
    pub invariants: Vec<BigInt>,
    /// Generators of `L*` in `L ⊗ Q` coordinates, one per invariant factor.
    pub generators: Vec<Vec<BigRational>>,
    /// Rational Gram matrix of the generators (not reduced).
    pub form: Matrix<BigRational>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.invariants.iter().product()
    }

    /// `q(Σ cᵢ gᵢ)` reduced to `(−1, 1]`.
    pub fn q(&self, c: &[BigInt]) -> BigRational {
        let v: Vec<BigRational> = c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        mod2(&self.form.bilinear(&v, &v))
    }

    /// `q` on each generator.
    pub fn generator_values(&self) -> Vec<BigRational> {
        (0..self.invariants.len()).map(|i| mod2(&self.form[(i, i)])).collect()
    }

    /// The form `−q_L` on the same group.
    pub fn negated(&self) -> Self {
        DiscriminantGroup { form: self.form.scale(&-BigRational::one()), ..self.clone() }
    }

    /// Every value of `q` on `A_L`. Errors if the group has more than
    /// `10⁶` elements.
    pub fn values(&self) -> Result<BTreeSet<BigRational>> {
        let sizes: Vec<u64> = self
            .invariants
            .iter()
            .map(|d| d.to_u64().filter(|&d| d <= 1_000_000))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Dimension("discriminant group too large".into()))?;
        if sizes.iter().product::<u64>() > 1_000_000 {
            return Err(Error::Dimension("discriminant group too large".into()));
        }
        let mut out = BTreeSet::new();
        let mut c = vec![0u64; sizes.len()];
        loop {
            out.insert(self.q(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()));
            let mut i = 0;
            loop {
                if i == c.len() {
                    return Ok(out);
                }
                c[i] += 1;
                if c[i] < sizes[i] {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    pub fn attains(&self, value: &BigRational) -> Result<bool> {
        Ok(self.values()?.contains(&mod2(value)))
    }
}

/// `A_L` via the Smith normal form of the Gram matrix. Requires an even
/// integral lattice.
pub fn discriminant_form(l: &Lattice) -> Result<DiscriminantGroup> {
    if !l.is_integral() {
        return Err(Error::NotEvenIntegral);
    }
    if !l.is_even() {
        return Err(Error::NotEvenIntegral);
    }
    let g = l.integer_gram()?;
    let s = smith_normal_form(&g);
    // u·G·v = D, so G⁻¹·u⁻¹ = v·D⁻¹: the i-th column of v over dᵢ generates.
    let mut invariants = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in s.d.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let dq = BigRational::from_integer(d.clone());
        invariants.push(d.clone());
        generators.push(s.v.iter().map(|r| BigRational::from_integer(r[i].clone()) / &dq).collect::<Vec<_>>());
    }
    let x = Matrix::from_rows(generators.clone());
    let form = x.mul(l.gram())?.mul(&x.transpose())?;
    let dg = DiscriminantGroup { invariants, generators, form };
    let disc = l.disc();
    if BigRational::from_integer(dg.order()) != disc.abs() {
        return Err(Error::CheckFailed(format!("#A_L = {} but |disc L| = {}", dg.order(), disc.abs())));
    }
    for (i, d) in dg.invariants.iter().enumerate() {
        // d·g ∈ L.
        if !dg.generators[i].iter().all(|c| (c * BigRational::from_integer(d.clone())).is_integer()) {
            return Err(Error::CheckFailed(format!("generator {i} has order not dividing {d}")));
        }
    }
    Ok(dg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn diag_2_24() {
        let l = Lattice::diagonal(&[-2, -24]).unwrap();
        let a = discriminant_form(&l).unwrap();
        assert_eq!(a.invariants, vec![BigInt::from(2), BigInt::from(24)]);
        assert_eq!(a.generator_values(), vec![rat(-1, 2), rat(-1, 24)]);
        assert!(a.negated().attains(&rat(1, 24)).unwrap());
        assert!(!a.attains(&rat(1, 24)).unwrap());
    }

    #[test]
    fn z2() {
        let a = discriminant_form(&Lattice::diagonal(&[2]).unwrap()).unwrap();
        assert_eq!(a.invariants, vec![BigInt::from(2)]);
        assert_eq!(a.generator_values(), vec![rat(1, 2)]);
    }

    #[test]
    fn odd_is_rejected() {
        assert_eq!(discriminant_form(&Lattice::diagonal(&[1, 2]).unwrap()), Err(Error::NotEvenIntegral));
    }

    #[test]
    fn mod2_representatives() {
        assert_eq!(mod2(&rat(3, 2)), rat(-1, 2));
        assert_eq!(mod2(&rat(1, 1)), rat(1, 1));
        assert_eq!(mod2(&rat(-1, 1)), rat(1, 1));
        assert_eq!(mod2(&rat(-47, 24)), rat(1, 24));
    }

    #[test]
    fn only_2_24_attains_one_24th() {
        let hits: Vec<bool> = crate::lattice::disc48_forms()
            .iter()
            .map(|f| discriminant_form(&f.lattice().unwrap()).unwrap().attains(&rat(1, 24)).unwrap())
            .collect();
        assert_eq!(hits, vec![true, false, false, false]);
    }
}
