use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exactnum::{rational_roots, Poly, QPoly};

/// The entries `(a, b, c)` of the symmetric zero-diagonal matrix
/// `[[0, a, b], [a, 0, c], [b, c, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl MatrixTriple {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        MatrixTriple { a: a.into(), b: b.into(), c: c.into() }
    }

    /// Rows of the 3×3 matrix.
    pub fn matrix(&self) -> [[BigInt; 3]; 3] {
        let z = BigInt::zero;
        [
            [z(), self.a.clone(), self.b.clone()],
            [self.a.clone(), z(), self.c.clone()],
            [self.b.clone(), self.c.clone(), z()],
        ]
    }

    /// `λ³ − (a² + b² + c²)λ − 2abc`.
    pub fn char_poly(&self) -> QPoly {
        let s = &self.a * &self.a + &self.b * &self.b + &self.c * &self.c;
        let p = BigInt::from(2) * &self.a * &self.b * &self.c;
        Poly::new(vec![
            BigRational::from_integer(-p),
            BigRational::from_integer(-s),
            BigRational::zero(),
            BigRational::from_integer(1.into()),
        ])
    }

    /// Eigenvalues `x ≥ y ≥ z` when they are all integers.
    pub fn integral_eigenvalues(&self) -> Option<[BigInt; 3]> {
        let cp = self.char_poly();
        let roots = rational_roots(&cp).expect("nonzero cubic");
        let mut out = Vec::new();
        for r in roots {
            if !r.is_integer() {
                return None;
            }
            let m = cp.ord_at(&r).unwrap();
            for _ in 0..m {
                out.push(r.to_integer());
            }
        }
        if out.len() != 3 {
            return None;
        }
        out.sort_by(|a, b| b.cmp(a));
        Some([out[0].clone(), out[1].clone(), out[2].clone()])
    }

    /// `q(a, b, c) = abc(a² − b²)(b² − c²)(c² − a²)`.
    pub fn q(&self) -> BigInt {
        q_value(&self.a, &self.b, &self.c)
    }

    pub fn is_trivial(&self) -> bool {
        self.q().is_zero()
    }

    /// Sorted absolute values; the representative reported by [`search`].
    pub fn canonical(&self) -> MatrixTriple {
        let mut v = [self.a.abs(), self.b.abs(), self.c.abs()];
        v.sort();
        let [a, b, c] = v;
        MatrixTriple { a, b, c }
    }

    pub fn max_abs(&self) -> BigInt {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }
}

pub fn q_value(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    let (a2, b2, c2) = (a * a, b * b, c * c);
    a * b * c * (&a2 - &b2) * (&b2 - &c2) * (&c2 - &a2)
}

/// Integer eigenvalues of `M_{a,b,c}` for `0 < a, b, c`, or `None`.
///
/// With `abc > 0` exactly one eigenvalue `x` is positive and `s ≤ x² ≤ 4s/3`
/// where `s = a² + b² + c²`; the cubic is increasing there, so `x` is found by
/// integer bisection and the other two roots from `λ² + xλ + x² − s`.
pub fn eigen_fast(a: i64, b: i64, c: i64) -> Option<[i64; 3]> {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let s = a * a + b * b + c * c;
    let r = 2 * a * b * c;
    let p = |x: i128| x * x * x - s * x - r;
    let mut lo = s.sqrt();
    let mut hi = (4 * s / 3).sqrt() + 2;
    while lo < hi {
        let mid = (lo + hi) / 2;
        if p(mid) < 0 {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let x = lo;
    if p(x) != 0 {
        return None;
    }
    let disc = 4 * s - 3 * x * x;
    if disc < 0 {
        return None;
    }
    let d = disc.sqrt();
    if d * d != disc || (x + d) % 2 != 0 {
        return None;
    }
    let y = (-x + d) / 2;
    let z = (-x - d) / 2;
    Some([x as i64, y as i64, z as i64])
}

/// All nontrivial triples `0 < a ≤ b ≤ c ≤ max_val` with integral
/// eigenvalues, ordered by `(c, a, b)`.
///
/// Nontrivial forces `a < b < c`. Runs on the current rayon pool.
pub fn search(max_val: u32) -> Vec<MatrixTriple> {
    let n = max_val as i64;
    let mut hits: Vec<(i64, i64, i64)> = (1..=n)
        .into_par_iter()
        .flat_map_iter(|c| {
            (1..c).flat_map(move |b| {
                (1..b).filter_map(move |a| eigen_fast(a, b, c).map(|_| (c, a, b)))
            })
        })
        .collect();
    hits.sort();
    hits.into_iter().map(|(c, a, b)| MatrixTriple::new(a, b, c)).collect()
}

/// [`search`] on a dedicated pool with `workers` threads.
pub fn search_with_workers(max_val: u32, workers: usize) -> Vec<MatrixTriple> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| search(max_val))
}

/// Brute-force oracle: every triple in the box, tested with exact rational
/// roots of the characteristic polynomial.
pub fn search_naive(max_val: u32) -> Vec<MatrixTriple> {
    let mut out = Vec::new();
    for c in 1..=max_val as i64 {
        for a in 1..=c {
            for b in a..=c {
                let m = MatrixTriple::new(a, b, c);
                if !m.is_trivial() && m.integral_eigenvalues().is_some() {
                    out.push(m);
                }
            }
        }
    }
    out
}

impl MatrixTriple {
    pub fn to_i64(&self) -> Option<(i64, i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?, self.c.to_i64()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::zpoly;

    #[test]
    fn char_poly_examples() {
        assert_eq!(MatrixTriple::new(125, 99, 57).char_poly(), zpoly(&[-1410750, -28675, 0, 1]));
        assert_eq!(MatrixTriple::new(0, 0, 0).char_poly(), zpoly(&[0, 0, 0, 1]));
        assert_eq!(MatrixTriple::new(1, 1, 1).char_poly(), zpoly(&[-2, -3, 0, 1]));
    }

    #[test]
    fn eigenvalue_examples() {
        let e = |a, b, c| {
            MatrixTriple::new(a, b, c)
                .integral_eigenvalues()
                .map(|v| v.map(|x| x.to_i64().unwrap()))
        };
        assert_eq!(e(125, 99, 57), Some([190, -55, -135]));
        assert_eq!(e(1, 1, 1), Some([2, -1, -1]));
        assert_eq!(e(1, 2, 3), None);
        assert_eq!(eigen_fast(57, 99, 125), Some([190, -55, -135]));
        assert_eq!(eigen_fast(1, 1, 1), Some([2, -1, -1]));
    }

    #[test]
    fn triviality() {
        assert!(MatrixTriple::new(1, 1, 1).is_trivial());
        assert!(!MatrixTriple::new(125, 99, 57).is_trivial());
        assert!(MatrixTriple::new(0, 5, 7).is_trivial());
    }

    #[test]
    fn fast_path_matches_exact_roots() {
        for c in 1..=30i64 {
            for b in 1..=c {
                for a in 1..=b {
                    let exact = MatrixTriple::new(a, b, c)
                        .integral_eigenvalues()
                        .map(|v| v.map(|x| x.to_i64().unwrap()));
                    assert_eq!(eigen_fast(a, b, c), exact, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn small_box_is_empty() {
        assert!(search(20).is_empty());
        assert!(search_naive(20).is_empty());
    }
}
