use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::Matrix;

use super::gram::Lattice;

type Q = BigRational;

/// `G = LDLᵀ` in the form `Q(x) = Σᵢ qᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²`.
#[derive(Clone, Debug)]
pub struct Cholesky {
    pub q: Vec<Q>,
    pub mu: Vec<Vec<Q>>,
}

/// Gram-Schmidt data of a Gram matrix: `b[i] = |bᵢ*|²` and `mu[i][j]` for
/// `j < i`. `None` if some `b[i] ≤ 0`.
fn gso(g: &Matrix<Q>) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    let n = g.rows();
    let mut b = vec![Q::zero(); n];
    let mut mu = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in 0..i {
            let mut s = g[(i, j)].clone();
            for l in 0..j {
                s -= &mu[j][l] * &mu[i][l] * &b[l];
            }
            mu[i][j] = s / &b[j];
        }
        let mut s = g[(i, i)].clone();
        for l in 0..i {
            s -= &mu[i][l] * &mu[i][l] * &b[l];
        }
        if !s.is_positive() {
            return None;
        }
        b[i] = s;
    }
    Some((b, mu))
}

pub fn cholesky(g: &Matrix<Q>) -> Result<Cholesky> {
    let (q, low) = gso(g).ok_or(Error::NotDefinite)?;
    let n = q.len();
    let mut mu = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            mu[i][j] = low[j][i].clone();
        }
    }
    Ok(Cholesky { q, mu })
}

/// Integers `x` with `(x − m)² ≤ r`.
fn int_range(m: &Q, r: &Q) -> Option<(BigInt, BigInt)> {
    if r.is_negative() {
        return None;
    }
    let s = r.floor().to_integer().sqrt();
    let f = m.floor().to_integer();
    let ok = |x: &BigInt| {
        let d = Q::from_integer(x.clone()) - m;
        &d * &d <= *r
    };
    let mut lo = &f - &s - 1;
    while !ok(&lo) && lo <= &f + &s + 2 {
        lo += 1;
    }
    let mut hi = &f + &s + 2;
    while !ok(&hi) && hi >= lo {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

struct Search<'a> {
    ch: &'a Cholesky,
    center: &'a [Q],
    bound: &'a Q,
    exact: bool,
}

impl Search<'_> {
    /// Depth-first from coordinate `i` down to 0, with `y[j] = x[j] − c[j]`
    /// fixed for `j > i` and `rest` the unused part of the bound.
    fn walk(&self, i: usize, x: &mut Vec<BigInt>, y: &mut Vec<Q>, rest: &Q, out: &mut Vec<Vec<BigInt>>) {
        let n = self.center.len();
        let mut m = self.center[i].clone();
        for j in i + 1..n {
            m -= &self.ch.mu[i][j] * &y[j];
        }
        let r = rest / &self.ch.q[i];
        let Some((lo, hi)) = int_range(&m, &r) else { return };
        let mut xi = lo;
        while xi <= hi {
            let xq = Q::from_integer(xi.clone());
            let d = &xq - &m;
            let left = rest - &self.ch.q[i] * &d * &d;
            x[i] = xi.clone();
            y[i] = &xq - &self.center[i];
            if i == 0 {
                if !self.exact || left.is_zero() {
                    out.push(x.clone());
                }
            } else {
                self.walk(i - 1, x, y, &left, out);
            }
            xi += 1;
        }
    }
}

/// All integer `x` with `Q(x − center) ≤ bound` (or `= bound` when `exact`),
/// sorted. The top coordinate's range is split across the rayon pool.
pub fn close_vectors(g: &Matrix<Q>, center: &[Q], bound: &Q, exact: bool) -> Result<Vec<Vec<BigInt>>> {
    let n = g.rows();
    if center.len() != n {
        return Err(Error::Dimension(format!("center of length {} for rank {n}", center.len())));
    }
    if n == 0 {
        return Ok(if !exact || bound.is_zero() { vec![vec![]] } else { vec![] });
    }
    let ch = cholesky(g)?;
    let s = Search { ch: &ch, center, bound, exact };
    let top = n - 1;
    let r = bound / &ch.q[top];
    let Some((lo, hi)) = int_range(&center[top], &r) else { return Ok(vec![]) };
    let mut tops = Vec::new();
    let mut t = lo;
    while t <= hi {
        tops.push(t.clone());
        t += 1;
    }
    let mut out: Vec<Vec<BigInt>> = tops
        .into_par_iter()
        .flat_map_iter(|xt| {
            let mut x = vec![BigInt::zero(); n];
            let mut y = vec![Q::zero(); n];
            let xq = Q::from_integer(xt.clone());
            let d = &xq - &center[top];
            let left = s.bound - &ch.q[top] * &d * &d;
            x[top] = xt;
            y[top] = d;
            let mut out = Vec::new();
            if top == 0 {
                if !s.exact || left.is_zero() {
                    out.push(x.clone());
                }
            } else {
                s.walk(top - 1, &mut x, &mut y, &left, &mut out);
            }
            out
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Nonzero vectors of norm exactly `norm`, both signs, sorted.
pub fn short_vectors(l: &Lattice, norm: &Q) -> Result<Vec<Vec<BigInt>>> {
    let zero = vec![Q::zero(); l.rank()];
    let mut v = close_vectors(l.gram(), &zero, norm, true)?;
    v.retain(|x| x.iter().any(|c| !c.is_zero()));
    Ok(v)
}

/// One of each `±v`: the one whose first nonzero coordinate is positive.
pub fn up_to_sign(vs: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    vs.iter()
        .filter(|v| v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive()))
        .cloned()
        .collect()
}

/// Box-scan oracle: vectors with coordinates in `[−r, r]` of norm `norm`.
pub fn naive_short_vectors(l: &Lattice, norm: &Q, r: i64) -> Vec<Vec<BigInt>> {
    let n = l.rank();
    let mut out = Vec::new();
    let mut x = vec![-r; n];
    loop {
        if x.iter().any(|&c| c != 0) {
            let v: Vec<Q> = x.iter().map(|&c| Q::from_integer(c.into())).collect();
            if l.norm(&v) == *norm {
                out.push(x.iter().map(|&c| BigInt::from(c)).collect());
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            x[i] += 1;
            if x[i] <= r {
                break;
            }
            x[i] = -r;
        }
    }
}

fn round(x: &Q) -> BigInt {
    (x + Q::new(1.into(), 2.into())).floor().to_integer()
}

/// LLL reduction of a positive definite Gram matrix with `δ = 3/4`.
///
/// Returns the reduced Gram `T·G·Tᵀ` and the unimodular `T`; row `i` of `T`
/// holds the coordinates of the `i`-th reduced vector.
pub fn lll(g: &Matrix<Q>) -> Result<(Matrix<Q>, Matrix<Q>)> {
    let n = g.rows();
    let delta = Q::new(3.into(), 4.into());
    let mut g = g.clone();
    let mut t = Matrix::<Q>::identity(n);
    let (mut b, mut mu) = gso(&g).ok_or(Error::NotDefinite)?;
    // b_k −= r·b_j on the basis, the Gram matrix and μ.
    let reduce = |g: &mut Matrix<Q>, t: &mut Matrix<Q>, mu: &mut Vec<Vec<Q>>, k: usize, j: usize, r: &Q| {
        for c in 0..n {
            let v = &t[(j, c)] * r;
            t[(k, c)] -= v;
        }
        for c in 0..n {
            let v = &g[(j, c)] * r;
            g[(k, c)] -= v;
        }
        for c in 0..n {
            let v = &g[(c, j)] * r;
            g[(c, k)] -= v;
        }
        for l in 0..j {
            let v = &mu[j][l] * r;
            mu[k][l] -= v;
        }
        mu[k][j] -= r;
    };
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let r = round(&mu[k][j]);
            if !r.is_zero() {
                reduce(&mut g, &mut t, &mut mu, k, j, &Q::from_integer(r));
            }
        }
        let lhs = b[k].clone();
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if lhs < rhs {
            for m in [&mut g, &mut t] {
                m.swap_rows(k, k - 1);
            }
            for r in 0..n {
                let (a, c) = (g[(r, k)].clone(), g[(r, k - 1)].clone());
                g[(r, k)] = c;
                g[(r, k - 1)] = a;
            }
            (b, mu) = gso(&g).ok_or(Error::NotDefinite)?;
            k = (k - 1).max(1);
        } else {
            k += 1;
        }
    }
    Ok((g, t))
}

/// [`close_vectors`] after LLL reduction; results are in the original
/// coordinates, sorted.
pub fn close_vectors_reduced(g: &Matrix<Q>, center: &[Q], bound: &Q, exact: bool) -> Result<Vec<Vec<BigInt>>> {
    let (rg, t) = lll(g)?;
    // x = Tᵀx′, so the center moves to c′ = T⁻ᵀ c.
    let tt = t.transpose();
    let c2 = tt.solve(center)?;
    let xs = close_vectors(&rg, &c2, bound, exact)?;
    let mut out: Vec<Vec<BigInt>> = xs
        .into_iter()
        .map(|x| {
            let xq: Vec<Q> = x.into_iter().map(Q::from_integer).collect();
            tt.mul_vec(&xq).into_iter().map(|c| c.to_integer()).collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn e8() -> Lattice {
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        let mut g = vec![vec![0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        Lattice::from_i64_rows(&g).unwrap()
    }

    #[test]
    fn z2_norm_one() {
        let l = Lattice::diagonal(&[1, 1]).unwrap();
        let v = short_vectors(&l, &int(1)).unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(up_to_sign(&v).len(), 2);
    }

    #[test]
    fn e8_roots() {
        assert_eq!(short_vectors(&e8(), &int(2)).unwrap().len(), 240);
        assert_eq!(short_vectors(&e8(), &int(4)).unwrap().len(), 2160);
    }

    #[test]
    fn form_2_24() {
        let l = Lattice::diagonal(&[2, 24]).unwrap();
        let v = short_vectors(&l, &int(2)).unwrap();
        let want: Vec<Vec<BigInt>> = vec![vec![(-1).into(), 0.into()], vec![1.into(), 0.into()]];
        assert_eq!(v, want);
    }

    #[test]
    fn indefinite_is_rejected() {
        let l = Lattice::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(short_vectors(&l, &int(2)), Err(Error::NotDefinite)));
    }

    #[test]
    fn lll_is_unimodular_and_preserves_vectors() {
        let g = Matrix::from_i64_rows(&[vec![10, 7, 3], vec![7, 6, 2], vec![3, 2, 5]]);
        let (rg, t) = lll(&g).unwrap();
        assert_eq!(t.det().unwrap().abs(), int(1));
        assert_eq!(t.mul(&g).unwrap().mul(&t.transpose()).unwrap(), rg);
        let c = vec![rat(1, 3), rat(-1, 2), rat(2, 5)];
        for bound in [int(3), rat(7, 2)] {
            assert_eq!(close_vectors(&g, &c, &bound, false).unwrap(), close_vectors_reduced(&g, &c, &bound, false).unwrap());
        }
    }
}
