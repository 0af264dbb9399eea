use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// `u · a · v = diag(d)` with `u`, `v` unimodular and `d₁ | d₂ | …`, all
/// `dᵢ ≥ 0`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub d: Vec<BigInt>,
    pub u: IMat,
    pub v: IMat,
}

struct Work {
    a: IMat,
    u: IMat,
    v: IMat,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
    }

    /// row_i -= q·row_j
    fn row_op(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let rj = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(rj) {
                *x -= q * y;
            }
        }
    }

    /// col_i -= q·col_j
    fn col_op(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                let y = r[j].clone();
                r[i] -= q * y;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn smith_normal_form(a: &[Vec<BigInt>]) -> Smith {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut w = Work { a: a.to_vec(), u: identity(m), v: identity(n) };
    let mut d = Vec::new();
    for t in 0..m.min(n) {
        // Smallest nonzero entry of the remaining block as pivot.
        let pick = |w: &Work| {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !w.a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = pick(&w) else {
            d.extend(std::iter::repeat_n(BigInt::zero(), m.min(n) - t));
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_op(i, t, &q);
                    if !w.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_op(j, t, &q);
                    if !w.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // Divisibility of the rest of the block.
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t])));
                match bad {
                    None => break,
                    Some(i) => {
                        let q = -BigInt::one();
                        w.row_op(t, i, &q);
                        continue;
                    }
                }
            }
            // Move the smallest entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..m {
                if !w.a[i][t].is_zero() && w.a[i][t].abs() < w.a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..n {
                if !w.a[t][j].is_zero() && w.a[t][j].abs() < w.a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            w.swap_rows(t, best.0);
            w.swap_cols(t, best.1);
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        d.push(w.a[t][t].clone());
    }
    Smith { d, u: w.u, v: w.v }
}

/// A Z-basis of `{x ∈ Zⁿ : a·x = 0}`.
pub fn integer_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.first().map_or(0, |r| r.len());
    let s = smith_normal_form(a);
    let rank = s.d.iter().filter(|x| !x.is_zero()).count();
    (rank..n).map(|j| s.v.iter().map(|r| r[j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IMat {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &IMat, b: &IMat) -> IMat {
        (0..a.len())
            .map(|i| {
                (0..b[0].len())
                    .map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn smith_of_small_matrices() {
        for a in [im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), im(&[&[0, 1], &[1, 0]]), im(&[&[6, 4], &[4, 6]])] {
            let s = smith_normal_form(&a);
            let d = mul(&mul(&s.u, &a), &s.v);
            for i in 0..d.len() {
                for j in 0..d[0].len() {
                    let want = if i == j { s.d[i].clone() } else { BigInt::zero() };
                    assert_eq!(d[i][j], want);
                }
            }
            for w in s.d.windows(2) {
                assert!(w[0].is_zero() && w[1].is_zero() || w[1].is_multiple_of(&w[0]));
            }
        }
        let s = smith_normal_form(&im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn kernel_of_row() {
        let a = im(&[&[2, 0, 4, 6]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 3);
        for v in &k {
            let s: BigInt = a[0].iter().zip(v).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
    }
}
