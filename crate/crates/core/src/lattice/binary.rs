use std::fmt;

use num_integer::Roots;

use crate::error::{Error, Result};

use super::gram::Lattice;

/// The binary form with Gram matrix `[[a, b], [b, c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinaryForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        BinaryForm { a, b, c }
    }

    /// `ac − b²`.
    pub fn det(&self) -> i64 {
        self.a * self.c - self.b * self.b
    }

    pub fn is_even(&self) -> bool {
        self.a % 2 == 0 && self.c % 2 == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.det() > 0
    }

    pub fn value(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + 2 * self.b * x * y + self.c * y * y
    }

    pub fn gram(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.b, self.c]]
    }

    pub fn lattice(&self) -> Result<Lattice> {
        Lattice::from_i64_rows(&[vec![self.a, self.b], vec![self.b, self.c]])
    }

    /// In the SL₂(Z)-reduced domain `|2b| ≤ a ≤ c`, with `b ≥ 0` when
    /// `|2b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let tb = 2 * self.b;
        tb.abs() <= self.a && self.a <= self.c && (self.b >= 0 || (tb.abs() != self.a && self.a != self.c))
    }

    /// Sorted represented values `0 < f(x, y) ≤ bound`, with multiplicity.
    pub fn represented(&self, bound: i64) -> Vec<i64> {
        // f ≥ (det/c)·x² and f ≥ (det/a)·y², so |x|, |y| ≤ √(bound·max(a,c)/det).
        let r = ((bound * self.a.max(self.c)) / self.det()).sqrt() + 1;
        let mut out = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                let v = self.value(x, y);
                if v > 0 && v <= bound {
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.b, self.c)
    }
}

/// Reduced representatives of the SL₂(Z)-classes of positive definite
/// forms with `ac − b² = disc`, sorted by `(a, b, c)`.
///
/// Only definite forms are supported; `posdef = false` is an error.
pub fn reduced_forms(disc: i64, even: bool, posdef: bool) -> Result<Vec<BinaryForm>> {
    if !posdef {
        return Err(Error::NotDefinite);
    }
    if disc <= 0 {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    // Reduced forms satisfy 3a² ≤ 4(ac − b²).
    let amax = (4 * disc / 3).sqrt() + 1;
    for a in 1..=amax {
        for b in -(a / 2)..=(a / 2) {
            let num = disc + b * b;
            if num % a != 0 {
                continue;
            }
            let f = BinaryForm::new(a, b, num / a);
            if f.is_reduced() && (!even || f.is_even()) {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Whether the form is twice an even form, i.e. every represented value is
/// divisible by 4.
pub fn kummer_test(f: &BinaryForm) -> bool {
    f.a % 4 == 0 && f.c % 4 == 0 && f.b % 2 == 0
}

/// The four forms `[[2,0],[0,24]], [[4,0],[0,12]], [[6,0],[0,8]], [[8,4],[4,8]]`.
pub fn disc48_forms() -> Vec<BinaryForm> {
    vec![BinaryForm::new(2, 0, 24), BinaryForm::new(4, 0, 12), BinaryForm::new(6, 0, 8), BinaryForm::new(8, 4, 8)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_of_disc_48() {
        assert_eq!(reduced_forms(48, true, true).unwrap(), disc48_forms());
    }

    #[test]
    fn small_discs() {
        assert_eq!(reduced_forms(3, true, true).unwrap(), vec![BinaryForm::new(2, 1, 2)]);
        assert_eq!(reduced_forms(4, true, true).unwrap(), vec![BinaryForm::new(2, 0, 2)]);
        assert_eq!(reduced_forms(1, false, true).unwrap(), vec![BinaryForm::new(1, 0, 1)]);
        assert_eq!(reduced_forms(5, true, false), Err(Error::NotDefinite));
    }

    #[test]
    fn gl2_and_sl2_agree_at_48() {
        // Every disc-48 class is ambiguous: b = 0 or a = c = 2b.
        for f in disc48_forms() {
            assert!(f.b == 0 || f.a == f.c);
        }
    }

    #[test]
    fn pairwise_inequivalent() {
        let fs = disc48_forms();
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                assert_ne!(fs[i].represented(100), fs[j].represented(100));
            }
        }
    }

    #[test]
    fn kummer() {
        assert!(!kummer_test(&BinaryForm::new(2, 0, 24)));
        assert!(kummer_test(&BinaryForm::new(4, 0, 12)));
        assert!(!kummer_test(&BinaryForm::new(2, 0, 2)));
    }
}
