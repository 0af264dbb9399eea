use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Poly};

/// A nondegenerate lattice given by a rational Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    gram: Matrix<BigRational>,
    labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeReport {
    pub gram: Matrix<BigRational>,
    pub index: BigInt,
    pub disc_sub: BigRational,
    pub disc: BigRational,
    /// `disc L′ = index² · disc L`.
    pub holds: bool,
}

impl Lattice {
    pub fn new(gram: Matrix<BigRational>) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::Dimension(format!("{}x{} Gram matrix", gram.rows(), gram.cols())));
        }
        if !gram.is_symmetric() {
            return Err(Error::Dimension("Gram matrix is not symmetric".into()));
        }
        if gram.det()?.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Lattice { gram, labels: None })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Lattice::new(Matrix::from_i64_rows(rows))
    }

    /// The rank-one lattice `⟨n⟩`.
    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { entries[i] } else { 0 }).collect()).collect();
        Lattice::from_i64_rows(&rows)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Dimension(format!("{} labels for rank {}", labels.len(), self.rank())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<BigRational> {
        &self.gram
    }

    pub fn disc(&self) -> BigRational {
        self.gram.det().expect("square")
    }

    pub fn scale(&self, n: &BigRational) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Lattice { gram: self.gram.scale(n), labels: self.labels.clone() })
    }

    pub fn negated(&self) -> Self {
        Lattice { gram: self.gram.scale(&-BigRational::one()), labels: self.labels.clone() }
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (n, m) = (self.rank(), other.rank());
        let mut g = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.gram[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                g[(n + i, n + j)] = other.gram[(i, j)].clone();
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Lattice { gram: g, labels }
    }

    pub fn inner(&self, u: &[BigRational], v: &[BigRational]) -> BigRational {
        self.gram.bilinear(u, v)
    }

    pub fn norm(&self, v: &[BigRational]) -> BigRational {
        self.inner(v, v)
    }

    pub fn is_integral(&self) -> bool {
        self.gram.to_rows().iter().flatten().all(|x| x.is_integer())
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.rank()).all(|i| (self.gram[(i, i)].to_integer() % 2u32).is_zero())
    }

    /// Integer Gram entries; errors on a non-integral lattice.
    pub fn integer_gram(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_integral() {
            return Err(Error::Dimension("Gram matrix is not integral".into()));
        }
        Ok(self.gram.to_rows().iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect())
    }

    /// The lattice spanned by `vectors` (coordinates in this basis).
    pub fn sublattice(&self, vectors: &[Vec<BigRational>]) -> Result<Lattice> {
        let b = Matrix::from_rows(vectors.to_vec());
        let g = b.mul(&self.gram)?.mul(&b.transpose())?;
        Lattice::new(g).map_err(|e| match e {
            Error::Degenerate => Error::RankDeficient,
            e => e,
        })
    }

    /// `disc L′ = [L : L′]² · disc L` for a full-rank sublattice.
    pub fn sublattice_check(&self, vectors: &[Vec<BigRational>]) -> Result<SublatticeReport> {
        if vectors.len() != self.rank() {
            return Err(Error::RankDeficient);
        }
        let b = Matrix::from_rows(vectors.to_vec());
        let det = b.det()?;
        if det.is_zero() {
            return Err(Error::RankDeficient);
        }
        if !det.is_integer() {
            return Err(Error::Dimension("vectors are not integral combinations".into()));
        }
        let sub = self.sublattice(vectors)?;
        let index = det.to_integer().abs();
        let disc = self.disc();
        let disc_sub = sub.disc();
        let holds = disc_sub == &disc * BigRational::from_integer(&index * &index);
        Ok(SublatticeReport { gram: sub.gram, index, disc_sub, disc, holds })
    }

    /// Gram matrix in the basis `T·e` for an invertible integer `T`.
    pub fn change_basis(&self, t: &Matrix<BigRational>) -> Result<Lattice> {
        Ok(Lattice { gram: t.mul(&self.gram)?.mul(&t.transpose())?, labels: None })
    }

    /// Characteristic polynomial `det(x·I − G)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Poly<BigRational> {
        let n = self.rank();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = Matrix::<BigRational>::zeros(n, n);
        for k in 1..=n {
            // M_k = G·M_{k−1} + c_{n−k+1}·I
            let mut next = self.gram.mul(&m).expect("square");
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let gm = self.gram.mul(&m).expect("square");
            let tr: BigRational = (0..n).map(|i| gm[(i, i)].clone()).sum();
            coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
        }
        Poly::new(coeffs)
    }

    /// `(positive, negative)` eigenvalue counts of the symmetric Gram matrix.
    ///
    /// All roots of the characteristic polynomial are real, so Descartes'
    /// rule of signs is exact for it and for `p(−x)`.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.char_poly();
        let changes = |cs: Vec<BigRational>| {
            let signs: Vec<bool> = cs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let pos = changes(p.coeffs().to_vec());
        let neg_coeffs =
            p.coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect();
        (pos, changes(neg_coeffs))
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == (self.rank(), 0)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    pub(crate) fn e8_minus() -> Lattice {
        // Negative of the Cartan matrix of E8, Bourbaki numbering.
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        let mut g = vec![vec![0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = -2;
        }
        for (a, b) in edges {
            g[a][b] = 1;
            g[b][a] = 1;
        }
        Lattice::from_i64_rows(&g).unwrap()
    }

    fn u() -> Lattice {
        Lattice::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn discriminants() {
        assert_eq!(u().disc(), int(-1));
        assert_eq!(e8_minus().disc(), int(1));
        assert_eq!(u().scale(&int(3)).unwrap().disc(), int(-9));
        assert_eq!(Lattice::diagonal(&[1]).unwrap().scale(&int(-2)).unwrap(), Lattice::diagonal(&[-2]).unwrap());
        assert_eq!(u().scale(&int(0)), Err(Error::ZeroScale));
    }

    #[test]
    fn mw_scaling() {
        let mw = Lattice::new(Matrix::from_rows(vec![vec![rat(3, 2), int(0)], vec![int(0), rat(1, 2)]])).unwrap();
        assert_eq!(mw.scale(&int(4)).unwrap(), Lattice::diagonal(&[6, 2]).unwrap());
    }

    #[test]
    fn sublattices() {
        let z = Lattice::diagonal(&[1]).unwrap();
        let r = z.sublattice_check(&[vec![int(2)]]).unwrap();
        assert!(r.holds);
        assert_eq!(r.disc_sub, int(4));
        let r = u().sublattice_check(&[vec![int(3), int(0)], vec![int(0), int(1)]]).unwrap();
        assert_eq!((r.index, r.disc_sub, r.holds), (BigInt::from(3), int(-9), true));
        assert_eq!(u().sublattice_check(&[vec![int(1), int(1)], vec![int(2), int(2)]]), Err(Error::RankDeficient));
    }

    #[test]
    fn signatures() {
        assert_eq!(u().signature(), (1, 1));
        assert_eq!(e8_minus().signature(), (0, 8));
        assert_eq!(e8_minus().direct_sum(&u()).signature(), (1, 9));
        assert!(Lattice::diagonal(&[2, 24]).unwrap().is_positive_definite());
    }

    #[test]
    fn evenness() {
        assert!(e8_minus().is_even());
        assert!(!Lattice::diagonal(&[1]).unwrap().is_even());
        assert!(u().is_even());
    }
}
