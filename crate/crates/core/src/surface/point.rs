use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactnum::{Field, Matrix};

/// Coordinate order of all points and linear forms: `[x:y:z:a:b:c]`.
pub const COORD_NAMES: [&str; 6] = ["x", "y", "z", "a", "b", "c"];

/// A point of P⁵ with coordinates `[x:y:z:a:b:c]`, compared up to scalar.
#[derive(Clone, Debug)]
pub struct ProjPoint<F> {
    coords: [F; 6],
}

impl<F: Field> ProjPoint<F> {
    /// `None` if all coordinates vanish.
    pub fn new(coords: [F; 6]) -> Option<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            None
        } else {
            Some(ProjPoint { coords })
        }
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        ProjPoint::new(c.map(F::from_i64)).expect("nonzero point")
    }

    pub fn coords(&self) -> &[F; 6] {
        &self.coords
    }

    /// Scaled so that the first nonzero coordinate is 1.
    pub fn dehomogenized(&self) -> [F; 6] {
        let lead = self.coords.iter().find(|c| !c.is_zero()).unwrap();
        let inv = lead.inv().unwrap();
        self.coords.clone().map(|c| c * &inv)
    }

    /// Scaled by the field's normalizer (primitive integers over Q).
    pub fn normalized(&self) -> [F; 6] {
        let n = F::normalizer(&self.coords);
        self.coords.clone().map(|c| c * &n)
    }

    /// Values of `x+y+z`, `xy+yz+zx+a²+b²+c²` and `xyz−2abc`.
    pub fn equations(&self) -> [F; 3] {
        equations(&self.coords)
    }

    pub fn on_surface(&self) -> bool {
        self.equations().iter().all(|v| v.is_zero())
    }

    /// Rank of the 3×6 Jacobian of the defining equations at the point.
    pub fn jacobian_rank(&self) -> usize {
        jacobian(&self.coords).rank()
    }

    pub fn is_trivial(&self) -> bool {
        let [a, b, c] = [&self.coords[3], &self.coords[4], &self.coords[5]];
        let (a2, b2, c2) = (a.clone() * a, b.clone() * b, c.clone() * c);
        let q = a.clone() * b * c * &(a2.clone() - &b2) * &(b2 - &c2) * &(c2 - &a2);
        q.is_zero()
    }
}

impl ProjPoint<BigRational> {
    /// Primitive integer coordinates, first nonzero entry positive.
    pub fn integer_coords(&self) -> [BigInt; 6] {
        self.normalized().map(|c| c.to_integer())
    }
}

pub fn equations<F: Field>(p: &[F; 6]) -> [F; 3] {
    let [x, y, z, a, b, c] = p;
    let two = F::from_i64(2);
    let e1 = x.clone() + y + z;
    let e2 = x.clone() * y + &(y.clone() * z) + &(z.clone() * x) + &(a.clone() * a) + &(b.clone() * b)
        + &(c.clone() * c);
    let e3 = x.clone() * y * z - two * a * b * c;
    [e1, e2, e3]
}

pub fn jacobian<F: Field>(p: &[F; 6]) -> Matrix<F> {
    let [x, y, z, a, b, c] = p.clone();
    let two = F::from_i64(2);
    let m2 = F::from_i64(-2);
    Matrix::from_rows(vec![
        vec![F::one(), F::one(), F::one(), F::zero(), F::zero(), F::zero()],
        vec![
            y.clone() + &z,
            x.clone() + &z,
            x.clone() + &y,
            two.clone() * &a,
            two.clone() * &b,
            two * &c,
        ],
        vec![
            y.clone() * &z,
            x.clone() * &z,
            x.clone() * &y,
            m2.clone() * &b * &c,
            m2.clone() * &a * &c,
            m2 * &a * &b,
        ],
    ])
}

impl<F: Field> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dehomogenized() == other.dehomogenized()
    }
}

impl<F: Field> Eq for ProjPoint<F> {}

impl<F: Field> Hash for ProjPoint<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dehomogenized().hash(state)
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.normalized().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", s.join(":"))
    }
}
