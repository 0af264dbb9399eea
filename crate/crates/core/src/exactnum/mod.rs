//! Exact scalars, polynomials, rational functions and dense linear algebra.

mod field;
mod intpoly;
mod linalg;
mod poly;
mod quad;
mod ratfunc;
mod roots;

pub use field::{int, rat, Field};
pub use linalg::{dot, Matrix};
pub use poly::{from_roots, zpoly, Poly};
pub use quad::QuadElem;
pub use ratfunc::RatFunc;
pub use roots::{
    integer_roots, is_square_up_to_constant, radical, rational_roots, rational_roots_in, squarefree_decomposition,
    squarefree_part,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Q = BigRational;
pub type QPoly = Poly<BigRational>;
pub type QRatFunc = RatFunc<BigRational>;
