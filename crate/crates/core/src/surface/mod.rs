//! The surface of zero-diagonal symmetric matrices with prescribed
//! eigenvalues, its symmetry group, and polynomial families of matrices.

mod group;
mod matrix;
mod param;
mod point;

pub use group::{curve_orbit, g_elements, point_orbit, GroupElement, LinearCurve};
pub use matrix::{eigen_fast, q_value, search, search_naive, search_with_workers, MatrixTriple};
pub use param::Parametrization;
pub use point::{equations, jacobian, ProjPoint, COORD_NAMES};

use num_rational::BigRational;

/// Representative of the singular orbit.
pub fn singular_representative() -> ProjPoint<BigRational> {
    ProjPoint::from_i64([2, -1, -1, 1, 1, 1])
}

/// The 12 singular points: the orbit of [`singular_representative`].
pub fn singular_points() -> Vec<ProjPoint<BigRational>> {
    point_orbit(&singular_representative())
}
