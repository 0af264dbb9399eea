//! Integral and rational lattices: discriminants, sublattices, discriminant
//! forms, binary forms, and exact vector enumeration in definite lattices.

mod binary;
mod discform;
mod enumerate;
mod gram;
mod snf;

pub use binary::{disc48_forms, kummer_test, reduced_forms, BinaryForm};
pub use discform::{discriminant_form, mod1, mod2, DiscriminantGroup};
pub use enumerate::{
    cholesky, close_vectors, close_vectors_reduced, lll, naive_short_vectors, short_vectors, up_to_sign, Cholesky,
};
pub use gram::{Lattice, SublatticeReport};
pub use snf::{integer_kernel, smith_normal_form, IMat, Smith};
