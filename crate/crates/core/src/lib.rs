//! Exact computations around symmetric integral 3×3 matrices with zero
//! diagonal and integral eigenvalues, the elliptic K3 surface they define,
//! and its Néron-Severi lattice.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactnum;
pub mod surface;
pub mod curve;
pub mod mwlat;
pub mod lattice;
pub mod nscat;

pub use error::{Error, Result};
