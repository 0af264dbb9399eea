//! The elliptic fibration `x = t·a`: its Weierstrass model over `F(t)`,
//! the group law, singular fibres, and the translation between sections of
//! the surface and points of the generic fibre.

mod model;
pub mod named;
mod point;
mod sections;
mod tate;

pub use model::{two_torsion_roots, Invariants, WeierstrassModel};
pub use point::CurvePoint;
pub use sections::{param_to_point, point_to_param};
pub use tate::{kodaira_from_orders, tate_at_zero, KodairaFiber, KodairaKind, Place};
