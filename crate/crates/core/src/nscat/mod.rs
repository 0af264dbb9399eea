//! The Néron-Severi lattice of the resolved surface in the basis `D₁..D₂₀`:
//! structure checks, the hyperplane class, enumeration of classes of given
//! degree and genus, and the catalogue of conics.

mod catalogue;
mod classes;
mod curves;
mod data;

pub use catalogue::{
    catalogue_441, conic_orbits, exceptional_classes, reconstruct_fiber_classes, CatalogueEntry, CatalogueReport,
    FiberComponent, FiberReconstruction,
};
pub use classes::{
    decomposition_check, degree, dsq_mismatches, enumerate_classes, hyperplane_class, ns_lattice, rr_effective,
    DecompositionReport, DivisorClass,
};
pub use curves::{
    base_conic, basis_conics, basis_curves, class_of, conic_equations, conic_intersection, intersection,
    intersection_vector, nodes_on, Conic, Curve, Node,
};
pub use data::{dsq_data, ns_basis, structure_vectors, BasisLabel, DsqData, DsqForm, NSBasis, StructureVectors, RANK};
