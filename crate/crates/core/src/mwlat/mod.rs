//! Mordell-Weil arithmetic of the fibration: the height pairing, torsion,
//! the 2-descent square-class test, saturation and the Picard rank count.

mod descent;
mod height;

pub use descent::{
    rank_formula_check, saturation_check, square_class_test, torsion_subgroup, CheckStep, RankReport,
    SaturationReport, TORSION_BOUND_NOTE,
};
pub use height::{
    contribution_table, in_quarter_integers, Component, HeightContext, LocalHit, SectionLocalData, K3_CHI,
};
