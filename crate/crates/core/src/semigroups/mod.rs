//! Numerical and affine semigroups and the constructions that combine them.

mod affine;
mod extension;
mod gluing;
mod join;
mod numerical;
mod term_order;

pub use affine::{AffineSemigroup, ElementSet, GapSet, MAX_BOX_POINTS};
pub use extension::{Extension, ExtensionSpec};
pub use gluing::{
    condition_a, condition_b, lcm_condition, GluedSemigroup, GluingSpec, GluingViolation, LcmConditionReport,
    LcmConvention, NiceClass, Side,
};
pub use join::{axis_join, join, Join};
pub use numerical::{FactorizationLengths, NumericalSemigroup};
pub use term_order::{TermOrderKind, TermOrderNd};
