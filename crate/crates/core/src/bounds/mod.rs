//! Log-space evaluation of constant chains and probability bounds.

pub mod container;
pub mod expectation;
pub mod lognum;
pub mod params;
pub mod real;
pub mod tails;

pub use container::{
    analytic_container_check, container_condition, empirical_container_check, stable_verdict,
    ContainerVerdict, DegreeProfile, StableVerdict,
};
pub use expectation::{
    cycles_in_complete, expected_short_cycle_counts, expected_short_cycle_counts_log, CycleExpectation,
    CycleKind, Nature,
};
pub use lognum::{LogNum, Sign, DEFAULT_PRECISION};
pub use params::{derive_params, floor_mul_log2, Check, ParamInput, ParamSet, Quantity, Theorem};
pub use real::Real;
pub use tails::{chernoff_tail, fkg_girth_bound, union_bound_sum, FkgBound};
