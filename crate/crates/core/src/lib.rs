//! Exact arithmetic for the space of closed subgroups of `ℝ × ℤ`.
//!
//! * [`subgroup`] canonical forms, classification of finitely generated
//!   subgroups, membership.
//! * [`ball`] and [`metric`] the pointed Hausdorff (Chabauty) metric.
//! * [`charts`] coordinates on the Hawaiian earring, the cones and the glued
//!   model space, plus the Denjoy blow-up of the circle.
//! * [`verify`] brute-force oracles and deterministic property suites.

pub mod ball;
pub mod charts;
pub mod error;
pub mod metric;
pub mod rational;
pub mod subgroup;
pub mod verify;

pub use ball::{elements_in_ball, BallElements, Strip};
pub use charts::{
    chart_psi_i, chart_psi_i_inverse, chart_psi_ii_n, chart_psi_ii_n_inverse, chart_psi_iii_n,
    chart_psi_iii_n_inverse, denjoy_xi, glue_boundary, model_to_subgroup, subgroup_to_model,
    winding_count, winding_count_sampled, ConePoint, DenjoyCoord, EarringPoint, ModelPoint,
};
pub use error::{Error, Result};
pub use metric::{
    chabauty_distance, distance_point_to_subgroup, hausdorff_inclusion_ok, verify_limit,
    within_distance, DistanceBracket, LimitReport,
};
pub use rational::{ExtRational, Rational};
pub use subgroup::{
    canonicalize_params, classify_from_generators, eta_cyclic, membership, ClosedSubgroup,
    LevelSet, PointRZ, RawSubgroup,
};
pub use verify::{
    check_equivalence, oracle_closure_ball, run_suite, CaseResult, SuiteReport, XCoord, XPoint,
};
