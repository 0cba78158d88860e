//! Generated troubled-cell detection (relaxed discrete maximum principle
//! plus admissibility) for solver `euler_sod_limiting_n3`. Do not edit;
//! regenerate from the specification.
#![allow(dead_code)]

use pdegen::limiter::NeighborhoodExtrema;
use pdegen::user::UserSolver;

pub const DMP_DELTA0: f64 = 0.0001;
pub const DMP_EPSILON: f64 = 0.001;

/// True iff the candidate violates the relaxed DMP over its neighborhood
/// extrema, contains non-finite values, or fails admissibility on any
/// subcell mean.
pub fn detect(
    candidate_dofs: &[f64],
    candidate_means: &[f64],
    extrema: &NeighborhoodExtrema,
    user: &dyn UserSolver,
) -> bool {
    pdegen::limiter::detect_troubled(
        candidate_dofs,
        candidate_means,
        extrema,
        user,
        4,
        DMP_DELTA0,
        DMP_EPSILON,
    )
}
