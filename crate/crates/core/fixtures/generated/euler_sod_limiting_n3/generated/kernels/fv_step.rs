//! Generated subcell finite-volume step (MUSCL + Rusanov with
//! first-order fallback) for solver `euler_sod_limiting_n3` (7^2
//! subgrid). Do not edit; regenerate from the specification.
#![allow(dead_code)]

use pdegen::kernels::TermFlags;
use pdegen::limiter::{FvFaceMeans, FvInadmissible};
use pdegen::user::UserSolver;

pub const N_SUB: usize = 7;

const TERMS: TermFlags = TermFlags {
    flux: true,
    ncp: false,
    source: false,
    viscous: false,
};

/// Advance the extended (haloed) subcell block one FV substep; returns
/// the updated interior means and the per-face flux means used for
/// conservation reconciliation.
pub fn fv_step(
    ext: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    h_sub: f64,
) -> Result<(Vec<f64>, FvFaceMeans), FvInadmissible> {
    pdegen::limiter::fv_subcell_step(ext, N_SUB, 2, 4, user, &TERMS, dt, h_sub)
}
