//! A-posteriori subcell finite-volume limiting: DG<->FV projections on
//! the (2N+1)^d subgrid, troubled-cell detection and the robust FV
//! recompute cycle.

pub mod cycle;
pub mod detect;
pub mod fv;
pub mod projection;

pub use cycle::{limiter_cycle, CycleOutcome, LimiterError};
pub use detect::{detect_troubled, NeighborhoodExtrema};
pub use fv::{fv_subcell_step, minmod, FvFaceMeans, FvInadmissible};
pub use projection::{compute_projection_matrices, ProjectionPair};

#[cfg(test)]
mod tests;
