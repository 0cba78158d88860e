//! Troubled-cell detection: relaxed discrete maximum principle on subcell
//! means, non-finite screening, and the user's physical admissibility
//! callback.

use crate::user::UserSolver;

/// Per-variable extrema of the previous step's subcell means over the
/// Moore neighborhood (the cell and its face + corner neighbors).
#[derive(Debug, Clone)]
pub struct NeighborhoodExtrema {
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

/// A candidate is troubled iff any of:
/// (a) DMP violated: a subcell mean outside [min-δ, max+δ] with
///     δ = max(δ0, ε·(max−min)) per variable;
/// (b) any non-finite value among candidate DOFs or means;
/// (c) the admissibility callback rejects any subcell mean.
pub fn detect_troubled(
    candidate_dofs: &[f64],
    candidate_means: &[f64],
    extrema: &NeighborhoodExtrema,
    user: &dyn UserSolver,
    n_var: usize,
    dmp_delta0: f64,
    dmp_epsilon: f64,
) -> bool {
    if candidate_dofs.iter().any(|x| !x.is_finite())
        || candidate_means.iter().any(|x| !x.is_finite())
    {
        return true;
    }
    for v in 0..n_var {
        let (lo, hi) = (extrema.min[v], extrema.max[v]);
        let delta = dmp_delta0.max(dmp_epsilon * (hi - lo));
        for mean in candidate_means.chunks_exact(n_var) {
            if mean[v] < lo - delta || mean[v] > hi + delta {
                return true;
            }
        }
    }
    for mean in candidate_means.chunks_exact(n_var) {
        if !user.admissible(mean) {
            return true;
        }
    }
    false
}
