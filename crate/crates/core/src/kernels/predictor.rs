//! Space-time predictor variants: Picard fixed point (nonlinear PDEs),
//! Cauchy-Kowalewski Taylor series (linear PDEs, all derivative levels
//! stored) and the memory-lean on-the-fly variant (linear PDEs, three
//! live buffers).

use super::ops::{
    accumulate_algebraic_terms, apply_spatial_operator, compute_flux_dir, extrapolate_to_face,
};
use super::{eval_gradients, KernelConfig, KernelError, PredictorResult};
use crate::basis::BasisTables;
use crate::user::UserSolver;

pub const PICARD_TOL: f64 = 1e-10;
pub const PICARD_FAIL_TOL: f64 = 1e-6;

/// Build the face traces from the time-averaged nodal state and flux.
fn faces_from_averages(
    qavg: &[f64],
    vol_flux: &[Vec<f64>],
    cfg: &KernelConfig,
    tables: &BasisTables,
) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let nf = cfg.nface() * cfg.q_pad;
    let mut face_q = vec![vec![0.0; nf]; 2 * cfg.dim];
    let mut face_f = vec![vec![0.0; nf]; 2 * cfg.dim];
    for dir in 0..cfg.dim {
        for side in 0..2 {
            extrapolate_to_face(qavg, dir, side, cfg, tables, &mut face_q[2 * dir + side]);
            if !vol_flux.is_empty() {
                extrapolate_to_face(
                    &vol_flux[dir],
                    dir,
                    side,
                    cfg,
                    tables,
                    &mut face_f[2 * dir + side],
                );
            }
        }
    }
    (face_q, face_f)
}

/// Predictor result from a single time-averaged state: evaluate flux and
/// algebraic terms on the average. Exact when those terms are (at most)
/// affine in Q, which is the precondition of the linear variants.
fn finalize_from_average(
    qavg: Vec<f64>,
    cfg: &KernelConfig,
    user: &dyn UserSolver,
    tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let grad = if cfg.terms.needs_gradient() {
        Some(eval_gradients(&qavg, cfg, tables))
    } else {
        None
    };
    let mut vol_flux = Vec::new();
    if cfg.terms.flux_like() {
        for dir in 0..cfg.dim {
            let mut f = vec![0.0; cfg.len()];
            compute_flux_dir(&qavg, grad.as_deref(), dir, cfg, user, &mut f);
            vol_flux.push(f);
        }
    }
    let mut vol_src = vec![0.0; cfg.len()];
    accumulate_algebraic_terms(&qavg, grad.as_deref(), 1.0, cfg, user, &mut vol_src);
    let (face_q, face_f) = faces_from_averages(&qavg, &vol_flux, cfg, tables);
    let result = PredictorResult {
        face_q,
        face_f,
        vol_flux,
        vol_src,
    };
    result.assert_finite()?;
    Ok(result)
}

/// Picard iteration on the space-time collocation system
/// Q_m = q0 + dt Σ_n T[m][n] L(Q_n), where T is the time-integration
/// matrix. Converges to ||Δ||_inf < 1e-10 or errs after 2(N+1) sweeps.
pub fn predictor_nonlinear_picard(
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &KernelConfig,
    tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let nt = tables.n_dof();
    let len = cfg.len();
    let mut qst: Vec<Vec<f64>> = vec![dofs.to_vec(); nt];
    let mut lop: Vec<Vec<f64>> = vec![vec![0.0; len]; nt];
    let mut flux_scratch = vec![0.0; len];
    let cap = 2 * nt;
    let mut residual = f64::INFINITY;
    for _ in 0..cap {
        for m in 0..nt {
            apply_spatial_operator(&qst[m], cfg, user, tables, &mut flux_scratch, &mut lop[m]);
        }
        residual = 0.0;
        for m in 0..nt {
            for idx in 0..len {
                let mut acc = dofs[idx];
                for (n, l) in lop.iter().enumerate() {
                    acc += dt * tables.time_int[m * nt + n] * l[idx];
                }
                residual = residual.max((acc - qst[m][idx]).abs());
                qst[m][idx] = acc;
            }
        }
        if !residual.is_finite() {
            return Err(KernelError::NonFinite("picard iteration"));
        }
        if residual < PICARD_TOL {
            break;
        }
    }
    if residual >= PICARD_FAIL_TOL {
        return Err(KernelError::NonConvergence { residual });
    }

    // exact time averages of the converged space-time polynomial
    let mut qavg = vec![0.0; len];
    for (m, q) in qst.iter().enumerate() {
        let w = tables.weights[m];
        for idx in 0..len {
            qavg[idx] += w * q[idx];
        }
    }
    let mut vol_flux = Vec::new();
    if cfg.terms.flux_like() {
        vol_flux = vec![vec![0.0; len]; cfg.dim];
    }
    let mut vol_src = vec![0.0; len];
    for (m, q) in qst.iter().enumerate() {
        let w = tables.weights[m];
        let grad = if cfg.terms.needs_gradient() {
            Some(eval_gradients(q, cfg, tables))
        } else {
            None
        };
        if cfg.terms.flux_like() {
            for dir in 0..cfg.dim {
                compute_flux_dir(q, grad.as_deref(), dir, cfg, user, &mut flux_scratch);
                for idx in 0..len {
                    vol_flux[dir][idx] += w * flux_scratch[idx];
                }
            }
        }
        accumulate_algebraic_terms(q, grad.as_deref(), w, cfg, user, &mut vol_src);
    }
    let (face_q, face_f) = faces_from_averages(&qavg, &vol_flux, cfg, tables);
    let result = PredictorResult {
        face_q,
        face_f,
        vol_flux,
        vol_src,
    };
    result.assert_finite()?;
    Ok(result)
}

/// Cauchy-Kowalewski procedure: time derivatives ∂_t^k Q = L^k(Q) for
/// k = 0..N are computed and all stored, then summed into the exact
/// Taylor time average Σ_k dt^k/(k+1)! · ∂_t^k Q.
pub fn predictor_linear_ck(
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &KernelConfig,
    tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let n = tables.order;
    let len = cfg.len();
    let mut flux_scratch = vec![0.0; len];
    let mut ders: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    ders.push(dofs.to_vec());
    for k in 1..=n {
        let mut next = vec![0.0; len];
        apply_spatial_operator(&ders[k - 1], cfg, user, tables, &mut flux_scratch, &mut next);
        ders.push(next);
    }
    let mut qavg = dofs.to_vec();
    let mut coeff = 1.0; // dt^k / (k+1)!
    for (k, der) in ders.iter().enumerate().skip(1) {
        coeff *= dt / (k as f64 + 1.0);
        for idx in 0..len {
            qavg[idx] += coeff * der[idx];
        }
    }
    finalize_from_average(qavg, cfg, user, tables)
}

/// On-the-fly variant of the Cauchy-Kowalewski predictor: mathematically
/// identical, but only three buffers (current derivative, next
/// derivative, accumulator) are live; directions inside L are processed
/// one at a time through the directional flux callback.
pub fn predictor_linear_otf(
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &KernelConfig,
    tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let n = tables.order;
    let len = cfg.len();
    let mut flux_scratch = vec![0.0; len];
    let mut cur = dofs.to_vec();
    let mut next = vec![0.0; len];
    let mut qavg = dofs.to_vec();
    let mut coeff = 1.0;
    for k in 1..=n {
        apply_spatial_operator(&cur, cfg, user, tables, &mut flux_scratch, &mut next);
        coeff *= dt / (k as f64 + 1.0);
        for idx in 0..len {
            qavg[idx] += coeff * next[idx];
        }
        std::mem::swap(&mut cur, &mut next);
    }
    finalize_from_average(qavg, cfg, user, tables)
}
