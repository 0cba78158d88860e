//! DG corrector: weak-form volume term plus surface terms from the
//! Riemann fluxes, scaled by dt/h and the inverse (diagonal) mass matrix.

use super::{KernelConfig, PredictorResult};
use crate::basis::BasisTables;

/// One corrector step. `face_flux[2*dir + side]` is the Riemann flux this
/// cell sees on that face (nface * q_pad). Returns the updated DOFs.
///
/// Update per node i along each direction:
///   u_i += dt/(h w_i) [ Σ_m w_m D[m][i] F_m − φ_i(1) F̂⁺ + φ_i(0) F̂⁻ ]
/// plus dt times the time-averaged algebraic volume term. Constants are
/// preserved exactly and the mesh sum of cell means telescopes to the
/// boundary fluxes.
pub fn correct_and_update(
    dofs: &[f64],
    pred: &PredictorResult,
    face_flux: &[Vec<f64>],
    dt: f64,
    cfg: &KernelConfig,
    tables: &BasisTables,
) -> Vec<f64> {
    let qp = cfg.q_pad;
    let nd = cfg.n_dof;
    let mut out = dofs.to_vec();
    for dir in 0..cfg.dim {
        let s = cfg.stride(dir);
        let fm = &face_flux[2 * dir];
        let fp = &face_flux[2 * dir + 1];
        for (k, base) in cfg.line_bases(dir).into_iter().enumerate() {
            for i in 0..nd {
                let pi = (base + i * s) * qp;
                let scale = dt / (cfg.h * tables.weights[i]);
                for v in 0..cfg.n_var {
                    let mut acc = 0.0;
                    if !pred.vol_flux.is_empty() {
                        let f = &pred.vol_flux[dir];
                        for m in 0..nd {
                            acc += tables.weights[m]
                                * tables.diff_at(m, i)
                                * f[(base + m * s) * qp + v];
                        }
                    }
                    acc -= tables.phi_right[i] * fp[k * qp + v];
                    acc += tables.phi_left[i] * fm[k * qp + v];
                    out[pi + v] += scale * acc;
                }
            }
        }
    }
    if cfg.terms.ncp || cfg.terms.source {
        for idx in 0..cfg.len() {
            out[idx] += dt * pred.vol_src[idx];
        }
    }
    out
}
