//! Generated DG corrector for solver `advection_n2` (order 2,
//! 2D, 1 quantities). Do not edit; regenerate from the
//! specification.
#![allow(dead_code)]

use pdegen::basis::BasisTables;
use pdegen::kernels::{KernelConfig, PredictorResult};

const LEN: usize = 9;
const N_PTS: usize = 9;
static WEIGHTS: [f64; 3] = [0.2777777777777776, 0.4444444444444444, 0.2777777777777776];
static DIFF: [f64; 9] = [-3.872983346207417, 5.163977794943222, -1.2909944487358056, -1.2909944487358056, -0.0, 1.2909944487358056, 1.2909944487358056, -5.163977794943222, 3.872983346207417];
static PHI_LEFT: [f64; 3] = [1.478830557701236, -0.6666666666666665, 0.1878361089654305];
static PHI_RIGHT: [f64; 3] = [0.1878361089654305, -0.6666666666666665, 1.478830557701236];

/// One corrector step: weak-form volume term plus surface terms from the
/// Riemann fluxes, scaled by dt/h and the inverse (diagonal) mass matrix.
pub fn update(
    dofs: &[f64],
    pred: &PredictorResult,
    face_flux: &[Vec<f64>],
    dt: f64,
    cfg: &KernelConfig,
    _tables: &BasisTables,
) -> Vec<f64> {
    let h = cfg.h;
    let mut out = dofs.to_vec();
    {
        let fm = &face_flux[0];
        let fp = &face_flux[1];
        for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 3 == 0).enumerate() {
            for i in 0..3 {
                let pi = (base + i * 1) * 1;
                let scale = dt / (h * WEIGHTS[i]);
                for v in 0..1 {
                    let mut acc = 0.0;
                    let f = &pred.vol_flux[0];
                    for m in 0..3 {
                        acc += WEIGHTS[m] * DIFF[m * 3 + i] * f[(base + m * 1) * 1 + v];
                    }
                    acc -= PHI_RIGHT[i] * fp[k * 1 + v];
                    acc += PHI_LEFT[i] * fm[k * 1 + v];
                    out[pi + v] += scale * acc;
                }
            }
        }
    }
    {
        let fm = &face_flux[2];
        let fp = &face_flux[3];
        for (k, base) in (0..N_PTS).filter(|p| (p / 3) % 3 == 0).enumerate() {
            for i in 0..3 {
                let pi = (base + i * 3) * 1;
                let scale = dt / (h * WEIGHTS[i]);
                for v in 0..1 {
                    let mut acc = 0.0;
                    let f = &pred.vol_flux[1];
                    for m in 0..3 {
                        acc += WEIGHTS[m] * DIFF[m * 3 + i] * f[(base + m * 3) * 1 + v];
                    }
                    acc -= PHI_RIGHT[i] * fp[k * 1 + v];
                    acc += PHI_LEFT[i] * fm[k * 1 + v];
                    out[pi + v] += scale * acc;
                }
            }
        }
    }
    out
}
