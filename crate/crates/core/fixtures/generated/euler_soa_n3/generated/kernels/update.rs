//! Generated DG corrector for solver `euler_soa_n3` (order 3,
//! 2D, 4 quantities). Do not edit; regenerate from the
//! specification.
#![allow(dead_code)]

use pdegen::basis::BasisTables;
use pdegen::kernels::{KernelConfig, PredictorResult};

const LEN: usize = 64;
const N_PTS: usize = 16;
static WEIGHTS: [f64; 4] = [0.17392742256872687, 0.32607257743127305, 0.32607257743127305, 0.17392742256872687];
static DIFF: [f64; 16] = [-6.664000472704567, 9.720308831370396, -4.217564696990358, 1.1612563383245296, -1.5151152295984676, -0.7688287844464168, 2.941340462561433, -0.6573964485165487, 0.6573964485165484, -2.9413404625614343, 0.7688287844464177, 1.5151152295984684, -1.1612563383245287, 4.217564696990358, -9.720308831370392, 6.664000472704563];
static PHI_LEFT: [f64; 4] = [1.5267881254572666, -0.8136324494869271, 0.40076152031165047, -0.11391719628198999];
static PHI_RIGHT: [f64; 4] = [-0.11391719628199003, 0.40076152031165074, -0.8136324494869279, 1.5267881254572673];

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
        for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 4 == 0).enumerate() {
            for i in 0..4 {
                let pi = (base + i * 1) * 4;
                let scale = dt / (h * WEIGHTS[i]);
                for v in 0..4 {
                    let mut acc = 0.0;
                    let f = &pred.vol_flux[0];
                    for m in 0..4 {
                        acc += WEIGHTS[m] * DIFF[m * 4 + i] * f[(base + m * 1) * 4 + v];
                    }
                    acc -= PHI_RIGHT[i] * fp[k * 4 + v];
                    acc += PHI_LEFT[i] * fm[k * 4 + v];
                    out[pi + v] += scale * acc;
                }
            }
        }
    }
    {
        let fm = &face_flux[2];
        let fp = &face_flux[3];
        for (k, base) in (0..N_PTS).filter(|p| (p / 4) % 4 == 0).enumerate() {
            for i in 0..4 {
                let pi = (base + i * 4) * 4;
                let scale = dt / (h * WEIGHTS[i]);
                for v in 0..4 {
                    let mut acc = 0.0;
                    let f = &pred.vol_flux[1];
                    for m in 0..4 {
                        acc += WEIGHTS[m] * DIFF[m * 4 + i] * f[(base + m * 4) * 4 + v];
                    }
                    acc -= PHI_RIGHT[i] * fp[k * 4 + v];
                    acc += PHI_LEFT[i] * fm[k * 4 + v];
                    out[pi + v] += scale * acc;
                }
            }
        }
    }
    out
}
