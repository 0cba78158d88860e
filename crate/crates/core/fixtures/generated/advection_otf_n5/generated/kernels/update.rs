//! Generated DG corrector for solver `advection_otf_n5` (order 5,
//! 2D, 1 quantities). Do not edit; regenerate from the
//! specification.
#![allow(dead_code)]

use pdegen::basis::BasisTables;
use pdegen::kernels::{KernelConfig, PredictorResult};

const LEN: usize = 36;
const N_PTS: usize = 36;
static WEIGHTS: [f64; 6] = [0.08566224618958525, 0.1803807865240693, 0.23395696728634552, 0.23395696728634552, 0.1803807865240693, 0.08566224618958525];
static DIFF: [f64; 36] = [-14.290654263543217, 22.21856738978811, -12.805633361617708, 7.587122057936111, -3.7818229417186546, 1.0724211191553616, -2.446650944502819, -2.3497045620681885, 6.9771075936941145, -3.276687789274827, 1.5123802239776893, -0.4164445218259692, 0.6488246362813409, -3.2103008033638996, -0.5060525574186534, 4.19077785158206, -1.5076667947315059, 0.3844176676506583, -0.3844176676506581, 1.507666794731506, -4.19077785158206, 0.5060525574186543, 3.2103008033638987, -0.6488246362813412, 0.41644452182596886, -1.5123802239776893, 3.2766877892748267, -6.977107593694113, 2.349704562068185, 2.4466509445028217, -1.0724211191553603, 3.781822941718653, -7.5871220579361065, 12.805633361617701, -22.218567389788106, 14.290654263543217];
static PHI_LEFT: [f64; 6] = [1.5656732001510723, -0.9404628431763485, 0.6169300554304881, -0.3792277021146132, 0.19180001403866778, -0.05471272432926593];
static PHI_RIGHT: [f64; 6] = [-0.05471272432926588, 0.1918000140386677, -0.3792277021146132, 0.6169300554304878, -0.9404628431763484, 1.565673200151072];

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
        for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 6 == 0).enumerate() {
            for i in 0..6 {
                let pi = (base + i * 1) * 1;
                let scale = dt / (h * WEIGHTS[i]);
                for v in 0..1 {
                    let mut acc = 0.0;
                    let f = &pred.vol_flux[0];
                    for m in 0..6 {
                        acc += WEIGHTS[m] * DIFF[m * 6 + i] * f[(base + m * 1) * 1 + v];
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
        for (k, base) in (0..N_PTS).filter(|p| (p / 6) % 6 == 0).enumerate() {
            for i in 0..6 {
                let pi = (base + i * 6) * 1;
                let scale = dt / (h * WEIGHTS[i]);
                for v in 0..1 {
                    let mut acc = 0.0;
                    let f = &pred.vol_flux[1];
                    for m in 0..6 {
                        acc += WEIGHTS[m] * DIFF[m * 6 + i] * f[(base + m * 6) * 1 + v];
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
