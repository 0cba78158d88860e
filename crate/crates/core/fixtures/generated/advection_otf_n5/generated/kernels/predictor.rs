//! Generated space-time predictor (Cauchy-Kowalewski, on-the-fly time
//! integral, three live buffers) for solver `advection_otf_n5` (order
//! 5, 2D, 1 quantities). Do not edit; regenerate
//! from the specification.
#![allow(dead_code)]

use pdegen::basis::BasisTables;
use pdegen::kernels::{KernelConfig, KernelError, PredictorResult};
use pdegen::user::UserSolver;















const LEN: usize = 36;
const N_PTS: usize = 36;
static WEIGHTS: [f64; 6] = [0.08566224618958525, 0.1803807865240693, 0.23395696728634552, 0.23395696728634552, 0.1803807865240693, 0.08566224618958525];
static DIFF: [f64; 36] = [-14.290654263543217, 22.21856738978811, -12.805633361617708, 7.587122057936111, -3.7818229417186546, 1.0724211191553616, -2.446650944502819, -2.3497045620681885, 6.9771075936941145, -3.276687789274827, 1.5123802239776893, -0.4164445218259692, 0.6488246362813409, -3.2103008033638996, -0.5060525574186534, 4.19077785158206, -1.5076667947315059, 0.3844176676506583, -0.3844176676506581, 1.507666794731506, -4.19077785158206, 0.5060525574186543, 3.2103008033638987, -0.6488246362813412, 0.41644452182596886, -1.5123802239776893, 3.2766877892748267, -6.977107593694113, 2.349704562068185, 2.4466509445028217, -1.0724211191553603, 3.781822941718653, -7.5871220579361065, 12.805633361617701, -22.218567389788106, 14.290654263543217];
static PHI_LEFT: [f64; 6] = [1.5656732001510723, -0.9404628431763485, 0.6169300554304881, -0.3792277021146132, 0.19180001403866778, -0.05471272432926593];
static PHI_RIGHT: [f64; 6] = [-0.05471272432926588, 0.1918000140386677, -0.3792277021146132, 0.6169300554304878, -0.9404628431763484, 1.565673200151072];

/// The discrete spatial operator L(q) = -1/h Σ_d D_d F_d(q).
fn spatial_op(user: &dyn UserSolver, h: f64, q: &[f64], out: &mut [f64]) {
    out.fill(0.0);
    let mut f_all = vec![0.0f64; 2 * LEN];
    for i in 0..36 {
        let o = i * 1;
        user.flux(&q[o..o + 1], 0, &mut f_all[0 + o..0 + o + 1]);
        user.flux(&q[o..o + 1], 1, &mut f_all[36 + o..36 + o + 1]);
        }
    for base in (0..N_PTS).filter(|p| (p / 1) % 6 == 0) {
        for i in 0..6 {
            let pi = (base + i * 1) * 1;
            for j in 0..6 {
                let d = -DIFF[i * 6 + j] / h;
                let pj = (base + j * 1) * 1;
                for v in 0..1 {
                    out[pi + v] += d * f_all[0 * LEN + pj + v];
                }
            }
        }
    }
    for base in (0..N_PTS).filter(|p| (p / 6) % 6 == 0) {
        for i in 0..6 {
            let pi = (base + i * 6) * 1;
            for j in 0..6 {
                let d = -DIFF[i * 6 + j] / h;
                let pj = (base + j * 6) * 1;
                for v in 0..1 {
                    out[pi + v] += d * f_all[1 * LEN + pj + v];
                }
            }
        }
    }
    }

/// Extrapolate the time-averaged state and normal flux to the 2·d faces
/// (face index 2·dir + side, nface·1 reals each).
fn faces(qavg: &[f64], vol_flux: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let nf = 6;
    let mut face_q = vec![vec![0.0; nf]; 4];
    let mut face_f = vec![vec![0.0; nf]; 4];
    for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 6 == 0).enumerate() {
        for j in 0..6 {
            let pj = (base + j * 1) * 1;
            let phi = PHI_LEFT[j];
            for v in 0..1 {
                face_q[0][k * 1 + v] += phi * qavg[pj + v];
                face_f[0][k * 1 + v] += phi * vol_flux[0][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 6 == 0).enumerate() {
        for j in 0..6 {
            let pj = (base + j * 1) * 1;
            let phi = PHI_RIGHT[j];
            for v in 0..1 {
                face_q[1][k * 1 + v] += phi * qavg[pj + v];
                face_f[1][k * 1 + v] += phi * vol_flux[0][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 6) % 6 == 0).enumerate() {
        for j in 0..6 {
            let pj = (base + j * 6) * 1;
            let phi = PHI_LEFT[j];
            for v in 0..1 {
                face_q[2][k * 1 + v] += phi * qavg[pj + v];
                face_f[2][k * 1 + v] += phi * vol_flux[1][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 6) % 6 == 0).enumerate() {
        for j in 0..6 {
            let pj = (base + j * 6) * 1;
            let phi = PHI_RIGHT[j];
            for v in 0..1 {
                face_q[3][k * 1 + v] += phi * qavg[pj + v];
                face_f[3][k * 1 + v] += phi * vol_flux[1][pj + v];
                }
        }
    }
    (face_q, face_f)
}

/// Assemble the predictor result from a single time-averaged state:
/// evaluate flux and algebraic terms on the average (exact for terms that
/// are at most affine in q).
fn finalize(qavg: Vec<f64>, user: &dyn UserSolver, h: f64) -> Result<PredictorResult, KernelError> {
    let _ = h;
    let mut vol_flux: Vec<Vec<f64>> = Vec::new();
    {
        let mut f_all = vec![0.0f64; 2 * LEN];
        for i in 0..36 {
        let o = i * 1;
        user.flux(&qavg[o..o + 1], 0, &mut f_all[0 + o..0 + o + 1]);
        user.flux(&qavg[o..o + 1], 1, &mut f_all[36 + o..36 + o + 1]);
        }
        for dir in 0..2 {
            vol_flux.push(f_all[dir * LEN..(dir + 1) * LEN].to_vec());
        }
    }
    let vol_src = vec![0.0f64; LEN];
    let (face_q, face_f) = faces(&qavg, &vol_flux);
    let result = PredictorResult {
        face_q,
        face_f,
        vol_flux,
        vol_src,
    };
    result.assert_finite()?;
    Ok(result)
}

/// On-the-fly Cauchy-Kowalewski predictor: mathematically identical to
/// the stored-derivative variant, but only three buffers (current
/// derivative, next derivative, accumulator) are live.
pub fn predictor(
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &KernelConfig,
    _tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let h = cfg.h;
    let mut cur = dofs.to_vec();
    let mut next = vec![0.0; LEN];
    let mut qavg = dofs.to_vec();
    let mut coeff = 1.0; // dt^k / (k+1)!
    for k in 1..=5 {
        spatial_op(user, h, &cur, &mut next);
        coeff *= dt / (k as f64 + 1.0);
        for idx in 0..LEN {
            qavg[idx] += coeff * next[idx];
        }
        std::mem::swap(&mut cur, &mut next);
    }
    finalize(qavg, user, h)
}
