//! Generated space-time predictor (Picard iteration) for solver
//! `euler_sod_limiting_n3` (order 3, 2D, 4 quantities).
//! Do not edit; regenerate from the specification.
#![allow(dead_code)]

use pdegen::basis::BasisTables;
use pdegen::kernels::predictor::{PICARD_FAIL_TOL, PICARD_TOL};
use pdegen::kernels::{KernelConfig, KernelError, PredictorResult};
use pdegen::user::UserSolver;















const LEN: usize = 64;
const N_PTS: usize = 16;
static WEIGHTS: [f64; 4] = [0.17392742256872687, 0.32607257743127305, 0.32607257743127305, 0.17392742256872687];
static DIFF: [f64; 16] = [-6.664000472704567, 9.720308831370396, -4.217564696990358, 1.1612563383245296, -1.5151152295984676, -0.7688287844464168, 2.941340462561433, -0.6573964485165487, 0.6573964485165484, -2.9413404625614343, 0.7688287844464177, 1.5151152295984684, -1.1612563383245287, 4.217564696990358, -9.720308831370392, 6.664000472704563];
static PHI_LEFT: [f64; 4] = [1.5267881254572666, -0.8136324494869271, 0.40076152031165047, -0.11391719628198999];
static PHI_RIGHT: [f64; 4] = [-0.11391719628199003, 0.40076152031165074, -0.8136324494869279, 1.5267881254572673];
static TIME_INT: [f64; 16] = [0.08696371128436345, -0.026604180084998794, 0.012627462689404723, -0.0035551496857956846, 0.18811811749986804, 0.16303628871563652, -0.02788042860247089, 0.00673550059453816, 0.16719192197418872, 0.353953006033744, 0.16303628871563647, -0.014190694931141152, 0.17748257225452255, 0.31344511474186837, 0.35267675751627164, 0.08696371128436339];

/// The discrete spatial operator L(q) = -1/h Σ_d D_d F_d(q).
fn spatial_op(user: &dyn UserSolver, h: f64, q: &[f64], out: &mut [f64]) {
    out.fill(0.0);
    let mut f_all = vec![0.0f64; 2 * LEN];
    for i in 0..16 {
        let o = i * 4;
        user.flux(&q[o..o + 4], 0, &mut f_all[0 + o..0 + o + 4]);
        user.flux(&q[o..o + 4], 1, &mut f_all[64 + o..64 + o + 4]);
        }
    for base in (0..N_PTS).filter(|p| (p / 1) % 4 == 0) {
        for i in 0..4 {
            let pi = (base + i * 1) * 4;
            for j in 0..4 {
                let d = -DIFF[i * 4 + j] / h;
                let pj = (base + j * 1) * 4;
                for v in 0..4 {
                    out[pi + v] += d * f_all[0 * LEN + pj + v];
                }
            }
        }
    }
    for base in (0..N_PTS).filter(|p| (p / 4) % 4 == 0) {
        for i in 0..4 {
            let pi = (base + i * 4) * 4;
            for j in 0..4 {
                let d = -DIFF[i * 4 + j] / h;
                let pj = (base + j * 4) * 4;
                for v in 0..4 {
                    out[pi + v] += d * f_all[1 * LEN + pj + v];
                }
            }
        }
    }
    }

/// Extrapolate the time-averaged state and normal flux to the 2·d faces
/// (face index 2·dir + side, nface·4 reals each).
fn faces(qavg: &[f64], vol_flux: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let nf = 16;
    let mut face_q = vec![vec![0.0; nf]; 4];
    let mut face_f = vec![vec![0.0; nf]; 4];
    for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 1) * 4;
            let phi = PHI_LEFT[j];
            for v in 0..4 {
                face_q[0][k * 4 + v] += phi * qavg[pj + v];
                face_f[0][k * 4 + v] += phi * vol_flux[0][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 1) * 4;
            let phi = PHI_RIGHT[j];
            for v in 0..4 {
                face_q[1][k * 4 + v] += phi * qavg[pj + v];
                face_f[1][k * 4 + v] += phi * vol_flux[0][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 4) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 4) * 4;
            let phi = PHI_LEFT[j];
            for v in 0..4 {
                face_q[2][k * 4 + v] += phi * qavg[pj + v];
                face_f[2][k * 4 + v] += phi * vol_flux[1][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 4) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 4) * 4;
            let phi = PHI_RIGHT[j];
            for v in 0..4 {
                face_q[3][k * 4 + v] += phi * qavg[pj + v];
                face_f[3][k * 4 + v] += phi * vol_flux[1][pj + v];
                }
        }
    }
    (face_q, face_f)
}

/// Picard iteration on the space-time collocation system
/// Q_m = q0 + dt Σ_n T[m][n] L(Q_n).
pub fn predictor(
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &KernelConfig,
    _tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let h = cfg.h;
    let mut qst: Vec<Vec<f64>> = vec![dofs.to_vec(); 4];
    let mut lop: Vec<Vec<f64>> = vec![vec![0.0; LEN]; 4];
    let mut residual = f64::INFINITY;
    for _ in 0..8 {
        for m in 0..4 {
            spatial_op(user, h, &qst[m], &mut lop[m]);
        }
        residual = 0.0;
        for m in 0..4 {
            for idx in 0..LEN {
                let mut acc = dofs[idx];
                for n in 0..4 {
                    acc += dt * TIME_INT[m * 4 + n] * lop[n][idx];
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
    let mut qavg = vec![0.0; LEN];
    for (m, q) in qst.iter().enumerate() {
        let w = WEIGHTS[m];
        for idx in 0..LEN {
            qavg[idx] += w * q[idx];
        }
    }
    let mut vol_flux = vec![vec![0.0; LEN]; 2];
    let vol_src = vec![0.0; LEN];
    for (m, q) in qst.iter().enumerate() {
        let w = WEIGHTS[m];
        let mut f_all = vec![0.0f64; 2 * LEN];
        for i in 0..16 {
        let o = i * 4;
        user.flux(&q[o..o + 4], 0, &mut f_all[0 + o..0 + o + 4]);
        user.flux(&q[o..o + 4], 1, &mut f_all[64 + o..64 + o + 4]);
        }
        for dir in 0..2 {
            for idx in 0..LEN {
                vol_flux[dir][idx] += w * f_all[dir * LEN + idx];
            }
        }
        let _ = w;
        }
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
