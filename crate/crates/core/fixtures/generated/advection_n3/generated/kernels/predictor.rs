//! Generated space-time predictor (Cauchy-Kowalewski, all derivative
//! levels stored) for solver `advection_n3` (order 3, 2D,
//! 1 quantities). Do not edit; regenerate from the specification.
#![allow(dead_code)]

use pdegen::basis::BasisTables;
use pdegen::kernels::{KernelConfig, KernelError, PredictorResult};
use pdegen::user::UserSolver;















const LEN: usize = 16;
const N_PTS: usize = 16;
static WEIGHTS: [f64; 4] = [0.17392742256872687, 0.32607257743127305, 0.32607257743127305, 0.17392742256872687];
static DIFF: [f64; 16] = [-6.664000472704567, 9.720308831370396, -4.217564696990358, 1.1612563383245296, -1.5151152295984676, -0.7688287844464168, 2.941340462561433, -0.6573964485165487, 0.6573964485165484, -2.9413404625614343, 0.7688287844464177, 1.5151152295984684, -1.1612563383245287, 4.217564696990358, -9.720308831370392, 6.664000472704563];
static PHI_LEFT: [f64; 4] = [1.5267881254572666, -0.8136324494869271, 0.40076152031165047, -0.11391719628198999];
static PHI_RIGHT: [f64; 4] = [-0.11391719628199003, 0.40076152031165074, -0.8136324494869279, 1.5267881254572673];

/// The discrete spatial operator L(q) = -1/h Σ_d D_d F_d(q).
fn spatial_op(user: &dyn UserSolver, h: f64, q: &[f64], out: &mut [f64]) {
    out.fill(0.0);
    let mut f_all = vec![0.0f64; 2 * LEN];
    for i in 0..16 {
        let o = i * 1;
        user.flux(&q[o..o + 1], 0, &mut f_all[0 + o..0 + o + 1]);
        user.flux(&q[o..o + 1], 1, &mut f_all[16 + o..16 + o + 1]);
        }
    for base in (0..N_PTS).filter(|p| (p / 1) % 4 == 0) {
        for i in 0..4 {
            let pi = (base + i * 1) * 1;
            for j in 0..4 {
                let d = -DIFF[i * 4 + j] / h;
                let pj = (base + j * 1) * 1;
                for v in 0..1 {
                    out[pi + v] += d * f_all[0 * LEN + pj + v];
                }
            }
        }
    }
    for base in (0..N_PTS).filter(|p| (p / 4) % 4 == 0) {
        for i in 0..4 {
            let pi = (base + i * 4) * 1;
            for j in 0..4 {
                let d = -DIFF[i * 4 + j] / h;
                let pj = (base + j * 4) * 1;
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
    let nf = 4;
    let mut face_q = vec![vec![0.0; nf]; 4];
    let mut face_f = vec![vec![0.0; nf]; 4];
    for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 1) * 1;
            let phi = PHI_LEFT[j];
            for v in 0..1 {
                face_q[0][k * 1 + v] += phi * qavg[pj + v];
                face_f[0][k * 1 + v] += phi * vol_flux[0][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 1) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 1) * 1;
            let phi = PHI_RIGHT[j];
            for v in 0..1 {
                face_q[1][k * 1 + v] += phi * qavg[pj + v];
                face_f[1][k * 1 + v] += phi * vol_flux[0][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 4) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 4) * 1;
            let phi = PHI_LEFT[j];
            for v in 0..1 {
                face_q[2][k * 1 + v] += phi * qavg[pj + v];
                face_f[2][k * 1 + v] += phi * vol_flux[1][pj + v];
                }
        }
    }
    for (k, base) in (0..N_PTS).filter(|p| (p / 4) % 4 == 0).enumerate() {
        for j in 0..4 {
            let pj = (base + j * 4) * 1;
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
        for i in 0..16 {
        let o = i * 1;
        user.flux(&qavg[o..o + 1], 0, &mut f_all[0 + o..0 + o + 1]);
        user.flux(&qavg[o..o + 1], 1, &mut f_all[16 + o..16 + o + 1]);
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

/// Cauchy-Kowalewski procedure: time derivatives ∂_t^k Q = L^k(Q) for
/// k = 0..3 are computed and all stored, then summed into the
/// exact Taylor time average Σ_k dt^k/(k+1)! · ∂_t^k Q.
pub fn predictor(
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &KernelConfig,
    _tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    let h = cfg.h;
    let mut ders: Vec<Vec<f64>> = Vec::with_capacity(4);
    ders.push(dofs.to_vec());
    for k in 1..=3 {
        let mut next = vec![0.0; LEN];
        spatial_op(user, h, &ders[k - 1], &mut next);
        ders.push(next);
    }
    let mut qavg = dofs.to_vec();
    let mut coeff = 1.0; // dt^k / (k+1)!
    for (k, der) in ders.iter().enumerate().skip(1) {
        coeff *= dt / (k as f64 + 1.0);
        for idx in 0..LEN {
            qavg[idx] += coeff * der[idx];
        }
    }
    finalize(qavg, user, h)
}
