//! Generated Rusanov Riemann solver for solver `advection_otf_n5`
//! (2D, 1 quantities, 6 points per face).
//! Do not edit; regenerate from the specification.
#![allow(dead_code)]

use pdegen::kernels::{KernelConfig, KernelError};
use pdegen::user::UserSolver;

const N_FACE: usize = 6;

/// Rusanov flux on one face: F̂ = ½(F_L + F_R) − ½ s_max (q_R − q_L).
/// Returns (flux seen by the left cell, flux seen by the right cell).
#[allow(clippy::too_many_arguments)]
pub fn riemann(
    q_l: &[f64],
    q_r: &[f64],
    f_l: Option<&[f64]>,
    f_r: Option<&[f64]>,
    dir: usize,
    user: &dyn UserSolver,
    _cfg: &KernelConfig,
    extra_s: f64,
) -> Result<(Vec<f64>, Vec<f64>), KernelError> {
    let mut out_l = vec![0.0; N_FACE * 1];
    let mut out_r = vec![0.0; N_FACE * 1];
    let mut lam = [0.0f64; 1];
    for k in 0..N_FACE {
        let ql = &q_l[k * 1..k * 1 + 1];
        let qr = &q_r[k * 1..k * 1 + 1];
        if ql.iter().chain(qr.iter()).any(|x| !x.is_finite()) {
            return Err(KernelError::NonFinite("riemann input"));
        }
        let mut s_max = 0.0f64;
        user.eigenvalues(ql, dir, &mut lam);
        for &l in &lam {
            s_max = s_max.max(l.abs());
        }
        user.eigenvalues(qr, dir, &mut lam);
        for &l in &lam {
            s_max = s_max.max(l.abs());
        }
        s_max += extra_s;
        for v in 0..1 {
            let fl = f_l.map_or(0.0, |f| f[k * 1 + v]);
            let fr = f_r.map_or(0.0, |f| f[k * 1 + v]);
            let central = 0.5 * (fl + fr) - 0.5 * s_max * (qr[v] - ql[v]);
            out_l[k * 1 + v] = central;
            out_r[k * 1 + v] = central;
        }
        }
    Ok((out_l, out_r))
}
