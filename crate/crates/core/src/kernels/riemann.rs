//! Rusanov (local Lax-Friedrichs) Riemann solver on a face, with the
//! path-conservative jump terms for non-conservative products.

use super::{KernelConfig, KernelError};
use crate::user::UserSolver;

/// Solve the Riemann problems on one face (nface points, q_pad stride).
///
/// `f_l`/`f_r` are the boundary-extrapolated normal flux traces of the
/// two cells (None for PDEs without a flux-like term). Returns the pair
/// (flux seen by the left cell at its high face, flux seen by the right
/// cell at its low face). Without an ncp term the two are identical:
///   F̂ = ½(F_L + F_R) − ½ s_max (q_R − q_L).
/// With ncp the sides additionally receive ±½ B((q_L+q_R)/2)·(q_R−q_L)·n,
/// which reproduces the upwind scheme for pure non-conservative advection.
///
/// `extra_s` is added to s_max (viscous penalty; 0 otherwise).
#[allow(clippy::too_many_arguments)]
pub fn riemann_rusanov(
    q_l: &[f64],
    q_r: &[f64],
    f_l: Option<&[f64]>,
    f_r: Option<&[f64]>,
    dir: usize,
    user: &dyn UserSolver,
    cfg: &KernelConfig,
    extra_s: f64,
) -> Result<(Vec<f64>, Vec<f64>), KernelError> {
    let qp = cfg.q_pad;
    let nv = cfg.n_var;
    let nf = cfg.nface();
    let mut out_l = vec![0.0; nf * qp];
    let mut out_r = vec![0.0; nf * qp];
    let mut lam = vec![0.0; nv];
    let mut qavg = vec![0.0; nv];
    let mut jump_grad = vec![0.0; cfg.dim * nv];
    let mut bjump = vec![0.0; nv];
    for k in 0..nf {
        let ql = &q_l[k * qp..k * qp + nv];
        let qr = &q_r[k * qp..k * qp + nv];
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
        for v in 0..nv {
            let fl = f_l.map_or(0.0, |f| f[k * qp + v]);
            let fr = f_r.map_or(0.0, |f| f[k * qp + v]);
            let central = 0.5 * (fl + fr) - 0.5 * s_max * (qr[v] - ql[v]);
            out_l[k * qp + v] = central;
            out_r[k * qp + v] = central;
        }
        if cfg.terms.ncp {
            for v in 0..nv {
                qavg[v] = 0.5 * (ql[v] + qr[v]);
            }
            // B(q_avg)·Δq in the face-normal direction, via the ncp
            // callback with a gradient that is the jump along `dir`
            jump_grad.fill(0.0);
            for v in 0..nv {
                jump_grad[dir * nv + v] = qr[v] - ql[v];
            }
            user.ncp(&qavg, &jump_grad, &mut bjump);
            for v in 0..nv {
                out_l[k * qp + v] += 0.5 * bjump[v];
                out_r[k * qp + v] -= 0.5 * bjump[v];
            }
        }
    }
    Ok((out_l, out_r))
}
