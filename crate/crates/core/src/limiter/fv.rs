//! The robust FV scheme of the limiter: Godunov update with Rusanov
//! fluxes and second-order MUSCL reconstruction with minmod slopes on
//! the subcell grid, with a first-order fallback when the MUSCL substep
//! produces an inadmissible state.

use crate::kernels::TermFlags;
use crate::user::UserSolver;

/// Width of the halo ring around the interior subcell block.
pub const HALO: usize = 2;

pub fn minmod(a: f64, b: f64) -> f64 {
    if a * b <= 0.0 {
        0.0
    } else if a.abs() <= b.abs() {
        a
    } else {
        b
    }
}

/// Accumulated neighbor-side flux means through the outer faces of the
/// interior block, one entry of n_var values per face (2*dir + side).
/// Used by the limiter cycle to reconcile conservation with DG
/// neighbors.
#[derive(Debug, Clone)]
pub struct FvFaceMeans {
    pub face_mean: Vec<Vec<f64>>,
}

#[derive(Debug, thiserror::Error)]
#[error("FV recompute produced an inadmissible state even at first order")]
pub struct FvInadmissible;

struct Grid {
    m: usize,
    dim: usize,
}

impl Grid {
    fn stride(&self, a: usize) -> usize {
        self.m.pow(a as u32)
    }
    fn idx(&self, coords: &[usize]) -> usize {
        (0..self.dim).map(|a| coords[a] * self.stride(a)).sum()
    }
}

fn rusanov_point(
    ql: &[f64],
    qr: &[f64],
    dir: usize,
    user: &dyn UserSolver,
    terms: &TermFlags,
    dim: usize,
    n_var: usize,
    out_l: &mut [f64],
    out_r: &mut [f64],
) {
    let mut lam = vec![0.0; n_var];
    let mut s_max = 0.0f64;
    user.eigenvalues(ql, dir, &mut lam);
    for &l in &lam {
        s_max = s_max.max(l.abs());
    }
    user.eigenvalues(qr, dir, &mut lam);
    for &l in &lam {
        s_max = s_max.max(l.abs());
    }
    let mut fl = vec![0.0; n_var];
    let mut fr = vec![0.0; n_var];
    if terms.flux {
        user.flux(ql, dir, &mut fl);
        user.flux(qr, dir, &mut fr);
    }
    for v in 0..n_var {
        let central = 0.5 * (fl[v] + fr[v]) - 0.5 * s_max * (qr[v] - ql[v]);
        out_l[v] = central;
        out_r[v] = central;
    }
    if terms.ncp {
        let qavg: Vec<f64> = (0..n_var).map(|v| 0.5 * (ql[v] + qr[v])).collect();
        let mut grad = vec![0.0; dim * n_var];
        for v in 0..n_var {
            grad[dir * n_var + v] = qr[v] - ql[v];
        }
        let mut b = vec![0.0; n_var];
        user.ncp(&qavg, &grad, &mut b);
        for v in 0..n_var {
            out_l[v] += 0.5 * b[v];
            out_r[v] -= 0.5 * b[v];
        }
    }
}

/// One FV substep on the extended array `ext` of side n_sub + 2*HALO
/// (axis-0 fastest, n_var stride, halo filled by the caller; corner
/// blocks unused). Returns the updated interior means (n_sub^dim * n_var)
/// plus the neighbor-side flux means on the outer faces.
///
/// Falls back to first-order (zero slopes) if the MUSCL update is
/// inadmissible; errs if first order is inadmissible too.
#[allow(clippy::too_many_arguments)]
pub fn fv_subcell_step(
    ext: &[f64],
    n_sub: usize,
    dim: usize,
    n_var: usize,
    user: &dyn UserSolver,
    terms: &TermFlags,
    dt: f64,
    h_sub: f64,
) -> Result<(Vec<f64>, FvFaceMeans), FvInadmissible> {
    match fv_substep_inner(ext, n_sub, dim, n_var, user, terms, dt, h_sub, false) {
        Ok(r) => Ok(r),
        Err(FvInadmissible) => {
            fv_substep_inner(ext, n_sub, dim, n_var, user, terms, dt, h_sub, true)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn fv_substep_inner(
    ext: &[f64],
    n_sub: usize,
    dim: usize,
    n_var: usize,
    user: &dyn UserSolver,
    terms: &TermFlags,
    dt: f64,
    h_sub: f64,
    first_order: bool,
) -> Result<(Vec<f64>, FvFaceMeans), FvInadmissible> {
    let g = Grid {
        m: n_sub + 2 * HALO,
        dim,
    };
    let n_int = n_sub.pow(dim as u32);
    let int_stride = |a: usize| n_sub.pow(a as u32);

    // accumulated flux differences per interior cell
    let mut dudt = vec![0.0; n_int * n_var];
    let n_face_sub = n_sub.pow(dim as u32 - 1);
    let mut face_mean = vec![vec![0.0; n_var]; 2 * dim];

    let cell = |coords: &[usize]| -> &[f64] {
        let i = g.idx(coords) * n_var;
        &ext[i..i + n_var]
    };

    let mut out_l = vec![0.0; n_var];
    let mut out_r = vec![0.0; n_var];
    let mut slope_l = vec![0.0; n_var];
    let mut slope_r = vec![0.0; n_var];
    let mut ql = vec![0.0; n_var];
    let mut qr = vec![0.0; n_var];

    for dir in 0..dim {
        // faces normal to `dir` between ext coords k and k+1,
        // k = HALO-1 .. HALO+n_sub-1; transverse coords in the interior
        let mut tcoords = vec![HALO; dim];
        for t in 0..n_face_sub {
            // decompose transverse index over the axes != dir
            let mut rem = t;
            for a in 0..dim {
                if a == dir {
                    continue;
                }
                tcoords[a] = HALO + rem % n_sub;
                rem /= n_sub;
            }
            for k in (HALO - 1)..(HALO + n_sub) {
                let mut cl = tcoords.clone();
                cl[dir] = k;
                let mut cr = cl.clone();
                cr[dir] = k + 1;
                let ul = cell(&cl);
                let ur = cell(&cr);
                if first_order {
                    ql.copy_from_slice(ul);
                    qr.copy_from_slice(ur);
                } else {
                    let mut cll = cl.clone();
                    cll[dir] = k - 1;
                    let mut crr = cr.clone();
                    crr[dir] = k + 2;
                    let ull = cell(&cll);
                    let urr = cell(&crr);
                    for v in 0..n_var {
                        slope_l[v] = minmod(ul[v] - ull[v], ur[v] - ul[v]);
                        slope_r[v] = minmod(ur[v] - ul[v], urr[v] - ur[v]);
                        ql[v] = ul[v] + 0.5 * slope_l[v];
                        qr[v] = ur[v] - 0.5 * slope_r[v];
                    }
                }
                rusanov_point(&ql, &qr, dir, user, terms, dim, n_var, &mut out_l, &mut out_r);

                // scatter into the interior cells bordering this face
                let lo_int = k >= HALO;
                let hi_int = k + 1 < HALO + n_sub;
                if lo_int {
                    let mut i = 0;
                    for a in 0..dim {
                        let c = if a == dir { k - HALO } else { tcoords[a] - HALO };
                        i += c * int_stride(a);
                    }
                    for v in 0..n_var {
                        dudt[i * n_var + v] -= out_l[v] / h_sub;
                    }
                }
                if hi_int {
                    let mut i = 0;
                    for a in 0..dim {
                        let c = if a == dir { k + 1 - HALO } else { tcoords[a] - HALO };
                        i += c * int_stride(a);
                    }
                    for v in 0..n_var {
                        dudt[i * n_var + v] += out_r[v] / h_sub;
                    }
                }
                // outer faces: record the neighbor-side value
                if !lo_int {
                    for v in 0..n_var {
                        face_mean[2 * dir][v] += out_l[v] / n_face_sub as f64;
                    }
                } else if !hi_int {
                    for v in 0..n_var {
                        face_mean[2 * dir + 1][v] += out_r[v] / n_face_sub as f64;
                    }
                }
            }
        }
    }

    let mut out = vec![0.0; n_int * n_var];
    let mut src = vec![0.0; n_var];
    for i in 0..n_int {
        // interior cell i -> ext coords
        let mut coords = vec![0usize; dim];
        let mut rem = i;
        for a in 0..dim {
            coords[a] = HALO + rem % n_sub;
            rem /= n_sub;
        }
        let u = cell(&coords);
        for v in 0..n_var {
            out[i * n_var + v] = u[v] + dt * dudt[i * n_var + v];
        }
        if terms.source {
            user.source(u, &mut src);
            for v in 0..n_var {
                out[i * n_var + v] += dt * src[v];
            }
        }
        if !user.admissible(&out[i * n_var..(i + 1) * n_var]) {
            return Err(FvInadmissible);
        }
    }
    // face means carry the time increment of this substep
    for f in &mut face_mean {
        for v in f.iter_mut() {
            *v *= dt;
        }
    }
    Ok((out, FvFaceMeans { face_mean }))
}
