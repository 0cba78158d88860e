//! The discrete spatial operator L(Q) = -1/h Σ_d D_d F_d(Q) - B(Q)·∇Q + S(Q)
//! and the nodal flux evaluation it is built from (AoS loop or SoA
//! transpose path, selected by the flux mode).

use super::{gather_point_grad, FluxMode, KernelConfig};
use crate::basis::BasisTables;
use crate::layout::{transpose_aos_to_soa, transpose_soa_to_aos, Layout, QuantityBlock};
use crate::user::UserSolver;

/// Evaluate the directional flux at every node of `dofs` into `out`
/// (len() reals, pads zero). `grad` must be Some for gradient-dependent
/// fluxes.
pub fn compute_flux_dir(
    dofs: &[f64],
    grad: Option<&[Vec<f64>]>,
    dir: usize,
    cfg: &KernelConfig,
    user: &dyn UserSolver,
    out: &mut [f64],
) {
    let qp = cfg.q_pad;
    let nv = cfg.n_var;
    out.fill(0.0);
    if cfg.terms.viscous {
        let grad = grad.expect("viscous flux needs gradients");
        let mut g = vec![0.0; cfg.dim * nv];
        for p in 0..cfg.npts() {
            gather_point_grad(grad, p, cfg, &mut g);
            user.viscous_flux(&dofs[p * qp..p * qp + nv], &g, dir, &mut out[p * qp..p * qp + nv]);
        }
        return;
    }
    match cfg.flux_mode {
        FluxMode::Aos => {
            for p in 0..cfg.npts() {
                user.flux(&dofs[p * qp..p * qp + nv], dir, &mut out[p * qp..p * qp + nv]);
            }
        }
        FluxMode::Soa { width } => {
            // transpose a slice of the input to SoA, call the vectorized
            // flux, transpose back
            let block = QuantityBlock {
                data: dofs.to_vec(),
                npoints: cfg.npts(),
                nvar: nv,
                layout: Layout::Aos,
                stride: qp,
            };
            let soa = transpose_aos_to_soa(&block, width);
            let mut f_soa = QuantityBlock {
                data: vec![0.0; soa.data.len()],
                npoints: soa.npoints,
                nvar: nv,
                layout: Layout::Soa,
                stride: width,
            };
            let slice_len = nv * width;
            for s in 0..QuantityBlock::n_slices(cfg.npts(), width) {
                user.flux_vect(
                    &soa.data[s * slice_len..(s + 1) * slice_len],
                    width,
                    dir,
                    &mut f_soa.data[s * slice_len..(s + 1) * slice_len],
                );
            }
            let back = transpose_soa_to_aos(&f_soa, qp);
            out.copy_from_slice(&back.data);
        }
    }
}

/// Accumulate -1/h · (D applied along `dir`) of the nodal field `f`
/// into `out`.
pub fn accumulate_div_dir(
    f: &[f64],
    dir: usize,
    cfg: &KernelConfig,
    tables: &BasisTables,
    out: &mut [f64],
) {
    let qp = cfg.q_pad;
    let s = cfg.stride(dir);
    for base in cfg.line_bases(dir) {
        for i in 0..cfg.n_dof {
            let pi = (base + i * s) * qp;
            for j in 0..cfg.n_dof {
                let d = -tables.diff_at(i, j) / cfg.h;
                let pj = (base + j * s) * qp;
                for v in 0..cfg.n_var {
                    out[pi + v] += d * f[pj + v];
                }
            }
        }
    }
}

/// out = L(dofs). `flux_scratch` is a reusable len() buffer. Directions
/// are processed one at a time with a single live flux buffer.
pub fn apply_spatial_operator(
    dofs: &[f64],
    cfg: &KernelConfig,
    user: &dyn UserSolver,
    tables: &BasisTables,
    flux_scratch: &mut [f64],
    out: &mut [f64],
) {
    let qp = cfg.q_pad;
    let nv = cfg.n_var;
    out.fill(0.0);
    let grad = if cfg.terms.needs_gradient() {
        Some(super::eval_gradients(dofs, cfg, tables))
    } else {
        None
    };
    if cfg.terms.flux_like() {
        for dir in 0..cfg.dim {
            compute_flux_dir(dofs, grad.as_deref(), dir, cfg, user, flux_scratch);
            accumulate_div_dir(flux_scratch, dir, cfg, tables, out);
        }
    }
    if cfg.terms.ncp {
        let grad = grad.as_deref().unwrap();
        let mut g = vec![0.0; cfg.dim * nv];
        let mut b = vec![0.0; nv];
        for p in 0..cfg.npts() {
            gather_point_grad(grad, p, cfg, &mut g);
            user.ncp(&dofs[p * qp..p * qp + nv], &g, &mut b);
            for v in 0..nv {
                out[p * qp + v] -= b[v];
            }
        }
    }
    if cfg.terms.source {
        let mut s = vec![0.0; nv];
        for p in 0..cfg.npts() {
            user.source(&dofs[p * qp..p * qp + nv], &mut s);
            for v in 0..nv {
                out[p * qp + v] += s[v];
            }
        }
    }
}

/// Accumulate `S(q) - B(q)·∇q` at every node into `out` (the
/// time-averaged volume source of the corrector).
pub fn accumulate_algebraic_terms(
    dofs: &[f64],
    grad: Option<&[Vec<f64>]>,
    weight: f64,
    cfg: &KernelConfig,
    user: &dyn UserSolver,
    out: &mut [f64],
) {
    let qp = cfg.q_pad;
    let nv = cfg.n_var;
    if cfg.terms.ncp {
        let grad = grad.expect("ncp needs gradients");
        let mut g = vec![0.0; cfg.dim * nv];
        let mut b = vec![0.0; nv];
        for p in 0..cfg.npts() {
            gather_point_grad(grad, p, cfg, &mut g);
            user.ncp(&dofs[p * qp..p * qp + nv], &g, &mut b);
            for v in 0..nv {
                out[p * qp + v] -= weight * b[v];
            }
        }
    }
    if cfg.terms.source {
        let mut s = vec![0.0; nv];
        for p in 0..cfg.npts() {
            user.source(&dofs[p * qp..p * qp + nv], &mut s);
            for v in 0..nv {
                out[p * qp + v] += weight * s[v];
            }
        }
    }
}

/// Extrapolate a nodal field to face `2*dir + side`; face point k
/// corresponds to line base k of `line_bases(dir)`.
pub fn extrapolate_to_face(
    field: &[f64],
    dir: usize,
    side: usize,
    cfg: &KernelConfig,
    tables: &BasisTables,
    out: &mut [f64],
) {
    let qp = cfg.q_pad;
    let s = cfg.stride(dir);
    let phi = if side == 0 {
        &tables.phi_left
    } else {
        &tables.phi_right
    };
    out.fill(0.0);
    for (k, base) in cfg.line_bases(dir).into_iter().enumerate() {
        for j in 0..cfg.n_dof {
            let pj = (base + j * s) * qp;
            for v in 0..cfg.n_var {
                out[k * qp + v] += phi[j] * field[pj + v];
            }
        }
    }
}
