//! Generic (runtime-parameterized) reference implementations of the
//! ADER-DG kernels: space-time predictor (Picard, Cauchy-Kowalewski and
//! on-the-fly variants), Rusanov Riemann solver, corrector update, stable
//! time step and nodal gradients. These are the oracle for generated
//! kernels and the compute core of the interpretive run path.

pub mod memory;
pub mod ops;
pub mod predictor;
pub mod riemann;
#[cfg(test)]
mod tests;
pub mod update;

pub use memory::{temp_memory_report, MemoryReport};
pub use predictor::{predictor_linear_ck, predictor_linear_otf, predictor_nonlinear_picard};
pub use riemann::riemann_rusanov;
pub use update::correct_and_update;

use crate::spec::{Specification, Term};

#[derive(Debug, thiserror::Error)]
pub enum KernelError {
    #[error("predictor fixed point did not converge (residual {residual:.3e})")]
    NonConvergence { residual: f64 },
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
    #[error("degenerate PDE: maximum wave speed is zero")]
    NonPropagating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermFlags {
    pub flux: bool,
    pub ncp: bool,
    pub source: bool,
    pub viscous: bool,
}

impl TermFlags {
    pub fn flux_like(&self) -> bool {
        self.flux || self.viscous
    }
    pub fn needs_gradient(&self) -> bool {
        self.ncp || self.viscous
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluxMode {
    Aos,
    Soa { width: usize },
}

/// Static shape and term configuration for one solver: everything the
/// kernels need besides the basis tables and the data itself.
#[derive(Debug, Clone)]
pub struct KernelConfig {
    pub dim: usize,
    pub n_dof: usize,
    pub n_var: usize,
    pub q_pad: usize,
    pub h: f64,
    pub terms: TermFlags,
    pub flux_mode: FluxMode,
}

impl KernelConfig {
    pub fn from_spec(spec: &Specification) -> Self {
        let w = spec.optimization.vector_width as usize;
        KernelConfig {
            dim: spec.dimension as usize,
            n_dof: spec.n_dof() as usize,
            n_var: spec.quantities as usize,
            q_pad: crate::layout::pad(spec.quantities as usize, w),
            h: spec.h(),
            terms: TermFlags {
                flux: spec.uses(Term::Flux),
                ncp: spec.uses(Term::Ncp),
                source: spec.uses(Term::Source),
                viscous: spec.uses(Term::ViscousFlux),
            },
            flux_mode: if spec.optimization.use_flux_vect && w > 1 {
                FluxMode::Soa { width: w }
            } else {
                FluxMode::Aos
            },
        }
    }

    /// Number of nodes per cell.
    pub fn npts(&self) -> usize {
        self.n_dof.pow(self.dim as u32)
    }

    /// Length of one cell's DOF buffer.
    pub fn len(&self) -> usize {
        self.npts() * self.q_pad
    }

    /// Nodes per face.
    pub fn nface(&self) -> usize {
        self.n_dof.pow(self.dim as u32 - 1)
    }

    /// Point-index stride along axis `dir` (axis 0 fastest).
    pub fn stride(&self, dir: usize) -> usize {
        self.n_dof.pow(dir as u32)
    }

    /// Base point indices of all 1D lines along `dir` (points with
    /// index-component 0 on that axis), ascending. The k-th base also
    /// serves as face-point index k on both faces normal to `dir`, so
    /// neighbor cells enumerate shared faces identically.
    pub fn line_bases(&self, dir: usize) -> Vec<usize> {
        let s = self.stride(dir);
        (0..self.npts())
            .filter(|p| (p / s) % self.n_dof == 0)
            .collect()
    }

    /// Decompose a point index into per-axis node indices.
    pub fn point_multi_index(&self, p: usize) -> Vec<usize> {
        (0..self.dim)
            .map(|a| (p / self.stride(a)) % self.n_dof)
            .collect()
    }
}

/// Output of the space-time predictor for one cell: time-averaged face
/// traces of state and normal flux, plus the time-averaged volume
/// contributions for the corrector. Face index = 2*dir + side
/// (side 0 = low face, 1 = high face); each face buffer holds
/// nface * q_pad reals.
#[derive(Debug, Clone)]
pub struct PredictorResult {
    pub face_q: Vec<Vec<f64>>,
    pub face_f: Vec<Vec<f64>>,
    /// Time-averaged nodal flux, one `len()` block per direction (empty
    /// when the PDE has no flux-like term).
    pub vol_flux: Vec<Vec<f64>>,
    /// Time-averaged nodal source minus non-conservative product.
    pub vol_src: Vec<f64>,
}

impl PredictorResult {
    pub fn assert_finite(&self) -> Result<(), KernelError> {
        let ok = self
            .face_q
            .iter()
            .chain(&self.face_f)
            .chain(&self.vol_flux)
            .all(|b| b.iter().all(|x| x.is_finite()))
            && self.vol_src.iter().all(|x| x.is_finite());
        if ok {
            Ok(())
        } else {
            Err(KernelError::NonFinite("predictor result"))
        }
    }
}

/// dt = cfl * h / (d * lambda_max * (2N+1)), lambda_max over all supplied
/// cell buffers, nodes and directions.
pub fn stable_time_step<'a>(
    cells: impl IntoIterator<Item = &'a [f64]>,
    user: &dyn crate::user::UserSolver,
    cfl: f64,
    cfg: &KernelConfig,
    tables: &crate::basis::BasisTables,
) -> Result<f64, KernelError> {
    let mut lambda_max = 0.0f64;
    let mut lam = vec![0.0; cfg.n_var];
    for dofs in cells {
        for p in 0..cfg.npts() {
            let q = &dofs[p * cfg.q_pad..p * cfg.q_pad + cfg.n_var];
            if q.iter().any(|x| !x.is_finite()) {
                return Err(KernelError::NonFinite("stable_time_step input"));
            }
            for dir in 0..cfg.dim {
                user.eigenvalues(q, dir, &mut lam);
                for &l in &lam {
                    lambda_max = lambda_max.max(l.abs());
                }
            }
        }
    }
    if lambda_max <= 0.0 {
        return Err(KernelError::NonPropagating);
    }
    let n = tables.order as f64;
    Ok(cfl * cfg.h / (cfg.dim as f64 * lambda_max * (2.0 * n + 1.0)))
}

/// Nodal gradients: grad[dir] is a `len()` block with
/// (1/h)·D applied along `dir`; exact for polynomials of degree <= N.
pub fn eval_gradients(
    dofs: &[f64],
    cfg: &KernelConfig,
    tables: &crate::basis::BasisTables,
) -> Vec<Vec<f64>> {
    let nd = cfg.n_dof;
    let qp = cfg.q_pad;
    let mut grad = vec![vec![0.0; cfg.len()]; cfg.dim];
    for dir in 0..cfg.dim {
        let s = cfg.stride(dir);
        for base in cfg.line_bases(dir) {
            for i in 0..nd {
                let pi = (base + i * s) * qp;
                for j in 0..nd {
                    let pj = (base + j * s) * qp;
                    let d = tables.diff_at(i, j) / cfg.h;
                    for v in 0..cfg.n_var {
                        grad[dir][pi + v] += d * dofs[pj + v];
                    }
                }
            }
        }
    }
    grad
}

/// Gather the per-point gradient (direction-major, un-padded) for user
/// callbacks.
pub(crate) fn gather_point_grad(grad: &[Vec<f64>], p: usize, cfg: &KernelConfig, out: &mut [f64]) {
    for dir in 0..cfg.dim {
        let src = &grad[dir][p * cfg.q_pad..p * cfg.q_pad + cfg.n_var];
        out[dir * cfg.n_var..(dir + 1) * cfg.n_var].copy_from_slice(src);
    }
}
