//! One full ADER-DG cycle: stable time step, per-cell predictor,
//! per-face Riemann solves, corrector, and (in limiting mode) the
//! a-posteriori FV limiter.

use super::binding::KernelBinding;
use super::mesh::{BoundaryMode, LimiterStatus, Mesh};
use crate::basis::BasisTables;
use crate::kernels::{
    correct_and_update, predictor_linear_ck, predictor_linear_otf, predictor_nonlinear_picard,
    riemann_rusanov, stable_time_step, KernelError, PredictorResult,
};
use crate::limiter::{limiter_cycle, ProjectionPair};
use crate::spec::{PredictorVariant, SolverKind, Specification};
use crate::user::UserSolver;

#[derive(Debug, thiserror::Error)]
pub enum RuntimeError {
    #[error("step {step}: {source}")]
    Kernel {
        step: usize,
        #[source]
        source: KernelError,
    },
    #[error("step {step}: {source}")]
    Limiter {
        step: usize,
        #[source]
        source: crate::limiter::LimiterError,
    },
    #[error(transparent)]
    Mesh(#[from] super::mesh::MeshError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone)]
pub struct StepStats {
    pub dt: f64,
    pub troubled: usize,
    /// Conserved volume integrals after the step.
    pub sums: Vec<f64>,
}

fn run_predictor(
    binding: &KernelBinding,
    variant: PredictorVariant,
    dofs: &[f64],
    user: &dyn UserSolver,
    dt: f64,
    cfg: &crate::kernels::KernelConfig,
    tables: &BasisTables,
) -> Result<PredictorResult, KernelError> {
    match binding {
        KernelBinding::Generic => match variant {
            PredictorVariant::Picard => predictor_nonlinear_picard(dofs, user, dt, cfg, tables),
            PredictorVariant::Ck => predictor_linear_ck(dofs, user, dt, cfg, tables),
            PredictorVariant::Otf => predictor_linear_otf(dofs, user, dt, cfg, tables),
        },
        KernelBinding::Generated(set) => (set.predictor)(dofs, user, dt, cfg, tables),
    }
}

/// Advance the mesh by one time step ( clamped to `dt_cap` when given).
pub fn advance_step(
    mesh: &mut Mesh,
    user: &dyn UserSolver,
    spec: &Specification,
    tables: &BasisTables,
    pair: Option<&ProjectionPair>,
    binding: &KernelBinding,
    dt_cap: Option<f64>,
) -> Result<StepStats, RuntimeError> {
    let step = mesh.step;
    let kerr = |source| RuntimeError::Kernel { step, source };
    let cfg = mesh.cfg.clone();
    let limiting = spec.solver_kind != SolverKind::Aderdg;
    let fv_only = spec.solver_kind == SolverKind::Fv;
    let n_cells = mesh.n_cells();

    let mut dt = stable_time_step(
        mesh.cells.iter().map(|c| c.dofs.as_slice()),
        user,
        spec.time.cfl,
        &cfg,
        tables,
    )
    .map_err(kerr)?;
    if let Some(cap) = dt_cap {
        dt = dt.min(cap);
    }

    // per-cell predictor
    let mut preds: Vec<PredictorResult> = Vec::with_capacity(n_cells);
    let mut force_troubled = vec![false; n_cells];
    for c in 0..n_cells {
        match run_predictor(
            binding,
            spec.predictor_variant,
            &mesh.cells[c].dofs,
            user,
            dt,
            &cfg,
            tables,
        ) {
            Ok(p) => preds.push(p),
            Err(e @ KernelError::NonConvergence { .. }) | Err(e @ KernelError::NonFinite(_)) => {
                if !limiting {
                    return Err(kerr(e));
                }
                // fall back to the instantaneous state (a dt=0 predictor)
                // so neighbors receive sane face data; the cell itself is
                // recomputed by the limiter
                force_troubled[c] = true;
                preds.push(
                    run_predictor(
                        binding,
                        spec.predictor_variant,
                        &mesh.cells[c].dofs,
                        user,
                        0.0,
                        &cfg,
                        tables,
                    )
                    .map_err(kerr)?,
                );
            }
            Err(e) => return Err(kerr(e)),
        }
    }

    // Riemann solves, each face computed once
    let extra_s = if cfg.terms.viscous {
        user.viscous_penalty(mesh.h)
    } else {
        0.0
    };
    let nf_len = cfg.nface() * cfg.q_pad;
    let mut face_flux: Vec<Vec<Vec<f64>>> = vec![vec![vec![0.0; nf_len]; 2 * cfg.dim]; n_cells];
    let solve = |q_l: &[f64],
                 q_r: &[f64],
                 f_l: Option<&[f64]>,
                 f_r: Option<&[f64]>,
                 dir: usize|
     -> Result<(Vec<f64>, Vec<f64>), KernelError> {
        match binding {
            KernelBinding::Generic => {
                riemann_rusanov(q_l, q_r, f_l, f_r, dir, user, &cfg, extra_s)
            }
            KernelBinding::Generated(set) => {
                (set.riemann)(q_l, q_r, f_l, f_r, dir, user, &cfg, extra_s)
            }
        }
    };
    let has_flux = cfg.terms.flux_like();
    for dir in 0..cfg.dim {
        for c in 0..n_cells {
            let mut off = vec![0isize; cfg.dim];
            off[dir] = 1;
            if let Some(n) = mesh.neighbor(c, &off) {
                let (l, r) = solve(
                    &preds[c].face_q[2 * dir + 1],
                    &preds[n].face_q[2 * dir],
                    has_flux.then(|| preds[c].face_f[2 * dir + 1].as_slice()),
                    has_flux.then(|| preds[n].face_f[2 * dir].as_slice()),
                    dir,
                )
                .map_err(kerr)?;
                face_flux[c][2 * dir + 1] = l;
                face_flux[n][2 * dir] = r;
            }
        }
        // non-periodic boundary faces
        for side in 0..2 {
            if mesh.boundary[2 * dir + side] == BoundaryMode::Periodic {
                continue;
            }
            for c in 0..n_cells {
                let mut off = vec![0isize; cfg.dim];
                off[dir] = if side == 0 { -1 } else { 1 };
                if mesh.neighbor(c, &off).is_some() {
                    continue;
                }
                let inside_q = &preds[c].face_q[2 * dir + side];
                let inside_f = &preds[c].face_f[2 * dir + side];
                let (ghost_q, ghost_f) =
                    ghost_face(mesh, c, dir, side, inside_q, inside_f, user, tables, &cfg);
                let (l, r) = if side == 1 {
                    solve(
                        inside_q,
                        &ghost_q,
                        has_flux.then(|| inside_f.as_slice()),
                        has_flux.then(|| ghost_f.as_slice()),
                        dir,
                    )
                    .map_err(kerr)?
                } else {
                    solve(
                        &ghost_q,
                        inside_q,
                        has_flux.then(|| ghost_f.as_slice()),
                        has_flux.then(|| inside_f.as_slice()),
                        dir,
                    )
                    .map_err(kerr)?
                };
                face_flux[c][2 * dir + side] = if side == 1 { l } else { r };
            }
        }
    }

    // corrector
    let mut candidates: Vec<Vec<f64>> = (0..n_cells)
        .map(|c| match binding {
            KernelBinding::Generic => {
                correct_and_update(&mesh.cells[c].dofs, &preds[c], &face_flux[c], dt, &cfg, tables)
            }
            KernelBinding::Generated(set) => {
                (set.update)(&mesh.cells[c].dofs, &preds[c], &face_flux[c], dt, &cfg, tables)
            }
        })
        .collect();

    // limiting
    let mut troubled = 0;
    let mut statuses = vec![LimiterStatus::Ok; n_cells];
    let mut fv_means = std::collections::HashMap::new();
    if limiting {
        let pair = pair.expect("limiting solver needs projection matrices");
        if fv_only {
            force_troubled.iter_mut().for_each(|f| *f = true);
        }
        let (delta0, eps) = spec
            .limiter
            .as_ref()
            .map_or((1e-4, 1e-3), |l| (l.dmp_delta0, l.dmp_epsilon));
        let outcome = limiter_cycle(
            mesh,
            &mut candidates,
            &face_flux,
            &force_troubled,
            user,
            dt,
            pair,
            tables,
            delta0,
            eps,
        )
        .map_err(|source| RuntimeError::Limiter { step, source })?;
        troubled = outcome.troubled;
        statuses = outcome.statuses;
        fv_means = outcome.fv_means;
    }

    // accept
    for (c, cand) in candidates.into_iter().enumerate() {
        let cell = &mut mesh.cells[c];
        cell.prev = std::mem::replace(&mut cell.dofs, cand);
        cell.prev.copy_from_slice(&cell.dofs);
        cell.status = statuses[c];
        cell.fv_means = fv_means.remove(&c);
    }
    mesh.time += dt;
    mesh.step += 1;
    let sums = mesh.conserved_sums(tables);
    Ok(StepStats {
        dt,
        troubled,
        sums,
    })
}

/// Ghost face trace for a user boundary: outside state from the boundary
/// callback per face point, outside flux evaluated on the ghost state
/// (gradient-dependent fluxes reuse the inside flux trace).
#[allow(clippy::too_many_arguments)]
fn ghost_face(
    mesh: &Mesh,
    c: usize,
    dir: usize,
    side: usize,
    inside_q: &[f64],
    inside_f: &[f64],
    user: &dyn UserSolver,
    tables: &BasisTables,
    cfg: &crate::kernels::KernelConfig,
) -> (Vec<f64>, Vec<f64>) {
    let qp = cfg.q_pad;
    let nv = cfg.n_var;
    let mut ghost_q = vec![0.0; cfg.nface() * qp];
    let mut ghost_f = vec![0.0; cfg.nface() * qp];
    let o = mesh.cell_origin(c);
    let face = 2 * dir + side;
    for (k, base) in cfg.line_bases(dir).into_iter().enumerate() {
        let mi = cfg.point_multi_index(base);
        let x: Vec<f64> = (0..cfg.dim)
            .map(|a| {
                if a == dir {
                    o[a] + if side == 0 { 0.0 } else { mesh.h }
                } else {
                    o[a] + mesh.h * tables.nodes[mi[a]]
                }
            })
            .collect();
        let (qs, gs) = (k * qp, k * qp + nv);
        user.boundary(&x, mesh.time, face, &inside_q[qs..gs], &mut ghost_q[qs..gs]);
        if cfg.terms.flux {
            user.flux(&ghost_q[qs..gs], dir, &mut ghost_f[qs..gs]);
        }
    }
    if cfg.terms.viscous {
        // no ghost gradient available; reuse the inside flux trace
        ghost_f.copy_from_slice(inside_f);
    }
    (ghost_q, ghost_f)
}
