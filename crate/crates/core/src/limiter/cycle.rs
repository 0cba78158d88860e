//! Mesh-level limiting: detect troubled cells on the DG candidate,
//! recompute them from the rolled-back state with the subcell FV scheme,
//! and reconcile conservation with the DG neighbors.

use super::detect::{detect_troubled, NeighborhoodExtrema};
use super::fv::{fv_subcell_step, FvFaceMeans, HALO};
use super::projection::ProjectionPair;
use crate::basis::BasisTables;
use crate::runtime::mesh::{LimiterStatus, Mesh};
use crate::user::UserSolver;
use std::collections::HashMap;

#[derive(Debug, thiserror::Error)]
pub enum LimiterError {
    #[error("FV recompute of cell {cell} inadmissible: {source}")]
    Inadmissible {
        cell: usize,
        source: super::fv::FvInadmissible,
    },
    #[error("degenerate wave speed during FV substep sizing")]
    NonPropagating,
}

/// FV CFL safety factor for the MUSCL substeps.
const FV_CFL: f64 = 0.45;

pub struct CycleOutcome {
    pub statuses: Vec<LimiterStatus>,
    pub troubled: usize,
    /// Subcell means of the accepted state for cells that ran FV.
    pub fv_means: HashMap<usize, Vec<f64>>,
}

/// All offsets in {-1,0,1}^d except the origin.
fn moore_offsets(dim: usize) -> Vec<Vec<isize>> {
    let mut offs = vec![vec![]];
    for _ in 0..dim {
        offs = offs
            .into_iter()
            .flat_map(|o| {
                [-1isize, 0, 1].into_iter().map(move |d| {
                    let mut v = o.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    offs.retain(|o| o.iter().any(|&d| d != 0));
    offs
}

/// Mean over a DG face trace with transverse quadrature weights.
fn face_flux_mean(
    flux: &[f64],
    dir: usize,
    mesh: &Mesh,
    tables: &BasisTables,
    out: &mut [f64],
) {
    let cfg = &mesh.cfg;
    out.fill(0.0);
    for (k, base) in cfg.line_bases(dir).into_iter().enumerate() {
        let mi = cfg.point_multi_index(base);
        let mut tw = 1.0;
        for a in 0..cfg.dim {
            if a != dir {
                tw *= tables.weights[mi[a]];
            }
        }
        for v in 0..cfg.n_var {
            out[v] += tw * flux[k * cfg.q_pad + v];
        }
    }
}

/// Run detection and the a-posteriori FV recompute on the candidate
/// states. `mesh` still holds the old accepted state in `cells[].dofs`;
/// `candidates` are mutated in place (troubled cells replaced by the FV
/// result, DG neighbors mean-shifted to keep the mesh conservative).
/// `face_flux[c][2*dir+side]` is the DG Riemann flux cell c used on that
/// face. `force_troubled` marks cells whose predictor failed (or all
/// cells, for the pure-FV solver kind).
#[allow(clippy::too_many_arguments)]
pub fn limiter_cycle(
    mesh: &Mesh,
    candidates: &mut [Vec<f64>],
    face_flux: &[Vec<Vec<f64>>],
    force_troubled: &[bool],
    user: &dyn UserSolver,
    dt: f64,
    pair: &ProjectionPair,
    tables: &BasisTables,
    dmp_delta0: f64,
    dmp_epsilon: f64,
) -> Result<CycleOutcome, LimiterError> {
    let cfg = &mesh.cfg;
    let (nv, qp) = (cfg.n_var, cfg.q_pad);
    let n_cells = mesh.n_cells();
    let n_sub = pair.n_sub;
    

    // subcell means of the last accepted state (DMP bounds and halos)
    let prev_means: Vec<Vec<f64>> = (0..n_cells)
        .map(|c| pair.apply_p(&mesh.cells[c].dofs, nv, qp))
        .collect();

    // detection
    let offsets = moore_offsets(cfg.dim);
    let mut troubled = vec![false; n_cells];
    for c in 0..n_cells {
        if force_troubled[c] {
            troubled[c] = true;
            continue;
        }
        let mut ex = NeighborhoodExtrema {
            min: vec![f64::INFINITY; nv],
            max: vec![f64::NEG_INFINITY; nv],
        };
        let mut scan = |means: &[f64]| {
            for m in means.chunks_exact(nv) {
                for v in 0..nv {
                    ex.min[v] = ex.min[v].min(m[v]);
                    ex.max[v] = ex.max[v].max(m[v]);
                }
            }
        };
        scan(&prev_means[c]);
        for off in &offsets {
            if let Some(n) = mesh.neighbor(c, off) {
                scan(&prev_means[n]);
            }
        }
        let cand_means = pair.apply_p(&candidates[c], nv, qp);
        troubled[c] = detect_troubled(
            &candidates[c],
            &cand_means,
            &ex,
            user,
            nv,
            dmp_delta0,
            dmp_epsilon,
        );
    }

    let mut statuses = vec![LimiterStatus::Ok; n_cells];
    let troubled_count = troubled.iter().filter(|&&t| t).count();
    for c in 0..n_cells {
        if troubled[c] {
            statuses[c] = LimiterStatus::Troubled;
        }
    }
    if troubled_count == 0 {
        // pass-through: candidates untouched
        return Ok(CycleOutcome {
            statuses,
            troubled: 0,
            fv_means: HashMap::new(),
        });
    }
    for c in 0..n_cells {
        if troubled[c] {
            for dir in 0..cfg.dim {
                for side in 0..2 {
                    let mut off = vec![0isize; cfg.dim];
                    off[dir] = if side == 0 { -1 } else { 1 };
                    if let Some(n) = mesh.neighbor(c, &off) {
                        if !troubled[n] {
                            statuses[n] = LimiterStatus::NeighborOfTroubled;
                        }
                    }
                }
            }
        }
    }

    // substep count from the FV CFL on the subgrid, uniform across cells
    let h_sub = mesh.h / n_sub as f64;
    let mut lambda_max = 0.0f64;
    let mut lam = vec![0.0; nv];
    for c in 0..n_cells {
        for m in prev_means[c].chunks_exact(nv) {
            for dir in 0..cfg.dim {
                user.eigenvalues(m, dir, &mut lam);
                for &l in &lam {
                    lambda_max = lambda_max.max(l.abs());
                }
            }
        }
    }
    if lambda_max <= 0.0 {
        return Err(LimiterError::NonPropagating);
    }
    let dt_fv = FV_CFL * h_sub / (cfg.dim as f64 * lambda_max);
    let n_steps = (dt / dt_fv).ceil().max(1.0) as usize;
    let dt_s = dt / n_steps as f64;

    let troubled_cells: Vec<usize> = (0..n_cells).filter(|&c| troubled[c]).collect();
    let mut cur: HashMap<usize, Vec<f64>> = troubled_cells
        .iter()
        .map(|&c| (c, prev_means[c].clone()))
        .collect();
    // accumulated neighbor-side FV flux means per outer face
    let mut acc_face: HashMap<usize, Vec<Vec<f64>>> = troubled_cells
        .iter()
        .map(|&c| (c, vec![vec![0.0; nv]; 2 * cfg.dim]))
        .collect();

    let m = n_sub + 2 * HALO;
    let ext_len = m.pow(cfg.dim as u32) * nv;
    for _ in 0..n_steps {
        let mut next: HashMap<usize, Vec<f64>> = HashMap::new();
        for &c in &troubled_cells {
            let mut ext = vec![0.0; ext_len];
            fill_interior(&mut ext, &cur[&c], n_sub, cfg.dim, nv);
            for dir in 0..cfg.dim {
                for side in 0..2 {
                    let mut off = vec![0isize; cfg.dim];
                    off[dir] = if side == 0 { -1 } else { 1 };
                    let halo = match mesh.neighbor(c, &off) {
                        Some(n) => {
                            // live means from troubled neighbors, so the
                            // shared-face fluxes the two cells compute
                            // independently are identical
                            if troubled[n] {
                                cur[&n].clone()
                            } else {
                                prev_means[n].clone()
                            }
                        }
                        None => ghost_means(mesh, c, dir, side, &cur[&c], user, n_sub, nv),
                    };
                    fill_halo(&mut ext, &halo, n_sub, cfg.dim, nv, dir, side);
                }
            }
            let (new, faces): (Vec<f64>, FvFaceMeans) =
                fv_subcell_step(&ext, n_sub, cfg.dim, nv, user, &cfg.terms, dt_s, h_sub)
                    .map_err(|source| LimiterError::Inadmissible { cell: c, source })?;
            let af = acc_face.get_mut(&c).unwrap();
            for f in 0..2 * cfg.dim {
                for v in 0..nv {
                    af[f][v] += faces.face_mean[f][v];
                }
            }
            next.insert(c, new);
        }
        cur = next;
    }

    // accept: reconstruct troubled cells, mean-shift DG neighbors so the
    // flux each side saw on a troubled|ok face agrees in the mean
    let mut dg_mean = vec![0.0; nv];
    for &c in &troubled_cells {
        candidates[c] = pair.apply_r(&cur[&c], nv, qp);
        for dir in 0..cfg.dim {
            for side in 0..2 {
                let mut off = vec![0isize; cfg.dim];
                off[dir] = if side == 0 { -1 } else { 1 };
                let Some(n) = mesh.neighbor(c, &off) else {
                    continue;
                };
                if troubled[n] {
                    continue;
                }
                // flux the DG neighbor used on the shared face
                let nb_face = 2 * dir + (1 - side);
                face_flux_mean(&face_flux[n][nb_face], dir, mesh, tables, &mut dg_mean);
                let fv_acc = &acc_face[&c][2 * dir + side];
                // neighbor's low face adds +(dt/h)F, high face -(dt/h)F
                let sign = if side == 1 { 1.0 } else { -1.0 };
                for v in 0..nv {
                    let shift = sign * (fv_acc[v] - dt * dg_mean[v]) / mesh.h;
                    for p in 0..cfg.npts() {
                        candidates[n][p * qp + v] += shift;
                    }
                }
            }
        }
    }

    Ok(CycleOutcome {
        statuses,
        troubled: troubled_count,
        fv_means: cur,
    })
}

fn fill_interior(ext: &mut [f64], means: &[f64], n_sub: usize, dim: usize, nv: usize) {
    let m = n_sub + 2 * HALO;
    for i in 0..n_sub.pow(dim as u32) {
        let mut e = 0;
        let mut rem = i;
        for a in 0..dim {
            e += (HALO + rem % n_sub) * m.pow(a as u32);
            rem /= n_sub;
        }
        ext[e * nv..(e + 1) * nv].copy_from_slice(&means[i * nv..(i + 1) * nv]);
    }
}

/// Copy the two neighbor layers adjacent to the shared face into the halo
/// slab on face (dir, side). `halo` holds the neighbor's full subcell
/// means.
fn fill_halo(
    ext: &mut [f64],
    halo: &[f64],
    n_sub: usize,
    dim: usize,
    nv: usize,
    dir: usize,
    side: usize,
) {
    let m = n_sub + 2 * HALO;
    let n_t = n_sub.pow(dim as u32 - 1);
    for depth in 0..HALO {
        // neighbor layer index along dir and target ext coordinate
        let (nb_layer, ext_coord) = if side == 1 {
            (depth, HALO + n_sub + depth)
        } else {
            (n_sub - 1 - depth, HALO - 1 - depth)
        };
        for t in 0..n_t {
            let mut rem = t;
            let mut e = ext_coord * m.pow(dir as u32);
            let mut s = nb_layer * n_sub.pow(dir as u32);
            for a in 0..dim {
                if a == dir {
                    continue;
                }
                let c = rem % n_sub;
                rem /= n_sub;
                e += (HALO + c) * m.pow(a as u32);
                s += c * n_sub.pow(a as u32);
            }
            ext[e * nv..(e + 1) * nv].copy_from_slice(&halo[s * nv..(s + 1) * nv]);
        }
    }
}

/// Ghost subcell means at a user (non-periodic) boundary: apply the
/// boundary callback to each interior subcell mean adjacent to the face
/// and replicate it through the neighbor's would-be layers.
fn ghost_means(
    mesh: &Mesh,
    c: usize,
    dir: usize,
    side: usize,
    interior: &[f64],
    user: &dyn UserSolver,
    n_sub: usize,
    nv: usize,
) -> Vec<f64> {
    let dim = mesh.cfg.dim;
    let mut out = vec![0.0; n_sub.pow(dim as u32) * nv];
    let o = mesh.cell_origin(c);
    let h_sub = mesh.h / n_sub as f64;
    let face = 2 * dir + side;
    let layer = if side == 0 { 0 } else { n_sub - 1 };
    let mut ghost = vec![0.0; nv];
    for s in 0..n_sub.pow(dim as u32) {
        let mut coords: Vec<usize> = (0..dim)
            .map(|a| (s / n_sub.pow(a as u32)) % n_sub)
            .collect();
        coords[dir] = layer;
        let inner: usize = (0..dim).map(|a| coords[a] * n_sub.pow(a as u32)).sum();
        let x: Vec<f64> = (0..dim)
            .map(|a| {
                if a == dir {
                    o[a] + if side == 0 { 0.0 } else { mesh.h }
                } else {
                    o[a] + h_sub * (coords[a] as f64 + 0.5)
                }
            })
            .collect();
        user.boundary(
            &x,
            mesh.time,
            face,
            &interior[inner * nv..(inner + 1) * nv],
            &mut ghost,
        );
        // mirror position along dir inside the ghost block
        let mut gcoords = coords;
        gcoords[dir] = if side == 0 { n_sub - 1 } else { 0 };
        let gi: usize = (0..dim).map(|a| gcoords[a] * n_sub.pow(a as u32)).sum();
        out[gi * nv..(gi + 1) * nv].copy_from_slice(&ghost);
    }
    // replicate the filled layer across the block so both halo depths see it
    let filled = if side == 0 { n_sub - 1 } else { 0 };
    for s in 0..n_sub.pow(dim as u32) {
        let mut coords: Vec<usize> = (0..dim)
            .map(|a| (s / n_sub.pow(a as u32)) % n_sub)
            .collect();
        if coords[dir] != filled {
            let from = {
                coords[dir] = filled;
                (0..dim).map(|a| coords[a] * n_sub.pow(a as u32)).sum::<usize>()
            };
            let (a, b) = (s * nv, from * nv);
            for v in 0..nv {
                out[a + v] = out[b + v];
            }
        }
    }
    out
}
