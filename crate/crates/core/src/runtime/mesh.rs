//! Uniform Cartesian mesh of cubic cells with per-cell DG state and
//! limiter bookkeeping.

use crate::basis::BasisTables;
use crate::kernels::KernelConfig;
use crate::spec::Specification;
use crate::user::UserSolver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimiterStatus {
    Ok,
    Troubled,
    NeighborOfTroubled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMode {
    Periodic,
    User,
}

#[derive(Debug, Clone)]
pub struct CellState {
    /// Current accepted DOFs, (N+1)^d x q_pad, AoS.
    pub dofs: Vec<f64>,
    /// Rollback copy: the last accepted state.
    pub prev: Vec<f64>,
    pub status: LimiterStatus,
    /// Subcell means of the accepted state when the cell is running FV.
    pub fv_means: Option<Vec<f64>>,
}

#[derive(Debug, Clone)]
pub struct Mesh {
    pub cfg: KernelConfig,
    pub origin: Vec<f64>,
    pub extent: Vec<f64>,
    pub cells_per_dim: Vec<usize>,
    pub h: f64,
    /// Boundary mode per face (2*dir + side).
    pub boundary: Vec<BoundaryMode>,
    pub cells: Vec<CellState>,
    pub time: f64,
    pub step: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum MeshError {
    #[error("initial data inadmissible in cell {cell} at node {node}")]
    InadmissibleInitial { cell: usize, node: usize },
}

impl Mesh {
    pub fn n_cells(&self) -> usize {
        self.cells_per_dim.iter().product()
    }

    pub fn cell_stride(&self, a: usize) -> usize {
        self.cells_per_dim[..a].iter().product()
    }

    pub fn cell_multi_index(&self, c: usize) -> Vec<usize> {
        (0..self.cfg.dim)
            .map(|a| (c / self.cell_stride(a)) % self.cells_per_dim[a])
            .collect()
    }

    pub fn cell_index(&self, mi: &[usize]) -> usize {
        (0..self.cfg.dim).map(|a| mi[a] * self.cell_stride(a)).sum()
    }

    /// Neighbor at offset `off` (entries in -1..=1 etc.), periodic wrap;
    /// None when the offset leaves a non-periodic boundary.
    pub fn neighbor(&self, c: usize, off: &[isize]) -> Option<usize> {
        let mut mi = self.cell_multi_index(c);
        for a in 0..self.cfg.dim {
            let n = self.cells_per_dim[a] as isize;
            let raw = mi[a] as isize + off[a];
            if raw < 0 || raw >= n {
                let side = if raw < 0 { 0 } else { 1 };
                if self.boundary[2 * a + side] != BoundaryMode::Periodic {
                    return None;
                }
            }
            mi[a] = raw.rem_euclid(n) as usize;
        }
        Some(self.cell_index(&mi))
    }

    /// Low corner of cell c.
    pub fn cell_origin(&self, c: usize) -> Vec<f64> {
        let mi = self.cell_multi_index(c);
        (0..self.cfg.dim)
            .map(|a| self.origin[a] + self.h * mi[a] as f64)
            .collect()
    }

    /// Physical position of node p of cell c.
    pub fn node_position(&self, c: usize, p: usize, tables: &BasisTables) -> Vec<f64> {
        let o = self.cell_origin(c);
        let mi = self.cfg.point_multi_index(p);
        (0..self.cfg.dim)
            .map(|a| o[a] + self.h * tables.nodes[mi[a]])
            .collect()
    }

    /// Quadrature weight of node p (product of per-axis weights).
    pub fn node_weight(&self, p: usize, tables: &BasisTables) -> f64 {
        self.cfg
            .point_multi_index(p)
            .iter()
            .map(|&i| tables.weights[i])
            .product()
    }

    /// Volume integrals of each conserved quantity over the mesh.
    pub fn conserved_sums(&self, tables: &BasisTables) -> Vec<f64> {
        let vol = self.h.powi(self.cfg.dim as i32);
        let mut sums = vec![0.0; self.cfg.n_var];
        for cell in &self.cells {
            for p in 0..self.cfg.npts() {
                let w = vol * self.node_weight(p, tables);
                for v in 0..self.cfg.n_var {
                    sums[v] += w * cell.dofs[p * self.cfg.q_pad + v];
                }
            }
        }
        sums
    }
}

/// Build the mesh and interpolate the initial condition at the mapped
/// quadrature nodes; rejects inadmissible initial data.
pub fn init_mesh(
    spec: &Specification,
    user: &dyn UserSolver,
    tables: &BasisTables,
) -> Result<Mesh, MeshError> {
    let cfg = KernelConfig::from_spec(spec);
    let mut mesh = Mesh {
        origin: spec.mesh.origin.clone(),
        extent: spec.mesh.extent.clone(),
        cells_per_dim: spec.mesh.cells_per_dim.iter().map(|&c| c as usize).collect(),
        h: spec.h(),
        boundary: vec![BoundaryMode::Periodic; 2 * cfg.dim],
        cells: Vec::new(),
        time: 0.0,
        step: 0,
        cfg,
    };
    let n_cells = mesh.n_cells();
    let mut q = vec![0.0; mesh.cfg.n_var];
    for c in 0..n_cells {
        let mut dofs = vec![0.0; mesh.cfg.len()];
        for p in 0..mesh.cfg.npts() {
            let x = {
                let o = mesh.cell_origin_raw(c);
                let mi = mesh.cfg.point_multi_index(p);
                (0..mesh.cfg.dim)
                    .map(|a| o[a] + mesh.h * tables.nodes[mi[a]])
                    .collect::<Vec<f64>>()
            };
            user.initial(&x, &mut q);
            if !user.admissible(&q) {
                return Err(MeshError::InadmissibleInitial { cell: c, node: p });
            }
            dofs[p * mesh.cfg.q_pad..p * mesh.cfg.q_pad + mesh.cfg.n_var].copy_from_slice(&q);
        }
        mesh.cells.push(CellState {
            prev: dofs.clone(),
            dofs,
            status: LimiterStatus::Ok,
            fv_means: None,
        });
    }
    Ok(mesh)
}

impl Mesh {
    // cell_origin before cells are pushed (used during init)
    fn cell_origin_raw(&self, c: usize) -> Vec<f64> {
        let mi: Vec<usize> = (0..self.cfg.dim)
            .map(|a| (c / self.cell_stride(a)) % self.cells_per_dim[a])
            .collect();
        (0..self.cfg.dim)
            .map(|a| self.origin[a] + self.h * mi[a] as f64)
            .collect()
    }
}
