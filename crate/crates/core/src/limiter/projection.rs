//! DG <-> FV projections on the (2N+1)^d subcell grid: P maps DG DOFs to
//! subcell means (exact quadrature of basis means), R reconstructs DOFs
//! from means via a conservation-constrained least-squares pseudo-inverse.

use crate::basis::{lagrange_eval, precompute_basis};
use nalgebra::DMatrix;

#[derive(Debug, Clone)]
pub struct ProjectionPair {
    pub order: usize,
    pub dim: usize,
    /// Subcells per axis, 2N+1.
    pub n_sub: usize,
    /// P: (n_sub^d) x (n_dof^d), row-major; subcell and node indices both
    /// axis-0 fastest.
    pub p: Vec<f64>,
    /// R: (n_dof^d) x (n_sub^d), row-major.
    pub r: Vec<f64>,
}

impl ProjectionPair {
    pub fn n_dof(&self) -> usize {
        self.order + 1
    }
    pub fn n_sub_tot(&self) -> usize {
        self.n_sub.pow(self.dim as u32)
    }
    pub fn npts(&self) -> usize {
        self.n_dof().pow(self.dim as u32)
    }

    /// Project padded AoS DOFs to subcell means (un-padded, stride n_var).
    pub fn apply_p(&self, dofs: &[f64], n_var: usize, q_pad: usize) -> Vec<f64> {
        let (rows, cols) = (self.n_sub_tot(), self.npts());
        let mut out = vec![0.0; rows * n_var];
        for s in 0..rows {
            for j in 0..cols {
                let w = self.p[s * cols + j];
                for v in 0..n_var {
                    out[s * n_var + v] += w * dofs[j * q_pad + v];
                }
            }
        }
        out
    }

    /// Reconstruct padded AoS DOFs from subcell means.
    pub fn apply_r(&self, means: &[f64], n_var: usize, q_pad: usize) -> Vec<f64> {
        let (rows, cols) = (self.npts(), self.n_sub_tot());
        let mut out = vec![0.0; rows * q_pad];
        for j in 0..rows {
            for s in 0..cols {
                let w = self.r[j * cols + s];
                for v in 0..n_var {
                    out[j * q_pad + v] += w * means[s * n_var + v];
                }
            }
        }
        out
    }
}

/// 1D projection: P1[s][j] = mean of phi_j over subcell s (exact Gauss
/// quadrature), and the constrained least-squares reconstruction R1.
fn projection_1d(order: usize) -> (Vec<f64>, Vec<f64>) {
    let tables = precompute_basis(order);
    let n_dof = order + 1;
    let n_sub = 2 * order + 1;
    let mut p1 = vec![0.0; n_sub * n_dof];
    for s in 0..n_sub {
        for j in 0..n_dof {
            let mut acc = 0.0;
            for k in 0..n_dof {
                let x = (s as f64 + tables.nodes[k]) / n_sub as f64;
                acc += tables.weights[k] * lagrange_eval(&tables.nodes, j, x);
            }
            p1[s * n_dof + j] = acc;
        }
    }

    // R1 = argmin ||P1 c - y||^2 subject to the mean constraint
    // w^T c = (1/n_sub) 1^T y, solved through the KKT system.
    let p_mat = DMatrix::from_fn(n_sub, n_dof, |s, j| p1[s * n_dof + j]);
    let mut kkt = DMatrix::zeros(n_dof + 1, n_dof + 1);
    let ptp = 2.0 * p_mat.transpose() * &p_mat;
    kkt.view_mut((0, 0), (n_dof, n_dof)).copy_from(&ptp);
    for j in 0..n_dof {
        kkt[(j, n_dof)] = tables.weights[j];
        kkt[(n_dof, j)] = tables.weights[j];
    }
    let mut rhs = DMatrix::zeros(n_dof + 1, n_sub);
    rhs.view_mut((0, 0), (n_dof, n_sub))
        .copy_from(&(2.0 * p_mat.transpose()));
    for s in 0..n_sub {
        rhs[(n_dof, s)] = 1.0 / n_sub as f64;
    }
    let sol = kkt
        .lu()
        .solve(&rhs)
        .expect("projection KKT system is nonsingular");
    let mut r1 = vec![0.0; n_dof * n_sub];
    for j in 0..n_dof {
        for s in 0..n_sub {
            r1[j * n_sub + s] = sol[(j, s)];
        }
    }
    (p1, r1)
}

/// Tensor-product projection pair for order N in d dimensions.
pub fn compute_projection_matrices(order: usize, dim: usize) -> ProjectionPair {
    assert!((1..=9).contains(&order) && (2..=3).contains(&dim));
    let (p1, r1) = projection_1d(order);
    let n_dof = order + 1;
    let n_sub = 2 * order + 1;
    let rows = n_sub.pow(dim as u32);
    let cols = n_dof.pow(dim as u32);
    let mut p = vec![0.0; rows * cols];
    for s in 0..rows {
        for j in 0..cols {
            let mut w = 1.0;
            for a in 0..dim {
                let sa = (s / n_sub.pow(a as u32)) % n_sub;
                let ja = (j / n_dof.pow(a as u32)) % n_dof;
                w *= p1[sa * n_dof + ja];
            }
            p[s * cols + j] = w;
        }
    }
    let mut r = vec![0.0; cols * rows];
    for j in 0..cols {
        for s in 0..rows {
            let mut w = 1.0;
            for a in 0..dim {
                let sa = (s / n_sub.pow(a as u32)) % n_sub;
                let ja = (j / n_dof.pow(a as u32)) % n_dof;
                w *= r1[ja * n_sub + sa];
            }
            r[j * rows + s] = w;
        }
    }
    ProjectionPair {
        order,
        dim,
        n_sub,
        p,
        r,
    }
}
