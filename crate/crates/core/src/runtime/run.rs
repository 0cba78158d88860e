//! The full time loop: initialize, advance with final-step clamping,
//! collect the CSV log and any grid dumps.

use super::binding::KernelBinding;
use super::mesh::Mesh;
use super::output::{csv_header, csv_row, grid_dump};
use super::step::{advance_step, RuntimeError};
use crate::basis::{precompute_basis, BasisTables};
use crate::limiter::{compute_projection_matrices, ProjectionPair};
use crate::spec::{OutputFormat, SolverKind, Specification};
use crate::user::UserSolver;

pub struct RunResult {
    pub mesh: Mesh,
    pub tables: BasisTables,
    pub csv: String,
    /// (label, content) pairs of grid dumps in chronological order.
    pub dumps: Vec<(String, String)>,
    pub steps: usize,
}

const MAX_STEPS: usize = 100_000;

pub fn run(
    spec: &Specification,
    user: &dyn UserSolver,
    binding: &KernelBinding,
) -> Result<RunResult, RuntimeError> {
    let tables = precompute_basis(spec.order as usize);
    let pair: Option<ProjectionPair> = if spec.solver_kind != SolverKind::Aderdg {
        Some(compute_projection_matrices(
            spec.order as usize,
            spec.dimension as usize,
        ))
    } else {
        None
    };
    let mut mesh = super::mesh::init_mesh(spec, user, &tables)?;
    let mut csv = csv_header(mesh.cfg.n_var);
    let mut dumps = Vec::new();
    let end = spec.time.end_time;
    let every = spec.output.every_n_steps as usize;
    while mesh.time < end - 1e-14 && mesh.step < MAX_STEPS {
        let cap = end - mesh.time;
        let stats = advance_step(
            &mut mesh,
            user,
            spec,
            &tables,
            pair.as_ref(),
            binding,
            Some(cap),
        )?;
        csv.push_str(&csv_row(mesh.step, mesh.time, &stats));
        if spec.output.format == OutputFormat::GridDump && every > 0 && mesh.step % every == 0 {
            dumps.push((format!("step_{}", mesh.step), grid_dump(&mesh, &tables)));
        }
    }
    if spec.output.format == OutputFormat::GridDump {
        dumps.push(("final".to_string(), grid_dump(&mesh, &tables)));
    }
    let steps = mesh.step;
    Ok(RunResult {
        mesh,
        tables,
        csv,
        dumps,
        steps,
    })
}
