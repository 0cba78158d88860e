//! Uniform Cartesian mesh, time loop, boundary handling and output; runs
//! with generic or generated kernels via the binding seam.

pub mod binding;
pub mod mesh;
pub mod output;
pub mod run;
pub mod step;

pub use binding::{KernelBinding, KernelSet};
pub use mesh::{init_mesh, BoundaryMode, CellState, LimiterStatus, Mesh};
pub use output::{grid_dump, write_output};
pub use run::{run, RunResult};
pub use step::{advance_step, RuntimeError, StepStats};

#[cfg(test)]
mod tests;
