//! Kernel dispatch: the interpretive path uses the generic kernels
//! parameterized at runtime; generated trees register a `KernelSet` of
//! specialized functions with identical signatures.

use crate::basis::BasisTables;
use crate::kernels::{KernelConfig, KernelError, PredictorResult};
use crate::user::UserSolver;

pub type PredictorFn =
    fn(&[f64], &dyn UserSolver, f64, &KernelConfig, &BasisTables) -> Result<PredictorResult, KernelError>;
pub type RiemannFn = fn(
    &[f64],
    &[f64],
    Option<&[f64]>,
    Option<&[f64]>,
    usize,
    &dyn UserSolver,
    &KernelConfig,
    f64,
) -> Result<(Vec<f64>, Vec<f64>), KernelError>;
pub type UpdateFn =
    fn(&[f64], &PredictorResult, &[Vec<f64>], f64, &KernelConfig, &BasisTables) -> Vec<f64>;

/// A complete set of specialized kernels for one generated solver.
pub struct KernelSet {
    pub project_name: &'static str,
    pub predictor: PredictorFn,
    pub riemann: RiemannFn,
    pub update: UpdateFn,
}

pub enum KernelBinding {
    /// Runtime-parameterized reference kernels; the predictor variant
    /// comes from the specification.
    Generic,
    /// Compiled-in generated kernels.
    Generated(&'static KernelSet),
}
