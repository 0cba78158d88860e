//! Predictor temporary-memory accounting: the on-the-fly variant removes
//! the full time (or derivative-level) dimension from the temporaries.

use crate::spec::PredictorVariant;

#[derive(Debug, Clone, PartialEq)]
pub struct MemoryReport {
    pub bytes: usize,
    /// Human-readable derivation of `bytes`, so the claim is auditable.
    pub formula: String,
}

/// Temporary buffer footprint of the space-time predictor.
///
/// ck holds every derivative level k = 0..=N plus one scratch level:
///   8 · q · (N+1)^d · (N+2) bytes.
/// otf keeps three live buffers (current derivative, next derivative,
/// accumulator): 8 · q · (N+1)^d · 3 bytes.
/// picard holds the space-time DOFs: 8 · q · (N+1)^(d+1) bytes.
/// No additional constants are counted, so the ck/otf ratio is exactly
/// (N+2)/3.
pub fn temp_memory_report(n: usize, d: usize, q: usize, variant: PredictorVariant) -> MemoryReport {
    let n_dof = n + 1;
    let per_level = 8 * q * n_dof.pow(d as u32);
    match variant {
        PredictorVariant::Ck => MemoryReport {
            bytes: per_level * (n + 2),
            formula: format!("8*{q}*({n}+1)^{d}*({n}+2) = {}", per_level * (n + 2)),
        },
        PredictorVariant::Otf => MemoryReport {
            bytes: per_level * 3,
            formula: format!("8*{q}*({n}+1)^{d}*3 = {}", per_level * 3),
        },
        PredictorVariant::Picard => MemoryReport {
            bytes: per_level * n_dof,
            formula: format!("8*{q}*({n}+1)^({d}+1) = {}", per_level * n_dof),
        },
    }
}
