//! The committed generated kernel trees must reproduce the generic
//! reference kernels: same specification, same application, same number
//! of steps, compared state-by-state.

use std::path::Path;

use pdegen::basis::precompute_basis;
use pdegen::limiter::compute_projection_matrices;
use pdegen::runtime::{advance_step, init_mesh, KernelBinding};
use pdegen::spec::{parse_spec, SolverKind, Specification};

fn fixture_spec(name: &str) -> Specification {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/specs")
        .join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap();
    parse_spec(&text).unwrap()
}

/// Advance `steps` steps under the given binding and return the flattened
/// degrees of freedom of every cell.
fn run_steps(spec: &Specification, binding: &KernelBinding, steps: usize) -> Vec<f64> {
    let user = pdegen::apps::resolve(&spec.project_name).expect("example app");
    let tables = precompute_basis(spec.order as usize);
    let pair = (spec.solver_kind != SolverKind::Aderdg)
        .then(|| compute_projection_matrices(spec.order as usize, spec.dimension as usize));
    let mut mesh = init_mesh(spec, user.as_ref(), &tables).unwrap();
    for _ in 0..steps {
        advance_step(
            &mut mesh,
            user.as_ref(),
            spec,
            &tables,
            pair.as_ref(),
            binding,
            None,
        )
        .unwrap();
    }
    mesh.cells.iter().flat_map(|c| c.dofs.iter().copied()).collect()
}

pub fn max_abs_diff_after(name: &str, steps: usize) -> f64 {
    let spec = fixture_spec(name);
    let set = pdegen::generated_fixtures::lookup(&spec.project_name)
        .unwrap_or_else(|| panic!("no compiled kernels for {name}"));
    let generic = run_steps(&spec, &KernelBinding::Generic, steps);
    let generated = run_steps(&spec, &KernelBinding::Generated(set), steps);
    assert_eq!(generic.len(), generated.len());
    generic
        .iter()
        .zip(&generated)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

#[test]
fn advection_n2_matches_generic() {
    assert!(max_abs_diff_after("advection_n2", 10) <= 1e-12);
}

#[test]
fn advection_n3_matches_generic() {
    assert!(max_abs_diff_after("advection_n3", 10) <= 1e-12);
}

#[test]
fn advection_otf_n5_matches_generic() {
    assert!(max_abs_diff_after("advection_otf_n5", 10) <= 1e-12);
}

#[test]
fn euler_vortex_n3_matches_generic() {
    assert!(max_abs_diff_after("euler_vortex_n3", 10) <= 1e-12);
}

#[test]
fn euler_soa_n3_matches_generic() {
    assert!(max_abs_diff_after("euler_soa_n3", 10) <= 1e-12);
}

#[test]
fn euler_sod_limiting_n3_matches_generic() {
    assert!(max_abs_diff_after("euler_sod_limiting_n3", 10) <= 1e-12);
}

#[test]
fn ns_n3_matches_generic() {
    assert!(max_abs_diff_after("ns_n3", 10) <= 1e-12);
}
