use super::*;
use crate::apps::{Advection2D, Euler2D, EulerScenario, NavierStokes2D, NsScenario};
use crate::basis::precompute_basis;
use crate::spec::{parse_spec, Specification};
use crate::user::UserSolver;

fn make_spec(
    solver_kind: &str,
    order: u32,
    q: u32,
    terms: &str,
    linear: bool,
    cells: u32,
    end_time: f64,
) -> Specification {
    let limiter = if solver_kind == "limiting_aderdg" {
        r#","limiter": {"dmp_delta0": 1e-4, "dmp_epsilon": 1e-3}"#
    } else {
        ""
    };
    let text = format!(
        r#"{{
        "project_name": "t", "output_dir": "out", "dimension": 2,
        "solver_kind": "{solver_kind}", "order": {order}, "quantities": {q},
        "terms": [{terms}], "linear": {linear},
        "mesh": {{"origin": [0.0, 0.0], "extent": [1.0, 1.0],
                  "cells_per_dim": [{cells}, {cells}]}},
        "time": {{"end_time": {end_time}, "cfl": 0.9}}{limiter}
    }}"#
    );
    parse_spec(&text).unwrap()
}

#[test]
fn init_mesh_constant_and_spacing() {
    let spec = make_spec("aderdg", 3, 1, "\"flux\"", true, 9, 0.1);
    let tables = precompute_basis(3);
    let user = Advection2D::new([1.0, 0.0]);
    let mesh = init_mesh(&spec, &user, &tables).unwrap();
    assert!((mesh.h - 1.0 / 9.0).abs() < 1e-15);
    assert_eq!(mesh.n_cells(), 81);
}

#[test]
fn init_mesh_rejects_inadmissible_initial() {
    struct NegativeRho;
    impl UserSolver for NegativeRho {
        fn n_var(&self) -> usize {
            4
        }
        fn dim(&self) -> usize {
            2
        }
        fn initial(&self, _x: &[f64], q: &mut [f64]) {
            q.copy_from_slice(&[-1.0, 0.0, 0.0, 1.0]);
        }
        fn eigenvalues(&self, _q: &[f64], _dir: usize, l: &mut [f64]) {
            l.fill(1.0);
        }
        fn flux(&self, _q: &[f64], _dir: usize, f: &mut [f64]) {
            f.fill(0.0);
        }
        fn admissible(&self, q: &[f64]) -> bool {
            q[0] > 0.0
        }
    }
    let spec = make_spec("aderdg", 2, 4, "\"flux\"", false, 3, 0.1);
    let tables = precompute_basis(2);
    assert!(init_mesh(&spec, &NegativeRho, &tables).is_err());
}

#[test]
fn uniform_state_is_preserved() {
    let spec = make_spec("aderdg", 3, 4, "\"flux\"", false, 3, 1.0);
    let tables = precompute_basis(3);
    let user = Euler2D::new(EulerScenario::Uniform {
        rho: 1.0,
        u: 0.3,
        v: -0.2,
        p: 1.0,
    });
    let mut mesh = init_mesh(&spec, &user, &tables).unwrap();
    let before = mesh.cells[0].dofs.clone();
    let stats = advance_step(
        &mut mesh,
        &user,
        &spec,
        &tables,
        None,
        &KernelBinding::Generic,
        None,
    )
    .unwrap();
    assert!(stats.dt > 0.0);
    for cell in &mesh.cells {
        for (a, b) in cell.dofs.iter().zip(&before) {
            assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        }
    }
}

#[test]
fn rollback_copy_tracks_accepted_state() {
    let spec = make_spec("aderdg", 2, 1, "\"flux\"", true, 3, 1.0);
    let tables = precompute_basis(2);
    let user = Advection2D::new([1.0, 0.5]);
    let mut mesh = init_mesh(&spec, &user, &tables).unwrap();
    advance_step(
        &mut mesh,
        &user,
        &spec,
        &tables,
        None,
        &KernelBinding::Generic,
        None,
    )
    .unwrap();
    for cell in &mesh.cells {
        assert_eq!(cell.prev, cell.dofs);
    }
}

#[test]
fn advection_mass_is_conserved() {
    let spec = make_spec("aderdg", 3, 1, "\"flux\"", true, 5, 1.0);
    let tables = precompute_basis(3);
    let user = Advection2D::new([1.0, 0.5]);
    let mut mesh = init_mesh(&spec, &user, &tables).unwrap();
    let before = mesh.conserved_sums(&tables);
    for _ in 0..5 {
        advance_step(
            &mut mesh,
            &user,
            &spec,
            &tables,
            None,
            &KernelBinding::Generic,
            None,
        )
        .unwrap();
    }
    let after = mesh.conserved_sums(&tables);
    assert!((before[0] - after[0]).abs() < 1e-13, "{before:?} {after:?}");
}

#[test]
fn end_time_zero_returns_initial() {
    let spec = make_spec("aderdg", 2, 1, "\"flux\"", true, 3, 0.0);
    let user = Advection2D::new([1.0, 0.0]);
    let tables = precompute_basis(2);
    let result = run(&spec, &user, &KernelBinding::Generic).unwrap();
    assert_eq!(result.steps, 0);
    let fresh = init_mesh(&spec, &user, &tables).unwrap();
    for (a, b) in result.mesh.cells.iter().zip(&fresh.cells) {
        assert_eq!(a.dofs, b.dofs);
    }
}

#[test]
fn grid_dump_shape_and_determinism() {
    // 1x1 mesh, q=1, N=1, d=2: (N+1)^d = 4 node rows after the header
    let mut spec = make_spec("aderdg", 1, 1, "\"flux\"", true, 1, 0.0);
    spec.output.format = crate::spec::OutputFormat::GridDump;
    let user = Advection2D::new([1.0, 0.0]);
    let r1 = run(&spec, &user, &KernelBinding::Generic).unwrap();
    let r2 = run(&spec, &user, &KernelBinding::Generic).unwrap();
    assert_eq!(r1.dumps.len(), 1);
    let dump = &r1.dumps[0].1;
    assert_eq!(dump.lines().count(), 1 + 4);
    assert!(dump.starts_with("t="));
    assert_eq!(dump, &r2.dumps[0].1, "dumps must be byte-identical");
}

#[test]
fn advection_one_period_returns_to_initial() {
    // full run: after one period the solution equals the initial data up
    // to the discretization error
    let spec = make_spec("aderdg", 3, 1, "\"flux\"", true, 9, 1.0);
    let user = Advection2D::new([1.0, 0.0]);
    let result = run(&spec, &user, &KernelBinding::Generic).unwrap();
    let tables = &result.tables;
    let cfg = &result.mesh.cfg;
    let mut l2 = 0.0;
    let vol = result.mesh.h.powi(2);
    for c in 0..result.mesh.n_cells() {
        for p in 0..cfg.npts() {
            let x = result.mesh.node_position(c, p, tables);
            let w = vol * result.mesh.node_weight(p, tables);
            let e = result.mesh.cells[c].dofs[p * cfg.q_pad] - user.exact(&x, 1.0);
            l2 += w * e * e;
        }
    }
    l2 = l2.sqrt();
    assert!(l2 < 1e-4, "L2 error after one period: {l2}");
}

#[test]
fn ns_uniform_flow_stays_constant() {
    // σ and κ∇T vanish on constants: 20 steps leave the state unchanged
    // to 1e-12
    let spec = make_spec("aderdg", 2, 4, "\"viscous_flux\"", false, 3, 10.0);
    let tables = precompute_basis(2);
    let user = NavierStokes2D::new(
        0.01,
        0.02,
        NsScenario::UniformFlow {
            rho: 1.0,
            u: 0.4,
            v: 0.1,
            p: 1.0,
        },
    );
    let mut mesh = init_mesh(&spec, &user, &tables).unwrap();
    let before = mesh.cells[0].dofs.clone();
    for _ in 0..20 {
        advance_step(
            &mut mesh,
            &user,
            &spec,
            &tables,
            None,
            &KernelBinding::Generic,
            None,
        )
        .unwrap();
    }
    for cell in &mesh.cells {
        for (a, b) in cell.dofs.iter().zip(&before) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}

#[test]
fn ns_viscous_flux_matches_analytic_profile() {
    // u = ax·x + ay·y, v = 0, ρ = 1, p = 1: σ has constant entries
    // σ_xx = μ(2ax − ⅔ax) = (4/3)μ ax, σ_xy = μ ay, heat flux zero
    let (mu, kappa, ax, ay) = (0.3, 0.7, 0.5, -0.25);
    let user = NavierStokes2D::new(mu, kappa, NsScenario::PolynomialGradient { ax, ay });
    let x = [0.3, 0.6];
    let mut q = vec![0.0; 4];
    user.initial(&x, &mut q);
    let u_vel = ax * x[0] + ay * x[1];
    // conserved-variable gradients of this profile
    // d/dx: (0, ax, 0, dE/dx), d/dy: (0, ay, 0, dE/dy), E = p/(γ-1)+½u²
    let grad = [
        [0.0, ax, 0.0, u_vel * ax],
        [0.0, ay, 0.0, u_vel * ay],
    ];
    let flat: Vec<f64> = grad.iter().flatten().copied().collect();
    let mut f = vec![0.0; 4];
    user.viscous_flux(&q, &flat, 0, &mut f);
    let p = 1.0;
    let sigma_xx = mu * (2.0 * ax - 2.0 / 3.0 * ax);
    let sigma_xy = mu * ay;
    assert!((f[0] - q[1]).abs() < 1e-13);
    assert!((f[1] - (q[1] * u_vel + p - sigma_xx)).abs() < 1e-12, "{}", f[1]);
    assert!((f[2] - (q[2] * u_vel - sigma_xy)).abs() < 1e-12);
    // energy flux: (E+p)u − u σ_xx (v = 0, ∇T = 0 on this profile at ρ=1, p=1)
    let expected_e = (q[3] + p) * u_vel - u_vel * sigma_xx;
    assert!((f[3] - expected_e).abs() < 1e-12, "{} vs {expected_e}", f[3]);
}
