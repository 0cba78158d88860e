use super::fv::HALO;
use super::*;
use crate::apps::{Euler2D, EulerScenario};
use crate::kernels::TermFlags;
use crate::user::UserSolver;

fn flux_only() -> TermFlags {
    TermFlags {
        flux: true,
        ncp: false,
        source: false,
        viscous: false,
    }
}

#[test]
fn projection_shapes() {
    // N=3, d=2: P is 49 x 16
    let pair = compute_projection_matrices(3, 2);
    assert_eq!(pair.n_sub_tot(), 49);
    assert_eq!(pair.npts(), 16);
    assert_eq!(pair.p.len(), 49 * 16);
    assert_eq!(pair.r.len(), 16 * 49);
}

#[test]
fn projection_of_constant_is_constant() {
    let pair = compute_projection_matrices(3, 2);
    let dofs = vec![3.7; pair.npts()];
    let means = pair.apply_p(&dofs, 1, 1);
    for m in &means {
        assert!((m - 3.7).abs() < 1e-13);
    }
}

#[test]
fn reconstruction_inverts_projection() {
    // R·P = I to 1e-12 for all N in 1..=5, d in {2,3}
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    for d in [2usize, 3] {
        for n in 1..=5usize {
            let pair = compute_projection_matrices(n, d);
            let dofs: Vec<f64> = (0..pair.npts()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let means = pair.apply_p(&dofs, 1, 1);
            let back = pair.apply_r(&means, 1, 1);
            for (a, b) in dofs.iter().zip(&back) {
                assert!((a - b).abs() < 1e-12, "N={n} d={d}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn projections_preserve_the_cell_mean() {
    use crate::basis::precompute_basis;
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(11);
    for d in [2usize, 3] {
        for n in 1..=5usize {
            let pair = compute_projection_matrices(n, d);
            let tables = precompute_basis(n);
            let node_weight = |p: usize| -> f64 {
                (0..d)
                    .map(|a| tables.weights[(p / (n + 1).pow(a as u32)) % (n + 1)])
                    .product()
            };
            let dofs: Vec<f64> = (0..pair.npts()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mean_dofs: f64 = (0..pair.npts()).map(|p| node_weight(p) * dofs[p]).sum();
            let means = pair.apply_p(&dofs, 1, 1);
            let mean_p: f64 = means.iter().sum::<f64>() / means.len() as f64;
            assert!((mean_p - mean_dofs).abs() < 1e-13, "P mean, N={n} d={d}");

            let y: Vec<f64> = (0..pair.n_sub_tot()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mean_y: f64 = y.iter().sum::<f64>() / y.len() as f64;
            let rec = pair.apply_r(&y, 1, 1);
            let mean_r: f64 = (0..pair.npts()).map(|p| node_weight(p) * rec[p]).sum();
            assert!((mean_r - mean_y).abs() < 1e-13, "R mean, N={n} d={d}");
        }
    }
}

#[test]
fn minmod_clips_extrema() {
    assert_eq!(minmod(1.0, -1.0), 0.0);
    assert_eq!(minmod(2.0, 1.0), 1.0);
    assert_eq!(minmod(-0.5, -2.0), -0.5);
    assert_eq!(minmod(0.0, 3.0), 0.0);
}

#[test]
fn fv_constant_state_unchanged() {
    let user = Euler2D::new(EulerScenario::Uniform {
        rho: 1.0,
        u: 0.4,
        v: -0.1,
        p: 1.5,
    });
    let mut c = vec![0.0; 4];
    user.initial(&[0.0, 0.0], &mut c);
    let n_sub = 7;
    let m = n_sub + 2 * HALO;
    let mut ext = vec![0.0; m * m * 4];
    for e in 0..m * m {
        ext[e * 4..e * 4 + 4].copy_from_slice(&c);
    }
    let (out, _) =
        fv_subcell_step(&ext, n_sub, 2, 4, &user, &flux_only(), 1e-3, 0.01).unwrap();
    for u in out.chunks_exact(4) {
        for v in 0..4 {
            assert!((u[v] - c[v]).abs() < 1e-14);
        }
    }
}

#[test]
fn fv_sod_stays_positive_for_100_substeps() {
    // robustness regression on the subgrid: density and pressure positive
    let user = Euler2D::new(EulerScenario::DoubleSodX);
    let n_sub = 7;
    let m = n_sub + 2 * HALO;
    let h_sub = 1.0 / n_sub as f64;
    let left = crate::apps::euler::conserved(1.0, 0.0, 0.0, 1.0);
    let right = crate::apps::euler::conserved(0.125, 0.0, 0.0, 0.1);
    let mut cur = vec![0.0; n_sub * n_sub * 4];
    for i in 0..n_sub {
        for j in 0..n_sub {
            let s = if i < n_sub / 2 { &left } else { &right };
            cur[(j * n_sub + i) * 4..(j * n_sub + i) * 4 + 4].copy_from_slice(s);
        }
    }
    let dt = 0.2 * h_sub / 2.0; // well under the acoustic CFL
    for _ in 0..100 {
        // transmissive halo: clamp to the nearest interior cell
        let mut ext = vec![0.0; m * m * 4];
        for ej in 0..m {
            for ei in 0..m {
                let i = ei.clamp(HALO, HALO + n_sub - 1) - HALO;
                let j = ej.clamp(HALO, HALO + n_sub - 1) - HALO;
                ext[(ej * m + ei) * 4..(ej * m + ei) * 4 + 4]
                    .copy_from_slice(&cur[(j * n_sub + i) * 4..(j * n_sub + i) * 4 + 4]);
            }
        }
        let (next, _) =
            fv_subcell_step(&ext, n_sub, 2, 4, &user, &flux_only(), dt, h_sub).unwrap();
        cur = next;
        for u in cur.chunks_exact(4) {
            assert!(u[0] > 0.0, "negative density");
            assert!(crate::apps::euler::pressure(u) > 0.0, "negative pressure");
        }
    }
}

#[test]
fn detect_flags_nan_and_inadmissible() {
    let user = Euler2D::new(EulerScenario::DoubleSodX);
    let ex = NeighborhoodExtrema {
        min: vec![0.0; 4],
        max: vec![3.0; 4],
    };
    let good = crate::apps::euler::conserved(1.0, 0.0, 0.0, 1.0);
    assert!(!detect_troubled(&good, &good, &ex, &user, 4, 1e-4, 1e-3));
    let mut nan = good.to_vec();
    nan[2] = f64::NAN;
    assert!(detect_troubled(&nan, &good, &ex, &user, 4, 1e-4, 1e-3));
    // negative density mean -> admissibility rejection
    let bad = [-0.5, 0.0, 0.0, 1.0];
    assert!(detect_troubled(&bad, &bad, &ex, &user, 4, 1e-4, 1e-3));
    // DMP violation: mean far outside the neighborhood range
    let spike = [1.9e2, 0.0, 0.0, 2.5];
    assert!(detect_troubled(&spike, &spike, &ex, &user, 4, 1e-4, 1e-3));
}
