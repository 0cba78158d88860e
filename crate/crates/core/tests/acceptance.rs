//! Acceptance gate: the ten end-to-end criteria, one test each, each
//! printing a single `criterion N <name>: PASS/FAIL` line (run with
//! `--nocapture` to see them on success).

use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pdegen::basis::precompute_basis;
use pdegen::kernels::{
    predictor_linear_ck, predictor_linear_otf, temp_memory_report, FluxMode, KernelConfig,
    TermFlags,
};
use pdegen::limiter::compute_projection_matrices;
use pdegen::runtime::{advance_step, init_mesh, KernelBinding, Mesh};
use pdegen::spec::{parse_spec, PredictorVariant, SolverKind, Specification};
use pdegen::template::{render_str, DirLoader, RenderContext};
use pdegen::user::UserSolver;

fn report(num: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {num} {name}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {num} {name}: {detail}");
}

fn fixture_spec(name: &str) -> Specification {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/specs")
        .join(format!("{name}.json"));
    parse_spec(&std::fs::read_to_string(path).unwrap()).unwrap()
}

struct Sim {
    spec: Specification,
    user: Box<dyn UserSolver>,
    tables: pdegen::basis::BasisTables,
    pair: Option<pdegen::limiter::ProjectionPair>,
    mesh: Mesh,
}

impl Sim {
    fn new(spec: Specification) -> Sim {
        let user = pdegen::apps::resolve(&spec.project_name).expect("example app");
        let tables = precompute_basis(spec.order as usize);
        let pair = (spec.solver_kind != SolverKind::Aderdg)
            .then(|| compute_projection_matrices(spec.order as usize, spec.dimension as usize));
        let mesh = init_mesh(&spec, user.as_ref(), &tables).unwrap();
        Sim {
            spec,
            user,
            tables,
            pair,
            mesh,
        }
    }

    fn step(&mut self, binding: &KernelBinding) -> pdegen::runtime::StepStats {
        advance_step(
            &mut self.mesh,
            self.user.as_ref(),
            &self.spec,
            &self.tables,
            self.pair.as_ref(),
            binding,
            None,
        )
        .unwrap()
    }

    fn flat_dofs(&self) -> Vec<f64> {
        self.mesh
            .cells
            .iter()
            .flat_map(|c| c.dofs.iter().copied())
            .collect()
    }
}

fn run_steps(spec: &Specification, binding: &KernelBinding, steps: usize) -> Vec<f64> {
    let mut sim = Sim::new(spec.clone());
    for _ in 0..steps {
        sim.step(binding);
    }
    sim.flat_dofs()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

// ------------------------------------------------------------------
// 1. Template fidelity: the documented C fragment renders byte-exactly.
// ------------------------------------------------------------------
#[test]
fn criterion_01_template_fidelity() {
    let loader = DirLoader(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../templates"));
    let src = "{% include \"fixtures/template_frag.tpl\" %}";
    let mut ctx = RenderContext::new();
    ctx.set("initA", true);
    ctx.set("nDof", 5i64);
    ctx.set("nVar", 4i64);
    ctx.set("C", "foo");
    ctx.set("tempVarsOnStack", true);
    ctx.set("alignment", 32i64);
    let on = render_str(src, &mut ctx, &loader).unwrap();
    let golden = "double A[5] __attribute__((aligned(32)));\nfor(int i=0; i<5; ++i) {\n  A[i] = B[i+20] * foo[i];\n}";
    ctx.set("initA", false);
    let off = render_str(src, &mut ctx, &loader).unwrap();
    report(
        1,
        "template fidelity",
        on == golden && off.is_empty(),
        &format!("initA:true matched {} bytes; initA:false empty", golden.len()),
    );
}

// ------------------------------------------------------------------
// 2. DSL gate: flux + viscous_flux fails naming /terms; dropping either
//    term passes.
// ------------------------------------------------------------------
#[test]
fn criterion_02_dsl_gate() {
    let base = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/specs/euler_vortex_n3.json"),
    )
    .unwrap();
    let both = base.replace("\"flux\"", "\"flux\", \"viscous_flux\"");
    let spec = parse_spec(&both).unwrap();
    let rep = pdegen::spec::validate_spec(&spec);
    let names_terms = rep.errors.iter().any(|e| e.path.contains("/terms"));
    let flux_only_ok = pdegen::spec::validate_spec(&parse_spec(&base).unwrap()).valid();
    let viscous_only = base.replace("\"flux\"", "\"viscous_flux\"");
    let viscous_only_ok = pdegen::spec::validate_spec(&parse_spec(&viscous_only).unwrap()).valid();
    report(
        2,
        "dsl gate",
        !rep.valid() && names_terms && flux_only_ok && viscous_only_ok,
        &format!(
            "both terms rejected ({} error(s) naming /terms); either alone accepted",
            rep.errors.len()
        ),
    );
}

// ------------------------------------------------------------------
// 3. Generated ≡ generic over 10 steps for every fixture spec.
// ------------------------------------------------------------------
#[test]
fn criterion_03_generated_equals_generic() {
    let fixtures = [
        "advection_n2",
        "advection_n3",
        "euler_vortex_n3",
        "euler_sod_limiting_n3",
        "advection_otf_n5",
    ];
    let mut worst: f64 = 0.0;
    for name in fixtures {
        let spec = fixture_spec(name);
        let set = pdegen::generated_fixtures::lookup(&spec.project_name).unwrap();
        let a = run_steps(&spec, &KernelBinding::Generic, 10);
        let b = run_steps(&spec, &KernelBinding::Generated(set), 10);
        worst = worst.max(max_abs_diff(&a, &b));
    }
    report(
        3,
        "generated ≡ generic",
        worst <= 1e-12,
        &format!("max-abs diff {worst:.3e} ≤ 1e-12 across {} fixtures", fixtures.len()),
    );
}

// ------------------------------------------------------------------
// 4. Convergence order on smooth periodic advection, N = 2 and 3.
// ------------------------------------------------------------------
fn advection_l2_error(order: i64, cells: i64) -> f64 {
    let mut spec = fixture_spec(if order == 2 { "advection_n2" } else { "advection_n3" });
    spec.order = order;
    spec.mesh.cells_per_dim = vec![cells, cells];
    spec.time.end_time = 0.1;
    let mut sim = Sim::new(spec);
    let end = sim.spec.time.end_time;
    while sim.mesh.time < end - 1e-14 {
        let cap = end - sim.mesh.time;
        advance_step(
            &mut sim.mesh,
            sim.user.as_ref(),
            &sim.spec,
            &sim.tables,
            sim.pair.as_ref(),
            &KernelBinding::Generic,
            Some(cap),
        )
        .unwrap();
    }
    let exact = pdegen::apps::Advection2D::new([1.0, 0.5]);
    let vol = sim.mesh.h * sim.mesh.h;
    let mut err2 = 0.0;
    for c in 0..sim.mesh.n_cells() {
        for p in 0..sim.mesh.cfg.npts() {
            let x = sim.mesh.node_position(c, p, &sim.tables);
            let w = vol * sim.mesh.node_weight(p, &sim.tables);
            let q = sim.mesh.cells[c].dofs[p * sim.mesh.cfg.q_pad];
            let d = q - exact.exact(&x, end);
            err2 += w * d * d;
        }
    }
    err2.sqrt()
}

#[test]
fn criterion_04_convergence_order() {
    let mut detail = String::new();
    let mut pass = true;
    for order in [2i64, 3] {
        let coarse = advection_l2_error(order, 9);
        let fine = advection_l2_error(order, 27);
        let observed = (coarse / fine).ln() / 3f64.ln();
        let need = order as f64 + 0.8;
        pass &= observed >= need;
        detail.push_str(&format!("N={order}: order {observed:.2} (≥ {need}); "));
    }
    report(4, "convergence order", pass, detail.trim_end_matches("; "));
}

// ------------------------------------------------------------------
// 5. Predictor variant equivalence: ck vs otf on randomized linear
//    systems, plus the exact temp-memory ratio (N+2)/3.
// ------------------------------------------------------------------
struct RandomLinear {
    q: usize,
    mats: Vec<Vec<f64>>,
}

impl UserSolver for RandomLinear {
    fn n_var(&self) -> usize {
        self.q
    }
    fn dim(&self) -> usize {
        2
    }
    fn initial(&self, _x: &[f64], q: &mut [f64]) {
        q.fill(0.0);
    }
    fn eigenvalues(&self, _q: &[f64], dir: usize, lambda: &mut [f64]) {
        let bound = self.mats[dir].iter().map(|m| m.abs()).sum::<f64>();
        lambda.fill(bound);
    }
    fn flux(&self, q: &[f64], dir: usize, f: &mut [f64]) {
        let a = &self.mats[dir];
        for i in 0..self.q {
            f[i] = (0..self.q).map(|j| a[i * self.q + j] * q[j]).sum();
        }
    }
}

#[test]
fn criterion_05_predictor_variants() {
    let mut rng = StdRng::seed_from_u64(0xade4);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=5usize);
        let q = rng.gen_range(1..=3usize);
        let user = RandomLinear {
            q,
            mats: (0..2)
                .map(|_| (0..q * q).map(|_| rng.gen_range(-1.0..1.0)).collect())
                .collect(),
        };
        let tables = precompute_basis(n);
        let cfg = KernelConfig {
            dim: 2,
            n_dof: n + 1,
            n_var: q,
            q_pad: q,
            h: 0.1,
            terms: TermFlags {
                flux: true,
                ncp: false,
                source: false,
                viscous: false,
            },
            flux_mode: FluxMode::Aos,
        };
        let dofs: Vec<f64> = (0..cfg.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let dt = 0.01;
        let ck = predictor_linear_ck(&dofs, &user, dt, &cfg, &tables).unwrap();
        let otf = predictor_linear_otf(&dofs, &user, dt, &cfg, &tables).unwrap();
        let scale = dofs.iter().map(|v| v.abs()).fold(1.0, f64::max);
        for (a, b) in ck
            .face_f
            .iter()
            .chain(ck.vol_flux.iter())
            .zip(otf.face_f.iter().chain(otf.vol_flux.iter()))
        {
            worst = worst.max(max_abs_diff(a, b) / scale);
        }
    }
    let mut ratios_exact = true;
    for n in 2..=9usize {
        let ck = temp_memory_report(n, 2, 4, PredictorVariant::Ck);
        let otf = temp_memory_report(n, 2, 4, PredictorVariant::Otf);
        ratios_exact &= otf.bytes < ck.bytes && ck.bytes * 3 == otf.bytes * (n + 2);
    }
    report(
        5,
        "predictor variants",
        worst <= 1e-11 && ratios_exact,
        &format!("ck-vs-otf rel diff {worst:.3e} ≤ 1e-11 over 100 fixtures; memory ratio (N+2)/3 exact for N∈2..9"),
    );
}

// ------------------------------------------------------------------
// 6. SoA path equivalence and exact transpose roundtrips.
// ------------------------------------------------------------------
#[test]
fn criterion_06_soa_equivalence() {
    // The SoA fixture differs from the AoS vortex fixture only in the
    // optimization block, so their generated kernels must agree.
    let aos_spec = fixture_spec("euler_vortex_n3");
    let soa_spec = fixture_spec("euler_soa_n3");
    let aos = run_steps(
        &aos_spec,
        &KernelBinding::Generated(pdegen::generated_fixtures::lookup("euler_vortex_n3").unwrap()),
        10,
    );
    let soa = run_steps(
        &soa_spec,
        &KernelBinding::Generated(pdegen::generated_fixtures::lookup("euler_soa_n3").unwrap()),
        10,
    );
    let diff = max_abs_diff(&aos, &soa);

    let mut rng = StdRng::seed_from_u64(0x50a);
    let mut roundtrips_exact = true;
    for _ in 0..1000 {
        let npoints = rng.gen_range(1..=64usize);
        let nvar = rng.gen_range(1..=8usize);
        let q_pad = nvar + rng.gen_range(0..=2usize);
        let s = 1 << rng.gen_range(0..=3u32);
        let mut data = vec![0.0; npoints * q_pad];
        for p in 0..npoints {
            for v in 0..nvar {
                data[p * q_pad + v] = rng.gen_range(-1.0..1.0);
            }
        }
        let block = pdegen::layout::QuantityBlock {
            data: data.clone(),
            npoints,
            nvar,
            layout: pdegen::layout::Layout::Aos,
            stride: q_pad,
        };
        let soa_block = pdegen::layout::transpose_aos_to_soa(&block, s);
        let back = pdegen::layout::transpose_soa_to_aos(&soa_block, q_pad);
        for p in 0..npoints {
            for v in 0..nvar {
                roundtrips_exact &=
                    back.data[p * q_pad + v].to_bits() == data[p * q_pad + v].to_bits();
            }
        }
    }
    report(
        6,
        "soa equivalence",
        diff <= 1e-13 && roundtrips_exact,
        &format!("flux_vect on/off diff {diff:.3e} ≤ 1e-13; 1000 transpose roundtrips exact"),
    );
}

// ------------------------------------------------------------------
// 7. Limiter robustness on the periodic double-Sod fixture.
// ------------------------------------------------------------------
#[test]
fn criterion_07_limiter_robustness() {
    let spec = fixture_spec("euler_sod_limiting_n3");
    let mut sim = Sim::new(spec);
    let mut troubled_step1 = 0;
    let mut positive = true;
    let mut max_drift: f64 = 0.0;
    let mut prev = sim.mesh.conserved_sums(&sim.tables);
    for step in 1..=200usize {
        let stats = sim.step(&KernelBinding::Generic);
        if step == 1 {
            troubled_step1 = stats.troubled;
        }
        for (s, p) in stats.sums.iter().zip(&prev) {
            max_drift = max_drift.max((s - p).abs());
        }
        prev = stats.sums.clone();
        let cfg = &sim.mesh.cfg;
        for cell in &sim.mesh.cells {
            for p in 0..cfg.npts() {
                let q = &cell.dofs[p * cfg.q_pad..p * cfg.q_pad + 4];
                let rho = q[0];
                let pres = 0.4 * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / rho);
                positive &= rho > 0.0 && pres > 0.0;
            }
        }
        if !positive {
            break;
        }
    }
    report(
        7,
        "limiter robustness",
        troubled_step1 >= 1 && positive && max_drift < 1e-12,
        &format!(
            "troubled {troubled_step1} ≥ 1 at step 1; positivity over 200 steps; max per-step drift {max_drift:.3e} < 1e-12"
        ),
    );
}

// ------------------------------------------------------------------
// 8. Projection identity R·P = I and mean preservation.
// ------------------------------------------------------------------
#[test]
fn criterion_08_projection_identity() {
    let mut worst_ident: f64 = 0.0;
    let mut worst_mean: f64 = 0.0;
    let mut rng = StdRng::seed_from_u64(0x9407);
    for d in [2usize, 3] {
        for n in 1..=5usize {
            let pair = compute_projection_matrices(n, d);
            let n_dof_tot = (n + 1).pow(d as u32);
            let n_sub_tot = (2 * n + 1).pow(d as u32);
            // R·P applied to random DG coefficients reproduces them.
            let dofs: Vec<f64> = (0..n_dof_tot).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let means = pair.apply_p(&dofs, 1, 1);
            let back = pair.apply_r(&means, 1, 1);
            worst_ident = worst_ident.max(max_abs_diff(&back, &dofs));
            // P preserves the cell mean: weighted DG mean equals the
            // plain average of the equal-volume subcell means.
            let tables = precompute_basis(n);
            let mut dg_mean = 0.0;
            for p in 0..n_dof_tot {
                let mut w = 1.0;
                let mut rest = p;
                for _ in 0..d {
                    w *= tables.weights[rest % (n + 1)];
                    rest /= n + 1;
                }
                dg_mean += w * dofs[p];
            }
            let sub_mean = means.iter().sum::<f64>() / n_sub_tot as f64;
            worst_mean = worst_mean.max((dg_mean - sub_mean).abs());
        }
    }
    report(
        8,
        "projection identity",
        worst_ident <= 1e-12 && worst_mean <= 1e-13,
        &format!("R·P−I {worst_ident:.3e} ≤ 1e-12; mean diff {worst_mean:.3e} ≤ 1e-13 (N∈1..5, d∈{{2,3}})"),
    );
}

// ------------------------------------------------------------------
// 9. matmul against a naive triple-loop oracle over 500 random padded
//    shapes.
// ------------------------------------------------------------------
#[test]
fn criterion_09_matmul_oracle() {
    let mut rng = StdRng::seed_from_u64(0x3a7);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let m = rng.gen_range(1..=8usize);
        let k = rng.gen_range(1..=8usize);
        let n = rng.gen_range(1..=8usize);
        let ld_a = m + rng.gen_range(0..=3usize);
        let ld_b = k + rng.gen_range(0..=3usize);
        let ld_c = m + rng.gen_range(0..=3usize);
        let accumulate = rng.gen_bool(0.5);
        let a: Vec<f64> = (0..ld_a * k).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..ld_b * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let c0: Vec<f64> = (0..ld_c * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut c = c0.clone();
        pdegen::layout::matmul(m, k, n, &a, ld_a, &b, ld_b, &mut c, ld_c, accumulate);
        let mut want = c0;
        if !accumulate {
            want[..ld_c * n].fill(0.0);
        }
        for nn in 0..n {
            for i in 0..m {
                for p in 0..k {
                    want[nn * ld_c + i] += a[p * ld_a + i] * b[nn * ld_b + p];
                }
            }
        }
        let scale = want.iter().map(|v| v.abs()).fold(1.0, f64::max);
        worst = worst.max(max_abs_diff(&c, &want) / scale);
    }
    report(
        9,
        "matmul oracle",
        worst <= 1e-13,
        &format!("rel diff {worst:.3e} ≤ 1e-13 over 500 random padded shapes"),
    );
}

// ------------------------------------------------------------------
// 10. Opt-in neutrality: default-flag fixtures regenerate byte-identical
//     even though every opt-in template branch is installed.
// ------------------------------------------------------------------
#[test]
fn criterion_10_opt_in_neutrality() {
    let defaults = [
        "advection_n2",
        "advection_n3",
        "advection_otf_n5",
        "euler_vortex_n3",
        "euler_sod_limiting_n3",
        "ns_n3",
    ];
    let mut pass = true;
    let mut checked = 0;
    for name in defaults {
        let spec = fixture_spec(name);
        assert_eq!(
            spec.optimization,
            pdegen::spec::Optimization::default(),
            "{name} is not a default-flag fixture"
        );
        let tree = pdegen::codegen::generate_all(&spec, &pdegen::codegen::embedded_loader()).unwrap();
        let base = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures/generated")
            .join(name);
        for (rel, want) in &tree.files {
            let got = std::fs::read_to_string(base.join(rel)).unwrap();
            pass &= &got == want;
            checked += 1;
        }
    }
    report(
        10,
        "opt-in neutrality",
        pass,
        &format!("{checked} regenerated files byte-identical to committed goldens"),
    );
}
