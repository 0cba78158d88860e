use super::*;
use crate::spec::parse_spec;

fn fixture_spec(name: &str) -> Specification {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/specs")
        .join(format!("{name}.json"));
    parse_spec(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn plan_selects_variants_from_spec() {
    let p = select_kernel_variants(&fixture_spec("advection_otf_n5"));
    assert_eq!(p.predictor, PredictorVariant::Otf);
    assert_eq!(p.riemann, "rusanov");
    assert!(!p.limiter && !p.gradient_kernel);
    assert_eq!(p.flux_call, FluxCall::Aos);

    let p = select_kernel_variants(&fixture_spec("euler_sod_limiting_n3"));
    assert_eq!(p.predictor, PredictorVariant::Picard);
    assert!(p.limiter);

    let p = select_kernel_variants(&fixture_spec("ns_n3"));
    assert!(p.gradient_kernel);

    let p = select_kernel_variants(&fixture_spec("euler_soa_n3"));
    assert_eq!(p.flux_call, FluxCall::Soa);
    assert_eq!(p.n_var_pad, 4);
    assert_eq!(p.n_dof_pad, 4);
    assert_eq!(p.alignment_bytes, 32);
}

#[test]
fn contexts_share_numeric_keys() {
    let spec = fixture_spec("euler_soa_n3");
    let ctxs = build_contexts(&spec);
    assert_eq!(
        ctxs.keys().collect::<Vec<_>>(),
        ["glue", "kernels", "stub"]
    );
    for key in [
        "nDof",
        "nVar",
        "nVarPad",
        "nDim",
        "alignment",
        "tempVarsOnStack",
        "useFluxVect",
        "useViscousFlux",
        "solverName",
    ] {
        let vals: Vec<String> = ctxs
            .values()
            .map(|c| format!("{:?}", c.get(key).expect(key)))
            .collect();
        assert!(vals.windows(2).all(|w| w[0] == w[1]), "key {key} differs");
    }
    let k = &ctxs["kernels"];
    assert_eq!(format!("{:?}", k.get("nVarPad").unwrap()), "Int(4)");
    assert_eq!(format!("{:?}", k.get("nDofPad").unwrap()), "Int(4)");
    assert_eq!(format!("{:?}", k.get("alignment").unwrap()), "Int(32)");
}

#[test]
fn viscous_flag_set_in_every_context() {
    let ctxs = build_contexts(&fixture_spec("ns_n3"));
    for (name, c) in &ctxs {
        assert_eq!(
            format!("{:?}", c.get("useViscousFlux").unwrap()),
            "Bool(true)",
            "context {name}"
        );
    }
}

#[test]
fn generate_all_structural_contract() {
    let loader = embedded_loader();
    let tree = generate_all(&fixture_spec("euler_vortex_n3"), &loader).unwrap();
    for path in [
        "generated/kernels/predictor.rs",
        "generated/kernels/riemann.rs",
        "generated/kernels/update.rs",
        "generated/glue/registry.rs",
        "generated/UserSolver.rs",
        "generated/manifest.json",
    ] {
        assert!(tree.files.contains_key(path), "missing {path}");
    }
    assert_eq!(tree.files.len(), 6);
    assert!(!tree.files.contains_key("generated/kernels/dmp.rs"));

    let limiting = generate_all(&fixture_spec("euler_sod_limiting_n3"), &loader).unwrap();
    for path in [
        "generated/kernels/dmp.rs",
        "generated/kernels/projection.rs",
        "generated/kernels/fv_step.rs",
    ] {
        assert!(limiting.files.contains_key(path), "missing {path}");
    }
}

#[test]
fn every_binding_names_an_existing_file() {
    let loader = embedded_loader();
    for name in ["euler_sod_limiting_n3", "ns_n3", "advection_n2"] {
        let tree = generate_all(&fixture_spec(name), &loader).unwrap();
        for b in &tree.manifest.bindings {
            assert!(tree.files.contains_key(&b.file), "{}: {}", name, b.file);
        }
        for f in &tree.manifest.files {
            assert!(tree.files.contains_key(f));
        }
    }
}

#[test]
fn generation_is_deterministic() {
    let loader = embedded_loader();
    let spec = fixture_spec("euler_sod_limiting_n3");
    let a = generate_all(&spec, &loader).unwrap();
    let b = generate_all(&spec, &loader).unwrap();
    assert_eq!(a.files, b.files);
}

#[test]
fn stub_declares_exactly_the_implied_callbacks() {
    let loader = embedded_loader();
    let ns = generate_all(&fixture_spec("ns_n3"), &loader).unwrap();
    let stub = &ns.files["generated/UserSolver.rs"];
    assert!(stub.contains("fn viscous_flux"));
    assert!(!stub.contains("fn flux("));
    assert!(!stub.contains("fn flux_vect"));
    assert!(stub.contains("struct NsN3Solver"));

    let soa = generate_all(&fixture_spec("euler_soa_n3"), &loader).unwrap();
    let stub = &soa.files["generated/UserSolver.rs"];
    assert!(stub.contains("fn flux("));
    assert!(stub.contains("fn flux_vect"));
    assert!(!stub.contains("fn viscous_flux"));
    assert!(stub.contains("fn eigenvalues") && stub.contains("fn initial"));
    assert!(stub.contains("fn admissible") && stub.contains("fn boundary"));
}

#[test]
fn model_isolation_limiter_key_only_touches_its_kernel() {
    let loader = embedded_loader();
    let mut spec = fixture_spec("euler_sod_limiting_n3");
    let base = generate_all(&spec, &loader).unwrap();
    spec.limiter.as_mut().unwrap().dmp_delta0 = 5e-3;
    let tweaked = generate_all(&spec, &loader).unwrap();
    for (path, text) in &base.files {
        if path == "generated/kernels/dmp.rs" || path == "generated/manifest.json" {
            continue;
        }
        assert_eq!(text, &tweaked.files[path], "{path} changed");
    }
    assert_ne!(
        base.files["generated/kernels/dmp.rs"],
        tweaked.files["generated/kernels/dmp.rs"]
    );
}

#[test]
fn invalid_spec_is_rejected() {
    let mut spec = fixture_spec("ns_n3");
    spec.terms.insert(crate::spec::Term::Flux);
    let err = generate_all(&spec, &embedded_loader()).unwrap_err();
    assert!(matches!(err, GenerateError::InvalidSpec(m) if m.contains("/terms")));
}

/// The committed matmul instance fixture must match what the macro
/// library renders today. Set `BLESS_FIXTURES=1` to rewrite it.
#[test]
fn matmul_fixture_file_is_current() {
    let want = generate_matmul_instances(&matmul_fixture_shapes()).unwrap();
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/matmul/matmul_instances.rs");
    if std::env::var("BLESS_FIXTURES").is_ok() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &want).unwrap();
    }
    let got = std::fs::read_to_string(&path).expect("committed matmul fixture");
    assert_eq!(got, want);
}
