//! Exercise the C ABI through the same raw-pointer paths a C caller
//! would use.

use std::ffi::{CStr, CString};

use super::*;

fn fixture_json(name: &str) -> CString {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures/specs")
        .join(format!("{name}.json"));
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

fn parse(name: &str) -> *mut PdegenSpec {
    let json = fixture_json(name);
    let mut spec: *mut PdegenSpec = std::ptr::null_mut();
    let st = unsafe { pdegen_spec_parse(json.as_ptr(), &mut spec) };
    assert_eq!(st, PdegenStatus::Ok);
    assert!(!spec.is_null());
    spec
}

#[test]
fn parse_validate_name_roundtrip() {
    let spec = parse("euler_vortex_n3");
    unsafe {
        assert_eq!(pdegen_spec_validate(spec), PdegenStatus::Ok);
        let name = CStr::from_ptr(pdegen_spec_project_name(spec));
        assert_eq!(name.to_str().unwrap(), "euler_vortex_n3");
        pdegen_spec_free(spec);
    }
}

#[test]
fn parse_error_sets_message() {
    let bad = CString::new("{not json").unwrap();
    let mut spec: *mut PdegenSpec = std::ptr::null_mut();
    unsafe {
        assert_eq!(
            pdegen_spec_parse(bad.as_ptr(), &mut spec),
            PdegenStatus::ParseError
        );
        let msg = CStr::from_ptr(pdegen_last_error()).to_str().unwrap();
        assert!(msg.contains("JSON"), "unexpected message: {msg}");
    }
}

#[test]
fn validation_error_names_the_path() {
    let json = fixture_json("euler_vortex_n3")
        .into_string()
        .unwrap()
        .replace("\"flux\"", "\"flux\", \"viscous_flux\"");
    let json = CString::new(json).unwrap();
    let mut spec: *mut PdegenSpec = std::ptr::null_mut();
    unsafe {
        assert_eq!(
            pdegen_spec_parse(json.as_ptr(), &mut spec),
            PdegenStatus::Ok
        );
        assert_eq!(pdegen_spec_validate(spec), PdegenStatus::ValidationError);
        let msg = CStr::from_ptr(pdegen_last_error()).to_str().unwrap();
        assert!(msg.contains("/terms"), "unexpected message: {msg}");
        pdegen_spec_free(spec);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut out: *mut PdegenSpec = std::ptr::null_mut();
        assert_eq!(
            pdegen_spec_parse(std::ptr::null(), &mut out),
            PdegenStatus::InvalidArgument
        );
        assert_eq!(
            pdegen_spec_validate(std::ptr::null()),
            PdegenStatus::InvalidArgument
        );
        assert!(pdegen_spec_project_name(std::ptr::null()).is_null());
        pdegen_spec_free(std::ptr::null_mut());
        pdegen_sim_free(std::ptr::null_mut());
    }
}

#[test]
fn generate_writes_a_tree() {
    let spec = parse("advection_n2");
    let dir = std::env::temp_dir().join("pdegen_capi_gen_test");
    let _ = std::fs::remove_dir_all(&dir);
    let cdir = CString::new(dir.to_str().unwrap()).unwrap();
    unsafe {
        assert_eq!(pdegen_generate(spec, cdir.as_ptr()), PdegenStatus::Ok);
        pdegen_spec_free(spec);
    }
    assert!(dir.join("generated/manifest.json").is_file());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sim_advances_and_exposes_state() {
    let spec = parse("advection_n2");
    let mut sim: *mut PdegenSim = std::ptr::null_mut();
    unsafe {
        assert_eq!(pdegen_sim_new(spec, 0, &mut sim), PdegenStatus::Ok);
        let n = pdegen_sim_n_dofs(sim);
        assert!(n > 0);
        let mut short = vec![0.0; n - 1];
        assert_eq!(
            pdegen_sim_state(sim, short.as_mut_ptr(), short.len()),
            PdegenStatus::InvalidArgument
        );
        let mut before = vec![0.0; n];
        assert_eq!(
            pdegen_sim_state(sim, before.as_mut_ptr(), n),
            PdegenStatus::Ok
        );
        let mut done = 0;
        assert_eq!(pdegen_sim_advance(sim, &mut done), PdegenStatus::Ok);
        assert_eq!(pdegen_sim_step(sim), 1);
        assert!(pdegen_sim_time(sim) > 0.0);
        let mut after = vec![0.0; n];
        assert_eq!(
            pdegen_sim_state(sim, after.as_mut_ptr(), n),
            PdegenStatus::Ok
        );
        assert_ne!(before, after);
        pdegen_sim_free(sim);
        pdegen_spec_free(spec);
    }
}

/// The generated binding through the ABI reproduces the generic one.
#[test]
fn sim_generated_binding_matches_generic() {
    let spec = parse("euler_vortex_n3");
    unsafe {
        let mut a: *mut PdegenSim = std::ptr::null_mut();
        let mut b: *mut PdegenSim = std::ptr::null_mut();
        assert_eq!(pdegen_sim_new(spec, 0, &mut a), PdegenStatus::Ok);
        assert_eq!(pdegen_sim_new(spec, 1, &mut b), PdegenStatus::Ok);
        for _ in 0..5 {
            assert_eq!(pdegen_sim_advance(a, std::ptr::null_mut()), PdegenStatus::Ok);
            assert_eq!(pdegen_sim_advance(b, std::ptr::null_mut()), PdegenStatus::Ok);
        }
        let n = pdegen_sim_n_dofs(a);
        let mut qa = vec![0.0; n];
        let mut qb = vec![0.0; n];
        assert_eq!(pdegen_sim_state(a, qa.as_mut_ptr(), n), PdegenStatus::Ok);
        assert_eq!(pdegen_sim_state(b, qb.as_mut_ptr(), n), PdegenStatus::Ok);
        let diff = qa
            .iter()
            .zip(&qb)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(diff <= 1e-12, "max diff {diff}");
        pdegen_sim_free(a);
        pdegen_sim_free(b);
        pdegen_spec_free(spec);
    }
}

#[test]
fn unknown_project_is_reported() {
    let json = fixture_json("advection_n2")
        .into_string()
        .unwrap()
        .replace("advection_n2", "mystery_project");
    let json = CString::new(json).unwrap();
    let mut spec: *mut PdegenSpec = std::ptr::null_mut();
    let mut sim: *mut PdegenSim = std::ptr::null_mut();
    unsafe {
        assert_eq!(
            pdegen_spec_parse(json.as_ptr(), &mut spec),
            PdegenStatus::Ok
        );
        assert_eq!(
            pdegen_sim_new(spec, 0, &mut sim),
            PdegenStatus::UnknownProject
        );
        pdegen_spec_free(spec);
    }
}
