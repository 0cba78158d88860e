//! C ABI for the code-generation toolkit and reference runtime.
//!
//! All handles are opaque pointers owned by this library; every
//! constructor has a matching `_free`, and every fallible call returns a
//! [`PdegenStatus`]. On failure, [`pdegen_last_error`] returns a
//! NUL-terminated message valid until the next failing call on the same
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;

use pdegen::runtime::KernelBinding;
use pdegen::spec::{parse_spec, validate_spec, Specification};
use pdegen::user::UserSolver;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdegenStatus {
    Ok = 0,
    /// A pointer argument was null or a string was not valid UTF-8.
    InvalidArgument = 1,
    /// The specification text is not valid JSON of the expected shape.
    ParseError = 2,
    /// The specification violates a cross-field validation rule.
    ValidationError = 3,
    /// A template failed to render.
    TemplateError = 4,
    /// A filesystem operation failed.
    IoError = 5,
    /// A kernel or time-step failure during simulation.
    RuntimeError = 6,
    /// No example application or compiled kernel set matches the project.
    UnknownProject = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn fail(status: PdegenStatus, msg: impl std::fmt::Display) -> PdegenStatus {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap());
    status
}

/// The message for the most recent failing call on this thread. Never
/// null; empty before the first failure. The pointer is invalidated by
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pdegen_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Opaque parsed specification.
pub struct PdegenSpec {
    spec: Specification,
    name_cstr: CString,
}

/// Opaque simulation state: a mesh plus the bound kernels, advanced one
/// step at a time.
pub struct PdegenSim {
    spec: Specification,
    user: Box<dyn UserSolver>,
    tables: pdegen::basis::BasisTables,
    pair: Option<pdegen::limiter::ProjectionPair>,
    mesh: pdegen::runtime::Mesh,
    binding: KernelBinding,
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, PdegenStatus> {
    if p.is_null() {
        return Err(fail(PdegenStatus::InvalidArgument, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(PdegenStatus::InvalidArgument, "string is not valid UTF-8"))
}

/// Parse and validate a specification from JSON text. On success writes
/// a new handle to `out`; free it with [`pdegen_spec_free`].
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pdegen_spec_parse(
    json: *const c_char,
    out: *mut *mut PdegenSpec,
) -> PdegenStatus {
    if out.is_null() {
        return fail(PdegenStatus::InvalidArgument, "null output pointer");
    }
    let text = match str_arg(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_spec(text) {
        Ok(spec) => {
            let name_cstr =
                CString::new(spec.project_name.replace('\0', " ")).unwrap_or_default();
            *out = Box::into_raw(Box::new(PdegenSpec { spec, name_cstr }));
            PdegenStatus::Ok
        }
        Err(e) => fail(PdegenStatus::ParseError, e),
    }
}

/// Validate an already-parsed specification. Returns `Ok` or
/// `ValidationError` with the joined per-path messages in
/// [`pdegen_last_error`].
///
/// # Safety
/// `spec` must be a live handle from [`pdegen_spec_parse`].
#[no_mangle]
pub unsafe extern "C" fn pdegen_spec_validate(spec: *const PdegenSpec) -> PdegenStatus {
    let Some(s) = spec.as_ref() else {
        return fail(PdegenStatus::InvalidArgument, "null spec handle");
    };
    let report = validate_spec(&s.spec);
    if report.errors.is_empty() {
        PdegenStatus::Ok
    } else {
        let msg = report
            .errors
            .iter()
            .map(|e| format!("{}: {}", e.path, e.message))
            .collect::<Vec<_>>()
            .join("; ");
        fail(PdegenStatus::ValidationError, msg)
    }
}

/// The project name of a parsed specification. The pointer is owned by
/// the handle and valid until [`pdegen_spec_free`]. Returns null on a
/// null handle.
///
/// # Safety
/// `spec` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdegen_spec_project_name(spec: *const PdegenSpec) -> *const c_char {
    spec.as_ref()
        .map_or(std::ptr::null(), |s| s.name_cstr.as_ptr())
}

/// Release a specification handle. Null is a no-op.
///
/// # Safety
/// `spec` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pdegen_spec_free(spec: *mut PdegenSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Generate the full kernel/glue tree for a specification under
/// `out_dir` (the manifest is written last as the completion marker).
///
/// # Safety
/// `spec` must be a live handle and `out_dir` a NUL-terminated path.
#[no_mangle]
pub unsafe extern "C" fn pdegen_generate(
    spec: *const PdegenSpec,
    out_dir: *const c_char,
) -> PdegenStatus {
    let Some(s) = spec.as_ref() else {
        return fail(PdegenStatus::InvalidArgument, "null spec handle");
    };
    let dir = match str_arg(out_dir) {
        Ok(d) => d,
        Err(st) => return st,
    };
    let tree = match pdegen::codegen::generate_all(&s.spec, &pdegen::codegen::embedded_loader()) {
        Ok(t) => t,
        Err(e @ pdegen::codegen::GenerateError::InvalidSpec(_)) => {
            return fail(PdegenStatus::ValidationError, e)
        }
        Err(e) => return fail(PdegenStatus::TemplateError, e),
    };
    match pdegen::codegen::write_tree(&tree, Path::new(dir)) {
        Ok(()) => PdegenStatus::Ok,
        Err(e) => fail(PdegenStatus::IoError, e),
    }
}

/// Create a simulation for a specification. `use_generated` selects the
/// compiled-in generated kernels (the project must have a committed
/// tree); 0 selects the generic reference kernels.
///
/// # Safety
/// `spec` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_new(
    spec: *const PdegenSpec,
    use_generated: i32,
    out: *mut *mut PdegenSim,
) -> PdegenStatus {
    if out.is_null() {
        return fail(PdegenStatus::InvalidArgument, "null output pointer");
    }
    let Some(s) = spec.as_ref() else {
        return fail(PdegenStatus::InvalidArgument, "null spec handle");
    };
    let spec = s.spec.clone();
    let Some(user) = pdegen::apps::resolve(&spec.project_name) else {
        return fail(
            PdegenStatus::UnknownProject,
            format!("no example application matches '{}'", spec.project_name),
        );
    };
    let binding = if use_generated != 0 {
        match pdegen::generated_fixtures::lookup(&spec.project_name) {
            Some(set) => KernelBinding::Generated(set),
            None => {
                return fail(
                    PdegenStatus::UnknownProject,
                    format!("no compiled kernel set for '{}'", spec.project_name),
                )
            }
        }
    } else {
        KernelBinding::Generic
    };
    let tables = pdegen::basis::precompute_basis(spec.order as usize);
    let pair = (spec.solver_kind != pdegen::spec::SolverKind::Aderdg).then(|| {
        pdegen::limiter::compute_projection_matrices(spec.order as usize, spec.dimension as usize)
    });
    let mesh = match pdegen::runtime::init_mesh(&spec, user.as_ref(), &tables) {
        Ok(m) => m,
        Err(e) => return fail(PdegenStatus::RuntimeError, format!("{e:?}")),
    };
    *out = Box::into_raw(Box::new(PdegenSim {
        spec,
        user,
        tables,
        pair,
        mesh,
        binding,
    }));
    PdegenStatus::Ok
}

/// Advance the simulation one step (clamped so time never exceeds the
/// specification's end time). Sets `*done` to 1 once the end time is
/// reached.
///
/// # Safety
/// `sim` must be a live handle; `done` may be null.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_advance(sim: *mut PdegenSim, done: *mut i32) -> PdegenStatus {
    let Some(s) = sim.as_mut() else {
        return fail(PdegenStatus::InvalidArgument, "null sim handle");
    };
    let end = s.spec.time.end_time;
    if s.mesh.time < end - 1e-14 {
        let cap = end - s.mesh.time;
        if let Err(e) = pdegen::runtime::advance_step(
            &mut s.mesh,
            s.user.as_ref(),
            &s.spec,
            &s.tables,
            s.pair.as_ref(),
            &s.binding,
            Some(cap),
        ) {
            return fail(PdegenStatus::RuntimeError, e);
        }
    }
    if !done.is_null() {
        *done = (s.mesh.time >= end - 1e-14) as i32;
    }
    PdegenStatus::Ok
}

/// Current simulated time.
///
/// # Safety
/// `sim` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_time(sim: *const PdegenSim) -> f64 {
    sim.as_ref().map_or(f64::NAN, |s| s.mesh.time)
}

/// Number of completed steps.
///
/// # Safety
/// `sim` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_step(sim: *const PdegenSim) -> u64 {
    sim.as_ref().map_or(0, |s| s.mesh.step as u64)
}

/// Total number of degrees of freedom (all cells, nodes, variables).
///
/// # Safety
/// `sim` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_n_dofs(sim: *const PdegenSim) -> usize {
    sim.as_ref().map_or(0, |s| {
        s.mesh.cells.iter().map(|c| c.dofs.len()).sum()
    })
}

/// Copy the flattened degrees of freedom (cell-major, then node-major,
/// then variable) into `buf`; `len` is the capacity of `buf` in
/// doubles and must be at least [`pdegen_sim_n_dofs`].
///
/// # Safety
/// `sim` must be a live handle; `buf` must point to at least `len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_state(
    sim: *const PdegenSim,
    buf: *mut f64,
    len: usize,
) -> PdegenStatus {
    let Some(s) = sim.as_ref() else {
        return fail(PdegenStatus::InvalidArgument, "null sim handle");
    };
    if buf.is_null() {
        return fail(PdegenStatus::InvalidArgument, "null buffer");
    }
    let need: usize = s.mesh.cells.iter().map(|c| c.dofs.len()).sum();
    if len < need {
        return fail(
            PdegenStatus::InvalidArgument,
            format!("buffer holds {len} doubles, need {need}"),
        );
    }
    let out = std::slice::from_raw_parts_mut(buf, need);
    let mut at = 0;
    for c in &s.mesh.cells {
        out[at..at + c.dofs.len()].copy_from_slice(&c.dofs);
        at += c.dofs.len();
    }
    PdegenStatus::Ok
}

/// Release a simulation handle. Null is a no-op.
///
/// # Safety
/// `sim` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pdegen_sim_free(sim: *mut PdegenSim) {
    if !sim.is_null() {
        drop(Box::from_raw(sim));
    }
}

#[cfg(test)]
mod tests;
