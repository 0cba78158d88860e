//! Specification-driven kernel generator and reference runtime for
//! first-order hyperbolic PDE systems solved with ADER-DG and a-posteriori
//! subcell finite-volume limiting.

// Generated kernel sources refer to this crate by name so the same files
// compile unchanged inside and outside the crate.
extern crate self as pdegen;

pub mod apps;
pub mod basis;
pub mod codegen;
pub mod generated_fixtures;
pub mod kernels;
pub mod layout;
pub mod limiter;
pub mod runtime;
pub mod spec;
pub mod template;
pub mod user;
