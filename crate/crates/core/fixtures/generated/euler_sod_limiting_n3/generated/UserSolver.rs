//! User-solver stub for `euler_sod_limiting_n3`: the application expert fills in
//! the bodies below. Exactly the callbacks implied by the specification's
//! terms are declared.
#![allow(unused_variables)]

use pdegen::user::UserSolver;

pub struct EulerSodLimitingN3Solver;

impl UserSolver for EulerSodLimitingN3Solver {
    fn n_var(&self) -> usize {
        4
    }

    fn dim(&self) -> usize {
        2
    }

    /// Initial condition at physical position `x`.
    fn initial(&self, x: &[f64], q: &mut [f64]) {
        todo!("initial condition")
    }

    /// Boundary state for non-periodic faces (defaults to copy-out).
    fn boundary(&self, x: &[f64], t: f64, face: usize, inside: &[f64], outside: &mut [f64]) {
        outside.copy_from_slice(inside);
    }

    /// Directional eigenvalues of the flux Jacobian.
    fn eigenvalues(&self, q: &[f64], dir: usize, lambda: &mut [f64]) {
        todo!("eigenvalues")
    }

    /// Directional conservative flux F_dir(q).
    fn flux(&self, q: &[f64], dir: usize, f: &mut [f64]) {
        todo!("flux")
    }

    /// Physical admissibility of a state (used by the limiter and the
    /// initial-data gate).
    fn admissible(&self, q: &[f64]) -> bool {
        true
    }
}
