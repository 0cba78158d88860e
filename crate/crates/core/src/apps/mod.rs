//! Shipped example applications: the PDE systems used by the integration
//! fixtures and the convergence/limiting studies.

pub mod advection;
pub mod euler;
pub mod ns;

pub use advection::Advection2D;
pub use euler::{Euler2D, EulerScenario};
pub use ns::{NavierStokes2D, NsScenario};

/// Pick the example application for a project by naming convention, the
/// seam where a real deployment would link its own `UserSolver` impl.
pub fn resolve(project: &str) -> Option<Box<dyn crate::user::UserSolver>> {
    let p = project.to_ascii_lowercase();
    if p.contains("advection") {
        Some(Box::new(Advection2D::new([1.0, 0.5])))
    } else if p.contains("sod") {
        Some(Box::new(Euler2D::new(EulerScenario::DoubleSodX)))
    } else if p.contains("vortex") || p.contains("euler") {
        Some(Box::new(Euler2D::new(EulerScenario::Vortex { strength: 1.0 })))
    } else if p.starts_with("ns") {
        Some(Box::new(NavierStokes2D::new(
            1e-3,
            1e-3,
            NsScenario::UniformFlow {
                rho: 1.0,
                u: 0.3,
                v: 0.2,
                p: 1.0,
            },
        )))
    } else {
        None
    }
}
