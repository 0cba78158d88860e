//! 2D linear scalar advection: ∂t q + a·∇q = 0 in conservative form.
//! Linear PDE, so it exercises the ck and otf predictor variants.

use crate::user::UserSolver;

#[derive(Debug, Clone)]
pub struct Advection2D {
    /// Advection velocity.
    pub a: [f64; 2],
    /// Integer wave numbers of the initial sine mode.
    pub wave: [f64; 2],
}

impl Advection2D {
    pub fn new(a: [f64; 2]) -> Self {
        Advection2D { a, wave: [1.0, 1.0] }
    }

    /// Exact solution at time t (periodic unit square).
    pub fn exact(&self, x: &[f64], t: f64) -> f64 {
        let phase = self.wave[0] * (x[0] - self.a[0] * t) + self.wave[1] * (x[1] - self.a[1] * t);
        (2.0 * std::f64::consts::PI * phase).sin()
    }
}

impl UserSolver for Advection2D {
    fn n_var(&self) -> usize {
        1
    }
    fn dim(&self) -> usize {
        2
    }
    fn initial(&self, x: &[f64], q: &mut [f64]) {
        q[0] = self.exact(x, 0.0);
    }
    fn eigenvalues(&self, _q: &[f64], dir: usize, lambda: &mut [f64]) {
        lambda[0] = self.a[dir];
    }
    fn flux(&self, q: &[f64], dir: usize, f: &mut [f64]) {
        f[0] = self.a[dir] * q[0];
    }
}
