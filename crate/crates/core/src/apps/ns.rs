//! 2D compressible Navier-Stokes: the flux F(Q, ∇Q) carries both the
//! inviscid Euler part and the viscous stress / heat conduction, so the
//! PDE uses the gradient-dependent flux term (mutually exclusive with
//! the plain flux term).
//!
//! Stress tensor σ = μ(∇v + ∇vᵀ − ⅔(∇·v)I) with constant μ; heat flux
//! −κ∇T with T = p/ρ (gas constant 1). The example augments the Riemann
//! dissipation with the penalty 2·max(μ,κ)/(h·ρ_min); ρ_min is a
//! scenario reference density stored at construction. This penalty lives
//! in the example, not the core kernels.

use super::euler::{conserved, pressure, GAMMA};
use crate::user::UserSolver;

#[derive(Debug, Clone)]
pub enum NsScenario {
    /// Constant free stream (must stay constant: σ and κ∇T vanish).
    UniformFlow { rho: f64, u: f64, v: f64, p: f64 },
    /// Low-degree polynomial velocity/temperature profile for gradient
    /// checks: u = ax·x + ay·y, v = 0, ρ = 1, p = 1.
    PolynomialGradient { ax: f64, ay: f64 },
}

#[derive(Debug, Clone)]
pub struct NavierStokes2D {
    pub mu: f64,
    pub kappa: f64,
    pub scenario: NsScenario,
    /// Reference minimum density for the viscous Riemann penalty.
    pub rho_min: f64,
}

impl NavierStokes2D {
    pub fn new(mu: f64, kappa: f64, scenario: NsScenario) -> Self {
        let rho_min = match &scenario {
            NsScenario::UniformFlow { rho, .. } => *rho,
            NsScenario::PolynomialGradient { .. } => 1.0,
        };
        NavierStokes2D {
            mu,
            kappa,
            scenario,
            rho_min,
        }
    }
}

impl UserSolver for NavierStokes2D {
    fn n_var(&self) -> usize {
        4
    }
    fn dim(&self) -> usize {
        2
    }

    fn initial(&self, x: &[f64], q: &mut [f64]) {
        let s = match &self.scenario {
            NsScenario::UniformFlow { rho, u, v, p } => conserved(*rho, *u, *v, *p),
            NsScenario::PolynomialGradient { ax, ay } => {
                conserved(1.0, ax * x[0] + ay * x[1], 0.0, 1.0)
            }
        };
        q[..4].copy_from_slice(&s);
    }

    fn eigenvalues(&self, q: &[f64], dir: usize, lambda: &mut [f64]) {
        let u = q[1 + dir] / q[0];
        let c = (GAMMA * pressure(q) / q[0]).sqrt();
        lambda[0] = u - c;
        lambda[1] = u;
        lambda[2] = u;
        lambda[3] = u + c;
    }

    fn viscous_flux(&self, q: &[f64], grad_q: &[f64], dir: usize, f: &mut [f64]) {
        let rho = q[0];
        let irho = 1.0 / rho;
        let vel = [q[1] * irho, q[2] * irho];
        let p = pressure(q);

        // inviscid part
        let un = vel[dir];
        f[0] = q[1 + dir];
        f[1] = q[1] * un;
        f[2] = q[2] * un;
        f[1 + dir] += p;
        f[3] = (q[3] + p) * un;

        // velocity gradient dv[i][j] = ∂v_i/∂x_j from conserved gradients
        let g = |j: usize, v: usize| grad_q[j * 4 + v];
        let mut dv = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                dv[i][j] = (g(j, 1 + i) - vel[i] * g(j, 0)) * irho;
            }
        }
        let div = dv[0][0] + dv[1][1];
        let mut sigma = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                sigma[i][j] = self.mu * (dv[i][j] + dv[j][i]);
            }
            sigma[i][i] -= self.mu * 2.0 / 3.0 * div;
        }

        // temperature gradient: T = p/ρ,
        // ∂p = (γ−1)(∂E − m·∂m/ρ + ½|m|²/ρ² ∂ρ)
        let m2 = q[1] * q[1] + q[2] * q[2];
        let dp_j = |j: usize| {
            (GAMMA - 1.0)
                * (g(j, 3) - (q[1] * g(j, 1) + q[2] * g(j, 2)) * irho
                    + 0.5 * m2 * irho * irho * g(j, 0))
        };
        let dt_dir = (dp_j(dir) * rho - p * g(dir, 0)) * irho * irho;

        f[1] -= sigma[0][dir];
        f[2] -= sigma[1][dir];
        f[3] -= vel[0] * sigma[0][dir] + vel[1] * sigma[1][dir] + self.kappa * dt_dir;
    }

    fn admissible(&self, q: &[f64]) -> bool {
        q.iter().all(|x| x.is_finite()) && q[0] > 0.0 && pressure(q) > 0.0
    }

    fn viscous_penalty(&self, h: f64) -> f64 {
        2.0 * self.mu.max(self.kappa) / (h * self.rho_min)
    }
}
