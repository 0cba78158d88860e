//! 2D compressible Euler equations, γ = 1.4.
//! State Q = (ρ, ρu, ρv, E); pressure p = (γ−1)(E − ½ρ|v|²).

use crate::user::UserSolver;

pub const GAMMA: f64 = 1.4;

/// Initial-condition scenario for the Euler example.
#[derive(Debug, Clone)]
pub enum EulerScenario {
    /// Constant state.
    Uniform { rho: f64, u: f64, v: f64, p: f64 },
    /// Smooth isentropic vortex centered in the unit square.
    Vortex { strength: f64 },
    /// Periodic double Riemann problem along x: Sod states on
    /// [0,½) and the mirrored jump on [½,1), so the data is periodic.
    DoubleSodX,
}

#[derive(Debug, Clone)]
pub struct Euler2D {
    pub scenario: EulerScenario,
}

pub fn pressure(q: &[f64]) -> f64 {
    (GAMMA - 1.0) * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0])
}

pub fn conserved(rho: f64, u: f64, v: f64, p: f64) -> [f64; 4] {
    [
        rho,
        rho * u,
        rho * v,
        p / (GAMMA - 1.0) + 0.5 * rho * (u * u + v * v),
    ]
}

impl Euler2D {
    pub fn new(scenario: EulerScenario) -> Self {
        Euler2D { scenario }
    }
}

impl UserSolver for Euler2D {
    fn n_var(&self) -> usize {
        4
    }
    fn dim(&self) -> usize {
        2
    }

    fn initial(&self, x: &[f64], q: &mut [f64]) {
        let s = match &self.scenario {
            EulerScenario::Uniform { rho, u, v, p } => conserved(*rho, *u, *v, *p),
            EulerScenario::Vortex { strength } => {
                let (dx, dy) = (x[0] - 0.5, x[1] - 0.5);
                let r2 = (dx * dx + dy * dy) / 0.01;
                let ex = (-0.5 * r2).exp();
                let du = -strength * dy * ex;
                let dv = strength * dx * ex;
                let dt_temp = -(GAMMA - 1.0) * strength * strength / (2.0 * GAMMA) * ex * ex;
                let temp = 1.0 + dt_temp;
                let rho = temp.powf(1.0 / (GAMMA - 1.0));
                let p = temp.powf(GAMMA / (GAMMA - 1.0));
                conserved(rho, 1.0 + du, 1.0 + dv, p)
            }
            EulerScenario::DoubleSodX => {
                if x[0] >= 0.25 && x[0] < 0.75 {
                    conserved(0.125, 0.0, 0.0, 0.1)
                } else {
                    conserved(1.0, 0.0, 0.0, 1.0)
                }
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

    fn flux(&self, q: &[f64], dir: usize, f: &mut [f64]) {
        let irho = 1.0 / q[0];
        let p = pressure(q);
        let un = q[1 + dir] * irho;
        f[0] = q[1 + dir];
        f[1] = q[1] * un;
        f[2] = q[2] * un;
        f[1 + dir] += p;
        f[3] = (q[3] + p) * un;
    }

    /// Vectorized flux over a SoA slice (var-major, lane-minor), the
    /// per-lane arithmetic being identical to `flux`.
    fn flux_vect(&self, q_soa: &[f64], lanes: usize, dir: usize, f_soa: &mut [f64]) {
        let (rho, rest) = q_soa.split_at(lanes);
        let (mx, rest) = rest.split_at(lanes);
        let (my, e) = rest.split_at(lanes);
        for i in 0..lanes {
            // padded tail lanes are zero-filled; keep them zero
            if rho[i] == 0.0 {
                for v in 0..4 {
                    f_soa[v * lanes + i] = 0.0;
                }
                continue;
            }
            let irho = 1.0 / rho[i];
            let p = (GAMMA - 1.0) * (e[i] - 0.5 * (mx[i] * mx[i] + my[i] * my[i]) * irho);
            let mn = if dir == 0 { mx[i] } else { my[i] };
            let un = mn * irho;
            f_soa[i] = mn;
            f_soa[lanes + i] = mx[i] * un;
            f_soa[2 * lanes + i] = my[i] * un;
            f_soa[(1 + dir) * lanes + i] += p;
            f_soa[3 * lanes + i] = (e[i] + p) * un;
        }
    }

    fn admissible(&self, q: &[f64]) -> bool {
        q.iter().all(|x| x.is_finite()) && q[0] > 0.0 && pressure(q) > 0.0
    }
}
