//! The user-solver callback interface: the PDE is supplied as a set of
//! pure callbacks (eigenvalues, flux, ncp, source, viscous flux,
//! admissibility) over the state vector Q.

/// PDE callbacks. Slices hold `q` quantities (un-padded views); `grad_q`
/// holds `dim * q` entries, direction-major (grad_q[dir*q + v]).
///
/// Exactly one of `flux` / `viscous_flux` is implemented per solver, as
/// declared by the specification's `terms`.
pub trait UserSolver: Sync {
    fn n_var(&self) -> usize;
    fn dim(&self) -> usize;

    /// Initial condition at physical position `x` (dim entries).
    fn initial(&self, x: &[f64], q: &mut [f64]);

    /// Ghost state for a user boundary: given the inside trace, fill the
    /// outside state. `face` is 2*dir + side (side 0 = low, 1 = high).
    fn boundary(&self, _x: &[f64], _t: f64, _face: usize, inside: &[f64], outside: &mut [f64]) {
        outside.copy_from_slice(inside);
    }

    /// Eigenvalues of the flux Jacobian in direction `dir`.
    fn eigenvalues(&self, q: &[f64], dir: usize, lambda: &mut [f64]);

    /// Conservative flux in direction `dir` (iff the `flux` term is on).
    fn flux(&self, _q: &[f64], _dir: usize, _f: &mut [f64]) {
        unimplemented!("flux callback not provided");
    }

    /// Vectorized flux over a SoA slice of `lanes` points: q_soa and f_soa
    /// are var-major, lane-minor (index v*lanes + lane). The default
    /// gathers each lane and calls `flux`, so providing `flux_vect` is an
    /// optimization, never a semantic change.
    fn flux_vect(&self, q_soa: &[f64], lanes: usize, dir: usize, f_soa: &mut [f64]) {
        let nv = self.n_var();
        let mut q = vec![0.0; nv];
        let mut f = vec![0.0; nv];
        for lane in 0..lanes {
            for v in 0..nv {
                q[v] = q_soa[v * lanes + lane];
            }
            self.flux(&q, dir, &mut f);
            for v in 0..nv {
                f_soa[v * lanes + lane] = f[v];
            }
        }
    }

    /// Non-conservative product B(Q)·∇Q (iff the `ncp` term is on).
    fn ncp(&self, _q: &[f64], _grad_q: &[f64], _out: &mut [f64]) {
        unimplemented!("ncp callback not provided");
    }

    /// Algebraic source S(Q) (iff the `source` term is on).
    fn source(&self, _q: &[f64], _out: &mut [f64]) {
        unimplemented!("source callback not provided");
    }

    /// Gradient-dependent flux F(Q, ∇Q) in direction `dir` (iff the
    /// `viscous_flux` term is on; mutually exclusive with `flux`).
    fn viscous_flux(&self, _q: &[f64], _grad_q: &[f64], _dir: usize, _f: &mut [f64]) {
        unimplemented!("viscous_flux callback not provided");
    }

    /// Physical admissibility of a state (positivity etc.).
    fn admissible(&self, _q: &[f64]) -> bool {
        true
    }

    /// Extra Riemann dissipation for gradient-dependent fluxes; examples
    /// with viscous terms override this with their penalty. `_h` is the
    /// local grid spacing of the scheme invoking the Riemann solver.
    fn viscous_penalty(&self, _h: f64) -> f64 {
        0.0
    }
}
