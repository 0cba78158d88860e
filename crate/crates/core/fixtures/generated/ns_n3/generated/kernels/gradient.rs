//! Generated nodal-gradient kernel for solver `ns_n3` (order
//! 3, 2D, 4 quantities); feeds the gradient-dependent
//! flux. Do not edit; regenerate from the specification.
#![allow(dead_code)]

const LEN: usize = 64;
const N_PTS: usize = 16;
static DIFF: [f64; 16] = [-6.664000472704567, 9.720308831370396, -4.217564696990358, 1.1612563383245296, -1.5151152295984676, -0.7688287844464168, 2.941340462561433, -0.6573964485165487, 0.6573964485165484, -2.9413404625614343, 0.7688287844464177, 1.5151152295984684, -1.1612563383245287, 4.217564696990358, -9.720308831370392, 6.664000472704563];

/// Nodal gradients of `q`: one LEN block per direction, (1/h)·D applied
/// along that axis; exact for polynomials of degree <= 3.
pub fn gradients(q: &[f64], h: f64) -> Vec<Vec<f64>> {
    let mut grad = vec![vec![0.0f64; LEN]; 2];
    for base in (0..N_PTS).filter(|p| (p / 1) % 4 == 0) {
        for i in 0..4 {
            let pi = (base + i * 1) * 4;
            for j in 0..4 {
                let pj = (base + j * 1) * 4;
                let d = DIFF[i * 4 + j] / h;
                for v in 0..4 {
                    grad[0][pi + v] += d * q[pj + v];
                }
            }
        }
    }
    for base in (0..N_PTS).filter(|p| (p / 4) % 4 == 0) {
        for i in 0..4 {
            let pi = (base + i * 4) * 4;
            for j in 0..4 {
                let pj = (base + j * 4) * 4;
                let d = DIFF[i * 4 + j] / h;
                for v in 0..4 {
                    grad[1][pi + v] += d * q[pj + v];
                }
            }
        }
    }
    grad
}
