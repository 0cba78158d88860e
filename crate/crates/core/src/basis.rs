//! Nodal basis tables for the reference element [0,1]: Gauss-Legendre
//! nodes and weights, the nodal differentiation operator, face evaluation
//! vectors and the time-integration matrix used by the space-time predictor.

/// Quadrature and operator tables for polynomial order `n`.
#[derive(Debug, Clone)]
pub struct BasisTables {
    pub order: usize,
    /// Gauss-Legendre nodes on (0,1), ascending.
    pub nodes: Vec<f64>,
    /// Quadrature weights, sum 1.
    pub weights: Vec<f64>,
    /// diff[i*n_dof + j] = phi_j'(xi_i).
    pub diff: Vec<f64>,
    /// phi_j(0) and phi_j(1).
    pub phi_left: Vec<f64>,
    pub phi_right: Vec<f64>,
    /// time_int[m*n_dof + n] = integral of ell_n over [0, xi_m]
    /// (Picard integral operator on the unit time interval).
    pub time_int: Vec<f64>,
}

impl BasisTables {
    pub fn n_dof(&self) -> usize {
        self.order + 1
    }

    pub fn diff_at(&self, i: usize, j: usize) -> f64 {
        self.diff[i * self.n_dof() + j]
    }

    /// Plain-text dump for debugging and golden comparisons.
    pub fn dump(&self) -> String {
        let mut s = format!("order {}\n", self.order);
        s.push_str(&format!("nodes {:?}\n", self.nodes));
        s.push_str(&format!("weights {:?}\n", self.weights));
        for i in 0..self.n_dof() {
            s.push_str(&format!(
                "D[{i}] {:?}\n",
                &self.diff[i * self.n_dof()..(i + 1) * self.n_dof()]
            ));
        }
        s
    }
}

/// Gauss-Legendre rule with `n` points on [-1,1], by Newton iteration on
/// the Legendre polynomial.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev initial guess
        let mut x = -(std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Legendre polynomial P_n and its derivative at x.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Barycentric weights for the given nodes.
fn bary_weights(nodes: &[f64]) -> Vec<f64> {
    let n = nodes.len();
    let mut w = vec![1.0; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                w[i] /= nodes[i] - nodes[j];
            }
        }
    }
    w
}

/// Evaluate the Lagrange cardinal function ell_j at x.
pub fn lagrange_eval(nodes: &[f64], j: usize, x: f64) -> f64 {
    let mut v = 1.0;
    for (k, &xk) in nodes.iter().enumerate() {
        if k != j {
            v *= (x - xk) / (nodes[j] - xk);
        }
    }
    v
}

/// Build the basis tables for polynomial order `n` (1 <= n <= 9).
pub fn precompute_basis(order: usize) -> BasisTables {
    assert!((1..=9).contains(&order), "order must be in 1..=9");
    let n_dof = order + 1;
    let (x, w) = gauss_legendre(n_dof);
    // map [-1,1] -> [0,1]
    let nodes: Vec<f64> = x.iter().map(|&v| 0.5 * (v + 1.0)).collect();
    let weights: Vec<f64> = w.iter().map(|&v| 0.5 * v).collect();

    let bw = bary_weights(&nodes);
    let mut diff = vec![0.0; n_dof * n_dof];
    for i in 0..n_dof {
        let mut row_sum = 0.0;
        for j in 0..n_dof {
            if i != j {
                let d = (bw[j] / bw[i]) / (nodes[i] - nodes[j]);
                diff[i * n_dof + j] = d;
                row_sum += d;
            }
        }
        // constants are annihilated exactly
        diff[i * n_dof + i] = -row_sum;
    }

    let phi_left: Vec<f64> = (0..n_dof).map(|j| lagrange_eval(&nodes, j, 0.0)).collect();
    let phi_right: Vec<f64> = (0..n_dof).map(|j| lagrange_eval(&nodes, j, 1.0)).collect();

    // time_int[m][n] = int_0^{xi_m} ell_n(s) ds, exact via the same rule
    // mapped to [0, xi_m] (integrand has degree `order`).
    let mut time_int = vec![0.0; n_dof * n_dof];
    for m in 0..n_dof {
        let upper = nodes[m];
        for j in 0..n_dof {
            let mut acc = 0.0;
            for k in 0..n_dof {
                acc += weights[k] * lagrange_eval(&nodes, j, upper * nodes[k]);
            }
            time_int[m * n_dof + j] = upper * acc;
        }
    }

    BasisTables {
        order,
        nodes,
        weights,
        diff,
        phi_left,
        phi_right,
        time_int,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_matches_known_values() {
        let t = precompute_basis(1);
        assert!((t.nodes[0] - 0.211_324_865_405_187_1).abs() < 1e-12);
        assert!((t.nodes[1] - 0.788_675_134_594_812_9).abs() < 1e-12);
        assert!((t.weights[0] - 0.5).abs() < 1e-14);
        assert!((t.weights[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn weights_sum_to_one() {
        for n in 1..=9 {
            let t = precompute_basis(n);
            let s: f64 = t.weights.iter().sum();
            assert!((s - 1.0).abs() < 1e-13, "order {n}: sum {s}");
        }
    }

    #[test]
    fn quadrature_exact_for_monomials() {
        // independent oracle: exact integral of x^k over [0,1] is 1/(k+1)
        for n in 1..=9 {
            let t = precompute_basis(n);
            for k in 0..=(2 * n + 1) {
                let num: f64 = t
                    .nodes
                    .iter()
                    .zip(&t.weights)
                    .map(|(&x, &w)| w * x.powi(k as i32))
                    .sum();
                let exact = 1.0 / (k as f64 + 1.0);
                assert!(
                    (num - exact).abs() < 1e-13,
                    "order {n}, monomial {k}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn derivative_annihilates_constants() {
        for n in [1, 2, 5, 9] {
            let t = precompute_basis(n);
            for i in 0..t.n_dof() {
                let s: f64 = (0..t.n_dof()).map(|j| t.diff_at(i, j)).sum();
                assert!(s.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn derivative_exact_for_polynomials() {
        // nodal derivative of x^k is exact for k <= order
        for n in [2, 4, 7] {
            let t = precompute_basis(n);
            for k in 1..=n {
                for i in 0..t.n_dof() {
                    let num: f64 = (0..t.n_dof())
                        .map(|j| t.diff_at(i, j) * t.nodes[j].powi(k as i32))
                        .sum();
                    let exact = k as f64 * t.nodes[i].powi(k as i32 - 1);
                    assert!((num - exact).abs() < 1e-11, "n={n} k={k}: {num} vs {exact}");
                }
            }
        }
    }

    #[test]
    fn face_vectors_interpolate() {
        let t = precompute_basis(3);
        // sum of cardinal functions is 1 anywhere
        let sl: f64 = t.phi_left.iter().sum();
        let sr: f64 = t.phi_right.iter().sum();
        assert!((sl - 1.0).abs() < 1e-13);
        assert!((sr - 1.0).abs() < 1e-13);
        // extrapolating x^3 to the faces
        let left: f64 = (0..4).map(|j| t.phi_left[j] * t.nodes[j].powi(3)).sum();
        let right: f64 = (0..4).map(|j| t.phi_right[j] * t.nodes[j].powi(3)).sum();
        assert!(left.abs() < 1e-12);
        assert!((right - 1.0).abs() < 1e-12);
    }

    #[test]
    fn time_integration_matrix_integrates_polynomials() {
        // oracle: int_0^u s^k ds = u^{k+1}/(k+1); expand s^k in the nodal basis
        let t = precompute_basis(3);
        for k in 0..=3 {
            for m in 0..4 {
                let num: f64 = (0..4)
                    .map(|j| t.time_int[m * 4 + j] * t.nodes[j].powi(k as i32))
                    .sum();
                let u = t.nodes[m];
                let exact = u.powi(k as i32 + 1) / (k as f64 + 1.0);
                assert!((num - exact).abs() < 1e-13, "k={k} m={m}");
            }
        }
    }
}
