//! Product quadrature on the unit sphere: Gauss-Legendre in `z = cos θ`
//! times a uniform azimuthal rule. Used only to cross-check the exact
//! integrals; nothing downstream consumes these floats.

use std::f64::consts::PI;

use crate::polynomial::Polynomial;

#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub z_nodes: Vec<f64>,
    pub z_weights: Vec<f64>,
    /// Number of azimuthal nodes.
    pub k: usize,
    /// Highest polynomial degree integrated exactly.
    pub exactness_degree: usize,
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss-Legendre nodes (ascending) and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-type initial guess for the i-th largest root
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

impl QuadratureRule {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n >= 1 && k >= 1, "quadrature needs n, k >= 1");
        let (z_nodes, z_weights) = gauss_legendre(n);
        QuadratureRule {
            z_nodes,
            z_weights,
            k,
            exactness_degree: (2 * n - 1).min(k - 1),
        }
    }

    /// Sum of all product weights; `4π` for a valid rule.
    pub fn total_weight(&self) -> f64 {
        self.z_weights.iter().sum::<f64>() * 2.0 * PI
    }

    /// `(point, weight)` pairs of the product rule.
    pub fn nodes(&self) -> impl Iterator<Item = ([f64; 3], f64)> + '_ {
        let dphi = 2.0 * PI / self.k as f64;
        self.z_nodes
            .iter()
            .zip(&self.z_weights)
            .flat_map(move |(&z, &w)| {
                let s = (1.0 - z * z).max(0.0).sqrt();
                (0..self.k).map(move |j| {
                    let phi = j as f64 * dphi;
                    ([s * phi.cos(), s * phi.sin(), z], w * dphi)
                })
            })
    }

    pub fn integrate(&self, p: &Polynomial) -> f64 {
        self.nodes().map(|(x, w)| w * p.eval_f64(x)).sum()
    }
}

/// `∫_{S²} P dA` (not normalised: `P = 1` gives `4π`).
pub fn quad_integrate(p: &Polynomial, n: usize, k: usize) -> f64 {
    QuadratureRule::new(n, k).integrate(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MultiIndex;
    use crate::rational::int;

    #[test]
    fn total_area() {
        let r = QuadratureRule::new(8, 16);
        assert!((r.total_weight() - 4.0 * PI).abs() < 1e-12);
        assert_eq!(r.exactness_degree, 15);
        let one = Polynomial::constant(int(1));
        assert!((quad_integrate(&one, 8, 16) - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn small_rules() {
        let (x, w) = gauss_legendre(1);
        assert_eq!((x[0], w[0]), (0.0, 2.0));
        let (x, w) = gauss_legendre(2);
        assert!((x[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tagged_moments() {
        let p = Polynomial::monomial(MultiIndex::new(2, 0, 0));
        assert!((quad_integrate(&p, 8, 16) - 4.0 * PI / 3.0).abs() < 1e-12);
        let p = Polynomial::monomial(MultiIndex::new(2, 2, 2));
        assert!((quad_integrate(&p, 8, 16) - 4.0 * PI / 105.0).abs() < 1e-12);
        let p = Polynomial::monomial(MultiIndex::new(1, 2, 0));
        assert!(quad_integrate(&p, 8, 16).abs() < 1e-13);
    }
}
