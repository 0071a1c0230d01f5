//! Gauss-Legendre x uniform-azimuth quadrature against exact moments.

use cr_sphere::integrals::integrate_poly;
use cr_sphere::monomial::monomials_of_degree;
use cr_sphere::quadrature::QuadratureRule;
use cr_sphere::rational::to_f64;
use cr_sphere::Polynomial;

fn main() {
    let area = 4.0 * std::f64::consts::PI;
    for (n, k) in [(4, 8), (8, 16), (16, 32)] {
        let rule = QuadratureRule::new(n, k);
        let mut worst = 0.0f64;
        for l in 0..=rule.exactness_degree as u32 {
            for a in monomials_of_degree(l) {
                let p = Polynomial::monomial(a);
                let err = (rule.integrate(&p) / area - to_f64(&integrate_poly(&p))).abs();
                worst = worst.max(err);
            }
        }
        println!(
            "n={n:2} k={k:2} exact to degree {:2}, max error {worst:.2e}",
            rule.exactness_degree
        );
    }
}
