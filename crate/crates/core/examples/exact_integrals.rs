//! Exact normalized sphere moments and their closed-form cross-check.

use cr_sphere::integrals::{factorial_oracle, integrate_exponents, sphere_moment};
use cr_sphere::monomial::monomials_of_degree;
use cr_sphere::rational::to_text;
use num_traits::Zero;

fn main() {
    for l in [2, 4, 6] {
        println!("degree {l}");
        for a in monomials_of_degree(l) {
            let m = sphere_moment(&a);
            if !m.is_zero() {
                assert_eq!(m, factorial_oracle(&a));
                println!("  x^{a}  {}", to_text(&m));
            }
        }
    }
    // Same moments on S^3 by passing four exponents.
    println!(
        "S^3: x1^2 x2^2 -> {}",
        to_text(&integrate_exponents(&[2, 2, 0, 0]))
    );
}
