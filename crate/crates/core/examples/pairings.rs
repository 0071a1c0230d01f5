//! Dirichlet and Cauchy-Riemann pairings of monomials, with their oracles.

use cr_sphere::pairings::{cr_pair, cr_pair_oracle, dirichlet_pair, dirichlet_pair_pointwise};
use cr_sphere::rational::to_text;
use cr_sphere::MultiIndex;

fn main() -> cr_sphere::Result<()> {
    let pairs = [
        (MultiIndex::new(2, 0, 0), MultiIndex::new(0, 2, 0)),
        (MultiIndex::new(1, 1, 0), MultiIndex::new(1, 1, 0)),
        (MultiIndex::new(0, 0, 3), MultiIndex::new(1, 0, 2)),
    ];
    for (a, b) in pairs {
        let g = dirichlet_pair(&a, &b)?;
        assert_eq!(g, dirichlet_pair_pointwise(&a, &b)?);
        println!("<grad x^{a}, grad x^{b}> = {}", to_text(&g));
        for axis in 1..=3 {
            let c = cr_pair(axis, &a, &b)?;
            assert_eq!(c, cr_pair_oracle(axis, &a, &b)?);
            println!("  cr axis {axis}: {}", to_text(&c));
        }
    }
    Ok(())
}
