//! Rayleigh-quotient bound table for the long inequality in higher degrees.

use cr_sphere::bounds::{first_sufficient_degree, rayleigh_bound};
use cr_sphere::rational::{int, to_text};

fn main() -> cr_sphere::Result<()> {
    let (m, n) = (2, 5);
    println!("first sufficient degree: {}", first_sufficient_degree(m, n));
    for l in 1..=8 {
        let b = rayleigh_bound(l, l, m, n, &int(1))?;
        println!(
            "l={l} lambda {:>3} threshold {} sufficient {}",
            to_text(&b.lambda_l),
            to_text(&b.threshold),
            b.sufficient
        );
    }
    Ok(())
}
