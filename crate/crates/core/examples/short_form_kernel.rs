//! Short-form Gram matrices are positive semidefinite; print their kernels.

use cr_sphere::certify::{inertia, kernel_basis};
use cr_sphere::forms::short_form;
use cr_sphere::rational::to_text;
use num_traits::Zero;

fn main() -> cr_sphere::Result<()> {
    for l in 1..=4 {
        for axis in 1..=3 {
            let q = short_form(axis, l)?;
            let i = inertia(&q)?;
            println!("axis {axis} degree {l}: dim {} inertia {i}", q.dim());
            if l == 1 {
                for k in kernel_basis(&q) {
                    let row: Vec<String> = q
                        .basis
                        .iter()
                        .zip(&k)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(b, c)| format!("{}*{b}", to_text(c)))
                        .collect();
                    println!("  kernel: {}", row.join(" + "));
                }
            }
        }
    }
    Ok(())
}
