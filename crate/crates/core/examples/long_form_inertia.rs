//! Exact inertia of the long form degree by degree, with block structure.

use std::time::Instant;

use cr_sphere::blocks::split;
use cr_sphere::certify::inertia;
use cr_sphere::forms::long_form;

fn main() -> cr_sphere::Result<()> {
    let top: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    for l in 0..=top {
        let t = Instant::now();
        let q = long_form(l);
        let whole = inertia(&q)?;
        let sizes: Vec<usize> = split(&q).iter().map(|(idx, _)| idx.len()).collect();
        println!(
            "degree {l}: dim {:3} inertia {whole} blocks {sizes:?} ({:.2?})",
            q.dim(),
            t.elapsed()
        );
    }
    Ok(())
}
