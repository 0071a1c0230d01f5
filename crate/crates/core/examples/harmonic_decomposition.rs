//! Split a homogeneous polynomial into restricted spherical harmonics.

use cr_sphere::harmonic::{
    harmonic_basis, harmonic_decompose, sphere_laplacian, verify_decomposition,
};
use cr_sphere::pairings::lambda_s2;
use cr_sphere::rational::int;
use cr_sphere::{MultiIndex, Polynomial};

fn main() -> cr_sphere::Result<()> {
    let p = Polynomial::from_terms([
        (MultiIndex::new(4, 0, 0), int(1)),
        (MultiIndex::new(2, 2, 0), int(-3)),
        (MultiIndex::new(1, 1, 2), int(2)),
    ]);
    println!("p = {p}");
    let d = harmonic_decompose(&p);
    verify_decomposition(&p, &d)?;
    for (k, h) in &d.components {
        // Each piece is an eigenfunction of the sphere Laplacian.
        assert_eq!(sphere_laplacian(h), -h.scale(&lambda_s2(*k)));
        println!("H_{k} = {h}   eigenvalue {}", lambda_s2(*k));
    }
    for l in 0..=5 {
        println!("dim H_{l} = {}", harmonic_basis(l).len());
    }
    Ok(())
}
