//! The ten-variable degree-3 block against the printed polynomial F.

use cr_sphere::blocks::split;
use cr_sphere::certify::{inertia, instability_certificate};
use cr_sphere::counterexample::{
    compare_block, embed_variables, f_eval, f_hessian_form, stated_functions, stated_vector,
    variable_block, TEST_VECTOR,
};
use cr_sphere::forms::{long_form, long_functional};
use cr_sphere::rational::to_text;

fn main() -> cr_sphere::Result<()> {
    let q = long_form(3);
    let block = variable_block(&q)?;
    println!("block inertia {}", inertia(&block)?);
    println!("F Hessian inertia {}", inertia(&f_hessian_form())?);
    println!("F at test vector = {}", f_eval(&TEST_VECTOR));

    let cmp = compare_block(&block)?;
    println!(
        "block / F scale {}  proportional {}",
        to_text(&cmp.scale),
        cmp.proportional()
    );
    for (p, r, block_entry, f_entry) in &cmp.mismatches {
        println!(
            "  {p}{r}: block {} vs F {}",
            to_text(block_entry),
            to_text(f_entry)
        );
    }

    let v = embed_variables(&TEST_VECTOR);
    println!(
        "long functional at test vector = {}",
        to_text(&long_functional(&v.functions()))
    );
    println!(
        "long functional at stated functions = {}",
        to_text(&long_functional(&stated_functions()))
    );
    println!("stated functions as variables {:?}", stated_vector());

    for (idx, b) in split(&q) {
        let cert = instability_certificate(&b)?;
        println!(
            "block of size {}: stable {} verified {}",
            idx.len(),
            cert.is_stable(),
            cert.verify(&b)
        );
    }
    Ok(())
}
