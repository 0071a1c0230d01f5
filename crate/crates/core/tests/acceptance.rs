//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line. Run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1`.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use cr_sphere::certify::{inertia, instability_certificate, kernel_basis, Certificate, Inertia};
use cr_sphere::counterexample::{
    compare_block, embed_variables, f_eval, f_hessian_form, stated_functions, stated_vector,
    variable_block, PRINTED_EIGENVALUES, TEST_VECTOR,
};
use cr_sphere::forms::{embed_functions, long_form, short_form, short_vector};
use cr_sphere::harmonic::{harmonic_basis, harmonic_decompose};
use cr_sphere::integrals::{factorial_oracle, integrate_monomial, integrate_poly};
use cr_sphere::jacobi::jacobi_spectrum;
use cr_sphere::monomial::{monomials_of_degree, MultiIndex};
use cr_sphere::pairings::{cr_pair, cr_pair_oracle, dirichlet_pair, dirichlet_pair_pointwise};
use cr_sphere::polynomial::triple_det;
use cr_sphere::quadrature::quad_integrate;
use cr_sphere::rational::{int, rat, to_text, Rational};
use cr_sphere::report::{cmd_extend, ExtendFixture};
use cr_sphere::{bounds::rayleigh_bound, Polynomial};
use num_traits::{Signed, Zero};

fn verdict(n: u32, passed: bool, elapsed: Duration, budget: Duration, detail: &str) {
    let ok = passed && elapsed <= budget;
    println!(
        "criterion {n}: {}  ({:.2?} of {:.0?})  {detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    assert!(passed, "criterion {n} failed: {detail}");
    assert!(elapsed <= budget, "criterion {n} exceeded its time budget");
}

fn mi(a: u32, b: u32, c: u32) -> MultiIndex {
    MultiIndex::new(a, b, c)
}

#[test]
fn criterion_01_exact_integrals() {
    let t = Instant::now();
    let table = [
        (mi(2, 0, 0), rat(1, 3)),
        (mi(2, 2, 0), rat(1, 15)),
        (mi(4, 0, 0), rat(1, 5)),
        (mi(6, 0, 0), rat(1, 7)),
        (mi(4, 2, 0), rat(1, 35)),
        (mi(2, 2, 2), rat(1, 105)),
    ];
    let mut bad: Vec<String> = table
        .iter()
        .filter(|(a, v)| &integrate_monomial(a, 2).unwrap() != v)
        .map(|(a, _)| a.to_string())
        .collect();
    for l in 0..=12 {
        for a in monomials_of_degree(l) {
            if !a.parity().all_even() && !integrate_monomial(&a, 2).unwrap().is_zero() {
                bad.push(a.to_string());
            }
        }
    }
    verdict(
        1,
        bad.is_empty(),
        t.elapsed(),
        Duration::from_secs(1),
        &format!("mismatches: {bad:?}"),
    );
}

#[test]
fn criterion_02_oracle_equivalences() {
    let t = Instant::now();
    let mut bad = 0usize;
    for l in (0..=16).step_by(2) {
        for a in monomials_of_degree(l)
            .into_iter()
            .filter(|a| a.parity().all_even())
        {
            bad += (integrate_monomial(&a, 2).unwrap() != factorial_oracle(&a)) as usize;
        }
    }
    for l in 0..=6 {
        let ms = monomials_of_degree(l);
        for a in &ms {
            for b in &ms {
                bad += (dirichlet_pair(a, b).unwrap() != dirichlet_pair_pointwise(a, b).unwrap())
                    as usize;
            }
        }
    }
    for l in 0..=5 {
        let ms = monomials_of_degree(l);
        for axis in 1..=3 {
            for a in &ms {
                for b in &ms {
                    bad += (cr_pair(axis, a, b).unwrap() != cr_pair_oracle(axis, a, b).unwrap())
                        as usize;
                }
            }
        }
    }
    verdict(
        2,
        bad == 0,
        t.elapsed(),
        Duration::from_secs(60),
        &format!("{bad} mismatches"),
    );
}

#[test]
fn criterion_03_structure_identities() {
    let t = Instant::now();
    let x = Polynomial::coord;
    let mut fails = Vec::new();
    if triple_det(&x(1), &x(2)) != x(3) {
        fails.push("bracket(x1, x2) != x3".to_string());
    }
    if cr_pair(3, &MultiIndex::unit(1), &MultiIndex::unit(2)).unwrap() != rat(1, 3) {
        fails.push("cr(3, e1, e2) != 1/3".to_string());
    }
    let bases: Vec<Vec<Polynomial>> = (0..=5).map(harmonic_basis).collect();
    for (l, basis) in bases.iter().enumerate() {
        for h in basis {
            for i in 1..=3 {
                let d = harmonic_decompose(&triple_det(&x(i), h));
                let ok = d.components.is_empty()
                    || (d.components.len() == 1 && d.components[0].0 == l as u32);
                if !ok {
                    fails.push(format!("bracket with x{i} leaves degree {l}"));
                }
            }
        }
    }
    for l in 0..=5 {
        for s in 0..=5 {
            if l == s {
                continue;
            }
            for h in &bases[l] {
                for g in &bases[s] {
                    let bracket = triple_det(h, g);
                    for i in 1..=3 {
                        if !integrate_poly(&(&x(i) * &bracket)).is_zero() {
                            fails.push(format!("cross-degree ({l}, {s}) axis {i}"));
                        }
                    }
                }
            }
        }
    }
    verdict(
        3,
        fails.is_empty(),
        t.elapsed(),
        Duration::from_secs(30),
        &format!("{} failures {:?}", fails.len(), fails.first()),
    );
}

#[test]
fn criterion_04_short_forms() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for axis in 1..=3 {
        for l in 0..=6 {
            let i = inertia(&short_form(axis, l).unwrap()).unwrap();
            if i.n_neg != 0 {
                bad.push(format!("axis {axis}, degree {l}: {i}"));
            }
        }
    }
    let q = short_form(1, 1).unwrap();
    let i = inertia(&q).unwrap();
    let kernel = kernel_basis(&q);
    let (p2, p3) = (Polynomial::coord(2), Polynomial::coord(3));
    let family = [
        short_vector(&p2, &p3, 1).unwrap(),
        short_vector(&p3, &-&p2, 1).unwrap(),
    ];
    // both family vectors lie in the kernel and are independent, so they span it
    let in_kernel = family.iter().all(|v| {
        q.matrix.iter().all(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .sum::<Rational>()
                .is_zero()
        })
    });
    let ok = bad.is_empty() && i.n_zero == 2 && kernel.len() == 2 && in_kernel;
    verdict(
        4,
        ok,
        t.elapsed(),
        Duration::from_secs(120),
        &format!("negative cases {bad:?}; degree-1 inertia {i}, kernel dim {}, family in kernel {in_kernel}", kernel.len()),
    );
}

#[test]
fn criterion_05_long_form_verdicts() {
    let t = Instant::now();
    let q0 = long_form(0);
    let i1 = inertia(&long_form(1)).unwrap();
    let i2 = inertia(&long_form(2)).unwrap();
    let i3 = inertia(&long_form(3)).unwrap();
    let checks = [
        ("degree 0 is zero", q0.is_zero()),
        (
            "degree 1 PSD with nullity 8",
            i1.n_neg == 0 && i1.n_zero == 8,
        ),
        (
            "degree 2 PSD with nullity >= 4",
            i2.n_neg == 0 && i2.n_zero >= 4,
        ),
        ("degree 3 has a negative direction", i3.n_neg >= 1),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    verdict(
        5,
        failed.is_empty(),
        t.elapsed(),
        Duration::from_secs(300),
        &format!("inertia l=1 {i1}, l=2 {i2}, l=3 {i3}; failed: {failed:?}"),
    );
}

#[test]
fn criterion_06_ten_variable_block() {
    let t = Instant::now();
    let f_value = f_eval(&TEST_VECTOR);
    let h = f_hessian_form();
    let hi = inertia(&h).unwrap();
    let spec = jacobi_spectrum(&h.to_f64(), 1e-14).unwrap();
    let mut printed = PRINTED_EIGENVALUES.to_vec();
    printed.sort_by(|a, b| b.total_cmp(a));
    let eig_ok = spec
        .values
        .iter()
        .zip(&printed)
        .all(|(a, b)| (a - b).abs() <= 1e-6 * b.abs());
    let trace: Rational = (0..10).map(|k| h.matrix[k][k].clone()).sum();
    let q3 = long_form(3);
    let cmp = compare_block(&variable_block(&q3).unwrap()).unwrap();
    let value = q3
        .evaluate(&embed_variables(&TEST_VECTOR).to_vector())
        .unwrap();
    let checks = [
        ("F(test vector) = -138", f_value == -138),
        (
            "Hessian inertia (9,1,0)",
            hi == Inertia {
                n_pos: 9,
                n_neg: 1,
                n_zero: 0,
            },
        ),
        ("printed eigenvalues to 1e-6", eig_ok),
        ("trace 612", trace == int(612)),
        ("block = (s/2) Hessian", cmp.proportional()),
        ("long form negative at test vector", value.is_negative()),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    verdict(
        6,
        failed.is_empty(),
        t.elapsed(),
        Duration::from_secs(60),
        &format!(
            "s = {}, {} differing block entries, long form at test vector {}; failed: {failed:?}",
            to_text(&cmp.scale),
            cmp.mismatches.len(),
            to_text(&value)
        ),
    );
}

#[test]
fn criterion_07_counterexample_functions() {
    let t = Instant::now();
    let q3 = long_form(3);
    let stated = q3
        .evaluate(&embed_functions(&stated_functions(), 3).unwrap().to_vector())
        .unwrap();
    let tested = q3
        .evaluate(&embed_variables(&TEST_VECTOR).to_vector())
        .unwrap();
    let x_gap = stated_vector()[3] != TEST_VECTOR[3];
    let any_negative = stated.is_negative() || tested.is_negative();
    verdict(
        7,
        any_negative && x_gap,
        t.elapsed(),
        Duration::from_secs(60),
        &format!(
            "stated functions {}, test vector {}, x coefficient {} vs {}",
            to_text(&stated),
            to_text(&tested),
            stated_vector()[3],
            TEST_VECTOR[3]
        ),
    );
}

#[test]
fn criterion_08_bounds() {
    let t = Instant::now();
    let flags: Vec<bool> = (1..=6)
        .map(|l| rayleigh_bound(l, l, 2, 5, &int(1)).unwrap().sufficient)
        .collect();
    let six = rayleigh_bound(6, 6, 2, 5, &int(1)).unwrap();
    let ok = flags[..5].iter().all(|f| !f)
        && flags[5]
        && six.lambda_l == int(42)
        && six.threshold == int(36);
    verdict(
        8,
        ok,
        t.elapsed(),
        Duration::from_secs(1),
        &format!("sufficiency by degree 1..6: {flags:?}"),
    );
}

#[test]
fn criterion_09_extension() {
    let t = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for l in [4u32, 5] {
        let (report, fixture) = cmd_extend(l).unwrap();
        let path = format!(
            "{}/tests/fixtures/extend_{l}.json",
            env!("CARGO_MANIFEST_DIR")
        );
        let stored: ExtendFixture =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let q = long_form(l);
        let whole = instability_certificate(&q).unwrap();
        let witnesses_ok = match &whole {
            Certificate::Unstable(w) => whole.verify(&q) && w.value.is_negative(),
            Certificate::Stable(_) => whole.verify(&q),
        };
        ok &= report.all_passed()
            && stored == fixture
            && witnesses_ok
            && fixture.dim == 4 * monomials_of_degree(l).len();
        notes.push(format!(
            "l={l}: dim {}, inertia {:?}, fixture match {}",
            fixture.dim,
            fixture.inertia,
            stored == fixture
        ));
    }
    verdict(
        9,
        ok,
        t.elapsed(),
        Duration::from_secs(1800),
        &notes.join("; "),
    );
}

#[test]
fn criterion_10_quadrature() {
    let t = Instant::now();
    let mut worst = 0.0f64;
    for l in 0..=12 {
        for a in monomials_of_degree(l) {
            let exact = cr_sphere::rational::to_f64(&integrate_monomial(&a, 2).unwrap()) * 4.0 * PI;
            let q = quad_integrate(&Polynomial::monomial(a), 8, 16);
            worst = worst.max((q - exact).abs());
        }
    }
    verdict(
        10,
        worst <= 1e-10,
        t.elapsed(),
        Duration::from_secs(10),
        &format!("worst absolute deviation {worst:.3e}"),
    );
}
