#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cr_sphere::algebraic;
use cr_sphere::certify::{inertia, inertia_of, instability_certificate};
use cr_sphere::counterexample::f_hessian_form;
use cr_sphere::forms::{long_form, long_functional, short_form, SymQForm, CALIBRATION_TABLE};
use cr_sphere::harmonic::harmonic_basis;
use cr_sphere::integrals::{integrate_monomial, integrate_poly, sphere_moment};
use cr_sphere::jacobi::{jacobi_spectrum, matrix_norm, sign_pattern};
use cr_sphere::monomial::{monomials_of_degree, MultiIndex, Parity};
use cr_sphere::pairings::{dirichlet_integral, lambda_s2};
use cr_sphere::polynomial::{lap0, triple_det};
use cr_sphere::quadrature::{quad_integrate, QuadratureRule};
use cr_sphere::rational::{int, rat, to_f64, Rational};
use cr_sphere::Polynomial;
use num_traits::{Signed, Zero};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn mono(max: u32) -> impl Strategy<Value = MultiIndex> {
    (0..=max, 0..=max, 0..=max).prop_map(|(a, b, c)| MultiIndex::new(a, b, c))
}

fn poly(max_exp: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((mono(max_exp), small_rat()), 0..=terms).prop_map(Polynomial::from_terms)
}

fn homogeneous(l: u32) -> impl Strategy<Value = Polynomial> {
    let ms = monomials_of_degree(l);
    prop::collection::vec(small_rat(), ms.len())
        .prop_map(move |cs| Polynomial::from_terms(ms.iter().copied().zip(cs)))
}

fn harmonic(l: u32) -> impl Strategy<Value = Polynomial> {
    let basis = harmonic_basis(l);
    prop::collection::vec(-3i64..=3, basis.len())
        .prop_map(move |cs| basis.iter().zip(cs).map(|(h, c)| h.scale(&int(c))).sum())
}

fn x(i: usize) -> Polynomial {
    Polynomial::coord(i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributive(p in poly(3, 5), q in poly(3, 5), r in poly(2, 4)) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn bracket_antisymmetric_and_bilinear(f in poly(3, 4), g in poly(3, 4), h in poly(3, 4), c in small_rat()) {
        prop_assert_eq!(triple_det(&f, &h), -triple_det(&h, &f));
        prop_assert!(triple_det(&f, &f).is_zero());
        let lhs = triple_det(&(&f + &g.scale(&c)), &h);
        prop_assert_eq!(lhs, &triple_det(&f, &h) + &triple_det(&g, &h).scale(&c));
    }

    #[test]
    fn bracket_leibniz_on_sphere(f in homogeneous(2), g in homogeneous(2), h in homogeneous(2), w in mono(2)) {
        let diff = &triple_det(&(&f * &g), &h) - &(&(&f * &triple_det(&g, &h)) + &(&g * &triple_det(&f, &h)));
        prop_assert!(integrate_poly(&(&diff * &Polynomial::monomial(w))).is_zero());
    }

    #[test]
    fn laplacian_of_r2_multiple(l in 0u32..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Polynomial::from_terms(monomials_of_degree(l).into_iter().map(|a| (a, int(rng.gen_range(-5..=5)))));
        let lhs = lap0(&(&p * &Polynomial::r2()));
        let rhs = &(&lap0(&p) * &Polynomial::r2()) + &p.scale(&int(4 * l as i64 + 6));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn moments_symmetric_positive_homogeneous(a in mono(7)) {
        let v = integrate_monomial(&a, 2).unwrap();
        let [p, q, r] = a.0;
        for perm in [[p, r, q], [q, p, r], [q, r, p], [r, p, q], [r, q, p]] {
            prop_assert_eq!(&integrate_monomial(&MultiIndex(perm), 2).unwrap(), &v);
        }
        if a.parity().all_even() {
            prop_assert!(v.is_positive());
        }
        let lifted: Rational = (0..3).map(|i| {
            let mut e = a.0;
            e[i] += 2;
            sphere_moment(&MultiIndex(e))
        }).sum();
        prop_assert_eq!(lifted, v);
    }

    #[test]
    fn eigen_pairing((l, h, g) in (0u32..5).prop_flat_map(|l| (Just(l), harmonic(l), harmonic(l)))) {
        prop_assert_eq!(dirichlet_integral(&h, &g), lambda_s2(l) * integrate_poly(&(&h * &g)));
    }

    #[test]
    fn triple_alternating(
        (f, g, h) in (1u32..=3, 1u32..=3, 1u32..=3).prop_flat_map(|(a, b, c)| (harmonic(a), harmonic(b), harmonic(c)))
    ) {
        let tri = |p: &Polynomial, q: &Polynomial, r: &Polynomial| integrate_poly(&(p * &triple_det(q, r)));
        let base = tri(&f, &g, &h);
        prop_assert_eq!(&tri(&g, &h, &f), &base);
        prop_assert_eq!(&tri(&h, &f, &g), &base);
        prop_assert_eq!(&tri(&g, &f, &h), &-base.clone());
        prop_assert_eq!(&tri(&f, &h, &g), &-base.clone());
        prop_assert_eq!(&tri(&h, &g, &f), &-base);
    }

    #[test]
    fn scale_covariance(l in 0u32..3, c in (1i64..20, 1i64..20)) {
        let q = long_form(l);
        prop_assert_eq!(inertia(&q.scale(&rat(c.0, c.1))).unwrap(), inertia(&q).unwrap());
    }

    #[test]
    fn certificates_reverify(entries in prop::collection::vec(-4i64..=4, 21)) {
        let n = 6;
        let mut m = vec![vec![int(0); n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m[i][j] = int(entries[k]);
                m[j][i] = int(entries[k]);
                k += 1;
            }
        }
        let q = SymQForm::new((0..n).map(|i| cr_sphere::forms::Label::Var((b'a' + i as u8) as char)).collect(), m).unwrap();
        let c = instability_certificate(&q).unwrap();
        prop_assert!(c.verify(&q));
        prop_assert_eq!(c.is_stable(), inertia(&q).unwrap().n_neg == 0);
    }

    #[test]
    fn principal_blocks_of_psd_forms_are_psd(l in 1u32..4, picks in prop::collection::vec(any::<bool>(), 40)) {
        let q = long_form(l);
        let idx: Vec<usize> = (0..q.dim()).filter(|&i| picks[i % picks.len()]).collect();
        prop_assert_eq!(inertia(&q.principal(&idx)).unwrap().n_neg, 0);
    }
}

#[test]
fn parity_selection() {
    for l in 1..=4u32 {
        let q = long_form(l);
        let n = monomials_of_degree(l).len();
        let ms = monomials_of_degree(l);
        for e in CALIBRATION_TABLE {
            let want = Parity::for_axis(e.axis);
            let (r0, c0) = ((e.alpha as usize - 4) * n, (e.beta as usize - 4) * n);
            for (i, a) in ms.iter().enumerate() {
                for (j, b) in ms.iter().enumerate() {
                    if !q.matrix[r0 + i][c0 + j].is_zero() {
                        assert_eq!(a.add(b).parity(), want, "l={l} {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn mixed_eigenspace_long_inequality() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (b1, b2) = (harmonic_basis(1), harmonic_basis(2));
    let pick = |rng: &mut ChaCha8Rng, basis: &[Polynomial]| -> Polynomial {
        basis
            .iter()
            .map(|h| h.scale(&rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))))
            .sum()
    };
    let layouts: [[u32; 4]; 6] = [
        [1, 1, 2, 2],
        [2, 2, 1, 1],
        [1, 2, 1, 2],
        [2, 1, 2, 1],
        [1, 2, 2, 1],
        [2, 1, 1, 2],
    ];
    for k in 0..100 {
        let layout = layouts[k % layouts.len()];
        let fs = layout.map(|d| {
            if d == 1 {
                pick(&mut rng, &b1)
            } else {
                pick(&mut rng, &b2)
            }
        });
        let v = long_functional(&fs);
        assert!(!v.is_negative(), "layout {layout:?} gives {v}");
    }
}

#[test]
fn algebraic_inequality_fuzz() {
    let mut rng = ChaCha8Rng::seed_from_u64(39);
    for _ in 0..10_000 {
        let v: [Rational; 6] =
            std::array::from_fn(|_| rat(rng.gen_range(-30..=30), rng.gen_range(1..=7)));
        let gap = algebraic::gap(&v);
        assert!(!gap.is_negative());
        // the gap is positive definite: equality only at the origin
        assert_eq!(gap.is_zero(), v.iter().all(Zero::is_zero));
    }
    let zero: [Rational; 6] = std::array::from_fn(|_| int(0));
    assert!(algebraic::gap(&zero).is_zero() && algebraic::collinear(&zero));
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    loop {
        let d: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
                    .collect()
            })
            .collect();
        if cr_sphere::certify::nullspace(&d).is_empty() {
            return d;
        }
    }
}

fn congruence(q: &[Vec<Rational>], d: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = q.len();
    let qd: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &q[i][k] * &d[k][j]).sum())
                .collect()
        })
        .collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &d[k][i] * &qd[k][j]).sum())
                .collect()
        })
        .collect()
}

#[test]
fn congruence_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let forms = [
        long_form(1),
        short_form(2, 2).unwrap(),
        f_hessian_form(),
        long_form(0),
    ];
    for q in &forms {
        let base = inertia(q).unwrap();
        for _ in 0..20 {
            let d = random_invertible(&mut rng, q.dim());
            assert_eq!(inertia_of(&congruence(&q.matrix, &d)).unwrap(), base);
        }
    }
}

fn suite_matrices() -> Vec<SymQForm> {
    let mut out: Vec<SymQForm> = (0..=5).map(long_form).collect();
    for axis in 1..=3 {
        for l in 0..=6 {
            out.push(short_form(axis, l).unwrap());
        }
    }
    out.push(f_hessian_form());
    out
}

#[test]
fn jacobi_matches_exact_inertia() {
    for q in suite_matrices() {
        let a = q.to_f64();
        let s = jacobi_spectrum(&a, 1e-14).unwrap();
        let i = inertia(&q).unwrap();
        assert_eq!(
            sign_pattern(&s, matrix_norm(&a), 1e-8),
            (i.n_pos, i.n_neg, i.n_zero)
        );
        let n = a.len();
        let tr: f64 = (0..n).map(|k| a[k][k]).sum();
        let sum: f64 = s.values.iter().sum();
        assert!((tr - sum).abs() <= 1e-10 * tr.abs().max(1.0));
        for p in 0..n {
            for r in 0..n {
                let dot: f64 = (0..n).map(|k| s.vectors[p][k] * s.vectors[r][k]).sum();
                assert!((dot - if p == r { 1.0 } else { 0.0 }).abs() < 1e-10);
            }
        }
    }
    let s = jacobi_spectrum(&long_form(1).to_f64(), 1e-14).unwrap();
    assert!(s.values.last().unwrap().abs() < 1e-9);
}

#[test]
fn quadrature_properties() {
    let coarse = QuadratureRule::new(8, 16);
    let fine = QuadratureRule::new(16, 32);
    assert!((coarse.total_weight() - 4.0 * std::f64::consts::PI).abs() < 1e-12);
    assert!(coarse.exactness_degree >= 15);
    for l in 0..=12 {
        for a in monomials_of_degree(l) {
            let p = Polynomial::monomial(a);
            let (c, f) = (coarse.integrate(&p), fine.integrate(&p));
            if a.parity().all_even() {
                let exact =
                    to_f64(&integrate_monomial(&a, 2).unwrap()) * 4.0 * std::f64::consts::PI;
                assert!((c - exact).abs() <= 1e-10);
                assert!((c - f).abs() <= 1e-12 * f.abs());
            } else {
                assert!(c.abs() < 1e-13, "{a}: {c}");
            }
        }
    }
    assert!(quad_integrate(&x(1), 8, 16).abs() < 1e-13);
}
