//! Spectral data of spheres and the two bilinear pairings of monomials on S²:
//! the Dirichlet pairing `∫⟨∇φ^a, ∇φ^b⟩` and the Cauchy-Riemann pairing
//! `∫ φ_i ⟨J∇φ^a, ∇φ^b⟩`. Each has a closed form used on the hot path and a
//! second route used to check it. All values are in units of `|S²|`.
//!
//! Sign convention: the Dirichlet energy is positive, i.e. for eigenfunctions
//! of equal degree `∫⟨∇f, ∇h⟩ = +λ_l ∫ f h`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::{integrate_poly, sphere_moment};
use crate::monomial::MultiIndex;
use crate::polynomial::{sphere_gradient_dot, triple_det, Polynomial};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralData {
    pub l: u32,
    pub m: u32,
    #[serde(with = "crate::rational::serde_text")]
    pub r: Rational,
    #[serde(with = "crate::rational::serde_text")]
    pub lambda: Rational,
    pub multiplicity: u64,
}

/// `λ_l(r) = l(l+m-1)/r²` with multiplicity `C(m+l, m) - C(m+l-2, m)`.
pub fn spectral(l: u32, m: u32, r: &Rational) -> Result<SpectralData> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "sphere dimension m={m} < 2"
        )));
    }
    if !r.is_positive() {
        return Err(Error::InvalidArgument("radius must be positive".into()));
    }
    let num = BigInt::from(l as u64 * (l as u64 + m as u64 - 1));
    let lambda = Rational::from_integer(num) / (r * r);
    let top = binomial(m as u64 + l as u64, m as u64);
    let low = if l >= 2 {
        binomial(m as u64 + l as u64 - 2, m as u64)
    } else {
        0
    };
    Ok(SpectralData {
        l,
        m,
        r: r.clone(),
        lambda,
        multiplicity: top - low,
    })
}

/// Unit-sphere eigenvalue `l(l+1)` on S².
pub fn lambda_s2(l: u32) -> Rational {
    rational::int(l as i64 * (l as i64 + 1))
}

fn check_same_degree(a: &MultiIndex, b: &MultiIndex) -> Result<u32> {
    let (la, lb) = (a.degree(), b.degree());
    if la != lb {
        return Err(Error::DegreeMismatch {
            left: la,
            right: lb,
        });
    }
    Ok(la)
}

/// `∫⟨∇φ^a, ∇φ^b⟩ / |S²|` by the reduced formula
/// `Σ_i [l((a_i+b_i) - (a_i-b_i)²) + 2 a_i b_i] / (2(2l+1)) ∫ φ^(a+b-2ε_i)`.
pub fn dirichlet_pair(a: &MultiIndex, b: &MultiIndex) -> Result<Rational> {
    let l = check_same_degree(a, b)? as i64;
    let sum = a.add(b);
    if !sum.parity().all_even() {
        return Ok(Rational::zero());
    }
    let den = BigInt::from(2 * (2 * l + 1));
    let mut acc = Rational::zero();
    for i in 0..3 {
        let Ok(reduced) = sum.sub_unit(i, 2) else {
            continue;
        };
        let (ai, bi) = (a.get(i) as i64, b.get(i) as i64);
        let w = l * ((ai + bi) - (ai - bi).pow(2)) + 2 * ai * bi;
        if w == 0 {
            continue;
        }
        acc += Rational::new(BigInt::from(w), den.clone()) * sphere_moment(&reduced);
    }
    Ok(acc)
}

/// Same pairing by the pointwise form
/// `-l² ∫ φ^(a+b) + Σ_i a_i b_i ∫ φ^(a+b-2ε_i)`.
pub fn dirichlet_pair_pointwise(a: &MultiIndex, b: &MultiIndex) -> Result<Rational> {
    let l = check_same_degree(a, b)? as i64;
    let sum = a.add(b);
    let mut acc = -rational::int(l * l) * sphere_moment(&sum);
    for i in 0..3 {
        let ab = a.get(i) as i64 * b.get(i) as i64;
        if ab == 0 {
            continue;
        }
        let reduced = sum
            .sub_unit(i, 2)
            .expect("a_i b_i > 0 implies a_i + b_i >= 2");
        acc += rational::int(ab) * sphere_moment(&reduced);
    }
    Ok(acc)
}

/// `∫⟨∇f, ∇h⟩ / |S²|` for arbitrary polynomials, by integrating the
/// restricted gradient product directly.
pub fn dirichlet_integral(f: &Polynomial, h: &Polynomial) -> Rational {
    integrate_poly(&sphere_gradient_dot(f, h))
}

fn term(coef: i64, a: &MultiIndex, b: &MultiIndex, shift: [i64; 3]) -> Rational {
    if coef == 0 {
        return Rational::zero();
    }
    match a.add(b).shifted(shift) {
        Some(c) => rational::int(coef) * sphere_moment(&c),
        None => Rational::zero(),
    }
}

/// `∫ φ_axis ⟨J∇φ^a, ∇φ^b⟩ / |S²|` by the three-term closed form.
/// Nonzero only when the parity of `a+b` is `(E,O,O)`, `(O,E,O)` or `(O,O,E)`
/// for axis 1, 2, 3 respectively.
pub fn cr_pair(axis: usize, a: &MultiIndex, b: &MultiIndex) -> Result<Rational> {
    check_same_degree(a, b)?;
    let [a1, a2, a3] = a.0.map(|x| x as i64);
    let [b1, b2, b3] = b.0.map(|x| x as i64);
    let v = match axis {
        1 => {
            term(a1 * b2 - a2 * b1, a, b, [0, -1, 1])
                + term(a3 * b1 - a1 * b3, a, b, [0, 1, -1])
                + term(a2 * b3 - a3 * b2, a, b, [2, -1, -1])
        }
        2 => {
            term(a2 * b3 - a3 * b2, a, b, [1, 0, -1])
                + term(a1 * b2 - a2 * b1, a, b, [-1, 0, 1])
                + term(a3 * b1 - a1 * b3, a, b, [-1, 2, -1])
        }
        3 => {
            term(a3 * b1 - a1 * b3, a, b, [-1, 1, 0])
                + term(a2 * b3 - a3 * b2, a, b, [1, -1, 0])
                + term(a1 * b2 - a2 * b1, a, b, [-1, -1, 2])
        }
        _ => return Err(Error::BadAxis(axis)),
    };
    Ok(v)
}

/// Oracle for [`cr_pair`]: integrate `φ_axis · det(x, ∇⁰φ^a, ∇⁰φ^b)`.
pub fn cr_pair_oracle(axis: usize, a: &MultiIndex, b: &MultiIndex) -> Result<Rational> {
    if !(1..=3).contains(&axis) {
        return Err(Error::BadAxis(axis));
    }
    let bracket = triple_det(&Polynomial::monomial(*a), &Polynomial::monomial(*b));
    Ok(integrate_poly(&(&Polynomial::coord(axis) * &bracket)))
}

/// `∫ φ_axis ⟨J∇f, ∇h⟩ / |S²|` for arbitrary polynomials.
pub fn cr_integral(axis: usize, f: &Polynomial, h: &Polynomial) -> Rational {
    integrate_poly(&(&Polynomial::coord(axis) * &triple_det(f, h)))
}
