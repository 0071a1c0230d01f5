//! Rayleigh-quotient sufficiency bounds for the long inequality on a unit
//! sphere `S^m` in `R^(m+n)`. Quantities involving square roots are decided
//! by exact comparisons of squares.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub l: u32,
    pub s: u32,
    pub m: u32,
    pub n: u32,
    #[serde(with = "crate::rational::serde_text")]
    pub theta: Rational,
    #[serde(with = "crate::rational::serde_text")]
    pub lambda_l: Rational,
    #[serde(with = "crate::rational::serde_text")]
    pub lambda_s: Rational,
    /// `m²(n-2)²`, compared against `λ_l = l(l+m-1)`.
    #[serde(with = "crate::rational::serde_text")]
    pub threshold: Rational,
    /// `l(l+m-1) ≥ m²(n-2)²`: the long inequality holds on `E⁺_{λ_l}`.
    pub sufficient: bool,
    /// Square of the single-degree coefficient `m(n-2)Θ/√λ_l`.
    #[serde(with = "crate::rational::serde_text")]
    pub single_coefficient_sq: Rational,
    pub single_coefficient: f64,
    /// Two-degree coefficient `mΘ(1/√λ_l + 1/√λ_s)`.
    pub pair_coefficient: f64,
    /// Exact decision of `mΘ(1/√λ_l + 1/√λ_s) ≤ 1`.
    pub pair_coefficient_at_most_one: bool,
    /// `n = 2`, or `Θ ≤ 1/(√m (n-2))`: stability for every degree.
    pub stable_by_theta: bool,
}

/// Decide `c (1/√a + 1/√b) ≤ 1` exactly for `a, b > 0`, `c ≥ 0`.
fn inverse_root_sum_at_most(c: &Rational, a: &Rational, b: &Rational) -> bool {
    if !c.is_positive() {
        return true;
    }
    let k = rational::one() / c;
    let rest = &k * &k - rational::one() / a - rational::one() / b;
    if rest.is_negative() {
        return false;
    }
    // 2/√(ab) ≤ rest  ⟺  4/(ab) ≤ rest²
    int(4) / (a * b) <= &rest * &rest
}

pub fn rayleigh_bound(l: u32, s: u32, m: u32, n: u32, theta: &Rational) -> Result<BoundReport> {
    if l == 0 || s == 0 {
        return Err(Error::InvalidArgument(
            "degrees l and s must be at least 1".into(),
        ));
    }
    if n < 2 || m < 1 {
        return Err(Error::InvalidArgument(format!(
            "need m >= 1 and n >= 2, got m={m}, n={n}"
        )));
    }
    let lam = |k: u32| int(k as i64 * (k as i64 + m as i64 - 1));
    let (lambda_l, lambda_s) = (lam(l), lam(s));
    let codim = int(n as i64 - 2);
    let mm = int(m as i64);
    let threshold = &mm * &mm * &codim * &codim;
    let sufficient = lambda_l >= threshold;

    let single_sq = &mm * &mm * &codim * &codim * theta * theta / &lambda_l;
    let single = rational::to_f64(&(&mm * &codim * theta)) / rational::to_f64(&lambda_l).sqrt();

    let c = &mm * theta;
    let pair = rational::to_f64(&c)
        * (1.0 / rational::to_f64(&lambda_l).sqrt() + 1.0 / rational::to_f64(&lambda_s).sqrt());
    let pair_ok = inverse_root_sum_at_most(&c, &lambda_l, &lambda_s);

    let stable_by_theta = n == 2 || {
        let t = theta.abs();
        &t * &t * &mm * &codim * &codim <= rational::one()
    };

    Ok(BoundReport {
        l,
        s,
        m,
        n,
        theta: theta.clone(),
        lambda_l,
        lambda_s,
        threshold,
        sufficient,
        single_coefficient_sq: single_sq,
        single_coefficient: single,
        pair_coefficient: pair,
        pair_coefficient_at_most_one: pair_ok,
        stable_by_theta,
    })
}

/// Smallest `l` with `l(l+m-1) ≥ m²(n-2)²`.
pub fn first_sufficient_degree(m: u32, n: u32) -> u32 {
    let target = (m as u64 * (n as u64).saturating_sub(2)).pow(2);
    (0u32..)
        .find(|&l| l as u64 * (l as u64 + m as u64 - 1) >= target)
        .expect("unbounded search terminates")
}
