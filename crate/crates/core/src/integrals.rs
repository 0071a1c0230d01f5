//! Exact moments of the unit sphere `S^m`.
//!
//! Values are normalised by the total area: `integrate_monomial(a)` is
//! `∫ φ^a dM / |S^m|`. For a homogeneous `P` of degree `l` the identity
//! `∫ P = ∫ Δ⁰P / (l(l+m-1))` gives the recursion
//!
//! ```text
//! ∫ φ^a = Σ_i a_i (a_i - 1) / (l (l + m - 1)) ∫ φ^(a - 2ε_i)
//! ```
//!
//! terminating at `∫ φ^0 = 1`. Any odd exponent makes the integral vanish,
//! which is checked before recursing.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// Unit in which an integral is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Units {
    /// Fraction of the total area `|S^m|`.
    Area,
    /// Multiples of `∫ φ_1² dM = |S^m| / (m+1)`.
    Phi2,
}

impl Units {
    pub fn convert(self, value_in_area: &Rational, m: usize) -> Rational {
        match self {
            Units::Area => value_in_area.clone(),
            Units::Phi2 => value_in_area * rational::int(m as i64 + 1),
        }
    }
}

/// `∫ φ_i² / |S^m| = 1/(m+1)`.
pub fn phi2_over_area(m: usize) -> Rational {
    rational::rat(1, m as i64 + 1)
}

/// Memo table of normalised moments keyed by sphere dimension and the
/// sorted exponent vector (the moments are symmetric under permutation).
/// Entries are written once and never mutated.
#[derive(Default)]
pub struct IntegralCache {
    map: RwLock<HashMap<(usize, Vec<u32>), Rational>>,
}

impl IntegralCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache shared by the `integrate_*` helpers.
    pub fn global() -> &'static IntegralCache {
        static CACHE: OnceLock<IntegralCache> = OnceLock::new();
        CACHE.get_or_init(IntegralCache::new)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("integral cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Normalised moment `∫_{S^m} x^e / |S^m|`, where `m = e.len() - 1`.
    pub fn moment(&self, exps: &[u32]) -> Rational {
        assert!(exps.len() >= 2, "need at least two coordinates");
        if exps.iter().any(|e| e % 2 == 1) {
            return Rational::zero();
        }
        let mut key: Vec<u32> = exps.to_vec();
        key.sort_unstable();
        let m = exps.len() - 1;
        self.moment_sorted(m, key)
    }

    fn moment_sorted(&self, m: usize, key: Vec<u32>) -> Rational {
        let l: u32 = key.iter().sum();
        if l == 0 {
            return rational::one();
        }
        if let Some(v) = self
            .map
            .read()
            .expect("integral cache poisoned")
            .get(&(m, key.clone()))
        {
            return v.clone();
        }
        let lambda = BigInt::from(l) * BigInt::from(l as usize + m - 1);
        let mut acc = Rational::zero();
        for i in 0..key.len() {
            let ai = key[i];
            if ai < 2 {
                continue;
            }
            let mut sub = key.clone();
            sub[i] -= 2;
            sub.sort_unstable();
            let w = Rational::new(BigInt::from(ai) * BigInt::from(ai - 1), lambda.clone());
            acc += w * self.moment_sorted(m, sub);
        }
        // Racing writers compute the same value; first insert wins.
        self.map
            .write()
            .expect("integral cache poisoned")
            .entry((m, key))
            .or_insert(acc)
            .clone()
    }
}

/// `∫_{S^m} φ^a dM / |S^m|` for a three-coordinate index (so `m` must be 2).
/// Use [`integrate_exponents`] for other sphere dimensions.
pub fn integrate_monomial(a: &MultiIndex, m: usize) -> Result<Rational> {
    if m != 2 {
        return Err(Error::InvalidArgument(format!(
            "a three-coordinate multi-index lives on S^2, not S^{m}"
        )));
    }
    Ok(IntegralCache::global().moment(&a.0))
}

/// Normalised moment on `S^m` with `m = exps.len() - 1`.
pub fn integrate_exponents(exps: &[u32]) -> Rational {
    IntegralCache::global().moment(exps)
}

/// Shorthand for the S² moment.
pub fn sphere_moment(a: &MultiIndex) -> Rational {
    IntegralCache::global().moment(&a.0)
}

/// `∫_{S²} P dM / |S²|`, term by term.
pub fn integrate_poly(p: &Polynomial) -> Rational {
    let mut s = Rational::zero();
    for (a, c) in p.terms() {
        let v = sphere_moment(a);
        if !v.is_zero() {
            s += c * v;
        }
    }
    s
}

fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Closed form `Π_i (a_i - 1)!! / (|a| + 1)!!` on S², zero for any odd exponent.
/// Independent of the recursion; used to cross-check it.
pub fn factorial_oracle(a: &MultiIndex) -> Rational {
    if !a.parity().all_even() {
        return Rational::zero();
    }
    let num = a.0.iter().fold(BigInt::from(1), |acc, &e| {
        acc * double_factorial(e as i64 - 1)
    });
    Rational::new(num, double_factorial(a.degree() as i64 + 1))
}
