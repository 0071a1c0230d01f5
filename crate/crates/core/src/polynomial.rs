//! Sparse polynomials in `(x1, x2, x3)` with exact rational coefficients.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::monomial::MultiIndex;
use crate::rational::{self, int, Rational};

/// A polynomial stored as a map from multi-index to nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<MultiIndex, Rational>,
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponents: [u32; 3],
    #[serde(with = "crate::rational::serde_text")]
    coeff: Rational,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(a, c)| TermRecord {
                exponents: a.0,
                coeff: c.clone(),
            })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut p = Polynomial::zero();
        for r in records {
            p.add_term(MultiIndex(r.exponents), r.coeff);
        }
        Ok(p)
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(MultiIndex::ZERO, c)
    }

    pub fn term(a: MultiIndex, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(a, c);
        p
    }

    pub fn monomial(a: MultiIndex) -> Self {
        Polynomial::term(a, rational::one())
    }

    /// The coordinate function `x_i`, `i` in 1..=3.
    pub fn coord(i: usize) -> Self {
        Polynomial::monomial(MultiIndex::unit(i))
    }

    /// `r² = x1² + x2² + x3²`.
    pub fn r2() -> Self {
        (1..=3).map(|i| Polynomial::coord(i).pow(2)).sum()
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, Rational)>>(it: I) -> Self {
        let mut p = Polynomial::zero();
        for (a, c) in it {
            p.add_term(a, c);
        }
        p
    }

    pub fn add_term(&mut self, a: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &MultiIndex) -> Rational {
        self.terms.get(a).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// `Some(l)` when every term has degree `l`. The zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(MultiIndex::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, l: u32) -> bool {
        self.terms.keys().all(|a| a.degree() == l)
    }

    /// Split into homogeneous pieces keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (a, c) in &self.terms {
            out.entry(a.degree()).or_default().add_term(*a, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(a, x)| (*a, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::constant(rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to `x_i`, `i` zero-based.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            if a.0[i] == 0 {
                continue;
            }
            let mut e = a.0;
            e[i] -= 1;
            out.add_term(MultiIndex(e), c * int(a.0[i] as i64));
        }
        out
    }

    /// Euler operator `Σ x_i ∂_i`, which multiplies each degree-`k` term by `k`.
    pub fn euler(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.degree() > 0)
                .map(|(a, c)| (*a, c * int(a.degree() as i64)))
                .collect(),
        }
    }

    pub fn eval_f64(&self, x: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(a, c)| {
                rational::to_f64(c)
                    * x[0].powi(a.0[0] as i32)
                    * x[1].powi(a.0[1] as i32)
                    * x[2].powi(a.0[2] as i32)
            })
            .sum()
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let mut s = Rational::zero();
        for (a, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                for _ in 0..a.0[i] {
                    t *= &x[i];
                }
            }
            s += t;
        }
        s
    }
}

/// Ambient gradient `∇⁰P`.
pub fn grad0(p: &Polynomial) -> [Polynomial; 3] {
    [p.partial(0), p.partial(1), p.partial(2)]
}

/// Ambient Laplacian `Δ⁰P = Σ ∂²P/∂x_i²`.
pub fn lap0(p: &Polynomial) -> Polynomial {
    (0..3).map(|i| p.partial(i).partial(i)).sum()
}

/// `det(x, ∇⁰f, ∇⁰h)`, the polynomial whose restriction to S² is `⟨J∇f, ∇h⟩`.
///
/// Oriented so that `triple_det(x1, x2) = x3` and cyclically.
pub fn triple_det(f: &Polynomial, h: &Polynomial) -> Polynomial {
    let gf = grad0(f);
    let gh = grad0(h);
    let mut out = Polynomial::zero();
    for i in 0..3 {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        // (∇f × ∇h)_i = ∂_j f ∂_k h - ∂_k f ∂_j h
        let cross = &(&gf[j] * &gh[k]) - &(&gf[k] * &gh[j]);
        out = &out + &(&Polynomial::coord(i + 1) * &cross);
    }
    out
}

/// Restricted gradient pairing `⟨∇f, ∇h⟩` on S² as an ambient polynomial:
/// `∇⁰f·∇⁰h - (x·∇⁰f)(x·∇⁰h)`.
pub fn sphere_gradient_dot(f: &Polynomial, h: &Polynomial) -> Polynomial {
    let gf = grad0(f);
    let gh = grad0(h);
    let flat: Polynomial = (0..3).map(|i| &gf[i] * &gh[i]).sum();
    &flat - &(&f.euler() * &h.euler())
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(*a, c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(*a, -c.clone());
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.add(b), c * d);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (a, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = (0..3)
                .filter(|&i| a.0[i] > 0)
                .map(|i| match a.0[i] {
                    1 => format!("x{}", i + 1),
                    e => format!("x{}^{}", i + 1, e),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == rational::one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
