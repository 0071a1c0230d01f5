//! Decomposition of homogeneous polynomials into harmonic pieces,
//! `P = H_l + r² H_{l-2} + r⁴ H_{l-4} + …`, with every `H_k` harmonic and
//! homogeneous of degree `k`. Only rational arithmetic is used.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::monomials_of_degree;
use crate::pairings::lambda_s2;
use crate::polynomial::{lap0, Polynomial};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarmonicDecomposition {
    /// `(k, H_k)` pairs, highest degree first, zero pieces omitted.
    pub components: Vec<(u32, Polynomial)>,
}

impl HarmonicDecomposition {
    /// `Σ_k r^(l-k) H_k` as an ambient polynomial of degree `l`.
    pub fn reconstruct(&self, l: u32) -> Polynomial {
        self.components
            .iter()
            .map(|(k, h)| &Polynomial::r2().pow((l - k) / 2) * h)
            .sum()
    }

    pub fn component(&self, k: u32) -> Option<&Polynomial> {
        self.components
            .iter()
            .find(|(d, _)| *d == k)
            .map(|(_, h)| h)
    }
}

/// Harmonic projection of a homogeneous degree-`l` polynomial in three
/// variables, together with the quotient `Q` in `P = H + r² Q`:
///
/// ```text
/// H = Σ_j (-1)^j r^(2j) Δ^j P / (2^j j! Π_{i=1..j} (2l+1-2i))
/// ```
fn harmonic_projection(p: &Polynomial, l: u32) -> (Polynomial, Polynomial) {
    let r2 = Polynomial::r2();
    let mut h = p.clone();
    let mut q = Polynomial::zero();
    let mut lap = p.clone();
    let mut coef = Rational::from_integer(BigInt::from(1));
    let mut r_pow = Polynomial::constant(coef.clone());
    let mut j = 1i64;
    while 2 * j <= l as i64 {
        lap = lap0(&lap);
        if lap.is_zero() {
            break;
        }
        let den = BigInt::from(-2 * j * (2 * l as i64 + 1 - 2 * j));
        coef /= Rational::from_integer(den);
        // H gains c_j r^(2j) Δ^j P and Q gains -c_j r^(2j-2) Δ^j P
        let piece = (&r_pow * &lap).scale(&coef);
        q = &q - &piece;
        h = &h + &(&r2 * &piece);
        r_pow = &r_pow * &r2;
        j += 1;
    }
    (h, q)
}

/// Peel off harmonic components degree by degree. Mixed-degree input is
/// decomposed per homogeneous piece and the components of equal degree summed.
pub fn harmonic_decompose(p: &Polynomial) -> HarmonicDecomposition {
    let mut by_degree: std::collections::BTreeMap<u32, Polynomial> = Default::default();
    for (l, part) in p.homogeneous_parts() {
        let mut rest = part;
        let mut k = l;
        loop {
            if rest.is_zero() {
                break;
            }
            let (h, q) = harmonic_projection(&rest, k);
            let slot = by_degree.entry(k).or_default();
            *slot = &*slot + &h;
            if k < 2 {
                debug_assert!(q.is_zero());
                break;
            }
            rest = q;
            k -= 2;
        }
    }
    HarmonicDecomposition {
        components: by_degree
            .into_iter()
            .rev()
            .filter(|(_, h)| !h.is_zero())
            .collect(),
    }
}

/// A polynomial representative of `Δ_{S²}(P|_{S²})`, using
/// `Δ_S (P|) = (Δ⁰P)| - l(l+1) P|` on each homogeneous degree-`l` piece.
/// The restricted Laplacian here is the analyst's (negative semidefinite) one,
/// so degree-1 functions map to `-2 φ`.
pub fn sphere_laplacian(p: &Polynomial) -> Polynomial {
    p.homogeneous_parts()
        .into_iter()
        .map(|(l, part)| &lap0(&part) - &part.scale(&lambda_s2(l)))
        .sum()
}

/// A basis of degree-`l` harmonic polynomials: the top components of the
/// degree-`l` monomials, keeping only linearly independent ones.
pub fn harmonic_basis(l: u32) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut echelon: Vec<(crate::monomial::MultiIndex, Polynomial)> = Vec::new();
    for a in monomials_of_degree(l) {
        let top = harmonic_decompose(&Polynomial::monomial(a))
            .component(l)
            .cloned()
            .unwrap_or_default();
        // reduce against the running echelon form to test independence
        let mut red = top.clone();
        for (pivot, row) in &echelon {
            let c = red.coeff(pivot);
            if !c.is_zero() {
                red = &red - &row.scale(&c);
            }
        }
        let lead = red.terms().next().map(|(a, c)| (*a, c.clone()));
        if let Some((pivot, c)) = lead {
            let row = red.scale(&(Rational::from_integer(BigInt::from(1)) / c));
            for (_, other) in echelon.iter_mut() {
                let oc = other.coeff(&pivot);
                if !oc.is_zero() {
                    *other = &*other - &row.scale(&oc);
                }
            }
            echelon.push((pivot, row));
            basis.push(top);
        }
    }
    basis
}

/// Checks `P - Σ r^(l-k) H_k` vanishes identically for a homogeneous `P`.
pub fn verify_decomposition(p: &Polynomial, d: &HarmonicDecomposition) -> Result<()> {
    let l = p
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("expected a homogeneous polynomial".into()))?;
    if (p - &d.reconstruct(l)).is_zero() && d.components.iter().all(|(_, h)| lap0(h).is_zero()) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "decomposition does not reconstruct input".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MultiIndex;
    use crate::rational::{int, rat};

    fn x(i: usize) -> Polynomial {
        Polynomial::coord(i)
    }

    #[test]
    fn already_harmonic() {
        let p = &x(1) * &x(2);
        let d = harmonic_decompose(&p);
        assert_eq!(d.components, vec![(2, p)]);
    }

    #[test]
    fn trace_split() {
        let p = x(1).pow(2);
        let d = harmonic_decompose(&p);
        let h2 = &p - &Polynomial::r2().scale(&rat(1, 3));
        assert_eq!(
            d.components,
            vec![(2, h2), (0, Polynomial::constant(rat(1, 3)))]
        );
        verify_decomposition(&p, &d).unwrap();
    }

    #[test]
    fn cubic_split() {
        let p = x(1).pow(3);
        let d = harmonic_decompose(&p);
        let h3 = &p - &(&Polynomial::r2() * &x(1)).scale(&rat(3, 5));
        assert_eq!(d.components, vec![(3, h3), (1, x(1).scale(&rat(3, 5)))]);
    }

    #[test]
    fn every_monomial_up_to_degree_seven() {
        for l in 0..=7 {
            for a in monomials_of_degree(l) {
                let p = Polynomial::monomial(a);
                verify_decomposition(&p, &harmonic_decompose(&p)).unwrap();
            }
        }
    }

    #[test]
    fn basis_dimension_is_2l_plus_1() {
        for l in 0..=6 {
            let b = harmonic_basis(l);
            assert_eq!(b.len(), 2 * l as usize + 1, "l={l}");
            assert!(b.iter().all(|h| lap0(h).is_zero()));
        }
    }

    #[test]
    fn sphere_laplacian_examples() {
        assert_eq!(sphere_laplacian(&x(1)), x(1).scale(&int(-2)));
        assert!(sphere_laplacian(&Polynomial::constant(int(7))).is_zero());
        for h in harmonic_basis(3) {
            assert_eq!(sphere_laplacian(&h), h.scale(&int(-12)));
        }
        let p = Polynomial::monomial(MultiIndex::new(2, 0, 0));
        // φ1² = (φ1² - 1/3) + 1/3 on the sphere; only the first piece moves
        let expect = &Polynomial::constant(int(2)) - &p.scale(&int(6));
        assert_eq!(sphere_laplacian(&p), expect);
    }
}
