//! Multi-indices `a = (a1, a2, a3)` of monomials `φ^a` in the ambient
//! coordinates of R³, together with their parity signatures and the global
//! graded-lexicographic order that fixes every matrix layout in the crate.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in three variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub [u32; 3]);

/// Per-coordinate even/odd signature; `true` marks an even exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parity(pub [bool; 3]);

impl Parity {
    pub const EEE: Parity = Parity([true, true, true]);
    pub const EOO: Parity = Parity([true, false, false]);
    pub const OEO: Parity = Parity([false, true, false]);
    pub const OOE: Parity = Parity([false, false, true]);

    /// The signature selected by the CR pairing against `φ_axis` (axis in 1..=3).
    pub fn for_axis(axis: usize) -> Parity {
        match axis {
            1 => Parity::EOO,
            2 => Parity::OEO,
            3 => Parity::OOE,
            _ => panic!("axis out of range: {axis}"),
        }
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|&e| e)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |e: bool| if e { 'E' } else { 'O' };
        write!(f, "({},{},{})", c(self.0[0]), c(self.0[1]), c(self.0[2]))
    }
}

impl MultiIndex {
    pub const ZERO: MultiIndex = MultiIndex([0, 0, 0]);

    pub fn new(a1: u32, a2: u32, a3: u32) -> Self {
        MultiIndex([a1, a2, a3])
    }

    /// Unit index `ε_i` for `i` in 1..=3.
    pub fn unit(i: usize) -> Self {
        let mut e = [0; 3];
        e[i - 1] = 1;
        MultiIndex(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parity(&self) -> Parity {
        Parity([
            self.0[0].is_multiple_of(2),
            self.0[1].is_multiple_of(2),
            self.0[2].is_multiple_of(2),
        ])
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `a - k ε_i` with `i` zero-based; invalid when `a_i < k`.
    pub fn sub_unit(&self, i: usize, k: u32) -> Result<MultiIndex> {
        if self.0[i] < k {
            return Err(Error::NegativeExponent {
                index: self.to_string(),
                axis: i + 1,
                amount: k,
            });
        }
        let mut e = self.0;
        e[i] -= k;
        Ok(MultiIndex(e))
    }

    /// `a + shift` for a signed shift; `None` when some exponent would go negative.
    pub fn shifted(&self, shift: [i64; 3]) -> Option<MultiIndex> {
        let mut e = [0u32; 3];
        for i in 0..3 {
            let v = self.0[i] as i64 + shift[i];
            if v < 0 {
                return None;
            }
            e[i] = v as u32;
        }
        Some(MultiIndex(e))
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Graded lexicographic: lower degree first; within a degree, the
/// lexicographically larger exponent vector comes first, so degree 1 is
/// ordered `φ1, φ2, φ3`.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All multi-indices of total degree `l`, in global order.
pub fn monomials_of_degree(l: u32) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(monomial_count(l));
    for a1 in (0..=l).rev() {
        for a2 in (0..=l - a1).rev() {
            out.push(MultiIndex([a1, a2, l - a1 - a2]));
        }
    }
    out
}

/// `N(l) = (l+1)(l+2)/2`, the number of degree-`l` monomials in three variables.
pub fn monomial_count(l: u32) -> usize {
    let l = l as usize;
    (l + 1) * (l + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        assert_eq!(MultiIndex::new(2, 1, 1).parity().to_string(), "(E,O,O)");
        assert_eq!(MultiIndex::ZERO.parity(), Parity::EEE);
        assert_eq!(MultiIndex::new(1, 2, 3).parity().to_string(), "(O,E,O)");
    }

    #[test]
    fn subtraction_requires_room() {
        let a = MultiIndex::new(1, 2, 0);
        assert_eq!(a.sub_unit(1, 2).unwrap(), MultiIndex::new(1, 0, 0));
        assert!(matches!(
            a.sub_unit(0, 2),
            Err(Error::NegativeExponent { axis: 1, .. })
        ));
        assert!(a.shifted([0, 0, -1]).is_none());
    }

    #[test]
    fn degree_three_order() {
        let m = monomials_of_degree(3);
        assert_eq!(m.len(), 10);
        assert_eq!(m[0], MultiIndex::new(3, 0, 0));
        assert_eq!(m[1], MultiIndex::new(2, 1, 0));
        assert_eq!(m[9], MultiIndex::new(0, 0, 3));
        let mut sorted = m.clone();
        sorted.sort();
        assert_eq!(sorted, m);
        assert!(MultiIndex::new(0, 0, 1) < MultiIndex::new(2, 0, 0));
    }

    #[test]
    fn counts() {
        for l in 0..8 {
            assert_eq!(monomials_of_degree(l).len(), monomial_count(l));
        }
        assert_eq!(4 * monomial_count(5), 84);
    }
}
