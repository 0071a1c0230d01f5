//! The ten-variable quadratic `F` attached to the degree-3 block containing
//! `A⁴_(0,0,3)`, its Hessian, the variable table tying it to long-form
//! coefficients, and the candidate instability vectors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{CoeffVector, Label, SymQForm};
use crate::monomial::MultiIndex;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

pub const VARIABLES: [char; 10] = ['a', 'b', 'c', 'x', 'y', 'z', 'w', 'u', 'v', 'g'];

/// Long-form coefficient behind each variable of `F`.
pub const VARIABLE_MAP: [(u8, [u32; 3]); 10] = [
    (4, [0, 0, 3]),
    (5, [0, 3, 0]),
    (6, [3, 0, 0]),
    (4, [2, 0, 1]),
    (4, [0, 2, 1]),
    (5, [0, 1, 2]),
    (5, [2, 1, 0]),
    (6, [1, 2, 0]),
    (6, [1, 0, 2]),
    (7, [1, 1, 1]),
];

/// The integer test vector `[a, b, c, x, y, z, w, u, v, g]` at which `F = -138`.
pub const TEST_VECTOR: [i64; 10] = [3, -4, -1, 3, 4, -4, -3, -1, -2, 1];

/// Printed eigenvalues of `Hess F`, in the order they were listed.
#[allow(clippy::excessive_precision)]
pub const PRINTED_EIGENVALUES: [f64; 10] = [
    193.95260118883090,
    111.22289635621148,
    123.94135950568288,
    -3.6844648605223074,
    64.826325872315152,
    39.493408799262383,
    5.8125282188336085,
    26.731868670430774,
    34.522364101735334,
    15.181112147219768,
];

fn var(c: char) -> usize {
    VARIABLES
        .iter()
        .position(|&v| v == c)
        .expect("known variable")
}

/// Monomials of `F` as `(i, j, coefficient)`; `i == j` marks a square.
pub fn f_terms() -> Vec<(usize, usize, i64)> {
    let mut t = Vec::new();
    let mut push = |c: i64, p: char, q: char| t.push((var(p), var(q), c));
    for v in ['a', 'b', 'c'] {
        push(54, v, v);
    }
    for v in ['x', 'y', 'z', 'w', 'u', 'v'] {
        push(22, v, v);
    }
    push(12, 'g', 'g');
    push(36, 'a', 'b');
    push(-36, 'a', 'c');
    push(-36, 'b', 'c');
    push(36, 'y', 'b');
    push(36, 'a', 'z');
    push(-36, 'x', 'c');
    push(-36, 'w', 'c');
    push(-36, 'b', 'u');
    push(12, 'x', 'b');
    push(12, 'x', 'w');
    push(-12, 'y', 'c');
    push(-12, 'a', 'u');
    push(12, 'x', 'v');
    push(-12, 'y', 'u');
    push(-12, 'z', 'c');
    push(-12, 'b', 'v');
    push(12, 'w', 'u');
    push(-12, 'c', 'u');
    push(-12, 'c', 'v');
    push(-12, 'b', 'w');
    push(-12, 'b', 'z');
    push(-12, 'a', 'x');
    push(-12, 'a', 'y');
    // -8 g (u - v + w - x + y - z)
    push(-8, 'g', 'u');
    push(8, 'g', 'v');
    push(-8, 'g', 'w');
    push(8, 'g', 'x');
    push(-8, 'g', 'y');
    push(8, 'g', 'z');
    push(4, 'y', 'w');
    push(4, 'x', 'z');
    push(-4, 'x', 'u');
    push(-4, 'y', 'v');
    push(-4, 'z', 'u');
    push(-4, 'w', 'v');
    push(-4, 'x', 'y');
    push(-4, 'w', 'z');
    push(-4, 'u', 'v');
    t
}

pub fn f_eval(v: &[i64; 10]) -> i64 {
    f_terms().iter().map(|&(i, j, c)| c * v[i] * v[j]).sum()
}

/// Constant Hessian of `F`.
pub fn f_hessian() -> [[i64; 10]; 10] {
    let mut h = [[0i64; 10]; 10];
    for (i, j, c) in f_terms() {
        if i == j {
            h[i][i] += 2 * c;
        } else {
            h[i][j] += c;
            h[j][i] += c;
        }
    }
    h
}

/// `F` as a symmetric form (`Hess F / 2`), so that `evaluate(v) = F(v)`.
pub fn f_polynomial() -> SymQForm {
    let h = f_hessian();
    SymQForm {
        basis: VARIABLES.iter().map(|&c| Label::Var(c)).collect(),
        matrix: h
            .iter()
            .map(|r| r.iter().map(|&x| rational::rat(x, 2)).collect())
            .collect(),
    }
}

/// `Hess F` as a labelled form.
pub fn f_hessian_form() -> SymQForm {
    f_polynomial().scale(&rational::int(2))
}

pub fn variable_labels() -> Vec<Label> {
    VARIABLE_MAP
        .iter()
        .map(|&(alpha, e)| Label::coeff(alpha, MultiIndex(e)))
        .collect()
}

/// A `[a, …, g]` vector placed into the degree-3 long-form coefficient space.
pub fn embed_variables(vals: &[i64; 10]) -> CoeffVector {
    let mut out = CoeffVector::zero(3);
    for (&(alpha, e), &x) in VARIABLE_MAP.iter().zip(vals) {
        if x != 0 {
            out.coeffs.insert((alpha, MultiIndex(e)), rational::int(x));
        }
    }
    out
}

fn mono(c: i64, e: [u32; 3]) -> Polynomial {
    Polynomial::term(MultiIndex(e), rational::int(c))
}

/// The degree-3 4-tuple stated as the counterexample:
/// `f4 = 3φ3³ + 4φ1²φ3 + 4φ2²φ3`, `f5 = -4φ2³ - 4φ2φ3² - 3φ1²φ2`,
/// `f6 = -φ1³ - φ1φ2² - 2φ1φ3²`, `f7 = φ1φ2φ3`.
///
/// Its `x = A⁴_(2,0,1)` coefficient is 4, whereas [`TEST_VECTOR`] uses 3.
pub fn stated_functions() -> [Polynomial; 4] {
    [
        mono(3, [0, 0, 3]) + mono(4, [2, 0, 1]) + mono(4, [0, 2, 1]),
        mono(-4, [0, 3, 0]) + mono(-4, [0, 1, 2]) + mono(-3, [2, 1, 0]),
        mono(-1, [3, 0, 0]) + mono(-1, [1, 2, 0]) + mono(-2, [1, 0, 2]),
        mono(1, [1, 1, 1]),
    ]
}

/// The stated functions rewritten in the variables `[a, …, g]`.
pub fn stated_vector() -> [i64; 10] {
    let fs = stated_functions();
    let mut out = [0i64; 10];
    for (k, &(alpha, e)) in VARIABLE_MAP.iter().enumerate() {
        let c: Rational = fs[alpha as usize - 4].coeff(&MultiIndex(e));
        out[k] = c
            .to_integer()
            .try_into()
            .expect("small integer coefficient");
    }
    out
}

/// Entrywise comparison of a long-form block against `(s/2) Hess F`.
#[derive(Clone, Debug)]
pub struct BlockComparison {
    /// `s` fixed by the `(a, a)` entry: `block[a][a] = (s/2) Hess F[a][a]`.
    pub scale: Rational,
    /// Entries `(p, q, F-units block value, Hess F / 2 value)` that disagree,
    /// upper triangle only.
    pub mismatches: Vec<(char, char, Rational, Rational)>,
}

impl BlockComparison {
    pub fn proportional(&self) -> bool {
        self.scale > Rational::zero() && self.mismatches.is_empty()
    }
}

/// Restrict `q` (a degree-3 long form) to the variables of `F`, in `F` order.
pub fn variable_block(q: &SymQForm) -> Result<SymQForm> {
    let idx = variable_labels()
        .iter()
        .map(|l| {
            q.index_of(l)
                .ok_or_else(|| Error::InvalidArgument(format!("form has no coefficient {l}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(q.principal(&idx))
}

pub fn compare_block(block: &SymQForm) -> Result<BlockComparison> {
    if block.dim() != 10 {
        return Err(Error::Dimension {
            expected: 10,
            got: block.dim(),
        });
    }
    let h = f_hessian();
    let half = rational::rat(1, 2);
    let scale = &block.matrix[0][0] / (rational::int(h[0][0]) * &half);
    let mut mismatches = Vec::new();
    if !scale.is_zero() {
        for i in 0..10 {
            for j in i..10 {
                let in_f_units = &block.matrix[i][j] / &scale;
                let want = rational::int(h[i][j]) * &half;
                if in_f_units != want {
                    mismatches.push((VARIABLES[i], VARIABLES[j], in_f_units, want));
                }
            }
        }
    }
    Ok(BlockComparison { scale, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_value() {
        assert_eq!(f_eval(&TEST_VECTOR), -138);
        assert_eq!(f_eval(&[0; 10]), 0);
        let mut e = [0; 10];
        e[0] = 1;
        assert_eq!(f_eval(&e), 54);
    }

    #[test]
    fn hessian_trace_and_symmetry() {
        let h = f_hessian();
        let tr: i64 = (0..10).map(|i| h[i][i]).sum();
        assert_eq!(tr, 612);
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(h[i][j], h[j][i]);
            }
        }
        let sum: f64 = PRINTED_EIGENVALUES.iter().sum();
        assert!((sum - 612.0).abs() < 0.02, "{sum}");
    }

    #[test]
    fn form_matches_polynomial() {
        let q = f_polynomial();
        assert_eq!(q.evaluate_ints(&TEST_VECTOR).unwrap(), rational::int(-138));
    }

    #[test]
    fn stated_functions_differ_in_x() {
        assert_eq!(stated_vector(), [3, -4, -1, 4, 4, -4, -3, -1, -2, 1]);
    }

    #[test]
    fn degree_three_block_against_hessian() {
        let block = variable_block(&crate::forms::long_form(3)).unwrap();
        let cmp = compare_block(&block).unwrap();
        assert_eq!(cmp.scale, rational::rat(1, 105));
        let mut got: Vec<(char, char, i64)> = cmp
            .mismatches
            .iter()
            .map(|(p, q, b, f)| (*p, *q, (b - f).to_integer().try_into().unwrap()))
            .collect();
        got.sort();
        // cross terms present in the block but absent from F, as (Hess/2) entries
        assert_eq!(
            got,
            vec![
                ('a', 'v', -18),
                ('a', 'w', 6),
                ('y', 'z', -6),
                ('z', 'v', -6)
            ]
        );
    }
}
