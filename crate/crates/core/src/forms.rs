//! Long and short Cauchy-Riemann stability forms on monomial coefficient
//! spaces.
//!
//! A 4-tuple `f_α = Σ_{|a|=l} A^α_a φ^a`, `α ∈ {4,5,6,7}`, satisfies the long
//! inequality iff `Aᵀ Q A ≥ 0` with
//!
//! ```text
//! Q = blockdiag(G, G, G, G) - sym(L)
//! L(A) = Σ_{ab} 4 [ T¹_ab (A⁴_a A⁵_b + A⁶_a A⁷_b)
//!                 + T²_ab (A⁴_a A⁶_b - A⁵_a A⁷_b)
//!                 - T³_ab (A⁴_a A⁷_b + A⁵_a A⁶_b) ]
//! ```
//!
//! where `G` is the Dirichlet Gram matrix and `Tⁱ` the CR tensors. Rows and
//! columns follow the global basis order: `α` ascending, graded lex within.

use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, MultiIndex};
use crate::pairings::{cr_integral, cr_pair, dirichlet_integral, dirichlet_pair};
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// One row of the calibration table: the pair `(α, β)` couples through
/// `φ_axis` with the given sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CalibrationEntry {
    pub alpha: u8,
    pub beta: u8,
    pub axis: usize,
    pub sign: i8,
}

/// Coupling pattern of the associative calibration on R⁷ restricted to the
/// normal directions 4..7 of an associative 3-plane.
pub const CALIBRATION_TABLE: [CalibrationEntry; 6] = [
    CalibrationEntry {
        alpha: 4,
        beta: 5,
        axis: 1,
        sign: 1,
    },
    CalibrationEntry {
        alpha: 6,
        beta: 7,
        axis: 1,
        sign: 1,
    },
    CalibrationEntry {
        alpha: 4,
        beta: 6,
        axis: 2,
        sign: 1,
    },
    CalibrationEntry {
        alpha: 5,
        beta: 7,
        axis: 2,
        sign: -1,
    },
    CalibrationEntry {
        alpha: 4,
        beta: 7,
        axis: 3,
        sign: -1,
    },
    CalibrationEntry {
        alpha: 5,
        beta: 6,
        axis: 3,
        sign: -1,
    },
];

pub const ALPHAS: [u8; 4] = [4, 5, 6, 7];

/// Which function a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Func {
    Alpha(u8),
    F,
    H,
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Func::Alpha(a) => write!(f, "{a}"),
            Func::F => write!(f, "f"),
            Func::H => write!(f, "h"),
        }
    }
}

/// Row/column label of a quadratic form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Coeff { func: Func, mono: MultiIndex },
    Var(char),
}

impl Label {
    pub fn coeff(alpha: u8, mono: MultiIndex) -> Label {
        Label::Coeff {
            func: Func::Alpha(alpha),
            mono,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Coeff { func, mono } => write!(f, "A{func}{mono}"),
            Label::Var(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        match self {
            Label::Coeff { func, mono } => {
                m.serialize_entry("func", &func.to_string())?;
                m.serialize_entry("exponents", &mono.0)?;
            }
            Label::Var(c) => m.serialize_entry("var", &c.to_string())?,
        }
        m.end()
    }
}

/// Labelled symmetric rational matrix, values in units of `|S²|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymQForm {
    pub basis: Vec<Label>,
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Serialize)]
struct FormRecord<'a> {
    basis: &'a [Label],
    entries: Vec<(usize, usize, String)>,
}

impl SymQForm {
    pub fn zeros(basis: Vec<Label>) -> Self {
        let n = basis.len();
        SymQForm {
            basis,
            matrix: vec![vec![Rational::zero(); n]; n],
        }
    }

    /// Build from a matrix, rejecting asymmetric input.
    pub fn new(basis: Vec<Label>, matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = basis.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                got: matrix.len(),
            });
        }
        let q = SymQForm { basis, matrix };
        q.check_symmetric()?;
        Ok(q)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn check_symmetric(&self) -> Result<()> {
        check_symmetric(&self.matrix)
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.basis.iter().position(|l| l == label)
    }

    /// `vᵀ Q v`.
    pub fn evaluate(&self, v: &[Rational]) -> Result<Rational> {
        if v.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(quadratic_value(&self.matrix, v))
    }

    pub fn evaluate_ints(&self, v: &[i64]) -> Result<Rational> {
        let q: Vec<Rational> = v.iter().map(|&x| rational::int(x)).collect();
        self.evaluate(&q)
    }

    pub fn principal(&self, idx: &[usize]) -> SymQForm {
        SymQForm {
            basis: idx.iter().map(|&i| self.basis[i].clone()).collect(),
            matrix: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.matrix[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymQForm {
        SymQForm {
            basis: self.basis.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.matrix
            .iter()
            .map(|r| r.iter().map(rational::to_f64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    /// JSON document `{basis: [...], entries: [[row, col, "p/q"], ...]}`
    /// holding the nonzero upper triangle.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let x = &self.matrix[i][j];
                if !x.is_zero() {
                    entries.push((i, j, rational::to_text(x)));
                }
            }
        }
        serde_json::to_value(FormRecord {
            basis: &self.basis,
            entries,
        })
        .expect("form serialises")
    }

    /// Dense CSV with a header row of labels and exact `p/q` cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label");
        for l in &self.basis {
            out.push(',');
            out.push_str(&l.to_string());
        }
        out.push('\n');
        for (l, row) in self.basis.iter().zip(&self.matrix) {
            out.push_str(&l.to_string());
            for x in row {
                out.push(',');
                out.push_str(&rational::to_text(x));
            }
            out.push('\n');
        }
        out
    }
}

pub fn check_symmetric(m: &[Vec<Rational>]) -> Result<()> {
    let n = m.len();
    for i in 0..n {
        if m[i].len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: m[i].len(),
            });
        }
        for j in (i + 1)..n {
            if m[i][j] != m[j][i] {
                return Err(Error::Asymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

pub fn quadratic_value(m: &[Vec<Rational>], v: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, row) in m.iter().enumerate() {
        if v[i].is_zero() {
            continue;
        }
        let mut s = Rational::zero();
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() && !v[j].is_zero() {
                s += x * &v[j];
            }
        }
        acc += &v[i] * s;
    }
    acc
}

/// Dirichlet Gram matrix `G[a][b] = ∫⟨∇φ^a, ∇φ^b⟩` on degree-`l` monomials.
pub fn gram_matrix(l: u32) -> SymQForm {
    let ms = monomials_of_degree(l);
    let basis = ms
        .iter()
        .map(|&mono| Label::Coeff {
            func: Func::F,
            mono,
        })
        .collect();
    let matrix = ms
        .iter()
        .map(|a| {
            ms.iter()
                .map(|b| dirichlet_pair(a, b).expect("equal degrees"))
                .collect()
        })
        .collect();
    SymQForm { basis, matrix }
}

/// Antisymmetric CR tensor `Tⁱ[a][b] = ∫ φ_i ⟨J∇φ^a, ∇φ^b⟩` on degree-`l` monomials.
pub fn cr_tensor(axis: usize, l: u32) -> Result<Vec<Vec<Rational>>> {
    if !(1..=3).contains(&axis) {
        return Err(Error::BadAxis(axis));
    }
    let ms = monomials_of_degree(l);
    Ok(ms
        .iter()
        .map(|a| {
            ms.iter()
                .map(|b| cr_pair(axis, a, b).expect("valid axis and degrees"))
                .collect()
        })
        .collect())
}

fn long_basis(l: u32) -> Vec<Label> {
    let ms = monomials_of_degree(l);
    ALPHAS
        .iter()
        .flat_map(|&alpha| ms.iter().map(move |&m| Label::coeff(alpha, m)))
        .collect()
}

/// Subtract the symmetric part of a bilinear coupling block:
/// `Q[r0+i][c0+j] -= t_ij / 2` and the transposed entry likewise.
fn subtract_sym(
    q: &mut [Vec<Rational>],
    r0: usize,
    c0: usize,
    t: &[Vec<Rational>],
    weight: &Rational,
) {
    let half = weight / rational::int(2);
    for (i, row) in t.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let d = x * &half;
            q[r0 + i][c0 + j] -= &d;
            q[c0 + j][r0 + i] -= d;
        }
    }
}

/// The long stability form on degree-`l` 4-tuples (dimension `4 N(l)`).
pub fn long_form(l: u32) -> SymQForm {
    let n = monomials_of_degree(l).len();
    let g = gram_matrix(l).matrix;
    let mut q = SymQForm::zeros(long_basis(l));
    for k in 0..4 {
        for i in 0..n {
            for j in 0..n {
                q.matrix[k * n + i][k * n + j] = g[i][j].clone();
            }
        }
    }
    let tensors: Vec<_> = (1..=3)
        .map(|axis| cr_tensor(axis, l).expect("axis in range"))
        .collect();
    for e in CALIBRATION_TABLE {
        let r0 = (e.alpha as usize - 4) * n;
        let c0 = (e.beta as usize - 4) * n;
        let w = rational::int(4 * e.sign as i64);
        subtract_sym(&mut q.matrix, r0, c0, &tensors[e.axis - 1], &w);
    }
    q
}

/// The short form for axis `i` on pairs `(f, h)` of degree-`l` functions:
/// `blockdiag(G, G) - sym(4 Tⁱ)` coupling `f` to `h`.
pub fn short_form(axis: usize, l: u32) -> Result<SymQForm> {
    let t = cr_tensor(axis, l)?;
    let ms = monomials_of_degree(l);
    let n = ms.len();
    let basis = [Func::F, Func::H]
        .iter()
        .flat_map(|&func| ms.iter().map(move |&mono| Label::Coeff { func, mono }))
        .collect();
    let g = gram_matrix(l).matrix;
    let mut q = SymQForm::zeros(basis);
    for k in 0..2 {
        for i in 0..n {
            for j in 0..n {
                q.matrix[k * n + i][k * n + j] = g[i][j].clone();
            }
        }
    }
    subtract_sym(&mut q.matrix, 0, n, &t, &rational::int(4));
    Ok(q)
}

/// Coefficients `A^α_a` of a 4-tuple of degree-`l` functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffVector {
    pub degree: u32,
    pub coeffs: BTreeMap<(u8, MultiIndex), Rational>,
}

impl CoeffVector {
    pub fn zero(degree: u32) -> Self {
        CoeffVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        4 * monomials_of_degree(self.degree).len()
    }

    pub fn get(&self, alpha: u8, a: &MultiIndex) -> Rational {
        self.coeffs
            .get(&(alpha, *a))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Dense vector in the long-form basis order.
    pub fn to_vector(&self) -> Vec<Rational> {
        long_basis(self.degree)
            .iter()
            .map(|l| match l {
                Label::Coeff {
                    func: Func::Alpha(alpha),
                    mono,
                } => self.get(*alpha, mono),
                _ => unreachable!("long basis holds alpha coefficients only"),
            })
            .collect()
    }

    pub fn from_vector(degree: u32, v: &[Rational]) -> Result<Self> {
        let basis = long_basis(degree);
        if v.len() != basis.len() {
            return Err(Error::Dimension {
                expected: basis.len(),
                got: v.len(),
            });
        }
        let mut out = CoeffVector::zero(degree);
        for (l, x) in basis.iter().zip(v) {
            if let Label::Coeff {
                func: Func::Alpha(alpha),
                mono,
            } = l
            {
                if !x.is_zero() {
                    out.coeffs.insert((*alpha, *mono), x.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn functions(&self) -> [Polynomial; 4] {
        ALPHAS.map(|alpha| {
            Polynomial::from_terms(
                self.coeffs
                    .iter()
                    .filter(|((b, _), _)| *b == alpha)
                    .map(|((_, a), c)| (*a, c.clone())),
            )
        })
    }
}

/// Coefficient extraction for `(f4, f5, f6, f7)`, each homogeneous of degree `l`.
pub fn embed_functions(fs: &[Polynomial; 4], l: u32) -> Result<CoeffVector> {
    let mut out = CoeffVector::zero(l);
    for (alpha, f) in ALPHAS.iter().zip(fs) {
        if !f.is_homogeneous_of(l) {
            return Err(Error::NotHomogeneous {
                func: *alpha,
                degree: l,
            });
        }
        for (a, c) in f.terms() {
            out.coeffs.insert((*alpha, *a), c.clone());
        }
    }
    Ok(out)
}

/// The CR side of the long inequality evaluated directly on functions:
/// `Σ_table 4 s ∫ φ_axis ⟨J∇f_α, ∇f_β⟩`.
pub fn long_cr_side(fs: &[Polynomial; 4]) -> Rational {
    let mut acc = Rational::zero();
    for e in CALIBRATION_TABLE {
        let f = &fs[e.alpha as usize - 4];
        let h = &fs[e.beta as usize - 4];
        if f.is_zero() || h.is_zero() {
            continue;
        }
        acc += rational::int(4 * e.sign as i64) * cr_integral(e.axis, f, h);
    }
    acc
}

/// `Σ ‖∇f_α‖² - (CR side)`, computed from the functions without any matrix.
/// Works for polynomials of any (mixed) degree.
pub fn long_functional(fs: &[Polynomial; 4]) -> Rational {
    let energy: Rational = fs.iter().map(|f| dirichlet_integral(f, f)).sum();
    energy - long_cr_side(fs)
}

/// `‖∇f‖² + ‖∇h‖² - 4 ∫ φ_axis ⟨J∇f, ∇h⟩`, computed directly.
pub fn short_functional(axis: usize, f: &Polynomial, h: &Polynomial) -> Rational {
    dirichlet_integral(f, f) + dirichlet_integral(h, h) - rational::int(4) * cr_integral(axis, f, h)
}

/// Concatenated coefficients of `(f, h)` in the short-form basis.
pub fn short_vector(f: &Polynomial, h: &Polynomial, l: u32) -> Result<Vec<Rational>> {
    for (p, tag) in [(f, 0u8), (h, 1u8)] {
        if !p.is_homogeneous_of(l) {
            return Err(Error::NotHomogeneous {
                func: tag,
                degree: l,
            });
        }
    }
    let ms = monomials_of_degree(l);
    Ok(ms
        .iter()
        .map(|a| f.coeff(a))
        .chain(ms.iter().map(|a| h.coeff(a)))
        .collect())
}

/// Largest absolute entry; handy for relative tolerances.
pub fn max_abs(q: &SymQForm) -> Rational {
    q.matrix
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}
