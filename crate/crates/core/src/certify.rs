//! Exact positive-semidefiniteness decisions.
//!
//! Inertia comes from symmetric Gaussian elimination over the rationals, so a
//! verdict never depends on a floating-point threshold. A form with no
//! negative direction gets a congruence record `P Q Pᵀ = L D Lᵀ` and an exact
//! kernel basis; a form with one gets an integer vector at which it is
//! negative. Both can be checked by multiplication alone.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{check_symmetric, SymQForm};
use crate::jacobi::jacobi_spectrum;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    #[serde(rename = "pos")]
    pub n_pos: usize,
    #[serde(rename = "neg")]
    pub n_neg: usize,
    #[serde(rename = "zero")]
    pub n_zero: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.n_pos + self.n_neg + self.n_zero
    }

    pub fn is_psd(&self) -> bool {
        self.n_neg == 0
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_pos, self.n_neg, self.n_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Pivot {
    Single(usize),
    /// Hyperbolic pair: zero diagonal, nonzero coupling.
    Pair(usize, usize),
}

/// Outcome of symmetric elimination on the original index set.
#[derive(Clone, Debug)]
struct Elimination {
    pivots: Vec<Pivot>,
    /// Diagonal value of each single pivot (the Schur complement entry).
    diag: Vec<Rational>,
    /// `lower[k][j]`: multiplier of pivot `k` applied to original row `j`.
    lower: Vec<Vec<Rational>>,
    inertia: Inertia,
}

fn largest_diagonal(a: &[Vec<Rational>], active: &[usize]) -> Option<usize> {
    let mut best: Option<(usize, Rational)> = None;
    for &i in active {
        let v = a[i][i].abs();
        if v.is_zero() {
            continue;
        }
        match &best {
            Some((_, b)) if &v <= b => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, _)| i)
}

fn first_coupling(a: &[Vec<Rational>], active: &[usize]) -> Option<(usize, usize)> {
    for (p, &i) in active.iter().enumerate() {
        for &j in &active[p + 1..] {
            if !a[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn eliminate(m: &[Vec<Rational>]) -> Elimination {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Elimination {
        pivots: Vec::new(),
        diag: Vec::new(),
        lower: Vec::new(),
        inertia: Inertia {
            n_pos: 0,
            n_neg: 0,
            n_zero: 0,
        },
    };
    while !active.is_empty() {
        if let Some(p) = largest_diagonal(&a, &active) {
            active.retain(|&i| i != p);
            let d = a[p][p].clone();
            let mut col = vec![Rational::zero(); n];
            col[p] = rational::one();
            for &i in &active {
                if !a[i][p].is_zero() {
                    col[i] = &a[i][p] / &d;
                }
            }
            for &i in &active {
                if col[i].is_zero() {
                    continue;
                }
                let ci = &col[i] * &d;
                for &j in &active {
                    if !col[j].is_zero() {
                        let delta = &ci * &col[j];
                        a[i][j] -= delta;
                    }
                }
            }
            if d.is_positive() {
                out.inertia.n_pos += 1;
            } else {
                out.inertia.n_neg += 1;
            }
            out.pivots.push(Pivot::Single(p));
            out.diag.push(d);
            out.lower.push(col);
        } else if let Some((p, q)) = first_coupling(&a, &active) {
            active.retain(|&i| i != p && i != q);
            let b = a[p][q].clone();
            let rp: Vec<Rational> = (0..n).map(|i| a[i][p].clone()).collect();
            let rq: Vec<Rational> = (0..n).map(|i| a[i][q].clone()).collect();
            for &i in &active {
                for &j in &active {
                    if (rp[i].is_zero() || rq[j].is_zero()) && (rq[i].is_zero() || rp[j].is_zero())
                    {
                        continue;
                    }
                    let delta = (&rp[i] * &rq[j] + &rq[i] * &rp[j]) / &b;
                    a[i][j] -= delta;
                }
            }
            out.inertia.n_pos += 1;
            out.inertia.n_neg += 1;
            out.pivots.push(Pivot::Pair(p, q));
        } else {
            out.inertia.n_zero += active.len();
            break;
        }
    }
    out
}

/// Exact signature `(n₊, n₋, n₀)`.
pub fn inertia(q: &SymQForm) -> Result<Inertia> {
    inertia_of(&q.matrix)
}

pub fn inertia_of(m: &[Vec<Rational>]) -> Result<Inertia> {
    check_symmetric(m)?;
    Ok(eliminate(m).inertia)
}

/// Exact basis of `{v : Qv = 0}` from the reduced row echelon form.
pub fn kernel_basis(q: &SymQForm) -> Vec<Vec<Rational>> {
    nullspace(&q.matrix)
}

pub fn nullspace(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(rows, Vec::len);
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                if !a[r][j].is_zero() {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = rational::one();
            for (k, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[k][f].clone();
            }
            v
        })
        .collect()
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

/// `P Q Pᵀ = L D Lᵀ`, `L` unit lower triangular, `D ≥ 0`.
#[derive(Clone, Debug, Serialize)]
pub struct StableCertificate {
    /// `order[k]` is the original index placed at position `k`.
    pub order: Vec<usize>,
    #[serde(serialize_with = "ser_matrix")]
    pub lower: Vec<Vec<Rational>>,
    #[serde(serialize_with = "ser_vector")]
    pub diag: Vec<Rational>,
    #[serde(serialize_with = "ser_matrix")]
    pub kernel: Vec<Vec<Rational>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// Rounded `k ·` eigenvector.
    Rounded { scale: u32 },
    /// One coordinate of the rounded vector moved by ±1.
    Neighbour { scale: u32 },
    /// Back-substituted through the elimination record.
    Exact,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "ser_ints")]
    pub vector: Vec<BigInt>,
    #[serde(with = "crate::rational::serde_text")]
    pub value: Rational,
    pub source: WitnessSource,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Stable(StableCertificate),
    Unstable(Witness),
}

fn ser_vector<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::to_text))
}

fn ser_matrix<S: serde::Serializer>(
    m: &[Vec<Rational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|r| r.iter().map(rational::to_text).collect::<Vec<_>>()),
    )
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    // plain JSON numbers while they fit, strings beyond that
    s.collect_seq(v.iter().map(|x| match x.to_i64() {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(x.to_string()),
    }))
}

impl Certificate {
    pub fn is_stable(&self) -> bool {
        matches!(self, Certificate::Stable(_))
    }

    /// Re-check against `q` with products only.
    pub fn verify(&self, q: &SymQForm) -> bool {
        match self {
            Certificate::Stable(c) => c.verify(q),
            Certificate::Unstable(w) => verify_witness(q, &w.vector)
                .map(|v| v.is_negative() && v == w.value)
                .unwrap_or(false),
        }
    }
}

impl StableCertificate {
    pub fn verify(&self, q: &SymQForm) -> bool {
        let n = q.dim();
        let mut seen = vec![false; n];
        if self.order.len() != n || self.lower.len() != n || self.diag.len() != n {
            return false;
        }
        for &i in &self.order {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        if self.diag.iter().any(Signed::is_negative) {
            return false;
        }
        for i in 0..n {
            if self.lower[i].len() != n || !self.lower[i][i].is_one() {
                return false;
            }
            if self.lower[i][i + 1..].iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
        // (L D Lᵀ)[i][j] = Σ_k L[i][k] d_k L[j][k]
        for i in 0..n {
            for j in 0..=i {
                let mut s = Rational::zero();
                for k in 0..=j {
                    if self.diag[k].is_zero()
                        || self.lower[i][k].is_zero()
                        || self.lower[j][k].is_zero()
                    {
                        continue;
                    }
                    s += &self.lower[i][k] * &self.diag[k] * &self.lower[j][k];
                }
                if s != q.matrix[self.order[i]][self.order[j]] {
                    return false;
                }
            }
        }
        let zeros = self.diag.iter().filter(|d| d.is_zero()).count();
        self.kernel.len() == zeros
            && (zeros == 0 || nullspace(&self.kernel).len() + zeros == n)
            && self
                .kernel
                .iter()
                .all(|v| v.len() == n && mat_vec(&q.matrix, v).iter().all(Zero::is_zero))
    }
}

/// `vᵀ Q v` for an integer vector.
pub fn verify_witness(q: &SymQForm, v: &[BigInt]) -> Result<Rational> {
    let r: Vec<Rational> = v.iter().cloned().map(Rational::from_integer).collect();
    q.evaluate(&r)
}

fn stable_certificate(q: &SymQForm, e: &Elimination) -> StableCertificate {
    let n = q.dim();
    let mut order: Vec<usize> = e
        .pivots
        .iter()
        .map(|p| match p {
            Pivot::Single(i) => *i,
            Pivot::Pair(..) => unreachable!("pair pivots imply a negative direction"),
        })
        .collect();
    let mut diag = e.diag.clone();
    let tail: Vec<usize> = (0..n).filter(|i| !order.contains(i)).collect();
    order.extend(&tail);
    diag.resize(n, Rational::zero());
    let mut lower = vec![vec![Rational::zero(); n]; n];
    for (k, col) in e.lower.iter().enumerate() {
        for (i, &oi) in order.iter().enumerate() {
            lower[i][k] = col[oi].clone();
        }
    }
    for k in e.lower.len()..n {
        lower[k][k] = rational::one();
    }
    StableCertificate {
        order,
        lower,
        diag,
        kernel: kernel_basis(q),
    }
}

/// Solve `M x = b` for nonsingular `M` by Gauss-Jordan elimination.
fn solve(m: Vec<Vec<Rational>>, b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    let mut a: Vec<Vec<Rational>> = m
        .into_iter()
        .zip(b)
        .map(|(mut row, x)| {
            row.push(x);
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .expect("nonsingular pivot block");
        a.swap(c, p);
        let inv = rational::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    a.into_iter()
        .map(|mut r| r.pop().expect("augmented column"))
        .collect()
}

/// A negative direction read off the elimination: a direction `d` on the
/// first negative pivot, lifted by `v_P = -Q_PP⁻¹ Q_{P,T} d` over the
/// earlier pivots `P`, so that `vᵀ Q v` equals the Schur value `dᵀ S d < 0`.
fn exact_witness(q: &SymQForm, e: &Elimination) -> Option<Vec<BigInt>> {
    let m = &q.matrix;
    let mut earlier: Vec<usize> = Vec::new();
    let mut single = 0;
    for p in &e.pivots {
        let target: Vec<(usize, Rational)> = match p {
            Pivot::Single(i) => {
                let d = &e.diag[single];
                single += 1;
                if d.is_negative() {
                    vec![(*i, rational::one())]
                } else {
                    earlier.push(*i);
                    continue;
                }
            }
            Pivot::Pair(i, j) => {
                // the pair pivot is [[0, b], [b, 0]] on (i, j): e_i - sign(b) e_j
                // is negative once the earlier pivots are lifted away
                let sign = if q_schur_sign(m, &earlier, *i, *j) {
                    -1
                } else {
                    1
                };
                vec![(*i, rational::one()), (*j, rational::int(sign))]
            }
        };
        let mut v = vec![Rational::zero(); m.len()];
        for (t, c) in &target {
            v[*t] = c.clone();
        }
        if !earlier.is_empty() {
            let block: Vec<Vec<Rational>> = earlier
                .iter()
                .map(|&r| earlier.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            let rhs: Vec<Rational> = earlier
                .iter()
                .map(|&r| -target.iter().map(|(t, c)| &m[r][*t] * c).sum::<Rational>())
                .collect();
            for (&r, x) in earlier.iter().zip(solve(block, rhs)) {
                v[r] = x;
            }
        }
        let den = rational::lcm_denominator(&v);
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
            .collect();
        return Some(ints);
    }
    None
}

/// Sign of the Schur-complement coupling between `i` and `j` after
/// eliminating `earlier`: true when positive.
fn q_schur_sign(m: &[Vec<Rational>], earlier: &[usize], i: usize, j: usize) -> bool {
    let mut s = m[i][j].clone();
    if !earlier.is_empty() {
        let block: Vec<Vec<Rational>> = earlier
            .iter()
            .map(|&r| earlier.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        let col_j: Vec<Rational> = earlier.iter().map(|&r| m[r][j].clone()).collect();
        let y = solve(block, col_j);
        for (&r, yr) in earlier.iter().zip(&y) {
            s -= &m[i][r] * yr;
        }
    }
    s.is_positive()
}

#[derive(Clone, Copy, Debug)]
pub struct WitnessOptions {
    /// Largest eigenvector scale tried.
    pub max_scale: u32,
    /// Fall back to the elimination-derived witness when rounding fails.
    pub exact_fallback: bool,
    pub jacobi_tol: f64,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            max_scale: 20,
            exact_fallback: true,
            jacobi_tol: 1e-14,
        }
    }
}

fn round_scaled(v: &[f64], k: u32) -> Vec<BigInt> {
    v.iter()
        .map(|x| BigInt::from((x * k as f64).round() as i64))
        .collect()
}

fn rounding_search(q: &SymQForm, opts: &WitnessOptions) -> Result<Option<Witness>> {
    let spec = jacobi_spectrum(&q.to_f64(), opts.jacobi_tol)?;
    let Some((_, dir)) = spec.min() else {
        return Ok(None);
    };
    let accept = |v: Vec<BigInt>, source| -> Result<Option<Witness>> {
        let value = verify_witness(q, &v)?;
        Ok(value.is_negative().then_some(Witness {
            vector: v,
            value,
            source,
        }))
    };
    for k in 1..=opts.max_scale {
        let base = round_scaled(dir, k);
        if let Some(w) = accept(base.clone(), WitnessSource::Rounded { scale: k })? {
            return Ok(Some(w));
        }
        for i in 0..base.len() {
            for step in [-1i64, 1] {
                let mut v = base.clone();
                v[i] += step;
                if let Some(w) = accept(v, WitnessSource::Neighbour { scale: k })? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Stable certificate when `Q ⪰ 0`, otherwise an exactly negative integer vector.
pub fn instability_certificate(q: &SymQForm) -> Result<Certificate> {
    instability_certificate_with(q, &WitnessOptions::default())
}

pub fn instability_certificate_with(q: &SymQForm, opts: &WitnessOptions) -> Result<Certificate> {
    q.check_symmetric()?;
    let e = eliminate(&q.matrix);
    if e.inertia.n_neg == 0 {
        return Ok(Certificate::Stable(stable_certificate(q, &e)));
    }
    if let Some(w) = rounding_search(q, opts)? {
        return Ok(Certificate::Unstable(w));
    }
    if opts.exact_fallback {
        if let Some(v) = exact_witness(q, &e) {
            let value = verify_witness(q, &v)?;
            if value.is_negative() {
                return Ok(Certificate::Unstable(Witness {
                    vector: v,
                    value,
                    source: WitnessSource::Exact,
                }));
            }
        }
    }
    Err(Error::WitnessSearchExhausted {
        max_scale: opts.max_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{long_form, short_form, short_vector, Label};
    use crate::polynomial::Polynomial;
    use crate::rational::int;

    fn form(rows: &[&[i64]]) -> SymQForm {
        let n = rows.len();
        SymQForm::new(
            (0..n)
                .map(|i| Label::Var((b'a' + i as u8) as char))
                .collect(),
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_stable_with_empty_kernel() {
        let q = form(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            inertia(&q).unwrap(),
            Inertia {
                n_pos: 2,
                n_neg: 0,
                n_zero: 0
            }
        );
        let c = instability_certificate(&q).unwrap();
        match &c {
            Certificate::Stable(s) => assert!(s.kernel.is_empty()),
            _ => panic!("expected stable"),
        }
        assert!(c.verify(&q));
    }

    #[test]
    fn hyperbolic_pair() {
        let q = form(&[&[0, 3], &[3, 0]]);
        assert_eq!(
            inertia(&q).unwrap(),
            Inertia {
                n_pos: 1,
                n_neg: 1,
                n_zero: 0
            }
        );
        let c = instability_certificate(&q).unwrap();
        assert!(!c.is_stable() && c.verify(&q));
    }

    #[test]
    fn exact_fallback_through_pair_pivot() {
        let q = form(&[&[0, 1, 2], &[1, 0, 5], &[2, 5, 0]]);
        let e = eliminate(&q.matrix);
        let v = exact_witness(&q, &e).unwrap();
        assert!(verify_witness(&q, &v).unwrap().is_negative());
        // a negative single pivot after a positive one
        let q = form(&[&[4, 2], &[2, -3]]);
        let e = eliminate(&q.matrix);
        let v = exact_witness(&q, &e).unwrap();
        assert!(verify_witness(&q, &v).unwrap().is_negative());
    }

    #[test]
    fn zero_form() {
        let q = long_form(0);
        assert_eq!(
            inertia(&q).unwrap(),
            Inertia {
                n_pos: 0,
                n_neg: 0,
                n_zero: 4
            }
        );
        assert_eq!(kernel_basis(&q).len(), 4);
    }

    #[test]
    fn psd_certificate_with_kernel() {
        let q = form(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 2]]);
        let c = instability_certificate(&q).unwrap();
        let Certificate::Stable(s) = &c else { panic!() };
        assert_eq!(s.kernel.len(), 1);
        assert!(c.verify(&q));
        let mut bad = s.clone();
        bad.diag[0] = int(5);
        assert!(!bad.verify(&q));
    }

    #[test]
    fn degree_one_short_kernel() {
        let q = short_form(1, 1).unwrap();
        assert_eq!(
            inertia(&q).unwrap(),
            Inertia {
                n_pos: 4,
                n_neg: 0,
                n_zero: 2
            }
        );
        let (p2, p3) = (Polynomial::coord(2), Polynomial::coord(3));
        for (f, h) in [(p2.clone(), p3.clone()), (p3, -&p2)] {
            let v = short_vector(&f, &h, 1).unwrap();
            assert!(mat_vec(&q.matrix, &v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn degree_one_long_nullity() {
        let q = long_form(1);
        assert_eq!(
            inertia(&q).unwrap(),
            Inertia {
                n_pos: 4,
                n_neg: 0,
                n_zero: 8
            }
        );
        let c = instability_certificate(&q).unwrap();
        assert!(c.is_stable() && c.verify(&q));
    }

    #[test]
    fn asymmetric_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(0), int(1)]];
        assert!(matches!(inertia_of(&m), Err(Error::Asymmetric { .. })));
    }
}
