//! Run reports for the reproduction suite and the degree 4/5 extension.
//!
//! A report echoes its command and inputs, lists pass/fail items with exact
//! values as `p/q` text, and keeps wall-clock timings in a separate map so the
//! rest of the document is byte-identical across runs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

use crate::blocks::split;
use crate::bounds::rayleigh_bound;
use crate::certify::{inertia, instability_certificate, Certificate, Inertia};
use crate::counterexample::{
    compare_block, embed_variables, f_eval, f_hessian_form, stated_functions, stated_vector,
    variable_block, PRINTED_EIGENVALUES, TEST_VECTOR, VARIABLES,
};
use crate::error::{Error, Result};
use crate::forms::{embed_functions, long_form, short_form, short_vector, SymQForm};
use crate::integrals::{factorial_oracle, integrate_monomial, integrate_poly};
use crate::jacobi::{jacobi_spectrum, matrix_norm, sign_pattern};
use crate::monomial::{monomials_of_degree, MultiIndex};
use crate::pairings::{cr_pair, cr_pair_oracle, dirichlet_pair, dirichlet_pair_pointwise};
use crate::polynomial::{triple_det, Polynomial};
use crate::rational::{self, int, rat, Rational};

/// Schema version of report and fixture documents.
pub const REPORT_VERSION: u32 = 1;

/// Relative threshold below which a Jacobi eigenvalue counts as zero.
pub const ZERO_EIGENVALUE_REL: f64 = 1e-8;

pub const JACOBI_TOL: f64 = 1e-14;

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub group: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub version: String,
    pub command: Vec<String>,
    pub inputs: Value,
    pub items: Vec<Item>,
    pub verdicts: BTreeMap<String, String>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl RunReport {
    fn new(command: Vec<String>, inputs: Value) -> Self {
        RunReport {
            version: format!("{}/{}", env!("CARGO_PKG_VERSION"), REPORT_VERSION),
            command,
            inputs,
            items: Vec::new(),
            verdicts: BTreeMap::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failed(&self) -> Vec<&Item> {
        self.items.iter().filter(|i| !i.passed).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// JSON with the timing map emptied, for byte comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        r.timings_ms.clear();
        r.to_json()
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let width = self
            .items
            .iter()
            .map(|i| i.group.len() + i.name.len() + 1)
            .max()
            .unwrap_or(0);
        for i in &self.items {
            let label = format!("{}/{}", i.group, i.name);
            out.push_str(&format!(
                "{:<4}  {:<width$}  {}\n",
                if i.passed { "PASS" } else { "FAIL" },
                label,
                i.detail,
            ));
        }
        for (k, v) in &self.verdicts {
            out.push_str(&format!("verdict {k}: {v}\n"));
        }
        let failed = self.failed();
        out.push_str(&format!(
            "{} items, {} passed, {} failed\n",
            self.items.len(),
            self.items.len() - failed.len(),
            failed.len()
        ));
        out
    }

    fn push(
        &mut self,
        group: &str,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
        data: Value,
    ) {
        self.items.push(Item {
            group: group.into(),
            name: name.into(),
            passed,
            detail: detail.into(),
            data,
        });
    }
}

/// Floats as 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..=15).contains(&exp) {
        format!("{:.*}", (16 - exp).max(0) as usize, x)
    } else {
        format!("{x:.16e}")
    }
}

fn text(q: &Rational) -> String {
    rational::to_text(q)
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, key: &str, f: impl FnOnce() -> T) -> T {
    let t = Instant::now();
    let out = f();
    timings.insert(key.to_string(), t.elapsed().as_secs_f64() * 1e3);
    out
}

/// Groups of the reproduction suite, in run order.
pub const REPRODUCE_GROUPS: [&str; 10] = [
    "integrals",
    "oracles",
    "structure",
    "short-form",
    "long-form",
    "F",
    "spectrum",
    "block",
    "candidates",
    "bounds",
];

pub fn tagged_integrals() -> Vec<(MultiIndex, Rational)> {
    [
        ([2, 0, 0], rat(1, 3)),
        ([1, 2, 2], int(0)),
        ([2, 2, 0], rat(1, 15)),
        ([4, 0, 0], rat(1, 5)),
        ([6, 0, 0], rat(1, 7)),
        ([4, 2, 0], rat(1, 35)),
        ([2, 2, 2], rat(1, 105)),
    ]
    .into_iter()
    .map(|(e, v)| (MultiIndex(e), v))
    .collect()
}

fn run_integrals(r: &mut RunReport) {
    for (a, want) in tagged_integrals() {
        let got = integrate_monomial(&a, 2).expect("m = 2");
        r.push(
            "integrals",
            format!("phi^{a}"),
            got == want,
            format!("{} (expected {})", text(&got), text(&want)),
            json!({"exponents": a.0, "value": text(&got)}),
        );
    }
    let p = Polynomial::term(MultiIndex::new(0, 0, 3), int(3));
    let got = integrate_poly(&p);
    r.push(
        "integrals",
        "3*x3^3",
        got.is_zero(),
        format!("{} (expected 0)", text(&got)),
        json!({"value": text(&got)}),
    );
}

fn even_indices(max_degree: u32) -> impl Iterator<Item = MultiIndex> {
    (0..=max_degree)
        .step_by(2)
        .flat_map(monomials_of_degree)
        .filter(|a| a.parity().all_even())
}

fn run_oracles(r: &mut RunReport) {
    let mut bad = 0;
    let mut n = 0;
    for a in even_indices(16) {
        n += 1;
        if integrate_monomial(&a, 2).expect("m = 2") != factorial_oracle(&a) {
            bad += 1;
        }
    }
    r.push(
        "oracles",
        "moment-vs-double-factorial",
        bad == 0,
        format!("{n} even indices up to degree 16, {bad} mismatches"),
        Value::Null,
    );

    let (mut n, mut bad) = (0, 0);
    for l in 0..=6 {
        let ms = monomials_of_degree(l);
        for a in &ms {
            for b in &ms {
                n += 1;
                if dirichlet_pair(a, b).ok() != dirichlet_pair_pointwise(a, b).ok() {
                    bad += 1;
                }
            }
        }
    }
    r.push(
        "oracles",
        "dirichlet-dual-forms",
        bad == 0,
        format!("{n} pairs up to degree 6, {bad} mismatches"),
        Value::Null,
    );

    let (mut n, mut bad) = (0, 0);
    for l in 0..=5 {
        let ms = monomials_of_degree(l);
        for axis in 1..=3 {
            for a in &ms {
                for b in &ms {
                    n += 1;
                    if cr_pair(axis, a, b).ok() != cr_pair_oracle(axis, a, b).ok() {
                        bad += 1;
                    }
                }
            }
        }
    }
    r.push(
        "oracles",
        "cr-closed-form-vs-determinant",
        bad == 0,
        format!("{n} (axis, pair) cases up to degree 5, {bad} mismatches"),
        Value::Null,
    );
}

fn run_structure(r: &mut RunReport) {
    let d = triple_det(&Polynomial::coord(1), &Polynomial::coord(2));
    r.push(
        "structure",
        "bracket(x1,x2)",
        d == Polynomial::coord(3),
        format!("{d}"),
        Value::Null,
    );
    let v = cr_pair(3, &MultiIndex::unit(1), &MultiIndex::unit(2)).expect("valid");
    r.push(
        "structure",
        "cr(3,e1,e2)",
        v == rat(1, 3),
        text(&v),
        Value::Null,
    );
}

fn run_short_form(r: &mut RunReport) {
    let mut worst = Vec::new();
    for axis in 1..=3 {
        for l in 0..=6 {
            let i = inertia(&short_form(axis, l).expect("axis in range")).expect("symmetric");
            if i.n_neg != 0 {
                worst.push(format!("axis {axis} degree {l}: {i}"));
            }
        }
    }
    r.push(
        "short-form",
        "short-forms-psd",
        worst.is_empty(),
        if worst.is_empty() {
            "n_neg = 0 for axes 1..3, degrees 0..6".to_string()
        } else {
            worst.join("; ")
        },
        Value::Null,
    );
    let q = short_form(1, 1).expect("axis 1");
    let i = inertia(&q).expect("symmetric");
    let (p2, p3) = (Polynomial::coord(2), Polynomial::coord(3));
    let family = [(p2.clone(), p3.clone()), (p3, -&p2)];
    let in_kernel = family.iter().all(|(f, h)| {
        let v = short_vector(f, h, 1).expect("degree 1");
        q.matrix.iter().all(|row| {
            row.iter()
                .zip(&v)
                .map(|(a, b)| a * b)
                .sum::<Rational>()
                .is_zero()
        })
    });
    r.push(
        "short-form",
        "degree-1-kernel",
        i.n_zero == 2 && in_kernel,
        format!("inertia {i}; (x2, x3) and (x3, -x2) in kernel: {in_kernel}"),
        json!({"inertia": i}),
    );
}

fn run_long_forms(r: &mut RunReport) {
    for l in 0..=3 {
        let q = long_form(l);
        let i = inertia(&q).expect("symmetric");
        let (ok, expect) = match l {
            0 => (q.is_zero(), "zero form"),
            1 => (i.n_neg == 0 && i.n_zero == 8, "PSD, nullity 8"),
            2 => (i.n_neg == 0 && i.n_zero >= 4, "PSD, nullity >= 4"),
            _ => (i.n_neg >= 1, "a negative direction"),
        };
        r.push(
            "long-form",
            format!("degree-{l}"),
            ok,
            format!("dim {}, inertia {i}; expected {expect}", q.dim()),
            json!({"degree": l, "dim": q.dim(), "inertia": i}),
        );
        r.verdicts.insert(
            format!("long-form degree {l}"),
            if i.is_psd() {
                "stable".into()
            } else {
                "unstable".into()
            },
        );
    }
}

fn run_f(r: &mut RunReport) {
    let v = f_eval(&TEST_VECTOR);
    r.push(
        "F",
        "F(test-vector)",
        v == -138,
        format!("F{TEST_VECTOR:?} = {v}"),
        json!({"value": v}),
    );
}

fn run_spectrum(r: &mut RunReport) -> Result<()> {
    let h = f_hessian_form();
    let i = inertia(&h)?;
    r.push(
        "spectrum",
        "hessian-inertia",
        i == Inertia {
            n_pos: 9,
            n_neg: 1,
            n_zero: 0,
        },
        format!("{i}"),
        json!({"inertia": i}),
    );
    let spec = jacobi_spectrum(&h.to_f64(), JACOBI_TOL)?;
    let mut printed = PRINTED_EIGENVALUES.to_vec();
    printed.sort_by(|a, b| b.total_cmp(a));
    let worst = spec
        .values
        .iter()
        .zip(&printed)
        .map(|(a, b)| (a - b).abs() / b.abs())
        .fold(0.0, f64::max);
    r.push(
        "spectrum",
        "hessian-eigenvalues",
        worst <= 1e-6,
        format!(
            "min {}, max {}, worst relative deviation {:.3e}",
            fmt_f64(spec.values[9]),
            fmt_f64(spec.values[0]),
            worst
        ),
        json!({"eigenvalues": spec.values}),
    );
    let tr: Rational = (0..10).map(|k| h.matrix[k][k].clone()).sum();
    r.push(
        "spectrum",
        "hessian-trace",
        tr == int(612),
        text(&tr),
        Value::Null,
    );
    Ok(())
}

fn run_block(r: &mut RunReport, q3: &SymQForm) -> Result<()> {
    let block = variable_block(q3)?;
    let cmp = compare_block(&block)?;
    let listed: Vec<String> = cmp
        .mismatches
        .iter()
        .map(|(p, q, b, f)| format!("{p}{q}: block {} vs F {}", text(b), text(f)))
        .collect();
    r.push(
        "block",
        "block-proportional-to-hessian",
        cmp.proportional(),
        format!(
            "scale s = {}; {} of 55 upper entries differ{}{}",
            text(&cmp.scale),
            cmp.mismatches.len(),
            if listed.is_empty() { "" } else { ": " },
            listed.join(", ")
        ),
        json!({"scale": text(&cmp.scale), "mismatches": listed}),
    );
    let value = q3.evaluate(&embed_variables(&TEST_VECTOR).to_vector())?;
    r.push(
        "block",
        "long-form-at-test-vector",
        value.is_negative(),
        format!("{} (= {} x s)", text(&value), text(&(&value / &cmp.scale))),
        json!({"value": text(&value)}),
    );
    Ok(())
}

fn run_candidates(r: &mut RunReport, q3: &SymQForm) -> Result<()> {
    let stated = embed_functions(&stated_functions(), 3)?;
    let stated_value = q3.evaluate(&stated.to_vector())?;
    let vector_value = q3.evaluate(&embed_variables(&TEST_VECTOR).to_vector())?;
    let sv = stated_vector();
    let diffs: Vec<String> = VARIABLES
        .iter()
        .zip(sv.iter().zip(TEST_VECTOR.iter()))
        .filter(|(_, (a, b))| a != b)
        .map(|(c, (a, b))| format!("{c}: functions {a}, test vector {b}"))
        .collect();
    let verdict = |v: &Rational| {
        if v.is_negative() {
            "violates"
        } else {
            "satisfies"
        }
    };
    r.push(
        "candidates",
        "stated-functions",
        true,
        format!(
            "{} -> {} the long inequality",
            text(&stated_value),
            verdict(&stated_value)
        ),
        json!({"vector": sv, "value": text(&stated_value), "F": f_eval(&sv)}),
    );
    r.push(
        "candidates",
        "test-vector",
        true,
        format!(
            "{} -> {} the long inequality",
            text(&vector_value),
            verdict(&vector_value)
        ),
        json!({"vector": TEST_VECTOR, "value": text(&vector_value), "F": f_eval(&TEST_VECTOR)}),
    );
    r.push(
        "candidates",
        "coefficient-discrepancy",
        true,
        diffs.join("; "),
        json!(diffs),
    );
    let any = stated_value.is_negative() || vector_value.is_negative();
    r.push(
        "candidates",
        "some-candidate-unstable",
        any,
        if any {
            "instability certified"
        } else {
            "neither candidate is negative"
        },
        Value::Null,
    );
    Ok(())
}

fn run_bounds(r: &mut RunReport) -> Result<()> {
    let mut flags = Vec::new();
    for l in 1..=6 {
        flags.push(rayleigh_bound(l, l, 2, 5, &int(1))?.sufficient);
    }
    let ok = flags[..5].iter().all(|f| !f) && flags[5];
    r.push(
        "bounds",
        "sufficiency-m2-n5",
        ok,
        format!(
            "l(l+1) >= 36 holds for l = {:?}",
            (1..=6).filter(|&l| flags[l - 1]).collect::<Vec<_>>()
        ),
        Value::Null,
    );
    Ok(())
}

/// The reproduction suite, or a single group of it.
pub fn cmd_reproduce(only: Option<&str>) -> Result<RunReport> {
    if let Some(g) = only {
        if !REPRODUCE_GROUPS.contains(&g) {
            return Err(Error::InvalidArgument(format!(
                "unknown group {g:?}; expected one of {}",
                REPRODUCE_GROUPS.join(", ")
            )));
        }
    }
    let mut command = vec!["reproduce".to_string()];
    if let Some(g) = only {
        command.extend(["--only".to_string(), g.to_string()]);
    }
    let mut r = RunReport::new(command, json!({"only": only}));
    let want = |g: &str| only.is_none_or(|o| o == g);
    let mut timings = BTreeMap::new();
    let needs_q3 = want("block") || want("candidates");
    let q3 = if needs_q3 {
        Some(timed(&mut timings, "assemble-degree-3", || long_form(3)))
    } else {
        None
    };
    for g in REPRODUCE_GROUPS {
        if !want(g) {
            continue;
        }
        let t = Instant::now();
        match g {
            "integrals" => run_integrals(&mut r),
            "oracles" => run_oracles(&mut r),
            "structure" => run_structure(&mut r),
            "short-form" => run_short_form(&mut r),
            "long-form" => run_long_forms(&mut r),
            "F" => run_f(&mut r),
            "spectrum" => run_spectrum(&mut r)?,
            "block" => run_block(&mut r, q3.as_ref().expect("assembled"))?,
            "candidates" => run_candidates(&mut r, q3.as_ref().expect("assembled"))?,
            "bounds" => run_bounds(&mut r)?,
            _ => unreachable!(),
        }
        timings.insert(g.to_string(), t.elapsed().as_secs_f64() * 1e3);
    }
    r.timings_ms = timings;
    r.verdicts.insert(
        "suite".into(),
        if r.all_passed() {
            "all items passed".into()
        } else {
            format!("{} item(s) failed", r.failed().len())
        },
    );
    Ok(r)
}

/// Exact part of an extension run, stored as a regression fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendFixture {
    pub version: u32,
    pub degree: u32,
    pub dim: usize,
    pub inertia: [usize; 3],
    pub blocks: Vec<BlockFixture>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockFixture {
    pub labels: Vec<String>,
    pub inertia: [usize; 3],
    pub verdict: String,
    /// Integer witness and its exact value, when unstable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Vec<String>, String)>,
}

fn triple(i: &Inertia) -> [usize; 3] {
    [i.n_pos, i.n_neg, i.n_zero]
}

/// Certify every block of the degree-`l` long form.
pub fn cmd_extend(l: u32) -> Result<(RunReport, ExtendFixture)> {
    if l > 6 {
        return Err(Error::InvalidArgument(format!(
            "degree {l} is outside the supported range 0..=6"
        )));
    }
    let mut r = RunReport::new(vec!["extend".into(), l.to_string()], json!({"degree": l}));
    let mut timings = BTreeMap::new();
    let q = timed(&mut timings, "assemble", || long_form(l));
    let total = timed(&mut timings, "inertia", || inertia(&q))?;
    let mut blocks = Vec::new();
    let t = Instant::now();
    for (k, (idx, sub)) in split(&q).into_iter().enumerate() {
        let bi = inertia(&sub)?;
        let cert = instability_certificate(&sub)?;
        let verified = cert.verify(&sub);
        let spec = jacobi_spectrum(&sub.to_f64(), JACOBI_TOL)?;
        let pattern = sign_pattern(&spec, matrix_norm(&sub.to_f64()), ZERO_EIGENVALUE_REL);
        let consistent = pattern == (bi.n_pos, bi.n_neg, bi.n_zero);
        let labels: Vec<String> = idx.iter().map(|&i| q.basis[i].to_string()).collect();
        let witness = match &cert {
            Certificate::Unstable(w) => Some((
                w.vector.iter().map(BigInt::to_string).collect(),
                text(&w.value),
            )),
            Certificate::Stable(_) => None,
        };
        let verdict = if cert.is_stable() {
            "stable"
        } else {
            "unstable"
        };
        r.push(
            "extend",
            format!("block-{k}"),
            verified && consistent,
            format!(
                "size {}, inertia {bi}, {verdict}, certificate verified: {verified}, min eigenvalue {}",
                idx.len(),
                fmt_f64(*spec.values.last().unwrap_or(&0.0))
            ),
            json!({"labels": labels, "inertia": bi, "eigenvalues": spec.values, "certificate": cert}),
        );
        blocks.push(BlockFixture {
            labels,
            inertia: triple(&bi),
            verdict: verdict.into(),
            witness,
        });
    }
    timings.insert("blocks".into(), t.elapsed().as_secs_f64() * 1e3);
    r.timings_ms = timings;
    r.verdicts.insert(
        format!("long-form degree {l}"),
        if total.is_psd() {
            "stable".into()
        } else {
            "unstable".into()
        },
    );
    let fixture = ExtendFixture {
        version: REPORT_VERSION,
        degree: l,
        dim: q.dim(),
        inertia: triple(&total),
        blocks,
    };
    Ok((r, fixture))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[allow(clippy::excessive_precision)]
    #[test]
    fn float_format_has_17_digits() {
        assert_eq!(fmt_f64(193.95260118883090), "193.95260118883090");
        assert_eq!(fmt_f64(-3.6844648605223074), "-3.6844648605223074");
        assert_eq!(fmt_f64(0.0), "0");
    }

    #[test]
    fn only_f() {
        let r = cmd_reproduce(Some("F")).unwrap();
        assert_eq!(r.items.len(), 1);
        assert!(r.all_passed());
        assert!(cmd_reproduce(Some("nope")).is_err());
    }

    #[test]
    fn only_integrals() {
        let r = cmd_reproduce(Some("integrals")).unwrap();
        assert_eq!(r.items.len(), 8);
        assert!(r.all_passed());
    }

    #[test]
    fn extend_degree_two() {
        let (r, f) = cmd_extend(2).unwrap();
        assert_eq!(f.dim, 24);
        assert_eq!(f.inertia, [20, 0, 4]);
        assert!(r.all_passed());
    }
}
