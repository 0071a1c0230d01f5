//! Command-line front end. Exit codes: 0 stable or all items passed,
//! 1 some reproduction item failed, 10 certified unstable, 2 error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;

use crate::blocks::split;
use crate::bounds::{first_sufficient_degree, rayleigh_bound};
use crate::certify::{inertia, instability_certificate_with, Certificate, WitnessOptions};
use crate::error::{Error, Result};
use crate::forms::{long_form, short_form, SymQForm};
use crate::integrals::{factorial_oracle, integrate_exponents, Units};
use crate::jacobi::jacobi_spectrum;
use crate::monomial::MultiIndex;
use crate::pairings::{cr_pair, cr_pair_oracle, dirichlet_pair, dirichlet_pair_pointwise};
use crate::polynomial::Polynomial;
use crate::quadrature::quad_integrate;
use crate::rational::{self, Rational};
use crate::report::{cmd_extend, cmd_reproduce, fmt_f64, ExtendFixture, JACOBI_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_ITEMS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 10;

#[derive(Parser, Debug)]
#[command(
    name = "cr-sphere",
    version,
    about = "Exact certification of Cauchy-Riemann stability inequalities on S²"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact sphere moment of a monomial, in units of the total area.
    Integrate {
        /// Exponents, one per ambient coordinate.
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<u32>,
        /// Sphere dimension; defaults to (number of exponents - 1).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = UnitArg::Area)]
        units: UnitArg,
        /// Also integrate by product quadrature (S² only).
        #[arg(long)]
        oracle: bool,
    },
    /// Monomial pairings.
    #[command(subcommand)]
    Pairing(PairingCmd),
    /// Assemble a stability form.
    Form {
        #[arg(value_enum)]
        kind: FormKind,
        #[arg(long)]
        degree: u32,
        /// Axis for the short form.
        #[arg(long)]
        axis: Option<usize>,
        /// Write to a .json or .csv file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Floating-point spectrum by Jacobi rotations.
    Spectrum {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = JACOBI_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Exact inertia with a stability certificate or an integer witness.
    Certify {
        #[command(flatten)]
        target: Target,
        /// Largest eigenvector scale tried when rounding to integers.
        #[arg(long, default_value_t = 20)]
        max_scale: u32,
        #[arg(long)]
        json: bool,
    },
    /// Rayleigh-quotient sufficiency bounds.
    Bounds {
        #[arg(long, default_value_t = 6)]
        l: u32,
        /// Second degree for the two-degree coefficient; defaults to l.
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 5)]
        n: u32,
        /// Rational bound on the calibration tensor, e.g. 1 or 1/2.
        #[arg(long, default_value = "1")]
        theta: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the reproduction suite.
    Reproduce {
        /// Run one group only.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Certify every block of a higher-degree long form.
    Extend {
        degree: u32,
        #[arg(long)]
        json: bool,
        /// Write the exact results as a fixture file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare the exact results with a stored fixture.
        #[arg(long)]
        check: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PairingCmd {
    /// Dirichlet pairing of two monomials, e.g. `grad 2,0,0 0,2,0`.
    Grad {
        a: String,
        b: String,
        #[arg(long)]
        oracle: bool,
    },
    /// CR pairing on an axis, e.g. `cr 3 1,0,0 0,1,0`.
    Cr {
        axis: usize,
        a: String,
        b: String,
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Args, Debug)]
pub struct Target {
    #[arg(long)]
    pub degree: u32,
    /// Use the short form on this axis instead of the long form.
    #[arg(long)]
    pub short: Option<usize>,
}

impl Target {
    fn build(&self) -> Result<SymQForm> {
        match self.short {
            Some(axis) => short_form(axis, self.degree),
            None => Ok(long_form(self.degree)),
        }
    }

    fn describe(&self) -> String {
        match self.short {
            Some(axis) => format!("short form, axis {axis}, degree {}", self.degree),
            None => format!("long form, degree {}", self.degree),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum UnitArg {
    Area,
    Phi2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormKind {
    Long,
    Short,
}

fn parse_index(s: &str) -> Result<MultiIndex> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))
        })
        .collect::<Result<_>>()?;
    match parts[..] {
        [a, b, c] => Ok(MultiIndex::new(a, b, c)),
        _ => Err(Error::Parse(format!(
            "expected three exponents like 2,0,0, got {s:?}"
        ))),
    }
}

fn t(q: &Rational) -> String {
    rational::to_text(q)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn integrate(exponents: &[u32], m: Option<usize>, units: UnitArg, oracle: bool) -> Result<i32> {
    let m = m.unwrap_or(exponents.len() - 1);
    if exponents.len() != m + 1 {
        return Err(Error::InvalidArgument(format!(
            "S^{m} needs {} exponents, got {}",
            m + 1,
            exponents.len()
        )));
    }
    let v = integrate_exponents(exponents);
    let shown = match units {
        UnitArg::Area => Units::Area,
        UnitArg::Phi2 => Units::Phi2,
    }
    .convert(&v, m);
    println!("{}", t(&shown));
    if oracle {
        if m != 2 {
            return Err(Error::InvalidArgument(
                "the quadrature oracle covers S² only".into(),
            ));
        }
        let a = MultiIndex::new(exponents[0], exponents[1], exponents[2]);
        let exact = rational::to_f64(&v) * 4.0 * std::f64::consts::PI;
        let q = quad_integrate(&Polynomial::monomial(a), 16, 32);
        println!("exact x 4pi   {}", fmt_f64(exact));
        println!("quadrature    {}", fmt_f64(q));
        println!("difference    {:.3e}", q - exact);
        if a.parity().all_even() {
            println!("closed form   {}", t(&factorial_oracle(&a)));
        }
    }
    Ok(EXIT_OK)
}

fn pairing(cmd: &PairingCmd) -> Result<i32> {
    let (value, other) = match cmd {
        PairingCmd::Grad { a, b, oracle } => {
            let (a, b) = (parse_index(a)?, parse_index(b)?);
            let v = dirichlet_pair(&a, &b)?;
            (
                v,
                oracle
                    .then(|| dirichlet_pair_pointwise(&a, &b))
                    .transpose()?,
            )
        }
        PairingCmd::Cr { axis, a, b, oracle } => {
            let (a, b) = (parse_index(a)?, parse_index(b)?);
            let v = cr_pair(*axis, &a, &b)?;
            (
                v,
                oracle.then(|| cr_pair_oracle(*axis, &a, &b)).transpose()?,
            )
        }
    };
    println!("{}", t(&value));
    if let Some(o) = other {
        println!(
            "oracle {} ({})",
            t(&o),
            if o == value { "agrees" } else { "DISAGREES" }
        );
        if o != value {
            return Ok(EXIT_FAILED_ITEMS);
        }
    }
    Ok(EXIT_OK)
}

fn form(kind: FormKind, degree: u32, axis: Option<usize>, out: Option<&PathBuf>) -> Result<i32> {
    let q = match (kind, axis) {
        (FormKind::Long, None) => long_form(degree),
        (FormKind::Short, Some(a)) => short_form(a, degree)?,
        (FormKind::Short, None) => {
            return Err(Error::InvalidArgument("short form needs --axis".into()))
        }
        (FormKind::Long, Some(_)) => {
            return Err(Error::InvalidArgument(
                "--axis applies to the short form only".into(),
            ))
        }
    };
    match out {
        Some(path) => {
            let body = match path.extension().and_then(|e| e.to_str()) {
                Some("csv") => q.to_csv(),
                Some("json") => serde_json::to_string_pretty(&q.to_json()).expect("json"),
                _ => {
                    return Err(Error::InvalidArgument(
                        "--out must end in .json or .csv".into(),
                    ))
                }
            };
            std::fs::write(path, body)?;
            println!("wrote {}x{} form to {}", q.dim(), q.dim(), path.display());
        }
        None => print_json(&q.to_json()),
    }
    Ok(EXIT_OK)
}

fn spectrum(target: &Target, tol: f64, as_json: bool) -> Result<i32> {
    let q = target.build()?;
    let s = jacobi_spectrum(&q.to_f64(), tol)?;
    if as_json {
        print_json(
            &json!({"target": target.describe(), "dim": q.dim(), "sweeps": s.sweeps, "eigenvalues": s.values}),
        );
    } else {
        println!(
            "{} ({}x{}, {} sweeps)",
            target.describe(),
            q.dim(),
            q.dim(),
            s.sweeps
        );
        for v in &s.values {
            println!("{}", fmt_f64(*v));
        }
    }
    Ok(EXIT_OK)
}

fn certify(target: &Target, max_scale: u32, as_json: bool) -> Result<i32> {
    let q = target.build()?;
    let i = inertia(&q)?;
    let opts = WitnessOptions {
        max_scale,
        ..WitnessOptions::default()
    };
    let cert = instability_certificate_with(&q, &opts)?;
    let verdict = if cert.is_stable() {
        "stable"
    } else {
        "unstable"
    };
    let blocks: Vec<_> = split(&q)
        .into_iter()
        .map(|(idx, sub)| {
            inertia(&sub).map(|bi| json!({"first": q.basis[idx[0]].to_string(), "size": idx.len(), "inertia": bi}))
        })
        .collect::<Result<_>>()?;
    if as_json {
        print_json(&json!({
            "target": target.describe(),
            "verdict": verdict,
            "inertia": i,
            "witness": cert,
            "blocks": blocks,
        }));
    } else {
        println!("{}: {verdict}", target.describe());
        println!("inertia (pos, neg, zero) = {i}");
        println!(
            "blocks: {}",
            blocks
                .iter()
                .map(|b| b["size"].to_string())
                .collect::<Vec<_>>()
                .join(" + ")
        );
        match &cert {
            Certificate::Stable(c) => {
                println!(
                    "certificate: P Q P^T = L D L^T with D >= 0, kernel dimension {}",
                    c.kernel.len()
                );
            }
            Certificate::Unstable(w) => {
                let labels: Vec<String> = w
                    .vector
                    .iter()
                    .zip(&q.basis)
                    .filter(|(x, _)| *x != &num_bigint::BigInt::from(0))
                    .map(|(x, l)| format!("{l}={x}"))
                    .collect();
                println!("witness: {}", labels.join(" "));
                println!("value: {}", t(&w.value));
            }
        }
        println!("verified: {}", cert.verify(&q));
    }
    Ok(if cert.is_stable() {
        EXIT_OK
    } else {
        EXIT_UNSTABLE
    })
}

fn bounds(l: u32, s: Option<u32>, m: u32, n: u32, theta: &str, as_json: bool) -> Result<i32> {
    let theta = rational::parse(theta)?;
    let r = rayleigh_bound(l, s.unwrap_or(l), m, n, &theta)?;
    if as_json {
        print_json(&serde_json::to_value(&r).expect("json"));
    } else {
        println!(
            "lambda_l = {}, m^2 (n-2)^2 = {}",
            t(&r.lambda_l),
            t(&r.threshold)
        );
        println!("sufficient: {}", r.sufficient);
        println!(
            "single-degree coefficient {} (squared {})",
            fmt_f64(r.single_coefficient),
            t(&r.single_coefficient_sq)
        );
        println!(
            "two-degree coefficient {} (<= 1: {})",
            fmt_f64(r.pair_coefficient),
            r.pair_coefficient_at_most_one
        );
        println!("stable for every degree by theta: {}", r.stable_by_theta);
        println!("first sufficient degree: {}", first_sufficient_degree(m, n));
    }
    Ok(EXIT_OK)
}

fn reproduce(only: Option<&str>, as_json: bool) -> Result<i32> {
    let r = cmd_reproduce(only)?;
    if as_json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.render_table());
    }
    Ok(if r.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED_ITEMS
    })
}

fn extend(
    degree: u32,
    as_json: bool,
    out: Option<&PathBuf>,
    check: Option<&PathBuf>,
) -> Result<i32> {
    let (r, fixture) = cmd_extend(degree)?;
    if as_json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.render_table());
    }
    if let Some(path) = out {
        std::fs::write(
            path,
            serde_json::to_string_pretty(&fixture).expect("json") + "\n",
        )?;
    }
    let mut code = if r.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED_ITEMS
    };
    if let Some(path) = check {
        let stored: ExtendFixture = serde_json::from_str(&std::fs::read_to_string(path)?)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        if stored == fixture {
            println!("fixture {} matches", path.display());
        } else {
            println!("fixture {} DIFFERS", path.display());
            code = EXIT_FAILED_ITEMS;
        }
    }
    Ok(code)
}

pub fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Integrate {
            exponents,
            m,
            units,
            oracle,
        } => integrate(exponents, *m, *units, *oracle),
        Command::Pairing(p) => pairing(p),
        Command::Form {
            kind,
            degree,
            axis,
            out,
        } => form(*kind, *degree, *axis, out.as_ref()),
        Command::Spectrum { target, tol, json } => spectrum(target, *tol, *json),
        Command::Certify {
            target,
            max_scale,
            json,
        } => certify(target, *max_scale, *json),
        Command::Bounds {
            l,
            s,
            m,
            n,
            theta,
            json,
        } => bounds(*l, *s, *m, *n, theta, *json),
        Command::Reproduce { only, json } => reproduce(only.as_deref(), *json),
        Command::Extend {
            degree,
            json,
            out,
            check,
        } => extend(*degree, *json, out.as_ref(), check.as_ref()),
    }
}

/// Parse the process arguments, run, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}
