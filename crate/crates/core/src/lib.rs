//! Exact-arithmetic certification of the integral Cauchy-Riemann stability
//! inequalities for functions on the round 2-sphere.

#![allow(clippy::needless_range_loop)]

pub mod algebraic;
pub mod blocks;
pub mod bounds;
pub mod certify;
pub mod cli;
pub mod counterexample;
pub mod error;
pub mod forms;
pub mod harmonic;
pub mod integrals;
pub mod jacobi;
pub mod monomial;
pub mod pairings;
pub mod polynomial;
pub mod quadrature;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use monomial::MultiIndex;
pub use polynomial::Polynomial;
pub use rational::Rational;
