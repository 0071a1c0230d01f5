use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("multi-index subtraction {index} - {amount}e_{axis} leaves a negative exponent")]
    NegativeExponent {
        index: String,
        axis: usize,
        amount: u32,
    },
    #[error("degree mismatch: |a| = {left}, |b| = {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("axis must be 1, 2 or 3, got {0}")]
    BadAxis(usize),
    #[error("function f_{func} is not homogeneous of degree {degree}")]
    NotHomogeneous { func: u8, degree: u32 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("negative inertia certified but no integer witness found up to scale {max_scale}")]
    WitnessSearchExhausted { max_scale: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
