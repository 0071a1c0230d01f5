//! The six-variable algebraic inequality
//!
//! ```text
//! 2AB + 2AC + 2BC + 2XY + 2XZ + 2YZ + 4⟨(A,C,B), (X-Y, Y-Z, Z-X)⟩
//!     ≤ 3(A² + B² + C²) + 3(X² + Y² + Z²)
//! ```
//!
//! The gap `RHS - LHS` is a positive definite quadratic form (its matrix has
//! eigenvalues 1, 4 - 2√3 and 4 + 2√3, each twice), so equality forces all six
//! values to vanish.

use crate::rational::{int, Rational};

pub fn lhs(v: &[Rational; 6]) -> Rational {
    let [a, b, c, x, y, z] = v;
    let two = int(2);
    let sym = &two * (a * b + a * c + b * c + x * y + x * z + y * z);
    let inner = a * (x - y) + c * (y - z) + b * (z - x);
    sym + int(4) * inner
}

pub fn rhs(v: &[Rational; 6]) -> Rational {
    let [a, b, c, x, y, z] = v;
    int(3) * (a * a + b * b + c * c) + int(3) * (x * x + y * y + z * z)
}

/// `RHS - LHS`, nonnegative for every input.
pub fn gap(v: &[Rational; 6]) -> Rational {
    rhs(v) - lhs(v)
}

/// Whether `(A, C, B)` and `(X-Y, Y-Z, Z-X)` are linearly dependent.
pub fn collinear(v: &[Rational; 6]) -> bool {
    let [a, b, c, x, y, z] = v;
    let p = [a.clone(), c.clone(), b.clone()];
    let q = [x - y, y - z, z - x];
    let cross = [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ];
    cross.iter().all(num_traits::Zero::is_zero)
}
