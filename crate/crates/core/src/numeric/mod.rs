//! Exact arithmetic: big rationals, real quadratic surds, integer and
//! rational matrices with their normal forms, congruence diagonalization and
//! short-vector enumeration.

mod diagonalize;
mod matrix;
mod normal_form;
mod shortvec;
mod surd;

pub use diagonalize::{symmetric_diagonalize, Diagonalization};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use normal_form::{
    content, determinant, hnf, hnf_basis, integer_kernel, primitive_normalized, snf, solve_integer, Hnf, Snf,
};
pub use shortvec::{fincke_pohst, is_positive_definite, isqrt_floor, short_vectors, NotPositiveDefinite};
pub use surd::{
    common_radicand, is_perfect_square, square_free_decomposition, surd_sign, ParseSurdError, QuadraticSurd,
};

use num_bigint::BigInt;

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub fn to_rational_vec(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Standard dot product of two integer vectors.
pub fn dot(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}
