use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::det2;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{is_perfect_square, IntMatrix};

/// A solution of `x² − d·y² = 1` with `x, y > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellUnit {
    pub d: BigInt,
    pub x: BigInt,
    pub y: BigInt,
}

impl PellUnit {
    pub fn is_solution(&self) -> bool {
        &self.x * &self.x - &self.d * &self.y * &self.y == BigInt::one()
    }
}

/// Least positive solution of `x² − d·y² = 1`, read off the convergents of
/// the continued fraction of `√d`.
pub fn pell_fundamental(d: &BigInt) -> Result<PellUnit> {
    if !d.is_positive() {
        return Err(Error::InvalidParameter(format!("Pell equation needs d > 0, got {d}")));
    }
    if is_perfect_square(d) {
        return Err(Error::SquareParameter(d.clone()));
    }
    let a0 = d.sqrt();
    let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut h1, mut h2) = (BigInt::one(), BigInt::zero());
    let (mut k1, mut k2) = (BigInt::zero(), BigInt::one());
    loop {
        let h = &a * &h1 + &h2;
        let k = &a * &k1 + &k2;
        if &h * &h - d * &k * &k == BigInt::one() {
            return Ok(PellUnit { d: d.clone(), x: h, y: k });
        }
        (h2, h1) = (h1, h);
        (k2, k1) = (k1, k);
        m = &den * &a - &m;
        den = (d - &m * &m) / &den;
        a = (&a0 + &m) / &den;
    }
}

/// Multiplication by `x + y√d` on `Z[√d]`, the basis of `make_pell(n, d)`.
pub fn pell_isometry(l: &Lattice, u: &PellUnit) -> Result<IntMatrix> {
    let g = l.gram();
    let shaped = l.rank() == 2
        && g[(0, 1)].is_zero()
        && g[(0, 0)].is_positive()
        && g[(1, 1)] == -(&g[(0, 0)] * &u.d);
    if !shaped {
        return Err(Error::InvalidParameter(format!("lattice is not a Pell lattice for d = {}", u.d)));
    }
    if !u.is_solution() {
        return Err(Error::InvalidParameter(format!("({}, {}) does not solve x^2 - {}y^2 = 1", u.x, u.y, u.d)));
    }
    let m = IntMatrix::from_rows(vec![vec![u.x.clone(), &u.d * &u.y], vec![u.y.clone(), u.x.clone()]]);
    debug_assert!(is_isometry(l, &m));
    Ok(m)
}

/// `MᵀGM = G`.
pub fn is_isometry(l: &Lattice, m: &IntMatrix) -> bool {
    m.rows() == l.rank() && m.cols() == l.rank() && &l.gram().congruence(m) == l.gram()
}

/// For an isometry of a hyperbolic lattice: does it map the positive cone
/// containing `p` to itself?
pub fn preserves_positive_cone(l: &Lattice, m: &IntMatrix, p: &[BigInt]) -> bool {
    l.inner(&m.mul_vec(p), p).is_positive()
}

/// Generator of the orientation- and cone-preserving isometries of an
/// anisotropic rank-2 hyperbolic lattice, oriented so that it moves `p`
/// counterclockwise (`det[p, Mp] > 0`).
///
/// With `Ax² + 2Bxy + Cy² = g·(ax² + bxy + cy²)` primitive and `Δ = b² − 4ac`,
/// the automorphs are `[[(t − bu)/2, −cu], [au, (t + bu)/2]]` for
/// `t² − Δu² = 4`.
pub fn cone_automorph(l: &Lattice, p: &[BigInt]) -> Result<IntMatrix> {
    if l.rank() != 2 {
        return Err(Error::WrongRank { expected: 2, got: l.rank() });
    }
    if !l.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let gm = l.gram();
    let (big_a, big_b, big_c) = (gm[(0, 0)].clone(), gm[(0, 1)].clone(), gm[(1, 1)].clone());
    let two_b = &big_b * 2;
    let g = big_a.gcd(&two_b).gcd(&big_c);
    let (a, b, c) = (&big_a / &g, &two_b / &g, &big_c / &g);
    let disc = &b * &b - 4 * &a * &c;
    if is_perfect_square(&disc) {
        return Err(Error::Isotropic);
    }
    let (t, u) = norm_four_unit(&disc)?;
    let m = IntMatrix::from_rows(vec![
        vec![(&t - &b * &u) / 2, -(&c * &u)],
        vec![&a * &u, (&t + &b * &u) / 2],
    ]);
    debug_assert!(is_isometry(l, &m));
    let mp = m.mul_vec(p);
    if det2(p, &mp).is_positive() {
        Ok(m)
    } else {
        Ok(inverse_unimodular2(&m))
    }
}

/// Least `t, u > 0` with `t² − Δu² = 4`.
fn norm_four_unit(disc: &BigInt) -> Result<(BigInt, BigInt)> {
    if (disc % 4u32).is_zero() {
        let unit = pell_fundamental(&(disc / 4))?;
        return Ok((unit.x * 2, unit.y));
    }
    let unit = pell_fundamental(disc)?;
    // (2x, 2y) always works; anything smaller has u < 2y
    let mut u = BigInt::one();
    while u < &unit.y * 2 {
        let t2 = disc * &u * &u + 4;
        if is_perfect_square(&t2) {
            return Ok((t2.sqrt(), u));
        }
        u += 1;
    }
    Ok((unit.x * 2, unit.y * 2))
}

/// Inverse of a 2×2 integer matrix of determinant ±1.
pub fn inverse_unimodular2(m: &IntMatrix) -> IntMatrix {
    let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
    assert!(det.abs().is_one(), "matrix is not unimodular");
    IntMatrix::from_rows(vec![
        vec![&m[(1, 1)] * &det, -&m[(0, 1)] * &det],
        vec![-&m[(1, 0)] * &det, &m[(0, 0)] * &det],
    ])
}
