use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::Rational;

/// Result of a rational congruence diagonalization: `transform^T · g · transform = diagonal`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub diagonal: Vec<Rational>,
    pub transform: RatMatrix,
}

impl Diagonalization {
    /// Counts of (positive, negative) diagonal entries.
    pub fn inertia(&self) -> (usize, usize) {
        let p = self.diagonal.iter().filter(|x| x.is_positive()).count();
        let q = self.diagonal.iter().filter(|x| x.is_negative()).count();
        (p, q)
    }
}

/// Congruence-diagonalizes a symmetric rational matrix by symmetric Gaussian
/// elimination. A zero pivot with a nonzero off-diagonal entry in its row is
/// repaired by the substitution `e_i -> e_i + e_j`, which turns a hyperbolic
/// plane into a nonzero pivot. Returns `None` for non-symmetric input.
pub fn symmetric_diagonalize(g: &RatMatrix) -> Option<Diagonalization> {
    if !g.is_symmetric() {
        return None;
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut t = RatMatrix::identity(n);

    // basis change e_target += factor * e_source, applied as a congruence
    let add_basis = |a: &mut RatMatrix, t: &mut RatMatrix, target: usize, source: usize, factor: &Rational| {
        for k in 0..n {
            let delta = factor * &a[(k, source)];
            a[(k, target)] += delta;
        }
        for k in 0..n {
            let delta = factor * &a[(source, k)];
            a[(target, k)] += delta;
        }
        for k in 0..n {
            let delta = factor * &t[(k, source)];
            t[(k, target)] += delta;
        }
    };

    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                a.swap_rows(i, j);
                a.swap_cols(i, j);
                t.swap_cols(i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                add_basis(&mut a, &mut t, i, j, &Rational::one());
            } else {
                continue;
            }
        }
        let pivot = a[(i, i)].clone();
        for j in i + 1..n {
            if a[(i, j)].is_zero() {
                continue;
            }
            let factor = -(&a[(i, j)] / &pivot);
            add_basis(&mut a, &mut t, j, i, &factor);
        }
    }
    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Some(Diagonalization { diagonal, transform: t })
}
