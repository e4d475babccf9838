//! Exact Fincke–Pohst enumeration of lattice points in an ellipsoid.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::RatMatrix;
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("quadratic form is not positive definite")]
pub struct NotPositiveDefinite;

/// `A = L·D·Lᵀ` with `L` unit lower triangular; fails unless `A` is
/// positive definite.
fn ldl(a: &RatMatrix) -> Result<(RatMatrix, Vec<Rational>), NotPositiveDefinite> {
    let n = a.rows();
    let mut l = RatMatrix::identity(n);
    let mut d = vec![Rational::zero(); n];
    for j in 0..n {
        let mut dj = a[(j, j)].clone();
        for k in 0..j {
            dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
        }
        if !dj.is_positive() {
            return Err(NotPositiveDefinite);
        }
        for i in j + 1..n {
            let mut s = a[(i, j)].clone();
            for k in 0..j {
                s -= &l[(i, k)] * &l[(j, k)] * &d[k];
            }
            l[(i, j)] = s / &dj;
        }
        d[j] = dj;
    }
    Ok((l, d))
}

struct Search<'a, F> {
    l: RatMatrix,
    d: Vec<Rational>,
    center: &'a [Rational],
    x: Vec<BigInt>,
    visit: F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&[BigInt], &Rational) -> ControlFlow<()>,
{
    /// Fixes coordinate `i` given coordinates `i+1..n`; `used` is the part of
    /// the norm already consumed by them.
    fn level(&mut self, i: usize, used: &Rational, bound: &Rational) -> ControlFlow<()> {
        let n = self.x.len();
        // offset of coordinate i's center from its own target
        let mut shift = Rational::zero();
        for j in i + 1..n {
            let yj = Rational::from_integer(self.x[j].clone()) - &self.center[j];
            shift += &self.l[(j, i)] * yj;
        }
        let mid = &self.center[i] - &shift;
        let budget = bound - used;
        let start = mid.floor().to_integer();

        let weight = self.d[i].clone();
        let term = |k: &BigInt| {
            let t = Rational::from_integer(k.clone()) - &mid;
            &weight * &t * &t
        };

        // walk outward from the floor of the center in both directions
        for direction in [false, true] {
            let mut k = if direction { &start + 1 } else { start.clone() };
            loop {
                let cost = term(&k);
                if cost > budget {
                    break;
                }
                let total = used + &cost;
                self.x[i] = k.clone();
                if i == 0 {
                    let x = self.x.clone();
                    (self.visit)(&x, &total)?;
                } else {
                    self.level(i - 1, &total, bound)?;
                }
                if direction {
                    k += 1;
                } else {
                    k -= 1;
                }
            }
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit(x, Q(x - center))` for every integer vector `x` with
/// `(x - center)ᵀ Q (x - center) <= bound`. The visitor may stop the search
/// early by returning `Break`, in which case `Break` is returned.
pub fn fincke_pohst<F>(
    gram: &RatMatrix,
    center: &[Rational],
    bound: &Rational,
    visit: F,
) -> Result<ControlFlow<()>, NotPositiveDefinite>
where
    F: FnMut(&[BigInt], &Rational) -> ControlFlow<()>,
{
    assert!(gram.is_square() && center.len() == gram.rows());
    let n = gram.rows();
    let (l, d) = ldl(gram)?;
    let mut visit = visit;
    if n == 0 {
        return Ok(if bound.is_negative() {
            ControlFlow::Continue(())
        } else {
            visit(&[], &Rational::zero())
        });
    }
    if bound.is_negative() {
        return Ok(ControlFlow::Continue(()));
    }
    let mut search = Search { l, d, center, x: vec![BigInt::zero(); n], visit };
    Ok(search.level(n - 1, &Rational::zero(), bound))
}

/// All integer vectors with `xᵀ Q x <= bound`, sorted lexicographically.
pub fn short_vectors(gram: &RatMatrix, bound: &Rational) -> Result<Vec<Vec<BigInt>>, NotPositiveDefinite> {
    let center = vec![Rational::zero(); gram.rows()];
    let mut out = Vec::new();
    let _ = fincke_pohst(gram, &center, bound, |x, _| {
        out.push(x.to_vec());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// Is the symmetric matrix positive definite?
pub fn is_positive_definite(gram: &RatMatrix) -> bool {
    ldl(gram).is_ok()
}

/// Floor of the rational square root bound used by callers sizing boxes.
pub fn isqrt_floor(x: &Rational) -> BigInt {
    if !x.is_positive() {
        return BigInt::zero();
    }
    let q = x.numer().div_floor(x.denom());
    let mut r = num_integer::Roots::sqrt(&q);
    while Rational::from_integer((&r + 1u32) * (&r + 1u32)) <= *x {
        r += 1u32;
    }
    r
}
