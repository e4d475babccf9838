//! Integer matrix kernels: determinant, Hermite and Smith normal forms,
//! integer kernels and integral linear solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

/// Row-style Hermite normal form: `transform * m = hnf`.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub hnf: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
    /// Column index of the pivot in each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        let delta = factor * &m[(source, j)];
        m[(target, j)] -= delta;
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        let delta = factor * &m[(i, source)];
        m[(i, target)] -= delta;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

/// Computes the row Hermite normal form: upper echelon, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> Hnf {
    let rows = m.rows();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pr = 0;
    let mut pivots = Vec::new();
    for j in 0..a.cols() {
        if pr == rows {
            break;
        }
        loop {
            // smallest nonzero entry in the column at or below the pivot row
            let best = (pr..rows)
                .filter(|&i| !a[(i, j)].is_zero())
                .min_by(|&x, &y| a[(x, j)].abs().cmp(&a[(y, j)].abs()));
            let Some(best) = best else { break };
            a.swap_rows(pr, best);
            u.swap_rows(pr, best);
            let mut clean = true;
            for i in pr + 1..rows {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let q = a[(i, j)].div_floor(&a[(pr, j)]);
                row_axpy(&mut a, i, pr, &q);
                row_axpy(&mut u, i, pr, &q);
                if !a[(i, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[(pr, j)].is_zero() {
            continue;
        }
        if a[(pr, j)].is_negative() {
            negate_row(&mut a, pr);
            negate_row(&mut u, pr);
        }
        for i in 0..pr {
            let q = a[(i, j)].div_floor(&a[(pr, j)]);
            row_axpy(&mut a, i, pr, &q);
            row_axpy(&mut u, i, pr, &q);
        }
        pivots.push(j);
        pr += 1;
    }
    Hnf { hnf: a, transform: u, rank: pr, pivots }
}

/// Canonical basis (HNF rows) of the lattice spanned by the given integer vectors.
pub fn hnf_basis(vectors: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_rows(vectors.to_vec());
    assert_eq!(m.cols(), dim);
    let h = hnf(&m);
    (0..h.rank).map(|i| h.hnf.row(i).to_vec()).collect()
}

/// Basis of the integer kernel `{x in Z^cols : m x = 0}`, in Hermite normal form.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let h = hnf(&m.transpose());
    let raw: Vec<Vec<BigInt>> =
        (h.rank..h.transform.rows()).map(|i| h.transform.row(i).to_vec()).collect();
    hnf_basis(&raw, m.cols())
}

/// Smith normal form: `left * m * right = diagonal`, with `divisors[i] | divisors[i+1]`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Diagonal entries `d_0, ..., d_{min(rows,cols)-1}`, nonnegative.
    pub divisors: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.divisors.iter().take_while(|d| !d.is_zero()).count()
    }
}

/// Smith normal form by integer elimination, choosing the smallest available
/// pivot at every step to keep entries small.
pub fn snf(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    'outer: for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
    }
    let divisors = (0..steps).map(|i| a[(i, i)].clone()).collect();
    Snf { diagonal: a, left: u, right: v, divisors }
}

/// Some integer solution of `m x = b`, or `None` if there is none.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows());
    let s = snf(m);
    let ub = s.left.mul_vec(b);
    let rank = s.rank();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, val) in ub.iter().enumerate() {
        if i < rank {
            let (q, r) = val.div_rem(&s.divisors[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !val.is_zero() {
            return None;
        }
    }
    Some(s.right.mul_vec(&y))
}

/// Gcd of the entries (nonnegative; zero for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content and makes the first nonzero entry positive.
/// The zero vector is returned unchanged.
pub fn primitive_normalized(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        out.iter_mut().for_each(|x| *x = -x.clone());
    }
    out
}
