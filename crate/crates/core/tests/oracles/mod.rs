//! Brute-force reference computations shared by the integration tests.
//!
//! Everything here works on plain `i64` data and naive enumeration, so it
//! shares no code path with the library beyond reading Gram matrices.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use smallcones::Lattice;

pub fn gram_i64(l: &Lattice) -> Vec<Vec<i64>> {
    l.gram().to_rows().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
}

pub fn norm_i64(g: &[Vec<i64>], v: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..v.len() {
        for j in 0..v.len() {
            s += v[i] * g[i][j] * v[j];
        }
    }
    s
}

fn odometer(v: &mut [i64], lo: i64, hi: i64) -> bool {
    for x in v.iter_mut().rev() {
        if *x < hi {
            *x += 1;
            return true;
        }
        *x = lo;
    }
    false
}

/// Every vector with coordinates in `[lo, hi]` and norm `-2`.
pub fn box_roots(g: &[Vec<i64>], lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut v = vec![lo; n];
    let mut out = Vec::new();
    loop {
        if norm_i64(g, &v) == -2 {
            out.push(v.clone());
        }
        if !odometer(&mut v, lo, hi) {
            return out;
        }
    }
}

/// Root count of a root lattice given by a Dynkin Gram matrix, using that
/// every root has all simple-root coefficients of one sign and at most 6.
pub fn sign_box_root_count(g: &[Vec<i64>]) -> usize {
    2 * box_roots(g, 0, 6).len()
}

/// Order of the group generated by the reflections in the basis vectors,
/// by closing the set of matrices under multiplication.
pub fn weyl_closure_order(g: &[Vec<i64>]) -> usize {
    let n = g.len();
    // s_i(v) = v + (v·a_i) a_i, so column j of s_i is e_j + G[i][j] e_i
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut m = vec![0; n * n];
            for j in 0..n {
                m[j * n + j] = 1;
                m[i * n + j] += g[i][j];
            }
            m
        })
        .collect();
    let identity: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(m) = queue.pop_front() {
        for s in &gens {
            let mut p = vec![0; n * n];
            for r in 0..n {
                for c in 0..n {
                    p[r * n + c] = (0..n).map(|k| s[r * n + k] * m[k * n + c]).sum();
                }
            }
            if seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    seen.len()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Wall rays of `U(n)` over the full cone, with a flag for internal
/// roots: every functional `g = (g·e, g·f)` in a box with
/// `-2 <= 2 g1 g2 / n < 0`, norm `-2` only when `g / n` is integral.
pub fn u_n_walls(n: i64) -> BTreeSet<((i64, i64), bool)> {
    let mut out = BTreeSet::new();
    let b = 2 * n + 2;
    for g1 in -b..=b {
        for g2 in -b..=b {
            let num = 2 * g1 * g2; // q = num / n
            if num >= 0 || num < -2 * n {
                continue;
            }
            let internal = num == -2 * n;
            if internal && (g1 % n != 0 || g2 % n != 0) {
                continue;
            }
            // ray annihilated by g, oriented into x, y > 0
            let (mut x, mut y) = (g2, -g1);
            if x < 0 {
                x = -x;
                y = -y;
            }
            let c = gcd(x, y);
            out.insert(((x / c, y / c), internal));
        }
    }
    out
}

/// The closed-form description: rays `(b, a)` with `a, b >= 1`, `ab < n`,
/// `gcd(a, b) = 1`, plus the root wall at `(1, 1)` for `n = 1`.
pub fn u_n_closed_form(n: i64) -> BTreeSet<((i64, i64), bool)> {
    let mut out = BTreeSet::new();
    for a in 1..n {
        for b in 1..n {
            if a * b < n && gcd(a, b) == 1 {
                out.insert(((b, a), false));
            }
        }
    }
    if n == 1 {
        out.insert(((1, 1), true));
    }
    out
}

/// Least positive solution of `x² - d y² = 1` by direct search on `y`.
pub fn pell_brute(d: i64) -> (i64, i64) {
    (1..).find_map(|y: i64| {
        let t = 1 + d * y * y;
        let x = (t as f64).sqrt().round() as i64;
        (x * x == t).then_some((x, y))
    })
    .unwrap()
}

/// Wall rays of `diag(2n, -2nd)` in the half-open interval
/// `[(1,0), (x,y))` where `(x, y)` is the Pell unit. A ray `v` carries a
/// wall when some multiple `k p` of the normal `p = (v2, -v1)` has
/// `-2 <= q < 0`, with `q = -2` only for a lattice vector `G⁻¹ k p`.
pub fn pell_interval_walls(n: i64, d: i64) -> Vec<(i64, i64)> {
    let (ux, uy) = pell_brute(d);
    let mut rays = Vec::new();
    // vx² - d vy² <= 4nd bounds vx by 2 ux sqrt(nd) on this interval
    let bound = 2 * ux * ((n * d) as f64).sqrt().ceil() as i64 + 2;
    for vx in 1..=bound {
        for vy in 0..vx {
            if gcd(vx, vy) != 1 || vy * ux >= vx * uy || vx * vx <= d * vy * vy {
                continue;
            }
            // q(k) = k² (d vy² - vx²) / (2nd)
            let base = d * vy * vy - vx * vx;
            let wall = (1..).take_while(|k| k * k * base >= -4 * n * d).any(|k| {
                let q_is_minus_two = k * k * base == -4 * n * d;
                !q_is_minus_two || ((k * vy) % (2 * n) == 0 && (k * vx) % (2 * n * d) == 0)
            });
            if wall {
                rays.push((vx, vy));
            }
        }
    }
    rays.sort_by(|a, b| (a.1 * b.0).cmp(&(b.1 * a.0)));
    rays
}

/// Rank by the largest nonvanishing minor, minors by Laplace expansion.
pub fn rank_by_minors(m: &[Vec<BigRational>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for size in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, size) {
            for cs in subsets(cols, size) {
                let sub: Vec<Vec<BigRational>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                if !laplace_det(&sub).is_zero() {
                    return size;
                }
            }
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn laplace_det(m: &[Vec<BigRational>]) -> BigRational {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = BigRational::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = a * laplace_det(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
