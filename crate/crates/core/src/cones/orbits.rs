use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::pell::{cone_automorph, inverse_unimodular2, is_isometry, preserves_positive_cone};
use super::walls::{interval_walls, rational_null_rays, wall_ray, Wall};
use super::{default_positive_vector, det2};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{primitive_normalized, IntMatrix};

/// Orbit counts of walls and small cones under a group of cone-preserving
/// isometries of an anisotropic rank-2 lattice.
///
/// The counts are exact for the subgroup generated by the supplied
/// matrices; they bound the counts for any larger group from above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCount {
    pub wall_orbits: usize,
    pub cone_orbits: usize,
    /// Generator `T` of the rotation part of the group, moving rays
    /// counterclockwise.
    pub translation: IntMatrix,
    /// Walls with ray in `[ρ, Tρ)`, in angular order.
    pub interval_walls: Vec<Wall>,
    pub interval_rays: Vec<Vec<BigInt>>,
}

fn det(m: &IntMatrix) -> BigInt {
    &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)]
}

fn power(m: &IntMatrix, k: i64) -> IntMatrix {
    let base = if k < 0 { inverse_unimodular2(m) } else { m.clone() };
    (0..k.unsigned_abs()).fold(IntMatrix::identity(2), |acc, _| &acc * &base)
}

/// `k` with `m = ε^k`, for `m` in the infinite cyclic group generated by `ε`.
fn exponent(eps: &IntMatrix, m: &IntMatrix) -> Option<i64> {
    let trace = (&m[(0, 0)] + &m[(1, 1)]).abs();
    let inv = inverse_unimodular2(eps);
    let (mut fwd, mut back) = (IntMatrix::identity(2), IntMatrix::identity(2));
    for k in 0i64.. {
        if fwd == *m {
            return Some(k);
        }
        if back == *m {
            return Some(-k);
        }
        if (&fwd[(0, 0)] + &fwd[(1, 1)]).abs() > trace {
            return None;
        }
        fwd = &fwd * eps;
        back = &back * &inv;
    }
    None
}

/// Moves the ray `v` into `[base, T·base)` by powers of `T`.
fn reduce(v: &[BigInt], t: &IntMatrix, t_inv: &IntMatrix, base: &[BigInt], top: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    while det2(base, &v).is_negative() {
        v = t.mul_vec(&v);
    }
    while !det2(top, &v).is_negative() {
        v = t_inv.mul_vec(&v);
    }
    v
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let root = self.find(p);
        self.0[i] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Counts wall and small-cone orbits under the group generated by
/// `generators`, using the fundamental interval based at `base`.
pub fn orbit_count_rank2(l: &Lattice, generators: &[IntMatrix], base: &[BigInt]) -> Result<OrbitCount> {
    if l.rank() != 2 {
        return Err(Error::WrongRank { expected: 2, got: l.rank() });
    }
    let p = default_positive_vector(l)?;
    if rational_null_rays(l, &p).is_some() {
        return Err(Error::Isotropic);
    }
    if base.len() != 2 || !l.norm(base).is_positive() || !l.inner(base, &p).is_positive() {
        return Err(Error::InvalidParameter("base ray must lie in the positive cone".into()));
    }
    let base = primitive_normalized(base);
    let base = if l.inner(&base, &p).is_negative() { base.into_iter().map(|x| -x).collect() } else { base };
    for g in generators {
        if !is_isometry(l, g) {
            return Err(Error::NotIsometry);
        }
        if !preserves_positive_cone(l, g, &p) {
            return Err(Error::SwapsComponents);
        }
    }
    let eps = cone_automorph(l, &p)?;
    let mut step = 0i64;
    let first_reflection = generators.iter().find(|g| det(g).is_negative());
    for g in generators {
        let rotation = if det(g).is_positive() {
            g.clone()
        } else {
            g * first_reflection.expect("a reflection exists")
        };
        let k = exponent(&eps, &rotation).ok_or(Error::NotIsometry)?;
        step = step.gcd(&k);
    }
    if step == 0 {
        return Err(Error::NoInfiniteOrder);
    }
    let t = power(&eps, step);
    let t_inv = inverse_unimodular2(&t);
    let top = t.mul_vec(&base);
    let walls = interval_walls(l, &base, &top, &p)?;
    let rays: Vec<Vec<BigInt>> = walls.iter().map(|w| wall_ray(&w.lambda, l, &p)).collect();
    let n = rays.len();

    let mut wall_classes = UnionFind((0..n).collect());
    let mut cone_classes = UnionFind((0..n.max(1)).collect());
    let index_of = |v: &[BigInt]| rays.iter().position(|r| r.as_slice() == v).expect("isometries permute walls");
    for g in generators {
        for (i, r) in rays.iter().enumerate() {
            let image = reduce(&g.mul_vec(r), &t, &t_inv, &base, &top);
            wall_classes.union(i, index_of(&image));
        }
        for i in 0..n {
            let next = if i + 1 < n { rays[i + 1].clone() } else { t.mul_vec(&rays[0]) };
            let inside: Vec<BigInt> = rays[i].iter().zip(&next).map(|(a, b)| a + b).collect();
            let image = reduce(&g.mul_vec(&inside), &t, &t_inv, &base, &top);
            let after = rays.iter().filter(|r| det2(r, &image).is_positive()).count();
            cone_classes.union(i, (after + n - 1) % n);
        }
    }
    Ok(OrbitCount {
        wall_orbits: wall_classes.classes(),
        cone_orbits: cone_classes.classes(),
        translation: t,
        interval_walls: walls,
        interval_rays: rays,
    })
}

/// Number of walls with ray in `[base, T^k·base)`.
pub fn walls_in_translates(l: &Lattice, t: &IntMatrix, base: &[BigInt], k: u32) -> Result<usize> {
    let p = default_positive_vector(l)?;
    if !is_isometry(l, t) {
        return Err(Error::NotIsometry);
    }
    if k == 0 {
        return Ok(0);
    }
    let top = power(t, k.into()).mul_vec(base);
    if det2(base, &top).is_zero() {
        return Err(Error::NoInfiniteOrder);
    }
    Ok(interval_walls(l, base, &top, &p)?.len())
}
