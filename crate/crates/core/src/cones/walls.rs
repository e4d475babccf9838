use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{default_positive_vector, det2, pell::cone_automorph};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{is_perfect_square, isqrt_floor, primitive_normalized, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WallSource {
    /// `β_Λ ∈ Λ` is itself a root.
    InternalRoot,
    /// `β_Λ ∉ Λ`; needs a complementary part of norm `−2 − β_Λ²`.
    External,
}

impl WallSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            WallSource::InternalRoot => "internal-root",
            WallSource::External => "external",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Realizability {
    Assumed,
    /// An ambient root `β` with the required projection.
    Certified(Vec<BigInt>),
    Refuted,
}

impl Realizability {
    pub fn as_str(&self) -> &'static str {
        match self {
            Realizability::Assumed => "assumed",
            Realizability::Certified(_) => "certified",
            Realizability::Refuted => "refuted",
        }
    }
}

/// One wall hyperplane `{v : λ·v = 0}`.
///
/// `lambda` is the primitive integer normal (first nonzero entry positive).
/// The wall is realized by `β_Λ = G⁻¹(multiple·λ)` of norm `norm`; when
/// several multiples are admissible the internal root is preferred, then the
/// smallest multiple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wall {
    pub lambda: Vec<BigInt>,
    pub multiple: BigInt,
    pub norm: Rational,
    pub source: WallSource,
    pub realizability: Realizability,
}

impl Wall {
    /// The functional `β·e_i` of the chosen `β_Λ`.
    pub fn functional(&self) -> Vec<BigInt> {
        self.lambda.iter().map(|x| x * &self.multiple).collect()
    }

    /// `β_Λ` in lattice coordinates.
    pub fn beta_lambda(&self, l: &Lattice) -> Result<Vec<Rational>> {
        l.dual_coords(&self.functional())
    }
}

/// Where to search for walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    /// The whole positive cone (rank 2 only).
    FullCone,
    /// The closed subcone spanned by two integer vectors of the positive
    /// cone (rank 2 only).
    Rays(Vec<BigInt>, Vec<BigInt>),
    /// All walls whose primitive normal has entries bounded by the value.
    CoefficientBound(BigInt),
}

/// `gᵀG⁻¹g`, the norm of the dual vector with functional `g`.
pub fn functional_norm(l: &Lattice, g: &[BigInt]) -> Result<Rational> {
    let beta = l.dual_coords(g)?;
    Ok(beta.iter().zip(g).map(|(b, x)| b * Rational::from_integer(x.clone())).sum())
}

/// Multiples `k ≥ 1` for which `k·λ` defines a wall, with norm and source.
pub fn admissible_multiples(l: &Lattice, lambda: &[BigInt]) -> Result<Vec<(BigInt, Rational, WallSource)>> {
    let q0 = functional_norm(l, lambda)?;
    let mut out = Vec::new();
    if !q0.is_negative() {
        return Ok(out);
    }
    let minus_two = Rational::from_integer(BigInt::from(-2));
    let mut k = BigInt::one();
    loop {
        let q = &q0 * Rational::from_integer(&k * &k);
        match q.cmp(&minus_two) {
            Ordering::Less => break,
            Ordering::Greater => out.push((k.clone(), q, WallSource::External)),
            Ordering::Equal => {
                let g: Vec<BigInt> = lambda.iter().map(|x| x * &k).collect();
                if l.dual_coords(&g)?.iter().all(|c| c.is_integer()) {
                    out.push((k.clone(), q, WallSource::InternalRoot));
                }
            }
        }
        k += 1;
    }
    Ok(out)
}

/// The wall on the hyperplane `g^⊥`, if that hyperplane is a wall.
pub fn wall_for_functional(l: &Lattice, g: &[BigInt]) -> Result<Option<Wall>> {
    if g.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let lambda = primitive_normalized(g);
    let multiples = admissible_multiples(l, &lambda)?;
    let pick = multiples
        .iter()
        .find(|m| m.2 == WallSource::InternalRoot)
        .or_else(|| multiples.first())
        .cloned();
    Ok(pick.map(|(multiple, norm, source)| Wall { lambda, multiple, norm, source, realizability: Realizability::Assumed }))
}

/// Primitive integer direction of the wall inside the positive cone
/// containing `p` (rank 2).
pub fn wall_ray(lambda: &[BigInt], l: &Lattice, p: &[BigInt]) -> Vec<BigInt> {
    let v = vec![-lambda[1].clone(), lambda[0].clone()];
    if l.inner(&v, p).is_negative() {
        v.into_iter().map(|x| -x).collect()
    } else {
        v
    }
}

/// All walls meeting the region, sorted by normal vector.
pub fn wall_candidates_abstract(l: &Lattice, region: &Region) -> Result<Vec<Wall>> {
    if !l.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let lambdas = match region {
        Region::CoefficientBound(b) => bounded_lambdas(l, b)?,
        Region::Rays(v1, v2) => {
            let p = default_positive_vector(l)?;
            let (v1, v2) = validate_rays(l, v1, v2, &p)?;
            region_functionals(l, &v1, &v2)
        }
        Region::FullCone => full_cone_functionals(l)?,
    };
    let mut walls = Vec::new();
    for g in lambdas {
        if let Some(w) = wall_for_functional(l, &g)? {
            walls.push(w);
        }
    }
    walls.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    walls.dedup_by(|a, b| a.lambda == b.lambda);
    Ok(walls)
}

/// Checks a rank-2 region and orders its rays so that `det[v1, v2] > 0`.
pub(crate) fn validate_rays(l: &Lattice, v1: &[BigInt], v2: &[BigInt], p: &[BigInt]) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if l.rank() != 2 {
        return Err(Error::WrongRank { expected: 2, got: l.rank() });
    }
    if v1.len() != 2 || v2.len() != 2 {
        return Err(Error::InvalidRegion("region rays must have two coordinates".into()));
    }
    for v in [v1, v2] {
        if !l.norm(v).is_positive() || !l.inner(v, p).is_positive() {
            return Err(Error::InvalidRegion(format!("ray {v:?} is not inside the positive cone")));
        }
    }
    let (v1, v2) = (primitive_normalized(v1), primitive_normalized(v2));
    // primitive_normalized may flip signs; restore cone orientation
    let orient = |v: Vec<BigInt>| if l.inner(&v, p).is_negative() { v.into_iter().map(|x| -x).collect() } else { v };
    let (v1, v2) = (orient(v1), orient(v2));
    match det2(&v1, &v2).sign() {
        num_bigint::Sign::Plus => Ok((v1, v2)),
        num_bigint::Sign::Minus => Ok((v2, v1)),
        num_bigint::Sign::NoSign => Ok((v1.clone(), v1)),
    }
}

fn bounded_lambdas(l: &Lattice, bound: &BigInt) -> Result<BTreeSet<Vec<BigInt>>> {
    if bound.is_negative() {
        return Err(Error::InvalidRegion("coefficient bound must be nonnegative".into()));
    }
    let b: i64 = bound.try_into().map_err(|_| Error::InvalidRegion("coefficient bound too large".into()))?;
    let r = l.rank();
    let mut out = BTreeSet::new();
    let mut x = vec![-b; r];
    loop {
        let g: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
        if g.iter().any(|c| !c.is_zero()) {
            out.insert(primitive_normalized(&g));
        }
        let Some(i) = (0..r).rev().find(|&i| x[i] < b) else { break };
        x[i] += 1;
        for c in &mut x[i + 1..] {
            *c = -b;
        }
    }
    Ok(out)
}

/// Functionals `g` with `−2 ≤ gᵀG⁻¹g < 0` whose hyperplane meets the
/// closed cone spanned by `v1`, `v2` (with `det[v1, v2] > 0`).
///
/// In the coordinates `(a, b) = (g·v1, g·v2)` the norm is
/// `(h22 a² − 2 h12 ab + h11 b²) / det H` with `H = VᵀGV`, and `ab ≤ 0`
/// makes every term of the numerator nonnegative, which bounds `|a|`, `|b|`.
pub(crate) fn region_functionals(l: &Lattice, v1: &[BigInt], v2: &[BigInt]) -> BTreeSet<Vec<BigInt>> {
    let mut out = BTreeSet::new();
    region_functionals_into(l, v1, v2, 0, &mut out);
    out
}

fn region_functionals_into(l: &Lattice, v1: &[BigInt], v2: &[BigInt], depth: u32, out: &mut BTreeSet<Vec<BigInt>>) {
    let h11 = l.norm(v1);
    let h22 = l.norm(v2);
    let h12 = l.inner(v1, v2);
    let det_h = (&h11 * &h22 - &h12 * &h12).abs();
    let limit = Rational::from_integer(&det_h * 2);
    let a_max = isqrt_floor(&(&limit / Rational::from_integer(h22.clone())));
    let b_max = isqrt_floor(&(&limit / Rational::from_integer(h11.clone())));
    let work = (&a_max * 2 + 1) * (&b_max * 2 + 1);
    if work > BigInt::from(20_000) && depth < 64 {
        let mid: Vec<BigInt> = primitive_normalized(&[&v1[0] + &v2[0], &v1[1] + &v2[1]]);
        let mid = if det2(v1, &mid).is_positive() { mid } else { mid.into_iter().map(|x| -x).collect() };
        region_functionals_into(l, v1, &mid, depth + 1, out);
        region_functionals_into(l, &mid, v2, depth + 1, out);
        return;
    }
    let d = det2(v1, v2);
    let mut a = BigInt::zero();
    while a <= a_max {
        let b_range = if a.is_zero() { (BigInt::one(), b_max.clone()) } else { (-b_max.clone(), BigInt::zero()) };
        let mut b = b_range.0.clone();
        while b <= b_range.1 {
            let numer: BigInt = &h22 * &a * &a - &h12 * &a * &b * 2 + &h11 * &b * &b;
            if numer.is_positive() && numer <= &det_h * 2 {
                let gx = &a * &v2[1] - &b * &v1[1];
                let gy = &b * &v1[0] - &a * &v2[0];
                if gx.is_multiple_of(&d) && gy.is_multiple_of(&d) {
                    out.insert(primitive_normalized(&[gx / &d, gy / &d]));
                }
            }
            b += 1;
        }
        a += 1;
    }
}

/// Rational null rays `(n1, n2)` of an isotropic rank-2 lattice, oriented
/// into the closure of the cone containing `p` with `det[n1, n2] > 0`.
pub(crate) fn rational_null_rays(l: &Lattice, p: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let g = l.gram();
    let (a, b, c) = (&g[(0, 0)], &g[(0, 1)], &g[(1, 1)]);
    let disc = b * b - a * c;
    if !is_perfect_square(&disc) {
        return None;
    }
    let s = disc.sqrt();
    let (r1, r2) = if a.is_zero() {
        (vec![BigInt::one(), BigInt::zero()], vec![c.clone(), -(b * BigInt::from(2))])
    } else {
        (vec![-b + &s, a.clone()], vec![-b - &s, a.clone()])
    };
    let orient = |v: Vec<BigInt>| {
        let v = primitive_normalized(&v);
        if l.inner(&v, p).is_negative() {
            v.into_iter().map(|x| -x).collect()
        } else {
            v
        }
    };
    let (r1, r2) = (orient(r1), orient(r2));
    Some(if det2(&r1, &r2).is_positive() { (r1, r2) } else { (r2, r1) })
}

fn full_cone_functionals(l: &Lattice) -> Result<BTreeSet<Vec<BigInt>>> {
    if l.rank() != 2 {
        return Err(Error::InvalidRegion("full-cone wall search needs a rank-2 lattice".into()));
    }
    let p = default_positive_vector(l)?;
    if let Some((n1, n2)) = rational_null_rays(l, &p) {
        // with H = [[0, h12], [h12, 0]] the norm is 2ab/h12
        let h12 = l.inner(&n1, &n2);
        let d = det2(&n1, &n2);
        let mut out = BTreeSet::new();
        let mut a = BigInt::one();
        while a <= h12 {
            let mut b = -(&h12 / &a);
            while b < BigInt::zero() {
                let gx = &a * &n2[1] - &b * &n1[1];
                let gy = &b * &n1[0] - &a * &n2[0];
                if gx.is_multiple_of(&d) && gy.is_multiple_of(&d) {
                    out.insert(primitive_normalized(&[gx / &d, gy / &d]));
                }
                b += 1;
            }
            a += 1;
        }
        return Ok(out);
    }
    let walls = fundamental_walls(l, &p)?;
    if walls.is_empty() {
        return Ok(BTreeSet::new());
    }
    Err(Error::InfinitelyManyWalls(walls.into_iter().take(3).map(|w| w.lambda).collect()))
}

/// Walls with ray in `[p, εp)` for the cone automorph `ε`, in angular order.
pub(crate) fn fundamental_walls(l: &Lattice, p: &[BigInt]) -> Result<Vec<Wall>> {
    let eps = cone_automorph(l, p)?;
    interval_walls(l, p, &eps.mul_vec(p), p)
}

/// Walls with ray in the half-open interval `[v1, v2)`, in angular order.
pub(crate) fn interval_walls(l: &Lattice, v1: &[BigInt], v2: &[BigInt], p: &[BigInt]) -> Result<Vec<Wall>> {
    let (lo, hi) = validate_rays(l, v1, v2, p)?;
    let mut walls = Vec::new();
    for g in region_functionals(l, &lo, &hi) {
        if let Some(w) = wall_for_functional(l, &g)? {
            let ray = wall_ray(&w.lambda, l, p);
            if !det2(&ray, &hi).is_zero() {
                walls.push((ray, w));
            }
        }
    }
    walls.sort_by(|(a, _), (b, _)| angular_cmp(a, b));
    Ok(walls.into_iter().map(|(_, w)| w).collect())
}

/// Orders rays of one positive cone counterclockwise.
pub(crate) fn angular_cmp(a: &[BigInt], b: &[BigInt]) -> Ordering {
    match det2(a, b).sign() {
        num_bigint::Sign::Plus => Ordering::Less,
        num_bigint::Sign::Minus => Ordering::Greater,
        num_bigint::Sign::NoSign => Ordering::Equal,
    }
}
