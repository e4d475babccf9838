use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::irrational::IrrationalVector;
use super::pell::{inverse_unimodular2, is_isometry, preserves_positive_cone};
use super::walls::{
    admissible_multiples, angular_cmp, rational_null_rays, region_functionals, validate_rays, wall_candidates_abstract,
    wall_for_functional, wall_ray, Realizability, Region, Wall,
};
use super::{default_positive_vector, det2, det2_surd};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{is_perfect_square, primitive_normalized, IntMatrix, QuadraticSurd, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RayKind {
    /// Null ray on the boundary of the positive cone.
    Boundary,
    /// Bounding ray of a user-supplied subcone.
    Region,
    /// Trace of a wall.
    Wall,
}

impl RayKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RayKind::Boundary => "boundary",
            RayKind::Region => "region",
            RayKind::Wall => "wall",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanRay {
    pub coords: Vec<QuadraticSurd>,
    pub kind: RayKind,
    pub norm: Rational,
}

impl FanRay {
    fn integral(v: &[BigInt], kind: RayKind, l: &Lattice) -> Self {
        FanRay { coords: v.iter().map(QuadraticSurd::from).collect(), kind, norm: Rational::from_integer(l.norm(v)) }
    }

    /// Integer coordinates, if the ray is rational.
    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.coords
            .iter()
            .map(|c| (c.is_rational() && c.rational_part().is_integer()).then(|| c.rational_part().to_integer()))
            .collect()
    }
}

/// Small-cone decomposition of (a subcone of) the positive cone of a rank-2
/// hyperbolic lattice.
///
/// `rays` runs counterclockwise: the two bounding rays sit at the ends and
/// `rays[i + 1]` is the trace of `walls[i]`. Cone `i` lies between
/// `rays[i]` and `rays[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallConeFan {
    lattice: Lattice,
    reference: Vec<BigInt>,
    rays: Vec<FanRay>,
    walls: Vec<Wall>,
}

impl SmallConeFan {
    /// Reassembles a fan from serialized parts, checking every invariant.
    pub fn from_parts(lattice: Lattice, reference: Vec<BigInt>, rays: Vec<FanRay>, walls: Vec<Wall>) -> Result<Self> {
        check_plane(&lattice)?;
        if reference.len() != 2 || !lattice.norm(&reference).is_positive() {
            return Err(Error::InvalidParameter("reference vector must have positive norm".into()));
        }
        if rays.len() != walls.len() + 2 {
            return Err(Error::InvalidParameter("fan needs one ray per wall plus two bounding rays".into()));
        }
        let ends = (rays[0].kind, rays[rays.len() - 1].kind);
        if ends.0 != ends.1 || ends.0 == RayKind::Wall {
            return Err(Error::InvalidParameter("fan must be bounded by two boundary or two region rays".into()));
        }
        for (ray, wall) in rays[1..rays.len() - 1].iter().zip(&walls) {
            let matches = wall.lambda == primitive_normalized(&wall.lambda)
                && admissible_multiples(&lattice, &wall.lambda)?
                    .iter()
                    .any(|(k, q, src)| *k == wall.multiple && *q == wall.norm && *src == wall.source);
            if ray.kind != RayKind::Wall || !matches {
                return Err(Error::InvalidParameter(format!("inconsistent wall {:?}", wall.lambda)));
            }
            if ray.integer_coords() != Some(wall_ray(&wall.lambda, &lattice, &reference)) {
                return Err(Error::InvalidParameter(format!("ray does not match wall {:?}", wall.lambda)));
            }
        }
        for pair in rays.windows(2) {
            if det2_surd(&pair[0].coords, &pair[1].coords).signum() <= 0 {
                return Err(Error::InvalidParameter("fan rays are not in strict angular order".into()));
            }
        }
        Ok(SmallConeFan { lattice, reference, rays, walls })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn reference(&self) -> &[BigInt] {
        &self.reference
    }

    pub fn rays(&self) -> &[FanRay] {
        &self.rays
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    /// Does the fan cover the whole positive cone?
    pub fn is_full_cone(&self) -> bool {
        self.rays[0].kind == RayKind::Boundary
    }

    pub fn cone_count(&self) -> usize {
        self.rays.len() - 1
    }

    /// Index pairs of the rays bounding each cone.
    pub fn cones(&self) -> Vec<(usize, usize)> {
        (0..self.cone_count()).map(|i| (i, i + 1)).collect()
    }

    /// Integer directions of the wall rays, in fan order.
    pub fn wall_rays(&self) -> Vec<Vec<BigInt>> {
        self.walls.iter().map(|w| wall_ray(&w.lambda, &self.lattice, &self.reference)).collect()
    }

    /// Image of the fan under a cone-preserving isometry `m`. Orientation
    /// reversing isometries reverse the cone order. Witnesses are dropped.
    pub fn transform(&self, m: &IntMatrix) -> Result<SmallConeFan> {
        if !is_isometry(&self.lattice, m) {
            return Err(Error::NotIsometry);
        }
        if !preserves_positive_cone(&self.lattice, m, &self.reference) {
            return Err(Error::SwapsComponents);
        }
        let dual = inverse_unimodular2(m).transpose();
        let mut rays: Vec<FanRay> = self
            .rays
            .iter()
            .map(|r| {
                let coords = (0..2)
                    .map(|i| {
                        &r.coords[0].scale(&Rational::from_integer(m[(i, 0)].clone()))
                            + &r.coords[1].scale(&Rational::from_integer(m[(i, 1)].clone()))
                    })
                    .collect();
                FanRay { coords, kind: r.kind, norm: r.norm.clone() }
            })
            .collect();
        let mut walls: Vec<Wall> = self
            .walls
            .iter()
            .map(|w| {
                let realizability = match w.realizability {
                    Realizability::Refuted => Realizability::Refuted,
                    _ => Realizability::Assumed,
                };
                Wall { lambda: primitive_normalized(&dual.mul_vec(&w.lambda)), realizability, ..w.clone() }
            })
            .collect();
        let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
        if det.is_negative() {
            rays.reverse();
            walls.reverse();
        }
        SmallConeFan::from_parts(self.lattice.clone(), self.reference.clone(), rays, walls)
    }
}

fn check_plane(l: &Lattice) -> Result<()> {
    if l.rank() != 2 {
        return Err(Error::WrongRank { expected: 2, got: l.rank() });
    }
    if !l.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    Ok(())
}

/// Null rays bounding the positive cone containing `p`, counterclockwise.
/// Exact: rational when the lattice is isotropic, in `Q(√D)` otherwise.
pub(crate) fn boundary_rays(l: &Lattice, p: &[BigInt]) -> (Vec<QuadraticSurd>, Vec<QuadraticSurd>) {
    if let Some((n1, n2)) = rational_null_rays(l, p) {
        let conv = |v: Vec<BigInt>| v.iter().map(QuadraticSurd::from).collect();
        return (conv(n1), conv(n2));
    }
    let g = l.gram();
    let (a, b, c) = (&g[(0, 0)], &g[(0, 1)], &g[(1, 1)]);
    let disc = b * b - a * c;
    debug_assert!(!a.is_zero() && !is_perfect_square(&disc));
    let gp = l.functional(p);
    let ray = |sign: i64| {
        let v = vec![
            QuadraticSurd::new(Rational::from_integer(-b), Rational::from_integer(sign.into()), disc.clone()),
            QuadraticSurd::from(a),
        ];
        let pairing = &v[0].scale(&Rational::from_integer(gp[0].clone())) + &v[1].scale(&Rational::from_integer(gp[1].clone()));
        if pairing.signum() < 0 {
            v.into_iter().map(|x| -x).collect()
        } else {
            v
        }
    };
    let (r1, r2) = (ray(1), ray(-1));
    if det2_surd(&r1, &r2).signum() > 0 {
        (r1, r2)
    } else {
        (r2, r1)
    }
}

/// Fan with the default positive cone.
pub fn small_cones_rank2(l: &Lattice, region: &Region) -> Result<SmallConeFan> {
    check_plane(l)?;
    small_cones_rank2_with(l, region, &default_positive_vector(l)?)
}

/// Fan in the positive cone containing `reference`. Full-cone mode needs
/// a finite wall set; otherwise pass a region.
pub fn small_cones_rank2_with(l: &Lattice, region: &Region, reference: &[BigInt]) -> Result<SmallConeFan> {
    check_plane(l)?;
    if reference.len() != 2 || !l.norm(reference).is_positive() {
        return Err(Error::InvalidParameter("reference vector must have positive norm".into()));
    }
    let p = reference.to_vec();
    let (lo, hi, walls) = match region {
        Region::FullCone => {
            let (lo, hi) = boundary_rays(l, &p);
            let walls = wall_candidates_abstract(l, region)?;
            (FanRay { coords: lo, kind: RayKind::Boundary, norm: Rational::zero() }, FanRay { coords: hi, kind: RayKind::Boundary, norm: Rational::zero() }, walls)
        }
        Region::Rays(v1, v2) => {
            let (v1, v2) = validate_rays(l, v1, v2, &p)?;
            if det2(&v1, &v2).is_zero() {
                return Err(Error::InvalidRegion("region rays are parallel".into()));
            }
            let mut walls = Vec::new();
            for g in region_functionals(l, &v1, &v2) {
                if let Some(w) = wall_for_functional(l, &g)? {
                    let ray = wall_ray(&w.lambda, l, &p);
                    if det2(&v1, &ray).is_positive() && det2(&ray, &v2).is_positive() {
                        walls.push(w);
                    }
                }
            }
            (FanRay::integral(&v1, RayKind::Region, l), FanRay::integral(&v2, RayKind::Region, l), walls)
        }
        Region::CoefficientBound(_) => {
            return Err(Error::InvalidRegion("a coefficient bound does not define a fan region".into()));
        }
    };
    let mut placed: Vec<(Vec<BigInt>, Wall)> = walls.into_iter().map(|w| (wall_ray(&w.lambda, l, &p), w)).collect();
    placed.sort_by(|(a, _), (b, _)| angular_cmp(a, b));
    let mut rays = vec![lo];
    rays.extend(placed.iter().map(|(v, _)| FanRay::integral(v, RayKind::Wall, l)));
    rays.push(hi);
    let walls = placed.into_iter().map(|(_, w)| w).collect();
    SmallConeFan::from_parts(l.clone(), p, rays, walls)
}

/// Index of the small cone strictly containing `h`.
pub fn locate_small_cone(h: &IrrationalVector, fan: &SmallConeFan) -> Result<usize> {
    if h.lattice().gram() != fan.lattice().gram() {
        return Err(Error::InvalidParameter("vector and fan live on different lattices".into()));
    }
    let coords = h.coordinates()?;
    let norm = h.norm()?;
    if norm.signum() <= 0 {
        return Err(Error::NonPositiveNorm(norm.to_string()));
    }
    let gp = fan.lattice().functional(fan.reference());
    let pairing = &coords[0].scale(&Rational::from_integer(gp[0].clone())) + &coords[1].scale(&Rational::from_integer(gp[1].clone()));
    if pairing.signum() <= 0 {
        return Err(Error::OutsideCone);
    }
    let det_int = |v: &[BigInt]| {
        &coords[1].scale(&Rational::from_integer(v[0].clone())) - &coords[0].scale(&Rational::from_integer(v[1].clone()))
    };
    if !fan.is_full_cone() {
        let lo = fan.rays[0].integer_coords().expect("region rays are integral");
        let hi = fan.rays[fan.rays.len() - 1].integer_coords().expect("region rays are integral");
        if det_int(&lo).signum() <= 0 || det_int(&hi).signum() >= 0 {
            return Err(Error::OutsideRegion);
        }
    }
    let mut index = 0;
    for (w, ray) in fan.walls.iter().zip(fan.wall_rays()) {
        match det_int(&ray).signum() {
            0 => return Err(Error::OnWall(w.lambda.clone())),
            s if s > 0 => index += 1,
            _ => {}
        }
    }
    Ok(index)
}

pub fn same_small_cone(h1: &IrrationalVector, h2: &IrrationalVector, fan: &SmallConeFan) -> Result<bool> {
    Ok(locate_small_cone(h1, fan)? == locate_small_cone(h2, fan)?)
}
