//! Walls and small cones of a hyperbolic lattice `Λ`.
//!
//! A wall is cut out by a vector `β_Λ ∈ Λ*` with `−2 ≤ β_Λ² < 0`. It is
//! stored through the integer functional `g = G·β_Λ` (the values `β·e_i`),
//! so every wall has an integer normal even when `β_Λ ∉ Λ`. Rank-2 lattices
//! get a full fan structure with exact cone location.

mod dolgachev;
mod embedded;
mod fan;
mod fiber;
mod irrational;
mod orbits;
mod pell;
mod walls;

pub use dolgachev::{dolgachev_comparison, DolgachevReport};
pub use embedded::{wall_realizability_embedded, DEFAULT_SEARCH_BOUND};
pub use fan::{locate_small_cone, same_small_cone, small_cones_rank2, small_cones_rank2_with, FanRay, RayKind, SmallConeFan};
pub use fiber::{fiber_cardinality, is_period_generic};
pub use irrational::{very_irrational, IrrationalVector};
pub use orbits::{orbit_count_rank2, walls_in_translates, OrbitCount};
pub use pell::{cone_automorph, inverse_unimodular2, is_isometry, pell_fundamental, pell_isometry, preserves_positive_cone, PellUnit};
pub use walls::{
    admissible_multiples, functional_norm, wall_candidates_abstract, wall_for_functional, wall_ray, Realizability, Region, Wall,
    WallSource,
};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::QuadraticSurd;

/// `det[u, v]` for plane vectors.
pub fn det2(u: &[BigInt], v: &[BigInt]) -> BigInt {
    &u[0] * &v[1] - &u[1] * &v[0]
}

pub(crate) fn det2_surd(u: &[QuadraticSurd], v: &[QuadraticSurd]) -> QuadraticSurd {
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

/// Default interior point of the positive cone: the first vector of
/// positive norm when vectors are ordered by max-norm and then in
/// descending lexicographic order. For `U` this is `(1,1)`, for the Pell
/// lattices `(1,0)`. Intended for small ranks.
pub fn default_positive_vector(l: &Lattice) -> Result<Vec<BigInt>> {
    if !l.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let r = l.rank();
    for m in 1i64.. {
        // odometer over [-m, m]^r, most significant coordinate first, descending
        let mut x = vec![m; r];
        loop {
            if x.iter().any(|c| c.abs() == m) {
                let v: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
                if l.norm(&v).is_positive() {
                    return Ok(v);
                }
            }
            if !step_down(&mut x, m) {
                break;
            }
        }
    }
    unreachable!("hyperbolic lattices have positive vectors")
}

/// Next vector of `[-m, m]^r` in descending lexicographic order.
fn step_down(x: &mut [i64], m: i64) -> bool {
    for i in (0..x.len()).rev() {
        if x[i] > -m {
            x[i] -= 1;
            for c in &mut x[i + 1..] {
                *c = m;
            }
            return true;
        }
    }
    false
}
