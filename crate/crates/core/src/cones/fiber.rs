use num_bigint::BigInt;

use crate::ade::weyl_order;
use crate::error::Result;
use crate::lattice::Lattice;
use crate::roots::{ade_type, enumerate_roots};

/// `|W|` for the Weyl group of the roots of a negative-definite lattice;
/// 1 when there are no roots.
pub fn fiber_cardinality(r: &Lattice) -> Result<BigInt> {
    let roots = enumerate_roots(r)?;
    Ok(weyl_order(&ade_type(&roots)?))
}

/// True when the lattice has no roots.
pub fn is_period_generic(r: &Lattice) -> Result<bool> {
    Ok(enumerate_roots(r)?.is_empty())
}
