//! Exact lattice computations behind lattice-(quasi)polarized K3 surfaces.
//!
//! The crate works throughout with arbitrary-precision integers and
//! rationals. It provides even lattices and their invariants
//! ([`lattice`]), explicit embeddings with primitivity, saturation and
//! orthogonal complements ([`sublattice`]), finite root systems with ADE
//! typing and Weyl group orders ([`roots`]), and the wall and small-cone
//! structure of a hyperbolic lattice together with very-irrationality tests,
//! Pell isometries, orbit counts and period-fiber cardinalities ([`cones`]).

pub mod ade;
pub mod cones;
pub mod error;
pub mod lattice;
pub mod numeric;
pub mod roots;
pub mod sublattice;

pub use ade::{AdeComponent, AdeType, Family};
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use sublattice::Embedding;
