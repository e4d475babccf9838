//! Explicit embeddings of one lattice into another.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{hnf_basis, integer_kernel, snf, to_rational_vec, IntMatrix, RatMatrix, Rational};

/// A lattice embedding `domain ↪ ambient`. The columns of `matrix` are the
/// images of the domain basis in ambient coordinates. Gram compatibility and
/// full column rank are checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    domain: Lattice,
    ambient: Lattice,
    matrix: IntMatrix,
}

impl Embedding {
    pub fn new(domain: Lattice, ambient: Lattice, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != ambient.rank() {
            return Err(Error::DimensionMismatch { expected: ambient.rank(), got: matrix.rows() });
        }
        if matrix.cols() != domain.rank() {
            return Err(Error::DimensionMismatch { expected: domain.rank(), got: matrix.cols() });
        }
        if ambient.gram().congruence(&matrix) != *domain.gram() {
            return Err(Error::GramMismatch);
        }
        if snf(&matrix).rank() != domain.rank() {
            return Err(Error::NotFullRank);
        }
        Ok(Embedding { domain, ambient, matrix })
    }

    /// The sublattice of `ambient` spanned by the given vectors (linearly
    /// independent), with its induced Gram matrix.
    pub fn from_basis(ambient: &Lattice, basis: &[Vec<BigInt>]) -> Result<Self> {
        let matrix = IntMatrix::from_cols(ambient.rank(), basis);
        let gram = ambient.gram().congruence(&matrix);
        Embedding::new(Lattice::new(gram, None)?, ambient.clone(), matrix)
    }

    /// Identity embedding of a lattice into itself.
    pub fn identity(lattice: &Lattice) -> Self {
        let matrix = IntMatrix::identity(lattice.rank());
        Embedding { domain: lattice.clone(), ambient: lattice.clone(), matrix }
    }

    pub fn domain(&self) -> &Lattice {
        &self.domain
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Images of the domain basis.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.matrix.cols()).map(|j| self.matrix.col(j)).collect()
    }

    /// Ambient coordinates of a domain vector.
    pub fn image(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    pub fn image_rational(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.to_rational().mul_vec(v)
    }

    /// Pairings `β·J(e_i)` of an ambient vector with the embedded basis.
    pub fn pairings(&self, beta: &[BigInt]) -> Vec<BigInt> {
        self.pairing_matrix().mul_vec(beta)
    }

    /// `Jᵀ·A`: rows are the functionals `x ↦ x·J(e_i)` on the ambient.
    pub fn pairing_matrix(&self) -> IntMatrix {
        &self.matrix.transpose() * self.ambient.gram()
    }

    /// Smith elementary divisors of the embedding matrix.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        snf(&self.matrix).divisors
    }

    /// The cokernel `ambient / image` is torsion-free.
    pub fn is_primitive(&self) -> bool {
        self.elementary_divisors().iter().all(One::is_one)
    }

    /// Embedding of the primitive closure `(image ⊗ Q) ∩ ambient`, with a
    /// Hermite-normal-form basis.
    pub fn saturate(&self) -> Embedding {
        let n = self.ambient.rank();
        // vectors annihilating the image under the standard dot product
        let annihilator = integer_kernel(&self.matrix.transpose());
        let closure = if annihilator.is_empty() {
            (0..n).map(|i| unit(n, i)).collect()
        } else {
            integer_kernel(&IntMatrix::from_rows(annihilator))
        };
        Embedding::from_basis(&self.ambient, &closure).expect("saturation of a valid embedding is valid")
    }

    /// `{v ∈ ambient : v·J(λ) = 0 for all λ}`, primitive by construction,
    /// with a Hermite-normal-form basis.
    pub fn orthogonal_complement(&self) -> Result<Embedding> {
        if self.domain.is_degenerate() {
            return Err(Error::Degenerate);
        }
        let basis = integer_kernel(&self.pairing_matrix());
        let matrix = IntMatrix::from_cols(self.ambient.rank(), &basis);
        let gram = self.ambient.gram().congruence(&matrix);
        let label = self.domain.label().map(|l| format!("{l}^perp"));
        Embedding::new(Lattice::new(gram, label)?, self.ambient.clone(), matrix)
    }

    /// Is the ambient vector in the rational span of the image?
    pub fn in_span(&self, beta: &[BigInt]) -> bool {
        let mut cols = self.basis();
        cols.push(beta.to_vec());
        let m = IntMatrix::from_cols(self.ambient.rank(), &cols);
        snf(&m).rank() <= self.domain.rank()
    }

    /// Gram matrix of the lattice generated by the image basis and `beta`.
    /// The result may be degenerate; classification is up to the caller.
    pub fn span_with_vector(&self, beta: &[BigInt]) -> Result<Lattice> {
        if beta.len() != self.ambient.rank() {
            return Err(Error::DimensionMismatch { expected: self.ambient.rank(), got: beta.len() });
        }
        if self.in_span(beta) {
            return Err(Error::InSpan);
        }
        let mut cols = self.basis();
        cols.push(beta.to_vec());
        let m = IntMatrix::from_cols(self.ambient.rank(), &cols);
        Lattice::new(self.ambient.gram().congruence(&m), None)
    }

    /// The component `β_Λ ∈ Λ ⊗ Q` of `beta`, in domain coordinates: the
    /// unique rational vector with `β_Λ·λ = β·J(λ)`. It lies in `Λ*`.
    pub fn project_to_domain(&self, beta: &[BigInt]) -> Result<Vec<Rational>> {
        if beta.len() != self.ambient.rank() {
            return Err(Error::DimensionMismatch { expected: self.ambient.rank(), got: beta.len() });
        }
        self.domain.dual_coords(&self.pairings(beta))
    }

    /// `β − J(β_Λ)`, the component orthogonal to the image, in ambient coordinates.
    pub fn orthogonal_part(&self, beta: &[BigInt]) -> Result<Vec<Rational>> {
        let along = self.image_rational(&self.project_to_domain(beta)?);
        Ok(to_rational_vec(beta).iter().zip(&along).map(|(b, a)| b - a).collect())
    }

    /// Rational ambient norm.
    pub fn ambient_norm_rational(&self, v: &[Rational]) -> Rational {
        self.ambient.inner_rational(v, v)
    }

    /// Gram matrix of the ambient as a rational matrix.
    pub fn ambient_gram_rational(&self) -> RatMatrix {
        self.ambient.gram().to_rational()
    }
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}

pub fn is_primitive(e: &Embedding) -> bool {
    e.is_primitive()
}

pub fn saturate(e: &Embedding) -> Embedding {
    e.saturate()
}

pub fn orthogonal_complement(e: &Embedding) -> Result<Embedding> {
    e.orthogonal_complement()
}

pub fn span_with_vector(e: &Embedding, beta: &[BigInt]) -> Result<Lattice> {
    e.span_with_vector(beta)
}

pub fn project_to_domain(e: &Embedding, beta: &[BigInt]) -> Result<Vec<Rational>> {
    e.project_to_domain(beta)
}

/// Does the rational span of `inner` lie in that of `outer` (same ambient)?
pub fn span_contains(outer: &Embedding, inner: &Embedding) -> bool {
    inner.basis().iter().all(|v| outer.in_span(v))
}

/// HNF basis of the image; equal for embeddings with the same image lattice.
pub fn image_basis(e: &Embedding) -> Vec<Vec<BigInt>> {
    hnf_basis(&e.basis(), e.ambient.rank())
}
