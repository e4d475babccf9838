use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{common_radicand, QuadraticSurd, RatMatrix, Rational};

/// A vector `h = Σ_j c_j ω_j` of `Λ ⊗ R` written over a basis `ω_0 = 1,
/// ω_1, …, ω_k` of reals that are linearly independent over `Q`.
///
/// Column `j` of `coeffs` is the rational coordinate vector `c_j`. Numeric
/// values for the `ω_j` are optional; they are needed only for sign
/// questions (norms, cone location), never for very-irrationality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrationalVector {
    lattice: Lattice,
    coeffs: RatMatrix,
    tags: Vec<String>,
    values: Option<Vec<QuadraticSurd>>,
}

impl IrrationalVector {
    pub fn new(lattice: Lattice, coeffs: RatMatrix, tags: Vec<String>, values: Option<Vec<QuadraticSurd>>) -> Result<Self> {
        if coeffs.rows() != lattice.rank() {
            return Err(Error::DimensionMismatch { expected: lattice.rank(), got: coeffs.rows() });
        }
        if tags.is_empty() || tags.len() != coeffs.cols() {
            return Err(Error::DimensionMismatch { expected: coeffs.cols(), got: tags.len() });
        }
        if tags.iter().collect::<HashSet<_>>().len() != tags.len() {
            return Err(Error::InvalidParameter("basis tags must be distinct".into()));
        }
        if let Some(vals) = &values {
            if vals.len() != tags.len() {
                return Err(Error::DimensionMismatch { expected: tags.len(), got: vals.len() });
            }
            let d = common_radicand(vals).map_err(|(a, b)| Error::MixedRadicals(a, b))?;
            if vals[0] != QuadraticSurd::from_int(1) {
                return Err(Error::InvalidParameter("the first basis element must be 1".into()));
            }
            // inside Q(√d) at most 1 and one irrational value are independent
            let independent = match vals.len() {
                1 => true,
                2 => !d.is_one() && !vals[1].surd_part().is_zero(),
                _ => false,
            };
            if !independent {
                return Err(Error::DependentBasis);
            }
        }
        Ok(IrrationalVector { lattice, coeffs, tags, values })
    }

    /// A rational vector (`k = 0`).
    pub fn rational(lattice: Lattice, v: &[Rational]) -> Result<Self> {
        let coeffs = RatMatrix::from_cols(v.len(), &[v.to_vec()]);
        Self::new(lattice, coeffs, vec!["1".into()], Some(vec![QuadraticSurd::from_int(1)]))
    }

    /// A vector with coordinates in a single `Q(√d)`, over the basis `1, √d`.
    pub fn from_surds(lattice: Lattice, coords: &[QuadraticSurd]) -> Result<Self> {
        let d = common_radicand(coords).map_err(|(a, b)| Error::MixedRadicals(a, b))?;
        let rat: Vec<Rational> = coords.iter().map(|c| c.rational_part().clone()).collect();
        if d.is_one() {
            return Self::rational(lattice, &rat);
        }
        let irr: Vec<Rational> = coords.iter().map(|c| c.surd_part().clone()).collect();
        let coeffs = RatMatrix::from_cols(coords.len(), &[rat, irr]);
        let tags = vec!["1".into(), format!("sqrt({d})")];
        let values = vec![QuadraticSurd::from_int(1), QuadraticSurd::sqrt(&d)];
        Self::new(lattice, coeffs, tags, Some(values))
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn values(&self) -> Option<&[QuadraticSurd]> {
        self.values.as_deref()
    }

    /// True when no nonzero rational functional annihilates `h`, i.e. the
    /// coefficient matrix has full row rank.
    pub fn very_irrational(&self) -> bool {
        self.coeffs.rank() == self.lattice.rank()
    }

    /// Numeric coordinates of `h`.
    pub fn coordinates(&self) -> Result<Vec<QuadraticSurd>> {
        let values = match &self.values {
            Some(v) => v,
            None if self.tags.len() == 1 => &vec![QuadraticSurd::from_int(1)],
            None => return Err(Error::MissingBasisValue(self.tags[1].clone())),
        };
        Ok((0..self.coeffs.rows())
            .map(|i| {
                values
                    .iter()
                    .enumerate()
                    .fold(QuadraticSurd::zero(), |acc, (j, w)| &acc + &w.scale(&self.coeffs[(i, j)]))
            })
            .collect())
    }

    /// Exact norm `h²`.
    pub fn norm(&self) -> Result<QuadraticSurd> {
        let h = self.coordinates()?;
        let g = self.lattice.gram();
        let mut total = QuadraticSurd::zero();
        for i in 0..h.len() {
            for j in 0..h.len() {
                let w = Rational::from_integer(g[(i, j)].clone());
                if !w.is_zero() {
                    total = &total + &(&h[i] * &h[j]).scale(&w);
                }
            }
        }
        Ok(total)
    }
}

pub fn very_irrational(h: &IrrationalVector) -> bool {
    h.very_irrational()
}
