//! Even integral lattices given by Gram matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ade::AdeType;
use crate::error::{Error, Result};
use crate::numeric::{
    determinant, is_perfect_square, is_positive_definite, snf, symmetric_diagonalize, to_rational_vec, IntMatrix,
    Rational,
};

/// An even lattice: a free abelian group with a symmetric integral bilinear
/// form whose self-pairings are even. Possibly degenerate. Immutable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    gram: IntMatrix,
    label: Option<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix, label: Option<String>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare);
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if let Some(index) = (0..gram.rows()).find(|&i| gram[(i, i)].is_odd()) {
            return Err(Error::NotEven { index });
        }
        Ok(Lattice { gram, label })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows), None)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The rank-0 lattice.
    pub fn zero() -> Self {
        Lattice { gram: IntMatrix::zeros(0, 0), label: None }
    }

    /// The hyperbolic plane `U`.
    pub fn u() -> Self {
        Self::u_scaled(1).expect("n = 1 is valid").with_label("U")
    }

    /// `U(n)`: basis `e, f` with `e² = f² = 0`, `e·f = n`.
    pub fn u_scaled(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("U(n) needs n >= 1, got {n}")));
        }
        let label = if n == 1 { "U".to_string() } else { format!("U({n})") };
        Ok(Self::from_i64(&[&[0, n], &[n, 0]])?.with_label(label))
    }

    /// Negative-definite `E8`: the negated Cartan matrix in Bourbaki numbering.
    pub fn e8() -> Self {
        Self::ade(&"E8".parse().expect("E8 is a valid symbol"))
    }

    /// `U⊕U⊕U⊕E8⊕E8`, the even unimodular lattice of signature (3,19).
    pub fn k3() -> Self {
        let u = Self::u();
        let e8 = Self::e8();
        u.direct_sum(&u).direct_sum(&u).direct_sum(&e8).direct_sum(&e8).with_label("K3")
    }

    /// Rank-2 lattice with form `2n(x² − d·y²)`: Gram `diag(2n, −2nd)`.
    pub fn pell(n: i64, d: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("pell lattice needs n >= 1, got {n}")));
        }
        if d < 1 {
            return Err(Error::InvalidParameter(format!("pell lattice needs d >= 1, got {d}")));
        }
        if is_perfect_square(&BigInt::from(d)) {
            return Err(Error::SquareParameter(d.into()));
        }
        let gram = IntMatrix::from_rows(vec![
            vec![BigInt::from(2 * n), BigInt::zero()],
            vec![BigInt::zero(), BigInt::from(-2 * n) * BigInt::from(d)],
        ]);
        Self::new(gram, Some(format!("pell({n},{d})")))
    }

    /// Direct sum of negated Cartan matrices.
    pub fn ade(t: &AdeType) -> Self {
        let label = if t.is_empty() { "0".to_string() } else { t.to_string() };
        Lattice { gram: t.gram(), label: Some(label) }
    }

    /// Orthogonal direct sum (block-diagonal Gram).
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            (Some(a), None) if other.rank() == 0 => Some(a.clone()),
            (None, Some(b)) if self.rank() == 0 => Some(b.clone()),
            _ => None,
        };
        Lattice { gram: self.gram.block_diag(&other.gram), label }
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn inner(&self, v: &[BigInt], w: &[BigInt]) -> BigInt {
        self.gram.bilinear(v, w)
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.inner(v, v)
    }

    /// The pairing extended to rational vectors.
    pub fn inner_rational(&self, v: &[Rational], w: &[Rational]) -> Rational {
        self.gram.to_rational().bilinear(v, w)
    }

    /// Values of the functional `x ↦ v·x` on the basis: `G v`.
    pub fn functional(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.gram.mul_vec(v)
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.gram)
    }

    pub fn is_degenerate(&self) -> bool {
        self.determinant().is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// `(p, q)`: numbers of positive and negative squares after exact
    /// diagonalization. `p + q < rank` for degenerate lattices.
    pub fn signature(&self) -> (usize, usize) {
        symmetric_diagonalize(&self.gram.to_rational())
            .expect("Gram matrices are symmetric")
            .inertia()
    }

    /// Nondegenerate of signature `(1, rank − 1)`.
    pub fn is_hyperbolic(&self) -> bool {
        self.rank() >= 1 && self.signature() == (1, self.rank() - 1)
    }

    pub fn is_negative_definite(&self) -> bool {
        is_positive_definite(&self.gram.map(|x| Rational::from_integer(-x)))
    }

    /// Invariant factors `> 1` of the discriminant group `Λ*/Λ`.
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>> {
        if self.is_degenerate() {
            return Err(Error::Degenerate);
        }
        Ok(snf(&self.gram).divisors.into_iter().filter(|d| !d.is_one()).collect())
    }

    /// The unique rational vector `λ` with `λ·e_i = values[i]`.
    pub fn dual_coords(&self, values: &[BigInt]) -> Result<Vec<Rational>> {
        if values.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: values.len() });
        }
        self.gram.to_rational().solve(&to_rational_vec(values)).ok_or(Error::Degenerate)
    }

    /// Is the rational vector integral, i.e. in `Λ`?
    pub fn contains(v: &[Rational]) -> bool {
        v.iter().all(|x| x.is_integer())
    }
}

/// Module-level wrappers mirroring the lattice constructors.
pub fn make_u() -> Lattice {
    Lattice::u()
}

pub fn make_u_scaled(n: i64) -> Result<Lattice> {
    Lattice::u_scaled(n)
}

pub fn make_e8() -> Lattice {
    Lattice::e8()
}

pub fn make_k3() -> Lattice {
    Lattice::k3()
}

pub fn make_pell(n: i64, d: i64) -> Result<Lattice> {
    Lattice::pell(n, d)
}

pub fn make_ade(t: &AdeType) -> Lattice {
    Lattice::ade(t)
}

pub fn is_hyperbolic(l: &Lattice) -> bool {
    l.is_hyperbolic()
}
