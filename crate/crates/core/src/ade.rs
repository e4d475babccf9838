//! ADE symbols, their negated Cartan matrices, and Weyl group orders.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::numeric::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

/// One irreducible simply-laced root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdeComponent {
    family: Family,
    rank: usize,
}

impl AdeComponent {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(AdeComponent { family, rank })
        } else {
            Err(Error::MalformedSymbol(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the Dynkin diagram, Bourbaki numbering (0-based).
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                // 1-3-4-5-6-7-8 with 2 attached to 4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        }
    }

    /// Negated Cartan matrix: `-2` on the diagonal, `1` on Dynkin edges.
    pub fn gram(&self) -> IntMatrix {
        let n = self.rank;
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            g[(i, i)] = BigInt::from(-2);
        }
        for (i, j) in self.edges() {
            g[(i, j)] = BigInt::one();
            g[(j, i)] = BigInt::one();
        }
        g
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            _ => 240,
        }
    }

    pub fn weyl_order(&self) -> BigInt {
        let n = self.rank;
        let factorial = |k: usize| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
        match (self.family, n) {
            (Family::A, _) => factorial(n + 1),
            (Family::D, _) => BigInt::from(2).pow(n as u32 - 1) * factorial(n),
            (Family::E, 6) => BigInt::from(51_840u64),
            (Family::E, 7) => BigInt::from(2_903_040u64),
            _ => BigInt::from(696_729_600u64),
        }
    }
}

impl fmt::Display for AdeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AdeComponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedSymbol(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            _ => return Err(bad()),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let rank: usize = digits.parse().map_err(|_| bad())?;
        AdeComponent::new(family, rank).map_err(|_| bad())
    }
}

/// A multiset of ADE components, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AdeType(Vec<AdeComponent>);

impl AdeType {
    pub fn new(mut components: Vec<AdeComponent>) -> Self {
        components.sort();
        AdeType(components)
    }

    pub fn components(&self) -> &[AdeComponent] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(AdeComponent::rank).sum()
    }

    pub fn root_count(&self) -> usize {
        self.0.iter().map(AdeComponent::root_count).sum()
    }

    /// Block-diagonal negated Cartan matrix, components in the given order.
    pub fn gram(&self) -> IntMatrix {
        self.0.iter().fold(IntMatrix::zeros(0, 0), |acc, c| acc.block_diag(&c.gram()))
    }

    /// Order of the Weyl group: the product of the component orders.
    pub fn weyl_order(&self) -> BigInt {
        self.0.iter().map(AdeComponent::weyl_order).product()
    }

    pub fn symbols(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

/// Weyl group order of an ADE type.
pub fn weyl_order(t: &AdeType) -> BigInt {
    t.weyl_order()
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.symbols().join("+"))
    }
}

impl FromStr for AdeType {
    type Err = Error;

    /// Parses `A1+A2`, `A1⊕A2`, `A1,A2` or whitespace-separated symbols;
    /// `0` or the empty string is the empty type.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(AdeType::default());
        }
        let parts = s.split(|c: char| c == '+' || c == ',' || c == '⊕' || c.is_whitespace());
        let components = parts.filter(|p| !p.is_empty()).map(str::parse).collect::<Result<Vec<_>, _>>()?;
        Ok(AdeType::new(components))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_symbols() {
        let t: AdeType = "A2+A1".parse().unwrap();
        assert_eq!(t.symbols(), vec!["A1", "A2"]);
        assert_eq!("E8".parse::<AdeType>().unwrap().rank(), 8);
        assert_eq!("A1 ⊕ D4".parse::<AdeType>().unwrap().to_string(), "A1+D4");
        for bad in ["D3", "E9", "E5", "B2", "A0", "A"] {
            assert!(bad.parse::<AdeType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn weyl_orders() {
        let order = |s: &str| s.parse::<AdeType>().unwrap().weyl_order();
        assert_eq!(order("A1"), BigInt::from(2));
        assert_eq!(order("A2"), BigInt::from(6));
        assert_eq!(order("A1+A1"), BigInt::from(4));
        assert_eq!(order("D4"), BigInt::from(192));
        assert_eq!(order("E8"), BigInt::from(696_729_600u64));
        assert_eq!(order("0"), BigInt::from(1));
    }

    #[test]
    fn cartan_shapes() {
        let a2 = "A2".parse::<AdeType>().unwrap().gram();
        assert_eq!(a2, IntMatrix::from_i64(&[&[-2, 1], &[1, -2]]));
        let e8 = "E8".parse::<AdeType>().unwrap().gram();
        let edges: usize = (0..8).map(|i| (0..i).filter(|&j| e8[(i, j)] == BigInt::one()).count()).sum();
        assert_eq!(edges, 7);
    }
}
