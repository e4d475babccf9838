//! Finite root systems of negative-definite even lattices: enumeration,
//! reflections, simple roots, ADE typing and chamber reduction.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::ade::{AdeComponent, AdeType, Family};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numeric::{short_vectors, to_rational_vec, Rational};
use crate::sublattice::Embedding;

/// All norm −2 vectors of a negative-definite even lattice, sorted
/// lexicographically. Closed under negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    parent: Lattice,
    roots: Vec<Vec<BigInt>>,
}

impl RootSystem {
    pub fn parent(&self) -> &Lattice {
        &self.parent
    }

    pub fn roots(&self) -> &[Vec<BigInt>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.roots.binary_search_by(|r| r.as_slice().cmp(v)).is_ok()
    }
}

/// Enumerates the roots of a negative-definite lattice by exact
/// Fincke–Pohst search on the negated Gram matrix.
pub fn enumerate_roots(l: &Lattice) -> Result<RootSystem> {
    let negated = l.gram().map(|x| Rational::from_integer(-x));
    let two = Rational::from_integer(2.into());
    let shell = short_vectors(&negated, &two).map_err(|_| Error::NotNegativeDefinite)?;
    let minus_two = BigInt::from(-2);
    let roots = shell.into_iter().filter(|v| l.norm(v) == minus_two).collect();
    Ok(RootSystem { parent: l.clone(), roots })
}

/// `r_β(v) = v + (v·β) β`, the reflection in a root.
pub fn reflect(l: &Lattice, beta: &[BigInt], v: &[BigInt]) -> Result<Vec<BigInt>> {
    if l.norm(beta) != BigInt::from(-2) {
        return Err(Error::NotARoot(beta.to_vec()));
    }
    let c = l.inner(v, beta);
    Ok(v.iter().zip(beta).map(|(x, b)| x + &c * b).collect())
}

/// Linear functional used to split roots into positive and negative ones.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Functional {
    /// `(1, ε, ε², …)` for infinitesimal `ε`: a root is positive when its
    /// first nonzero coordinate is.
    #[default]
    Lexicographic,
    /// Coordinate dot product with an explicit rational vector.
    Vector(Vec<Rational>),
}

impl Functional {
    fn sign(&self, root: &[BigInt]) -> i32 {
        match self {
            Functional::Lexicographic => root.iter().find(|x| !x.is_zero()).map_or(0, |x| if x.is_positive() { 1 } else { -1 }),
            Functional::Vector(f) => {
                let value: Rational = f.iter().zip(to_rational_vec(root)).map(|(a, b)| a * b).sum();
                if value.is_positive() {
                    1
                } else if value.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    pub positive: Vec<Vec<BigInt>>,
    pub simple: Vec<Vec<BigInt>>,
}

/// Positive roots are those the functional makes positive; simple roots are
/// positive roots that are not the sum of two positive roots.
pub fn positive_system(rs: &RootSystem, functional: &Functional) -> Result<PositiveSystem> {
    let mut positive = Vec::new();
    for r in &rs.roots {
        match functional.sign(r) {
            0 => return Err(Error::VanishesOnRoot(r.clone())),
            1 => positive.push(r.clone()),
            _ => {}
        }
    }
    let mut sums = HashSet::new();
    for (i, a) in positive.iter().enumerate() {
        for b in &positive[i + 1..] {
            sums.insert(a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<BigInt>>());
        }
    }
    let simple = positive.iter().filter(|r| !sums.contains(*r)).cloned().collect();
    Ok(PositiveSystem { positive, simple })
}

/// Classifies the Dynkin diagram of the lexicographic simple roots.
pub fn ade_type(rs: &RootSystem) -> Result<AdeType> {
    let ps = positive_system(rs, &Functional::Lexicographic)?;
    classify_simple_roots(&rs.parent, &ps.simple)
}

/// Splits the simple roots into Dynkin components (edges where the pairing
/// is 1) and classifies each by shape.
pub fn classify_simple_roots(l: &Lattice, simple: &[Vec<BigInt>]) -> Result<AdeType> {
    let n = simple.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let p = l.inner(&simple[i], &simple[j]);
            if p == BigInt::from(1) {
                adj[i].push(j);
                adj[j].push(i);
            } else if !p.is_zero() {
                return Err(Error::NotAde);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        components.push(classify_component(&comp, &adj)?);
    }
    Ok(AdeType::new(components))
}

fn classify_component(nodes: &[usize], adj: &[Vec<usize>]) -> Result<AdeComponent> {
    let n = nodes.len();
    let edges: usize = nodes.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edges + 1 != n {
        return Err(Error::NotAde);
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => AdeComponent::new(Family::A, n),
        [center] if adj[*center].len() == 3 => {
            let mut arms: Vec<usize> = adj[*center]
                .iter()
                .map(|&first| {
                    // walk away from the center along a path
                    let (mut prev, mut cur, mut len) = (*center, first, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => AdeComponent::new(Family::D, k + 3),
                [1, 2, k @ 2..=4] => AdeComponent::new(Family::E, k + 4),
                _ => Err(Error::NotAde),
            }
        }
        _ => Err(Error::NotAde),
    }
}

/// Reflects `v` in simple roots it pairs negatively with until
/// `v'·β >= 0` for every simple root `β`. Returns `v'` and the roots used,
/// in order of application.
pub fn chamber_reduce(l: &Lattice, v: &[BigInt], simple: &[Vec<BigInt>]) -> Result<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    let mut current = v.to_vec();
    let mut word = Vec::new();
    while let Some(beta) = simple.iter().find(|b| l.inner(&current, b).is_negative()) {
        current = reflect(l, beta, &current)?;
        word.push(beta.clone());
    }
    Ok((current, word))
}

/// Does the orthogonal complement of `x_model` inside its ambient lattice
/// contain a root? The complement must be negative definite.
pub fn has_root_orthogonal_to(x_model: &Embedding) -> Result<bool> {
    let complement = x_model.orthogonal_complement()?;
    let k = complement.domain();
    if !k.is_negative_definite() {
        return Err(Error::NotNegativeDefinite);
    }
    Ok(!enumerate_roots(k)?.is_empty())
}
