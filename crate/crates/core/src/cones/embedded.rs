use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::walls::{admissible_multiples, Realizability, Wall, WallSource};
use crate::error::{Error, Result};
use crate::numeric::{
    fincke_pohst, integer_kernel, is_positive_definite, snf, solve_integer, symmetric_diagonalize, IntMatrix, RatMatrix,
    Rational,
};
use crate::sublattice::Embedding;

/// Coordinate bound for the positive directions of an indefinite complement.
pub const DEFAULT_SEARCH_BOUND: u32 = 3;

enum Search {
    Found(Vec<BigInt>),
    /// Nothing found; `true` when the search was exhaustive.
    Exhausted(bool),
}

/// Decides whether the wall comes from an ambient root `β` with
/// `β·J(λ) = g(λ)` and `β² = −2`, where `g` is the wall functional.
///
/// The root splits as `β = β_Λ + β_⊥` with `β_⊥` in the orthogonal
/// complement `K` and `β_⊥² = −2 − β_Λ²`. For negative-definite `K` the
/// coset search is exhaustive. For indefinite `K` the positive directions are
/// searched within `|c_i| ≤ bound` and an empty search is reported as
/// [`Error::Inconclusive`].
pub fn wall_realizability_embedded(e: &Embedding, w: &Wall, bound: u32) -> Result<Wall> {
    if !e.is_primitive() {
        return Err(Error::InvalidParameter("embedding must be primitive".into()));
    }
    if e.ambient().is_degenerate() {
        return Err(Error::Degenerate);
    }
    let l = e.domain();
    let mut multiples = admissible_multiples(l, &w.lambda)?;
    multiples.sort_by_key(|(k, _, _)| *k != w.multiple);
    let complement = e.orthogonal_complement()?;
    let split = Split::new(&complement)?;
    let pairing = e.pairing_matrix();
    let mut inconclusive = false;
    for (k, q, source) in multiples {
        let g: Vec<BigInt> = w.lambda.iter().map(|x| x * &k).collect();
        let Some(beta0) = solve_integer(&pairing, &g) else { continue };
        let found = if source == WallSource::InternalRoot {
            let inside: Vec<BigInt> = l.dual_coords(&g)?.iter().map(|c| c.to_integer()).collect();
            Search::Found(e.image(&inside))
        } else if complement.domain().signature().1 == 0 {
            // β_⊥² < 0 is impossible in a positive semidefinite complement
            Search::Exhausted(true)
        } else {
            split.search(&beta0, bound)
        };
        match found {
            Search::Found(beta) => {
                debug_assert_eq!(e.ambient().norm(&beta), BigInt::from(-2));
                return Ok(Wall {
                    lambda: w.lambda.clone(),
                    multiple: k,
                    norm: q,
                    source,
                    realizability: Realizability::Certified(beta),
                });
            }
            Search::Exhausted(complete) => inconclusive |= !complete,
        }
    }
    if inconclusive {
        return Err(Error::Inconclusive { lambda: w.lambda.clone(), norm: w.norm.clone(), bound });
    }
    Ok(Wall { realizability: Realizability::Refuted, ..w.clone() })
}

/// The complement `K` written as `K = span(U) ⊕ N` with `N` negative
/// definite and `U` completing a basis, all in ambient coordinates.
struct Split {
    gram: IntMatrix,
    extra: Vec<Vec<BigInt>>,
    negative: Vec<Vec<BigInt>>,
}

impl Split {
    fn new(k: &Embedding) -> Result<Self> {
        let gk = k.domain().gram();
        let m = gk.rows();
        let gram = k.ambient().gram().clone();
        let to_ambient = |cols: &[Vec<BigInt>]| cols.iter().map(|z| k.image(z)).collect::<Vec<_>>();
        let (pos, _) = k.domain().signature();
        if pos == 0 {
            let all: Vec<Vec<BigInt>> = (0..m).map(|i| unit(m, i)).collect();
            return Ok(Split { gram, extra: Vec::new(), negative: to_ambient(&all) });
        }
        let positive = positive_block(gk, pos);
        // N = P^⊥ inside K, in K coordinates
        let pairings = IntMatrix::from_rows(positive.iter().map(|p| gk.mul_vec(p)).collect());
        let n_basis = integer_kernel(&pairings);
        let n_mat = IntMatrix::from_cols(m, &n_basis);
        let s = snf(&n_mat);
        let left_inv = s.left.to_rational().inverse().expect("unimodular");
        let extra: Vec<Vec<BigInt>> =
            (n_basis.len()..m).map(|j| left_inv.col(j).iter().map(|x| x.to_integer()).collect()).collect();
        Ok(Split { gram, extra: to_ambient(&extra), negative: to_ambient(&n_basis) })
    }

    fn search(&self, beta0: &[BigInt], bound: u32) -> Search {
        let b = i64::from(bound);
        let dims = self.extra.len();
        let mut c = vec![-b; dims];
        loop {
            let mut w = beta0.to_vec();
            for (ci, u) in c.iter().zip(&self.extra) {
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi += ui * BigInt::from(*ci);
                }
            }
            if let Some(beta) = self.negative_search(&w) {
                return Search::Found(beta);
            }
            let Some(i) = (0..dims).rev().find(|&i| c[i] < b) else { break };
            c[i] += 1;
            for x in &mut c[i + 1..] {
                *x = -b;
            }
        }
        Search::Exhausted(dims == 0)
    }

    /// `β = w + Σ z_i n_i` with `β² = −2`, by Fincke–Pohst on `−G_N`
    /// around the projection of `−w`.
    fn negative_search(&self, w: &[BigInt]) -> Option<Vec<BigInt>> {
        let nb = &self.negative;
        let w_norm = self.gram.bilinear(w, w);
        if nb.is_empty() {
            return (w_norm == BigInt::from(-2)).then(|| w.to_vec());
        }
        let q = RatMatrix::from_rows(
            nb.iter().map(|a| nb.iter().map(|b| Rational::from_integer(-self.gram.bilinear(a, b))).collect()).collect(),
        );
        let y: Vec<Rational> = nb.iter().map(|a| Rational::from_integer(self.gram.bilinear(a, w))).collect();
        let center = q.solve(&y).expect("negative definite block is nonsingular");
        let y_qinv_y: Rational = y.iter().zip(&center).map(|(a, b)| a * b).sum();
        let radius = Rational::from_integer(w_norm + 2) + y_qinv_y;
        let mut hit = None;
        let _ = fincke_pohst(&q, &center, &radius, |z, value| {
            if *value == radius {
                hit = Some(z.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .expect("negative definite block");
        hit.map(|z| {
            let mut beta = w.to_vec();
            for (zi, n) in z.iter().zip(nb) {
                for (bi, ni) in beta.iter_mut().zip(n) {
                    *bi += ni * zi;
                }
            }
            beta
        })
    }
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}

/// `count` integer vectors spanning a positive-definite sublattice: greedy
/// over small combinations of basis vectors, with the positive directions of
/// a rational diagonalization as fallback.
fn positive_block(g: &IntMatrix, count: usize) -> Vec<Vec<BigInt>> {
    let m = g.rows();
    let gram_of = |vs: &[Vec<BigInt>]| {
        RatMatrix::from_rows(vs.iter().map(|a| vs.iter().map(|b| Rational::from_integer(g.bilinear(a, b))).collect()).collect())
    };
    let mut candidates: Vec<Vec<BigInt>> = (0..m).map(|i| unit(m, i)).collect();
    for i in 0..m {
        for j in i + 1..m {
            for sign in [1, -1] {
                let mut v = unit(m, i);
                v[j] = BigInt::from(sign);
                candidates.push(v);
            }
        }
    }
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for c in candidates {
        if chosen.len() == count {
            return chosen;
        }
        chosen.push(c);
        if !is_positive_definite(&gram_of(&chosen)) {
            chosen.pop();
        }
    }
    if chosen.len() == count {
        return chosen;
    }
    let diag = symmetric_diagonalize(&g.to_rational()).expect("symmetric");
    (0..m)
        .filter(|&j| diag.diagonal[j].is_positive())
        .map(|j| {
            let col = diag.transform.col(j);
            let den = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            col.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{wall_candidates_abstract, Region};
    use crate::lattice::Lattice;
    use crate::numeric::{int, ints};

    fn u2_in_uue8() -> Embedding {
        let ambient = Lattice::u().direct_sum(&Lattice::u()).direct_sum(&Lattice::e8());
        let mut e = vec![BigInt::zero(); 12];
        let mut f = vec![BigInt::zero(); 12];
        e[0] = 1.into();
        e[2] = 1.into();
        f[1] = 1.into();
        f[3] = 1.into();
        Embedding::new(Lattice::u_scaled(2).unwrap(), ambient, IntMatrix::from_cols(12, &[e, f])).unwrap()
    }

    #[test]
    fn certified_external_wall() {
        let e = u2_in_uue8();
        let walls = wall_candidates_abstract(e.domain(), &Region::FullCone).unwrap();
        let w = wall_realizability_embedded(&e, &walls[0], DEFAULT_SEARCH_BOUND).unwrap();
        let Realizability::Certified(beta) = &w.realizability else { panic!("not certified: {w:?}") };
        assert_eq!(e.ambient().norm(beta), BigInt::from(-2));
        assert_eq!(e.pairings(beta), w.functional());
    }

    #[test]
    fn identity_root() {
        let e = Embedding::identity(&Lattice::u());
        let walls = wall_candidates_abstract(e.domain(), &Region::FullCone).unwrap();
        let w = wall_realizability_embedded(&e, &walls[0], 0).unwrap();
        assert_eq!(w.realizability, Realizability::Certified(ints(&[-1, 1])));
    }

    #[test]
    fn refutations() {
        // norm -2 outside the lattice: no admissible multiple
        let e = u2_in_uue8();
        let fake = Wall {
            lambda: ints(&[1, -2]),
            multiple: BigInt::one(),
            norm: int(-2),
            source: WallSource::External,
            realizability: Realizability::Assumed,
        };
        assert_eq!(wall_realizability_embedded(&e, &fake, 1).unwrap().realizability, Realizability::Refuted);
        // U(2) as the whole ambient: K = 0 and the external wall is impossible
        let alone = Embedding::identity(&Lattice::u_scaled(2).unwrap());
        let walls = wall_candidates_abstract(alone.domain(), &Region::FullCone).unwrap();
        assert_eq!(wall_realizability_embedded(&alone, &walls[0], 1).unwrap().realizability, Realizability::Refuted);
    }
}
