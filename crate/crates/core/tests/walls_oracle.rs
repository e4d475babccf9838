mod oracles;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use smallcones::cones::{
    cone_automorph, default_positive_vector, orbit_count_rank2, pell_fundamental, pell_isometry, small_cones_rank2,
    wall_candidates_abstract, wall_for_functional, wall_ray, walls_in_translates, Region, WallSource,
};
use smallcones::numeric::IntMatrix;
use smallcones::{Error, Lattice};

use oracles::{big, pell_brute, pell_interval_walls, u_n_closed_form, u_n_walls};

/// Wall counts per fundamental Pell interval, fixed from the brute-force
/// oracle before comparing with the library.
const PELL_INTERVAL_WALLS: [((i64, i64), usize); 2] = [((1, 2), 4), ((3, 2), 10)];

/// Small-cone counts of U(n), fixed from the (a, b) oracle.
const U_CONES: [(i64, usize); 6] = [(1, 2), (2, 2), (3, 4), (4, 6), (5, 8), (6, 10)];

fn library_u_walls(n: i64) -> BTreeSet<((i64, i64), bool)> {
    let l = Lattice::u_scaled(n).unwrap();
    let p = default_positive_vector(&l).unwrap();
    wall_candidates_abstract(&l, &Region::FullCone)
        .unwrap()
        .iter()
        .map(|w| {
            let r = wall_ray(&w.lambda, &l, &p);
            let r: Vec<i64> = r.iter().map(|x| i64::try_from(x).unwrap()).collect();
            ((r[0], r[1]), w.source == WallSource::InternalRoot)
        })
        .collect()
}

#[test]
fn u_n_oracle_agrees_with_closed_form() {
    for n in 1..=6 {
        assert_eq!(u_n_walls(n), u_n_closed_form(n), "n = {n}");
    }
}

#[test]
fn u_n_walls_match_oracle() {
    for n in 1..=6 {
        assert_eq!(library_u_walls(n), u_n_walls(n), "n = {n}");
    }
}

#[test]
fn u_n_cone_counts() {
    for (n, cones) in U_CONES {
        assert_eq!(u_n_walls(n).len() + 1, cones, "oracle n = {n}");
        let fan = small_cones_rank2(&Lattice::u_scaled(n).unwrap(), &Region::FullCone).unwrap();
        assert_eq!(fan.cone_count(), cones, "n = {n}");
    }
}

#[test]
fn pell_units_match_search() {
    for d in [2, 3, 5, 6, 7, 8, 10, 11, 12, 13] {
        let u = pell_fundamental(&BigInt::from(d)).unwrap();
        let (x, y) = pell_brute(d);
        assert_eq!((u.x, u.y), (BigInt::from(x), BigInt::from(y)), "d = {d}");
    }
}

#[test]
fn pell_interval_oracle_is_frozen() {
    for ((n, d), count) in PELL_INTERVAL_WALLS {
        assert_eq!(pell_interval_walls(n, d).len(), count, "({n},{d})");
    }
    assert_eq!(pell_interval_walls(1, 2), vec![(1, 0), (3, 1), (2, 1), (5, 3)]);
}

fn pell_lattice(n: i64, d: i64) -> (Lattice, IntMatrix) {
    let l = Lattice::pell(n, d).unwrap();
    let m = pell_isometry(&l, &pell_fundamental(&BigInt::from(d)).unwrap()).unwrap();
    (l, m)
}

#[test]
fn pell_interval_walls_match_oracle() {
    for ((n, d), count) in PELL_INTERVAL_WALLS {
        let (l, m) = pell_lattice(n, d);
        let oc = orbit_count_rank2(&l, std::slice::from_ref(&m), &big(&[1, 0])).unwrap();
        assert_eq!(oc.translation, m);
        let rays: Vec<(i64, i64)> =
            oc.interval_rays.iter().map(|r| (i64::try_from(&r[0]).unwrap(), i64::try_from(&r[1]).unwrap())).collect();
        assert_eq!(rays, pell_interval_walls(n, d), "({n},{d})");
        assert_eq!(oc.wall_orbits, count);
        assert_eq!(oc.cone_orbits, count);
    }
}

#[test]
fn pell_translates_grow_linearly() {
    for ((n, d), count) in PELL_INTERVAL_WALLS {
        let (l, m) = pell_lattice(n, d);
        for k in 1..=4 {
            assert_eq!(walls_in_translates(&l, &m, &big(&[1, 0]), k).unwrap(), count * k as usize, "({n},{d}) k={k}");
        }
    }
}

#[test]
fn pell_orbits_do_not_depend_on_base() {
    for ((n, d), count) in PELL_INTERVAL_WALLS {
        let (l, m) = pell_lattice(n, d);
        for base in [[1, 0], [3, 1], [2, 1], [5, 3], [7, 2]] {
            let oc = orbit_count_rank2(&l, std::slice::from_ref(&m), &big(&base)).unwrap();
            assert_eq!((oc.wall_orbits, oc.cone_orbits), (count, count), "({n},{d}) base {base:?}");
        }
    }
}

#[test]
fn anisotropic_full_cone_is_infinite() {
    let l = Lattice::pell(1, 2).unwrap();
    assert!(matches!(wall_candidates_abstract(&l, &Region::FullCone), Err(Error::InfinitelyManyWalls(_))));
}

fn transpose_inverse(m: &IntMatrix) -> IntMatrix {
    // M⁻ᵀ for det ±1
    let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
    IntMatrix::from_rows(vec![
        vec![&m[(1, 1)] * &det, -&m[(1, 0)] * &det],
        vec![-&m[(0, 1)] * &det, &m[(0, 0)] * &det],
    ])
}

/// Even anisotropic hyperbolic binary forms `[[2a, b], [b, 2c]]`.
fn anisotropic() -> impl Strategy<Value = Lattice> {
    (1i64..=4, -4i64..=4, -4i64..=-1)
        .prop_filter_map("isotropic", |(a, b, c)| {
            let disc = b * b - 4 * a * c;
            let r = (disc as f64).sqrt().round() as i64;
            (r * r != disc).then(|| Lattice::from_i64(&[&[2 * a, b], &[b, 2 * c]]).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// One wall in an anisotropic lattice yields many: its translates by
    /// the cone automorph are distinct walls of the same norm.
    #[test]
    fn one_wall_gives_infinitely_many(l in anisotropic()) {
        let p = default_positive_vector(&l).unwrap();
        let t = cone_automorph(&l, &p).unwrap();
        let Err(Error::InfinitelyManyWalls(seeds)) = wall_candidates_abstract(&l, &Region::FullCone) else {
            return Err(TestCaseError::fail("full cone must report infinitely many walls"));
        };
        prop_assume!(!seeds.is_empty());
        let start = wall_for_functional(&l, &seeds[0]).unwrap().expect("seed is a wall");
        let mt = transpose_inverse(&t);
        let mut g = start.functional();
        let mut seen = BTreeSet::new();
        for _ in 0..11 {
            g = mt.mul_vec(&g);
            let w = wall_for_functional(&l, &g).unwrap().expect("isometries map walls to walls");
            prop_assert_eq!(&w.norm, &start.norm);
            seen.insert(w.lambda);
        }
        seen.remove(&start.lambda);
        prop_assert!(seen.len() >= 10);
    }

    #[test]
    fn pell_matrix_is_an_isometry(n in 1i64..=5, d in 2i64..=30) {
        let r = (d as f64).sqrt().round() as i64;
        prop_assume!(r * r != d);
        let (l, m) = pell_lattice(n, d);
        prop_assert_eq!(l.gram().congruence(&m), l.gram().clone());
        // (x + y√d)(x - y√d) = 1
        prop_assert_eq!(&m[(0, 0)] * &m[(0, 0)] - &m[(1, 0)] * &m[(1, 0)] * d, BigInt::from(1));
    }

    /// Shrinking the region can only lose walls.
    #[test]
    fn region_monotonicity(n in 1i64..=6, a in 1i64..=6, b in 1i64..=6, c in 1i64..=6, e in 1i64..=6) {
        let l = Lattice::u_scaled(n).unwrap();
        let outer = Region::Rays(big(&[a + c, 1]), big(&[1, b + e]));
        let inner = Region::Rays(big(&[a, 1]), big(&[1, b]));
        let all = wall_candidates_abstract(&l, &Region::FullCone).unwrap();
        let big_set: BTreeSet<_> = wall_candidates_abstract(&l, &outer).unwrap().into_iter().map(|w| w.lambda).collect();
        let small_set: BTreeSet<_> = wall_candidates_abstract(&l, &inner).unwrap().into_iter().map(|w| w.lambda).collect();
        let all_set: BTreeSet<_> = all.into_iter().map(|w| w.lambda).collect();
        prop_assert!(small_set.is_subset(&big_set));
        prop_assert!(big_set.is_subset(&all_set));
    }

    /// Walls of a Pell lattice in a region and in its image agree up to
    /// the isometry.
    #[test]
    fn wall_sets_are_equivariant(x in 1i64..=5, y in 0i64..=2) {
        let (l, m) = pell_lattice(1, 2);
        prop_assume!(x * x > 2 * y * y && (x + 1) * (x + 1) > 2 * (y + 1) * (y + 1));
        let (v1, v2) = (big(&[x, y]), big(&[x + 1, y + 1]));
        prop_assume!(l.norm(&v2).is_positive());
        let region = Region::Rays(v1.clone(), v2.clone());
        let image = Region::Rays(m.mul_vec(&v1), m.mul_vec(&v2));
        let mt = transpose_inverse(&m);
        let moved: BTreeSet<_> = wall_candidates_abstract(&l, &region)
            .unwrap()
            .iter()
            .map(|w| wall_for_functional(&l, &mt.mul_vec(&w.functional())).unwrap().unwrap().lambda)
            .collect();
        let direct: BTreeSet<_> = wall_candidates_abstract(&l, &image).unwrap().into_iter().map(|w| w.lambda).collect();
        prop_assert_eq!(moved, direct);
    }
}
