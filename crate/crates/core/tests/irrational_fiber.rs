mod oracles;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallcones::cones::{fiber_cardinality, is_period_generic, IrrationalVector};
use smallcones::numeric::{int, QuadraticSurd, RatMatrix};
use smallcones::{AdeType, Lattice};

use oracles::rank_by_minors;

fn surd(s: &str) -> QuadraticSurd {
    s.parse().unwrap()
}

#[test]
fn tagged_examples() {
    let u = Lattice::u();
    let h = IrrationalVector::from_surds(u.clone(), &[surd("1"), surd("sqrt(2)")]).unwrap();
    assert_eq!(h.coeffs().to_rows(), vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    assert!(h.very_irrational());
    let rational = IrrationalVector::from_surds(u.clone(), &[surd("1"), surd("2")]).unwrap();
    assert!(!rational.very_irrational());
    let diagonal = IrrationalVector::from_surds(u, &[surd("sqrt(2)"), surd("sqrt(2)")]).unwrap();
    assert!(!diagonal.very_irrational());
}

fn lattice_of_rank(r: usize) -> Lattice {
    match r {
        1 => Lattice::ade(&"A1".parse().unwrap()),
        2 => Lattice::u(),
        _ => Lattice::u().direct_sum(&Lattice::ade(&AdeType::new(vec!["A1".parse().unwrap(); r - 2]))),
    }
}

#[test]
fn random_cases_match_minor_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut seen = [0usize; 2];
    for _ in 0..100 {
        let r = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=4);
        let mut m: Vec<Vec<BigRational>> = (0..r)
            .map(|_| (0..cols).map(|_| BigRational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=3).into())).collect())
            .collect();
        // force a rational relation among the rows half of the time
        if r > 1 && rng.gen_bool(0.5) {
            let k = BigRational::from_integer(rng.gen_range(-2..=2).into());
            let copy: Vec<BigRational> = m[0].iter().map(|x| x * &k).collect();
            m[r - 1] = copy;
        }
        let tags = (0..cols).map(|j| format!("w{j}")).collect();
        let h = IrrationalVector::new(lattice_of_rank(r), RatMatrix::from_rows(m.clone()), tags, None).unwrap();
        let expected = rank_by_minors(&m) == r;
        assert_eq!(h.very_irrational(), expected, "{m:?}");
        seen[usize::from(expected)] += 1;
    }
    assert!(seen[0] > 10 && seen[1] > 10, "both outcomes exercised: {seen:?}");
}

/// Fiber sizes, each the Weyl group order of the root sublattice.
const FIBERS: [(&str, u64); 6] = [("<-4>", 1), ("A1", 2), ("A2", 6), ("A1+A1", 4), ("A1+A2", 12), ("D4", 192)];

fn named(s: &str) -> Lattice {
    if s == "<-4>" {
        Lattice::from_i64(&[&[-4]]).unwrap()
    } else {
        Lattice::ade(&s.parse().unwrap())
    }
}

#[test]
fn fiber_values() {
    for (s, n) in FIBERS {
        assert_eq!(fiber_cardinality(&named(s)).unwrap(), BigInt::from(n), "{s}");
    }
    assert!(is_period_generic(&named("<-4>")).unwrap());
    assert!(!is_period_generic(&named("A1")).unwrap());
}

#[test]
fn fiber_is_multiplicative() {
    let pool: Vec<Lattice> = ["<-4>", "<-6>", "A1", "A2", "A3", "D4", "A1+A1", "[[-2,1],[1,-4]]", "[[-4,2],[2,-4]]"]
        .iter()
        .map(|s| match *s {
            "<-6>" => Lattice::from_i64(&[&[-6]]).unwrap(),
            "[[-2,1],[1,-4]]" => Lattice::from_i64(&[&[-2, 1], &[1, -4]]).unwrap(),
            "[[-4,2],[2,-4]]" => Lattice::from_i64(&[&[-4, 2], &[2, -4]]).unwrap(),
            other => named(other),
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let sum = fiber_cardinality(&a.direct_sum(b)).unwrap();
        assert_eq!(sum, fiber_cardinality(a).unwrap() * fiber_cardinality(b).unwrap());
    }
}
