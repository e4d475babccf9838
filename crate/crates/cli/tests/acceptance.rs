//! Acceptance gate: one PASS/FAIL line per criterion, with pinned limits.
//!
//! Run with `cargo test -p smallcones-cli --test acceptance -- --nocapture`
//! to see the report.

#[path = "../../core/tests/oracles/mod.rs"]
mod oracles;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallcones::cones::{
    cone_automorph, default_positive_vector, dolgachev_comparison, fiber_cardinality, orbit_count_rank2,
    pell_fundamental, pell_isometry, small_cones_rank2, wall_candidates_abstract, wall_for_functional, wall_ray,
    wall_realizability_embedded, walls_in_translates, IrrationalVector, Realizability, Region, WallSource,
    DEFAULT_SEARCH_BOUND,
};
use smallcones::numeric::{QuadraticSurd, RatMatrix};
use smallcones::roots::{ade_type, chamber_reduce, enumerate_roots, positive_system, reflect, Functional};
use smallcones::{AdeType, Embedding, Error, Lattice};

use oracles::{
    big, box_roots, gram_i64, pell_interval_walls, rank_by_minors, sign_box_root_count, u_n_closed_form, u_n_walls,
    weyl_closure_order,
};

type Check = Result<(), String>;
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Check);
type System = (Lattice, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, usize);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Check) -> (Check, Duration) {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let result = match (result, limit) {
        (Ok(()), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        (r, _) => r,
    };
    (result, elapsed)
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn c1_k3() -> Check {
    let k3 = Lattice::k3();
    ensure(k3.signature() == (3, 19), || format!("signature {:?}", k3.signature()))?;
    ensure(k3.determinant().abs() == BigInt::from(1), || format!("det {}", k3.determinant()))?;
    // evenness is a construction invariant; check the diagonal directly
    ensure((0..22).all(|i| &k3.gram()[(i, i)] % 2 == BigInt::from(0)), || "odd diagonal".into())
}

fn c2_root_counts() -> Check {
    for (s, n) in [("A1", 2), ("A2", 6), ("A3", 12), ("D4", 24)] {
        let l = Lattice::ade(&s.parse().unwrap());
        let oracle = box_roots(&gram_i64(&l), -3, 3).len();
        let got = enumerate_roots(&l).map_err(|e| e.to_string())?.len();
        ensure(oracle == n && got == n, || format!("{s}: oracle {oracle}, library {got}, expected {n}"))?;
    }
    let (r, t) = timed(secs(10), || {
        let e8 = Lattice::e8();
        let got = enumerate_roots(&e8).map_err(|e| e.to_string())?.len();
        ensure(got == 240, || format!("E8: {got}"))
    });
    r?;
    let oracle = sign_box_root_count(&gram_i64(&Lattice::e8()));
    ensure(oracle == 240, || format!("E8 oracle {oracle} (library took {t:.2?})"))
}

fn c3_scaled_planes() -> Check {
    let cones = [(1, 2), (2, 2), (3, 4), (5, 8)];
    for n in 1..=6 {
        let oracle = u_n_walls(n);
        ensure(oracle == u_n_closed_form(n), || format!("U({n}): oracle disagrees with ab<n"))?;
        let (r, _) = timed(secs(1), || {
            let l = Lattice::u_scaled(n).unwrap();
            let p = default_positive_vector(&l).map_err(|e| e.to_string())?;
            let walls = wall_candidates_abstract(&l, &Region::FullCone).map_err(|e| e.to_string())?;
            let got: BTreeSet<((i64, i64), bool)> = walls
                .iter()
                .map(|w| {
                    let r = wall_ray(&w.lambda, &l, &p);
                    ((i64::try_from(&r[0]).unwrap(), i64::try_from(&r[1]).unwrap()), w.source == WallSource::InternalRoot)
                })
                .collect();
            ensure(got == oracle, || format!("U({n}) walls {got:?} vs oracle {oracle:?}"))?;
            let fan = small_cones_rank2(&l, &Region::FullCone).map_err(|e| e.to_string())?;
            if let Some((_, c)) = cones.iter().find(|(m, _)| *m == n) {
                ensure(fan.cone_count() == *c && oracle.len() + 1 == *c, || {
                    format!("U({n}): {} cones, expected {c}", fan.cone_count())
                })?;
            }
            Ok(())
        });
        r?;
    }
    Ok(())
}

fn c4_embedded() -> Check {
    let ambient = Lattice::u().direct_sum(&Lattice::u()).direct_sum(&Lattice::e8());
    let mut e = vec![0; 12];
    let mut f = vec![0; 12];
    e[0] = 1;
    e[2] = 1;
    f[1] = 1;
    f[3] = 1;
    let emb = Embedding::new(
        Lattice::u_scaled(2).unwrap(),
        ambient,
        smallcones::numeric::IntMatrix::from_cols(12, &[big(&e), big(&f)]),
    )
    .map_err(|x| x.to_string())?;
    let regions = [
        Region::FullCone,
        Region::Rays(big(&[3, 1]), big(&[1, 3])),
        Region::Rays(big(&[7, 2]), big(&[1, 1])),
        Region::CoefficientBound(BigInt::from(6)),
    ];
    let mut checked = 0;
    for region in regions {
        for w in wall_candidates_abstract(emb.domain(), &region).map_err(|x| x.to_string())? {
            let w = wall_realizability_embedded(&emb, &w, DEFAULT_SEARCH_BOUND).map_err(|x| x.to_string())?;
            let Realizability::Certified(beta) = &w.realizability else {
                return Err(format!("wall {:?} is {}", w.lambda, w.realizability.as_str()));
            };
            ensure(emb.ambient().norm(beta) == BigInt::from(-2), || "witness norm".into())?;
            ensure(emb.pairings(beta) == w.functional(), || "witness pairings".into())?;
            let span = if emb.in_span(beta) { emb.domain().clone() } else { emb.span_with_vector(beta).unwrap() };
            ensure(span.is_hyperbolic(), || "span not hyperbolic".into())?;
            checked += 1;
        }
    }
    ensure(checked >= 4, || format!("only {checked} walls checked"))
}

/// Per-interval wall counts, fixed from the brute-force oracle.
const PELL: [((i64, i64), usize); 2] = [((1, 2), 4), ((3, 2), 10)];

fn c5_pell() -> Check {
    for ((n, d), count) in PELL {
        let oracle = pell_interval_walls(n, d);
        ensure(oracle.len() == count, || format!("oracle ({n},{d}) gives {}", oracle.len()))?;
        let l = Lattice::pell(n, d).unwrap();
        let m = pell_isometry(&l, &pell_fundamental(&BigInt::from(d)).unwrap()).map_err(|e| e.to_string())?;
        for base in [[1, 0], [3, 1], [2, 1]] {
            let oc = orbit_count_rank2(&l, std::slice::from_ref(&m), &big(&base)).map_err(|e| e.to_string())?;
            ensure(oc.wall_orbits == count && oc.cone_orbits == count, || {
                format!("({n},{d}) base {base:?}: {} wall / {} cone orbits", oc.wall_orbits, oc.cone_orbits)
            })?;
            if base == [1, 0] {
                ensure(oc.interval_walls.len() == count, || "interval count".into())?;
            }
        }
        for k in 1..=4u32 {
            let got = walls_in_translates(&l, &m, &big(&[1, 0]), k).map_err(|e| e.to_string())?;
            ensure(got == count * k as usize, || format!("({n},{d}) k={k}: {got}"))?;
        }
    }
    Ok(())
}

fn c6_many_cones() -> Check {
    let mut tested = 0;
    for a in 1i64..=4 {
        for b in -4i64..=4 {
            for c in -4i64..=-1 {
                let disc = b * b - 4 * a * c;
                let r = (disc as f64).sqrt().round() as i64;
                if r * r == disc {
                    continue;
                }
                let l = Lattice::from_i64(&[&[2 * a, b], &[b, 2 * c]]).unwrap();
                let p = default_positive_vector(&l).map_err(|e| e.to_string())?;
                let t = cone_automorph(&l, &p).map_err(|e| e.to_string())?;
                let seeds = match wall_candidates_abstract(&l, &Region::FullCone) {
                    Err(Error::InfinitelyManyWalls(s)) => s,
                    Ok(w) if w.is_empty() => continue,
                    other => return Err(format!("{:?}: unexpected {other:?}", l.gram())),
                };
                let start = wall_for_functional(&l, &seeds[0]).unwrap().unwrap();
                // walls transform by M⁻ᵀ
                let det = &t[(0, 0)] * &t[(1, 1)] - &t[(0, 1)] * &t[(1, 0)];
                let mt = smallcones::numeric::IntMatrix::from_rows(vec![
                    vec![&t[(1, 1)] * &det, -&t[(1, 0)] * &det],
                    vec![-&t[(0, 1)] * &det, &t[(0, 0)] * &det],
                ]);
                let mut g = start.functional();
                let mut seen = BTreeSet::new();
                for _ in 0..10 {
                    g = mt.mul_vec(&g);
                    let w = wall_for_functional(&l, &g).unwrap().ok_or("translate is not a wall")?;
                    seen.insert(w.lambda);
                }
                seen.remove(&start.lambda);
                ensure(seen.len() >= 10, || format!("{:?}: {} translates", l.gram(), seen.len()))?;
                tested += 1;
            }
        }
    }
    ensure(tested >= 20, || format!("only {tested} lattices"))
}

fn c7_fibers() -> Check {
    let named = |s: &str| {
        if s == "<-4>" {
            Lattice::from_i64(&[&[-4]]).unwrap()
        } else {
            Lattice::ade(&s.parse().unwrap())
        }
    };
    for (s, n) in [("<-4>", 1u64), ("A1", 2), ("A2", 6), ("A1+A1", 4), ("A1+A2", 12), ("D4", 192)] {
        let got = fiber_cardinality(&named(s)).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(n), || format!("{s}: {got}"))?;
    }
    let pool = ["<-4>", "A1", "A2", "A3", "D4", "A1+A1", "A2+A2"].map(named);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let sum = fiber_cardinality(&a.direct_sum(b)).map_err(|e| e.to_string())?;
        let prod = fiber_cardinality(a).unwrap() * fiber_cardinality(b).unwrap();
        ensure(sum == prod, || format!("{sum} != {prod}"))?;
    }
    Ok(())
}

fn c8_irrational() -> Check {
    let u = Lattice::u();
    let sv = |s: &[&str]| -> Vec<QuadraticSurd> { s.iter().map(|x| x.parse().unwrap()).collect() };
    let cases = [(["1", "sqrt(2)"], true), (["1", "2"], false), (["sqrt(2)", "sqrt(2)"], false)];
    for (coords, expected) in cases {
        let h = IrrationalVector::from_surds(u.clone(), &sv(&coords)).map_err(|e| e.to_string())?;
        ensure(h.very_irrational() == expected, || format!("{coords:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let r = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=4);
        let mut m: Vec<Vec<BigRational>> = (0..r)
            .map(|_| (0..cols).map(|_| BigRational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=3).into())).collect())
            .collect();
        if r > 1 && rng.gen_bool(0.5) {
            let k = BigRational::from_integer(rng.gen_range(-2..=2).into());
            m[r - 1] = m[0].iter().map(|x| x * &k).collect();
        }
        let l = match r {
            1 => Lattice::ade(&"A1".parse().unwrap()),
            2 => Lattice::u(),
            _ => Lattice::u().direct_sum(&Lattice::ade(&"A1".parse().unwrap())),
        };
        let tags = (0..cols).map(|j| format!("w{j}")).collect();
        let h = IrrationalVector::new(l, RatMatrix::from_rows(m.clone()), tags, None).map_err(|e| e.to_string())?;
        ensure(h.very_irrational() == (rank_by_minors(&m) == r), || format!("{m:?}"))?;
    }
    Ok(())
}

fn c9_reflections() -> Check {
    let types = ["A1", "A2", "A3", "A4", "D4", "A1+A1", "A1+A2", "A1+A3", "A2+A2", "A1+A1+A2", "A1+A1+A1+A1"];
    let systems: Vec<System> = types
        .iter()
        .map(|s| {
            let t: AdeType = s.parse().unwrap();
            let l = Lattice::ade(&t);
            let rs = enumerate_roots(&l).unwrap();
            let simple = positive_system(&rs, &Functional::Lexicographic).unwrap().simple;
            let order = weyl_closure_order(&gram_i64(&l));
            (l, rs.roots().to_vec(), simple, order)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..1000 {
        let (l, roots, simple, order) = &systems[rng.gen_range(0..systems.len())];
        let v: Vec<BigInt> = (0..l.rank()).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
        let beta = &roots[rng.gen_range(0..roots.len())];
        match i % 4 {
            0 => {
                let w = reflect(l, beta, &v).unwrap();
                ensure(reflect(l, beta, &w).unwrap() == v && l.norm(&w) == l.norm(&v), || "involution".into())?;
            }
            1 => {
                let gamma = &roots[rng.gen_range(0..roots.len())];
                ensure(roots.contains(&reflect(l, beta, gamma).unwrap()), || "closure".into())?;
            }
            2 => {
                let (w, _) = chamber_reduce(l, &v, simple).unwrap();
                ensure(simple.iter().all(|s| !l.inner(&w, s).is_negative()), || "dominance".into())?;
                ensure(chamber_reduce(l, &w, simple).unwrap().1.is_empty(), || "idempotence".into())?;
            }
            _ => {
                let t = ade_type(&enumerate_roots(l).unwrap()).unwrap();
                ensure(t.weyl_order() == BigInt::from(*order), || format!("{t}: weyl order"))?;
            }
        }
    }
    Ok(())
}

fn c10_dolgachev() -> Check {
    for (n, cones) in [(2, 2), (3, 4)] {
        let fan = small_cones_rank2(&Lattice::u_scaled(n).unwrap(), &Region::FullCone).map_err(|e| e.to_string())?;
        let r = dolgachev_comparison(&fan);
        ensure(r.chambers == 1 && r.small_cones == cones, || format!("U({n}): {} vs {}", r.chambers, r.small_cones))?;
    }
    Ok(())
}

fn c11_cli_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let u2 = write("U2.json", r#"{"label": "U(2)", "gram": [[0, 2], [2, 0]]}"#);
    let a1 = write("A1.json", r#"{"label": "A1", "gram": [[-2]]}"#);
    let k3 = write("K3.json", r#"{"builtin": "K3"}"#);
    let commands: Vec<Vec<&str>> = vec![
        vec!["walls", "--lattice", &u2, "--mode", "abstract"],
        vec!["fiber", "--lattice", &a1],
        vec!["info", "--lattice", &k3],
        vec!["fan", "--builtin", "U(2)"],
        vec!["fan", "--builtin", "U(2)", "--format", "svg"],
        vec!["fan", "--builtin", "U", "--format", "svg"],
        vec!["fan", "--builtin", "U(2)", "--region", "1,2;1,3", "--format", "svg"],
        vec!["fan", "--builtin", "pell(1,2)", "--region", "1,0;3,2", "--format", "svg"],
        vec!["orbit-count", "--builtin", "pell(3,2)", "--translates", "2"],
        vec!["compare-dolgachev", "--builtin", "U(3)"],
    ];
    for args in commands {
        let outputs: Vec<Vec<u8>> = (0..3)
            .map(|_| Command::new(env!("CARGO_BIN_EXE_smallcones")).args(&args).output().unwrap())
            .map(|o| if o.status.success() { o.stdout } else { Vec::new() })
            .collect();
        ensure(!outputs[0].is_empty(), || format!("{args:?} failed"))?;
        ensure(outputs.iter().all(|o| *o == outputs[0]), || format!("{args:?} not byte-identical"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        (1, "K3 lattice invariants", secs(1), c1_k3),
        (2, "root counts A1 A2 A3 D4 E8", secs(20), c2_root_counts),
        (3, "U(n) walls and small cones, n = 1..6", secs(6), c3_scaled_planes),
        (4, "embedded certification of U(2) walls", secs(30), c4_embedded),
        (5, "Pell intervals, translates and orbits", secs(60), c5_pell),
        (6, "one wall gives at least 10 translates", secs(10), c6_many_cones),
        (7, "fiber cardinalities and multiplicativity", secs(5), c7_fibers),
        (8, "very-irrationality suite", secs(1), c8_irrational),
        (9, "reflection and Weyl properties, 1000 cases", secs(30), c9_reflections),
        (10, "chambers vs small cones for U(2), U(3)", None, c10_dolgachev),
        (11, "CLI byte determinism over 3 runs", None, c11_cli_determinism),
    ];
    let mut failed = Vec::new();
    for (n, name, limit, f) in criteria {
        let (result, elapsed) = timed(limit, f);
        match result {
            Ok(()) => println!("PASS {n:>2} {name} ({elapsed:.2?})"),
            Err(why) => {
                println!("FAIL {n:>2} {name} ({elapsed:.2?}): {why}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
