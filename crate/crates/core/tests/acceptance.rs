//! The twelve acceptance criteria. Each runs as its own check and prints one
//! PASS/FAIL line; run with `cargo test --test acceptance -- --nocapture`.
//!
//! All comparisons are exact integer identities (tolerance 0).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use twobridge_hf::cli::invariants_record;
use twobridge_hf::complexes::{ck_complex, reflect, stable_complex, stable_homology_check};
use twobridge_hf::floer::{
    d_invariants, hat_from_plus, hf_hat_large_n, hf_minus_large_n, hf_plus_large_n,
    hf_plus_large_n_branch, hf_plus_n_surgery, hf_plus_negative_surgery, hf_plus_zero_surgery,
    torus_decomposition_check, SignatureBranch, Summand,
};
use twobridge_hf::homalg::{
    cancel_generator, euler_characteristic, homology, smith_normal_form, GradedComplex, IntMatrix,
};
use twobridge_hf::twobridge::{
    alexander_grading, alexander_polynomial, census_knots, inverse_form, mirror, normalize,
    spinc_invariants, TwoBridgeKnot,
};

const CENSUS_P: i64 = 99;
const TRIANGLE_P: i64 = 49;

fn k(p: i64, q: i64) -> TwoBridgeKnot {
    normalize(p, q).unwrap()
}

fn census() -> Vec<TwoBridgeKnot> {
    census_knots(CENSUS_P)
}

/// Grading vector recomputed from scratch: partial sums of `(-1)^floor(iq/p)`
/// with `p, q > 0` handled by plain integer division, centred afterwards.
fn oracle_epsilon(p: i64, q: i64) -> Vec<i64> {
    let mut eps = vec![0i64];
    for i in 1..p {
        let f = (i * q).div_euclid(p);
        let step = if f % 2 == 0 { 1 } else { -1 };
        eps.push(eps[eps.len() - 1] + step);
    }
    let shift = eps[eps.len() - 1] / 2;
    eps.iter().map(|e| e - shift).collect()
}

/// `u_k` straight from the generator counts: `a_i = (-1)^{ε1+i} n_i`.
fn oracle_u(knot: TwoBridgeKnot, k: i64) -> i64 {
    let eps = oracle_epsilon(knot.p(), knot.q());
    let e1 = eps[0];
    eps.iter()
        .filter(|&&e| e > k)
        .map(|&e| {
            let sign = if (e1 + e).rem_euclid(2) == 0 { 1 } else { -1 };
            sign * (e - k)
        })
        .sum()
}

fn criterion_1() {
    for knot in census() {
        let (p, q) = (knot.p(), knot.q());
        let delta = alexander_polynomial(knot);
        assert!(delta.is_symmetric(), "{knot}");
        assert_eq!(delta.eval_unit(1), 1, "{knot}");
        assert_eq!(delta.eval_unit(-1).abs(), p, "{knot}");
        let data = alexander_grading(knot);
        assert_eq!(data.signature % 2, 0, "{knot}");
        assert!(data.half_signature.abs() <= data.genus, "{knot}");
        assert_eq!(data.epsilon, oracle_epsilon(p, q), "{knot}");
        let n = data.epsilon.len();
        for i in 0..n {
            assert_eq!(data.epsilon[i], -data.epsilon[n - 1 - i], "{knot}");
        }
        for i in 1..n {
            let expected = if (i as i64 * q).div_euclid(p) % 2 == 0 { 1 } else { -1 };
            assert_eq!(data.epsilon[i] - data.epsilon[i - 1], expected, "{knot}");
        }
        assert_eq!(data.counts.values().sum::<usize>(), p as usize, "{knot}");
    }
}

/// `(knot, Δ, σ, g)`.
type Golden = ((i64, i64), Vec<i64>, i64, i64);

fn criterion_2() {
    let golden: [Golden; 4] = [
        ((5, 3), vec![-1, 3, -1], 0, 1),
        ((7, 3), vec![2, -3, 2], -2, 1),
        ((11, 5), vec![3, -5, 3], -2, 1),
        ((13, 5), vec![1, -3, 5, -3, 1], 0, 2),
    ];
    for ((p, q), coeffs, sigma, g) in golden {
        let knot = k(p, q);
        assert_eq!(alexander_polynomial(knot).symmetric_coefficients(), coeffs, "{knot}");
        let data = alexander_grading(knot);
        assert_eq!((data.signature, data.genus), (sigma, g), "{knot}");
    }
    assert_eq!(
        alexander_polynomial(k(13, 5)).to_string(),
        "t^2 - 3t + 5 - 3t^-1 + t^-2"
    );
    assert_eq!(alexander_polynomial(k(5, 3)).to_string(), "-t + 3 - t^-1");
    // heights of the two pictured complexes
    assert_eq!(
        alexander_grading(k(11, 5)).epsilon,
        vec![-1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1]
    );
    assert_eq!(
        alexander_grading(k(13, 5)).epsilon,
        vec![0, 1, 2, 1, 0, -1, 0, 1, 0, -1, -2, -1, 0]
    );
}

fn criterion_3() {
    for knot in census() {
        assert!(stable_homology_check(knot), "{knot}");
    }
    assert!(stable_homology_check(TwoBridgeKnot::UNKNOT));
}

fn criterion_4() {
    for knot in census() {
        let data = alexander_grading(knot);
        let sign = if data.half_signature.rem_euclid(2) == 0 { 1 } else { -1 };
        for level in 0..=data.genus {
            let c = ck_complex(knot, level);
            let chi = euler_characteristic(c.complex());
            assert_eq!(chi, sign * spinc_invariants(knot, level).u, "{knot} k={level}");
            assert_eq!(chi, sign * oracle_u(knot, level), "{knot} k={level}");

            // generators of C_k are the points of the towers over each x_i
            // lying strictly below x_i and at or above level 2k - ε(x_i)
            let mut got: Vec<(i64, i64)> = c.generators.iter().map(|g| (g.grading, g.epsilon)).collect();
            let mut want: Vec<(i64, i64)> = Vec::new();
            for &e in &data.epsilon {
                let mut g = e - 2;
                while g >= 2 * level - e {
                    want.push((g, e));
                    g -= 2;
                }
            }
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want, "{knot} k={level}");
        }
    }
}

fn criterion_5() {
    for knot in census() {
        let stable = stable_complex(knot);
        let g = alexander_grading(knot).genus;
        for level in -g..=g {
            let r = reflect(&stable, level).unwrap();
            let chi = euler_characteristic(r.complex());
            assert!(chi == 1 || chi == -1, "{knot} k={level}: χ = {chi}");
            // signed count of the reflected grading vector, recomputed here
            let by_hand: i64 = stable
                .generators
                .iter()
                .map(|x| {
                    let gr = if x.epsilon > level { 2 * level - x.epsilon } else { x.epsilon };
                    if gr.rem_euclid(2) == 0 { 1 } else { -1 }
                })
                .sum();
            assert_eq!(chi, by_hand, "{knot} k={level}");
        }
    }
}

fn criterion_6() {
    for knot in census() {
        let data = alexander_grading(knot);
        let g = data.genus;
        for level in 0..=g + 1 {
            let plus = hf_plus_large_n(knot, level);
            assert_eq!(plus, hf_plus_large_n(knot, -level), "{knot} k={level}");
            assert_eq!(hf_hat_large_n(knot, level), hf_hat_large_n(knot, -level));
            assert_eq!(hf_minus_large_n(knot, level), hf_minus_large_n(knot, -level));
            if data.signature == 0 {
                assert_eq!(
                    hf_plus_large_n_branch(knot, level, SignatureBranch::NonNegative),
                    hf_plus_large_n_branch(knot, level, SignatureBranch::NonPositive),
                    "{knot} k={level}"
                );
            }
            if level >= g {
                assert_eq!(plus.summands.len(), 1, "{knot} k={level}");
                assert_eq!(plus.tower_count(), 1, "{knot} k={level}");
                let hat = hf_hat_large_n(knot, level);
                assert_eq!(hat.total_rank(), 1);
                assert_eq!(hat.rank_at(data.half_signature), 1);
            }
            let from_gysin = hat_from_plus(&plus).expect("graded module");
            assert_eq!(from_gysin, hf_hat_large_n(knot, level), "{knot} k={level}");
            assert_eq!(hf_hat_large_n(knot, level).euler_characteristic().abs(), 1);
        }
    }
}

fn criterion_7() {
    for knot in census_knots(TRIANGLE_P) {
        let g = alexander_grading(knot).genus;
        let mut ns = vec![1, 2, 2 * g - 1, 2 * g, 5 * g];
        ns.retain(|&n| n > 0);
        ns.sort_unstable();
        ns.dedup();
        for n in ns {
            for s in 0..n {
                let positive = hf_plus_n_surgery(knot, n, s).unwrap();
                if n >= 2 * g - 1 {
                    let i0 = if s <= n - s { s } else { s - n };
                    assert_eq!(
                        positive,
                        hf_plus_large_n(knot, i0).forget_gradings(),
                        "{knot} n={n} s={s}"
                    );
                }
                assert_eq!(
                    hf_plus_negative_surgery(knot, n, s).unwrap(),
                    hf_plus_n_surgery(mirror(knot), n, s).unwrap(),
                    "{knot} n={n} s={s}"
                );
                assert_eq!(positive, hf_plus_n_surgery(knot, n, s + 3 * n).unwrap());
            }
        }
    }
}

fn criterion_8() {
    for knot in census() {
        let data = alexander_grading(knot);
        for level in 1..data.genus {
            let m = hf_plus_zero_surgery(knot, level);
            let chi = m.signed_rank().expect("untwisted zero surgery is finite");
            assert_eq!(chi.abs(), oracle_u(knot, level).abs(), "{knot} k={level}");
        }
        for level in data.genus..data.genus + 2 {
            assert!(hf_plus_zero_surgery(knot, level).is_zero(), "{knot} k={level}");
        }
    }
}

fn criterion_9() {
    let d = d_invariants(k(3, -1));
    assert_eq!(d.d_plus1, -2);
    let d = d_invariants(k(3, 1));
    assert_eq!((d.d_plus1, d.d_minus1), (0, 2));
    let d = d_invariants(k(5, 3));
    assert_eq!((d.d_plus1, d.d_minus1), (0, 0));
    for knot in census() {
        let d = d_invariants(knot);
        assert!(d.d_plus1 <= 0 && d.d_plus1 % 2 == 0, "{knot}");
        assert!(d.d_minus1 >= 0 && d.d_minus1 % 2 == 0, "{knot}");
        assert_eq!(d.d_plus1, -d_invariants(mirror(knot)).d_minus1, "{knot}");
        let sigma = alexander_grading(knot).signature;
        // ceil(σ/4) by hand
        let ceil4 = if sigma >= 0 { (sigma + 3) / 4 } else { -((-sigma) / 4) };
        assert_eq!(d.d_plus1, (-2 * ceil4).min(0), "{knot}");
    }
}

fn criterion_10() {
    for knot in census() {
        let g = alexander_grading(knot).genus;
        for level in 1..g {
            let t = torus_decomposition_check(knot, level)
                .unwrap_or_else(|e| panic!("{e}"));
            assert_eq!(t.q_grading, level - 1, "{knot} k={level}");
            let ours = hf_plus_zero_surgery(knot, level);
            let rank_here: u64 = ours
                .summands
                .iter()
                .filter_map(|s| match s {
                    Summand::Free { rank, grading } => {
                        assert_eq!(*grading, Some(level - 1));
                        Some(*rank)
                    }
                    _ => None,
                })
                .sum();
            assert!(t.q_rank <= rank_here, "{knot} k={level}");
        }
    }
}

fn random_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
    })
}

fn snf_holds(rows: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let m = IntMatrix::from_rows(rows);
    let s = smith_normal_form(&m);
    prop_assert_eq!(&(&s.left * &m) * &s.right, s.diagonal.clone());
    prop_assert!(s.diagonal.is_diagonal());
    prop_assert_eq!(s.left.determinant().abs(), BigInt::one());
    prop_assert_eq!(s.right.determinant().abs(), BigInt::one());
    let d = s.diagonal.diagonal();
    for w in d.windows(2) {
        prop_assert!(!w[0].is_negative() && !w[1].is_negative());
        if w[0].is_zero() {
            prop_assert!(w[1].is_zero());
        } else {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }
    if m.rows() == m.cols() {
        let prod: BigInt = d.iter().product();
        prop_assert_eq!(prod, m.determinant().abs());
    }
    Ok(())
}

/// Differential of a random complex: blocks of elementary pieces
/// `x -> c y` conjugated by random elementary changes of basis inside each
/// grading, which keeps `d∘d = 0` and the grading drop.
fn random_complex() -> impl Strategy<Value = GradedComplex> {
    let pieces = prop::collection::vec((0i64..3, prop::sample::select(vec![0i64, 1, 1, -1, 2, 3])), 2..7);
    let moves = prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), -2i64..=2), 0..25);
    (pieces, moves).prop_map(|(pieces, moves)| {
        let mut gens: Vec<(String, i64)> = Vec::new();
        let mut edges = Vec::new();
        for (top, c) in pieces {
            let x = gens.len();
            gens.push((format!("g{x}"), top + 1));
            if c != 0 {
                gens.push((format!("g{}", x + 1), top));
                edges.push((x, x + 1, c));
            }
        }
        let n = gens.len();
        let mut d = IntMatrix::zeros(n, n);
        for &(s, t, c) in &edges {
            d.set(t, s, c);
        }
        for (a, b, t) in moves {
            let (a, b) = (a.index(n), b.index(n));
            if a == b || gens[a].1 != gens[b].1 || t == 0 {
                continue;
            }
            // new basis e_a' = e_a + t e_b: d' = E d E^-1
            let mut e = IntMatrix::identity(n);
            e.set(b, a, t);
            let mut e_inv = IntMatrix::identity(n);
            e_inv.set(b, a, -t);
            d = &(&e_inv * &d) * &e;
        }
        GradedComplex::new(gens, d).expect("conjugated complex is valid")
    })
}

fn unit_pivot(c: &GradedComplex) -> Option<(String, String)> {
    for x in 0..c.len() {
        for y in 0..c.len() {
            if c.coefficient(x, y).abs() == BigInt::one() {
                return Some((c.labels()[x].clone(), c.labels()[y].clone()));
            }
        }
    }
    None
}

fn criterion_11() {
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&random_matrix(10, 20), |rows| snf_holds(&rows))
        .unwrap();

    let mut runner = TestRunner::new(Config {
        cases: 400,
        failure_persistence: None,
        ..Config::default()
    });
    let cancelled = std::cell::Cell::new(0usize);
    runner
        .run(&random_complex(), |c| {
            if let Some((x, y)) = unit_pivot(&c) {
                let reduced = cancel_generator(&c, &x, &y).unwrap();
                prop_assert_eq!(homology(&reduced), homology(&c));
                prop_assert_eq!(reduced.len(), c.len() - 2);
                cancelled.set(cancelled.get() + 1);
            }
            Ok(())
        })
        .unwrap();
    assert!(cancelled.get() >= 100, "only {} valid cancellations", cancelled.get());
}

fn criterion_12() {
    for knot in census() {
        let alt = inverse_form(knot);
        assert_eq!(inverse_form(alt), knot);
        let (a, b) = (invariants_record(knot), invariants_record(alt));
        assert_eq!(a.invariants, b.invariants, "{knot} vs {alt}");
        assert_eq!(a.d_invariants, b.d_invariants, "{knot} vs {alt}");
        let g = alexander_grading(knot).genus;
        for level in 0..=g {
            assert_eq!(hf_plus_large_n(knot, level), hf_plus_large_n(alt, level));
            assert_eq!(hf_minus_large_n(knot, level), hf_minus_large_n(alt, level));
            assert_eq!(hf_hat_large_n(knot, level), hf_hat_large_n(alt, level));
            assert_eq!(hf_plus_zero_surgery(knot, level), hf_plus_zero_surgery(alt, level));
            if level > 0 {
                assert_eq!(
                    torus_decomposition_check(knot, level).ok(),
                    torus_decomposition_check(alt, level).ok()
                );
            }
        }
        for n in 1..=3 {
            for s in 0..n {
                assert_eq!(
                    hf_plus_n_surgery(knot, n, s).unwrap(),
                    hf_plus_n_surgery(alt, n, s).unwrap()
                );
                assert_eq!(
                    hf_plus_negative_surgery(knot, n, s).unwrap(),
                    hf_plus_negative_surgery(alt, n, s).unwrap()
                );
            }
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 12] = [
        ("1 classical invariants over the census", criterion_1),
        ("2 named-knot golden values", criterion_2),
        ("3 stable homology is a single Z at σ'", criterion_3),
        ("4 χ(C_k) = (-1)^σ' u_k", criterion_4),
        ("5 reflected complexes have χ = ±1", criterion_5),
        ("6 large-surgery consistency and Gysin ranks", criterion_6),
        ("7 exact-triangle and mirror duality", criterion_7),
        ("8 zero-surgery Euler characteristic", criterion_8),
        ("9 d-invariants", criterion_9),
        ("10 torus-companion decomposition", criterion_10),
        ("11 Smith form and cancellation properties", criterion_11),
        ("12 (p,q) and (p,q^-1) forms agree", criterion_12),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  ({elapsed:.2}s)"),
            Err(_) => {
                println!("FAIL  criterion {name}  ({elapsed:.2}s)");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
