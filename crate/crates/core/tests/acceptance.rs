//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one `PASS`/`FAIL` line; each checks both the exact
//! result and its runtime bound, and any failure makes the run exit nonzero.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twinchain_core::geometry::{hull_volume, restrict_to_orthant};
use twinchain_core::poset::{count_linear_extensions, enumerate_posets};
use twinchain_core::twinned::{
    chain_multiset_count, chain_polytope_vertices, dual_vertices, facet_normals, gamma_vertices,
    no_poset_with_k_antichains, order_polytope_vertices, volume_formula, volume_terms, GammaKind,
};
use twinchain_core::{BigInt, BigRational, LabelSet, Poset, VRep};

fn report(
    id: u32,
    name: &str,
    started: Instant,
    limit: Duration,
    outcome: Result<(), String>,
) -> bool {
    let elapsed = started.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:?}, limit {limit:?}"))
        }
    });
    match &outcome {
        Ok(()) => println!("criterion {id} [{name}]: PASS ({elapsed:.2?})"),
        Err(why) => println!("criterion {id} [{name}]: FAIL ({elapsed:.2?}): {why}"),
    }
    outcome.is_ok()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `p2 < p1`, `p3 < p1`.
fn lambda() -> Poset {
    Poset::from_relations(3, [(1, 0), (2, 0)]).unwrap()
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `Σ_{k=0}^{d} 1/k!`, summed directly.
fn exp_partial_sum(d: u64) -> BigRational {
    let mut sum = BigRational::zero();
    let mut fact = BigInt::one();
    for k in 0..=d {
        if k > 0 {
            fact *= k;
        }
        sum += BigRational::new(BigInt::one(), fact.clone());
    }
    sum
}

fn criterion_1_lambda_volume() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        let (p, q) = (lambda(), lambda());
        let volume = volume_formula(&p, &q).map_err(|e| e.to_string())?;
        ensure(volume == rational(2, 1), || format!("volume {volume}"))?;
        let mut terms: Vec<BigRational> = volume_terms(&p, &q)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(_, e)| BigRational::new(BigInt::from(e), 6.into()))
            .collect();
        terms.sort();
        let expected: Vec<BigRational> = [1, 1, 1, 1, 2, 2, 2, 2]
            .iter()
            .map(|&n| rational(n, 6))
            .collect();
        ensure(terms == expected, || format!("terms {terms:?}"))
    })();
    report(
        1,
        "lambda pair volume 4x1/6 + 4x2/6 = 2",
        started,
        Duration::from_secs(1),
        outcome,
    )
}

fn criterion_2_antichain_over_chain_volume() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        for d in 1..=6usize {
            let (p, q) = (Poset::antichain(d), Poset::chain(d));
            let expected = exp_partial_sum(d as u64);
            let formula = volume_formula(&p, &q).map_err(|e| e.to_string())?;
            ensure(formula == expected, || {
                format!("d={d}: formula {formula}, expected {expected}")
            })?;
            if d <= 5 {
                let v = gamma_vertices(GammaKind::CC, &p, &q).map_err(|e| e.to_string())?;
                let hull = hull_volume(&v).map_err(|e| e.to_string())?;
                ensure(hull == expected, || {
                    format!("d={d}: hull {hull}, expected {expected}")
                })?;
            }
        }
        ensure(exp_partial_sum(3) == rational(8, 3), || {
            "d=3 sum is not 8/3".into()
        })
    })();
    report(
        2,
        "antichain/chain volume = sum 1/k!",
        started,
        Duration::from_secs(30),
        outcome,
    )
}

fn criterion_3_antichain_over_chain_facet_count() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        for d in 1..=5usize {
            let n = facet_normals(&Poset::antichain(d), &Poset::chain(d))
                .map_err(|e| e.to_string())?
                .len();
            let expected = d * (1 << (d - 1)) + 1;
            ensure(n == expected, || {
                format!("d={d}: {n} normals, expected {expected}")
            })?;
        }
        Ok(())
    })();
    report(
        3,
        "facet count d*2^(d-1)+1",
        started,
        Duration::from_secs(5),
        outcome,
    )
}

fn criterion_4_lambda_dual_vertices() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        let listed: [[i64; 3]; 6] = [
            [1, 1, 0],
            [1, 0, 1],
            [1, -1, 0],
            [1, 1, -1],
            [1, -1, 1],
            [1, 0, -1],
        ];
        let expected = VRep::from_integer_points(
            3,
            listed
                .iter()
                .flat_map(|v| [v.to_vec(), v.iter().map(|x| -x).collect()]),
        )
        .map_err(|e| e.to_string())?;
        ensure(expected.len() == 12, || {
            "golden list is not 12 distinct vectors".into()
        })?;
        let dual = dual_vertices(&lambda(), &lambda()).map_err(|e| e.to_string())?;
        ensure(dual == expected, || {
            format!("dual vertices {:?}", dual.vertices())
        })
    })();
    report(
        4,
        "lambda pair dual has the 12 listed vertices",
        started,
        Duration::from_secs(1),
        outcome,
    )
}

fn criterion_5_exhaustive_oracle_d3() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        let posets = enumerate_posets(3).map_err(|e| e.to_string())?;
        ensure(posets.len() == 19, || format!("{} posets", posets.len()))?;
        let mut pairs = 0;
        for p in &posets {
            for q in &posets {
                common::check_pair(p, q, true)?;
                pairs += 1;
            }
        }
        ensure(pairs == 361, || format!("{pairs} pairs"))
    })();
    report(
        5,
        "exhaustive 19x19 oracle suite at d=3",
        started,
        Duration::from_secs(300),
        outcome,
    )
}

fn criterion_6_randomized_oracle_d4_d5() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7717_c4a1);
        for d in [4usize, 5] {
            for _ in 0..50 {
                let p = common::random_poset(&mut rng, d);
                let q = common::random_poset(&mut rng, d);
                common::check_pair(&p, &q, d == 4)?;
            }
        }
        Ok(())
    })();
    report(
        6,
        "random oracle suite, 50 pairs at d=4 and d=5",
        started,
        Duration::from_secs(600),
        outcome,
    )
}

fn criterion_7_stanley_volumes_d4() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        let posets = enumerate_posets(4).map_err(|e| e.to_string())?;
        ensure(posets.len() == 219, || format!("{} posets", posets.len()))?;
        for p in &posets {
            let e = BigInt::from(count_linear_extensions(p).map_err(|e| e.to_string())?);
            let expected = BigRational::new(e, 24.into());
            let order = hull_volume(&order_polytope_vertices(p)).map_err(|e| e.to_string())?;
            let chain = hull_volume(&chain_polytope_vertices(p)).map_err(|e| e.to_string())?;
            ensure(order == expected && chain == expected, || {
                format!("{p:?}: O {order}, C {chain}, e/4! {expected}")
            })?;
        }
        Ok(())
    })();
    report(
        7,
        "vol O(P) = vol C(P) = e(P)/4! for all 219 posets",
        started,
        Duration::from_secs(120),
        outcome,
    )
}

fn criterion_8_negative_controls() -> bool {
    let started = Instant::now();
    let outcome = (|| {
        // (a) the OO orthant piece for two 2-chains is not a lattice polytope.
        let chain = Poset::chain(2);
        let oo = gamma_vertices(GammaKind::OO, &chain, &chain).map_err(|e| e.to_string())?;
        let piece =
            restrict_to_orthant(&oo, LabelSet::from_labels([1])).map_err(|e| e.to_string())?;
        ensure(!piece.is_integral(), || {
            format!("piece is integral: {:?}", piece.vertices())
        })?;

        // (b) no 3-element poset has exactly 7 antichains.
        ensure(
            no_poset_with_k_antichains(3, 7).map_err(|e| e.to_string())?,
            || "found a 3-element poset with 7 antichains".into(),
        )?;

        // (c) chains shared between orthants collapse to one normal.
        let a = Poset::antichain(3);
        let distinct = facet_normals(&a, &a).map_err(|e| e.to_string())?.len();
        let with_repeats = chain_multiset_count(&a, &a).map_err(|e| e.to_string())?;
        ensure(distinct < with_repeats, || {
            format!("{distinct} vs {with_repeats}")
        })
    })();
    report(
        8,
        "negative controls",
        started,
        Duration::from_secs(10),
        outcome,
    )
}

fn main() -> ExitCode {
    let results = [
        criterion_1_lambda_volume(),
        criterion_2_antichain_over_chain_volume(),
        criterion_3_antichain_over_chain_facet_count(),
        criterion_4_lambda_dual_vertices(),
        criterion_5_exhaustive_oracle_d3(),
        criterion_6_randomized_oracle_d4_d5(),
        criterion_7_stanley_volumes_d4(),
        criterion_8_negative_controls(),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed} of {} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
