//! Built-in oracle suite: golden values plus the exhaustive comparison of
//! every closed form against the hull for all pairs of 3-element posets.

use num_traits::{One, Zero};
use serde_json::json;
use twinchain_core::geometry::{hull, hull_volume, is_reflexive, polar_dual, restrict_to_orthant};
use twinchain_core::poset::{count_linear_extensions, enumerate_posets};
use twinchain_core::twinned::{
    chain_multiset_count, chain_polytope_vertices, check_region_decomposition, dual_vertices,
    facet_normals, gamma_vertices, no_poset_with_k_antichains, normals_as_bigint,
    order_polytope_vertices, volume_formula, volume_terms,
};
use twinchain_core::{BigInt, BigRational, GammaKind, LabelSet, Poset, Result, VRep};

use crate::commands::Failure;

type Check = std::result::Result<(), String>;

fn lambda() -> Poset {
    Poset::from_relations(3, [(1, 0), (2, 0)]).expect("valid relations")
}

fn exact(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn run(check: impl FnOnce() -> Result<Check>) -> Check {
    check().unwrap_or_else(|e| Err(e.to_string()))
}

fn golden_lambda() -> Check {
    run(|| {
        let (p, q) = (lambda(), lambda());
        let volume = volume_formula(&p, &q)?;
        let mut terms: Vec<u32> = volume_terms(&p, &q)?
            .into_iter()
            .map(|(_, e)| u32::try_from(e).unwrap_or(u32::MAX))
            .collect();
        terms.sort_unstable();
        Ok(exact(
            volume == BigRational::from_integer(2.into()) && terms == [1, 1, 1, 1, 2, 2, 2, 2],
            || format!("volume {volume}, terms {terms:?}"),
        ))
    })
}

fn golden_antichain_chain() -> Check {
    run(|| {
        let mut sum = BigRational::zero();
        let mut fact = BigInt::one();
        for d in 1..=6usize {
            if d == 1 {
                sum += BigRational::one();
            }
            fact *= d;
            sum += BigRational::new(BigInt::one(), fact.clone());
            let (p, q) = (Poset::antichain(d), Poset::chain(d));
            let formula = volume_formula(&p, &q)?;
            if formula != sum {
                return Ok(Err(format!("d={d}: formula {formula}, expected {sum}")));
            }
            if d <= 4 {
                let h = hull_volume(&gamma_vertices(GammaKind::CC, &p, &q)?)?;
                if h != sum {
                    return Ok(Err(format!("d={d}: hull {h}, expected {sum}")));
                }
            }
            let n = facet_normals(&p, &q)?.len();
            if d <= 5 && n != d * (1 << (d - 1)) + 1 {
                return Ok(Err(format!("d={d}: {n} facet normals")));
            }
        }
        Ok(Ok(()))
    })
}

fn golden_dual() -> Check {
    run(|| {
        let listed = [
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
                .flat_map(|v| [v.to_vec(), v.iter().map(|x: &i64| -x).collect()]),
        )?;
        let dual = dual_vertices(&lambda(), &lambda())?;
        Ok(exact(dual == expected, || {
            format!("{} dual vertices", dual.len())
        }))
    })
}

fn check_pair(p: &Poset, q: &Poset) -> Result<Check> {
    let cc = gamma_vertices(GammaKind::CC, p, q)?;
    let formula = volume_formula(p, q)?;
    let volume = hull_volume(&cc)?;
    if formula != volume {
        return Ok(Err(format!("{p:?} {q:?}: volume {formula} vs {volume}")));
    }
    let h = hull(&cc)?.hrep();
    if !h.all_unit_rhs() || normals_as_bigint(&facet_normals(p, q)?) != h.normals() {
        return Ok(Err(format!("{p:?} {q:?}: facets differ")));
    }
    if dual_vertices(p, q)? != polar_dual(&h)? {
        return Ok(Err(format!("{p:?} {q:?}: dual differs")));
    }
    if !is_reflexive(&cc)? || !is_reflexive(&gamma_vertices(GammaKind::OC, p, q)?)? {
        return Ok(Err(format!("{p:?} {q:?}: not reflexive")));
    }
    for bits in 0u64..1 << p.d() {
        if !check_region_decomposition(p, q, LabelSet::from_bits(bits))? {
            return Ok(Err(format!(
                "{p:?} {q:?}: orthant {} differs",
                LabelSet::from_bits(bits)
            )));
        }
    }
    Ok(Ok(()))
}

fn exhaustive(d: usize) -> Check {
    run(|| {
        let posets = enumerate_posets(d)?;
        for p in &posets {
            for q in &posets {
                if let Err(why) = check_pair(p, q)? {
                    return Ok(Err(why));
                }
            }
        }
        Ok(Ok(()))
    })
}

fn stanley(d: usize) -> Check {
    run(|| {
        let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
        for p in enumerate_posets(d)? {
            let expected = BigRational::new(count_linear_extensions(&p)?.into(), fact.clone());
            let order = hull_volume(&order_polytope_vertices(&p))?;
            let chain = hull_volume(&chain_polytope_vertices(&p))?;
            if order != expected || chain != expected {
                return Ok(Err(format!(
                    "{p:?}: O {order}, C {chain}, expected {expected}"
                )));
            }
        }
        Ok(Ok(()))
    })
}

fn negative_controls() -> Check {
    run(|| {
        let chain = Poset::chain(2);
        let oo = gamma_vertices(GammaKind::OO, &chain, &chain)?;
        if restrict_to_orthant(&oo, LabelSet::from_labels([1]))?.is_integral() {
            return Ok(Err("OO orthant piece is integral".into()));
        }
        if !no_poset_with_k_antichains(3, 7)? {
            return Ok(Err("a 3-element poset has 7 antichains".into()));
        }
        let a = Poset::antichain(3);
        let (distinct, total) = (facet_normals(&a, &a)?.len(), chain_multiset_count(&a, &a)?);
        Ok(exact(distinct < total, || {
            format!("{distinct} normals vs {total} chains")
        }))
    })
}

pub fn selftest(as_json: bool) -> Result<String, Failure> {
    let checks: Vec<(&str, Check)> = vec![
        ("lambda pair volume", golden_lambda()),
        ("antichain over chain", golden_antichain_chain()),
        ("lambda pair dual", golden_dual()),
        ("exhaustive pairs d <= 3", (1..=3).try_for_each(exhaustive)),
        (
            "order and chain polytope volumes d <= 4",
            (1..=4).try_for_each(stanley),
        ),
        ("negative controls", negative_controls()),
    ];
    let failed = checks.iter().filter(|(_, c)| c.is_err()).count();
    let out = if as_json {
        let rows: Vec<_> = checks
            .iter()
            .map(|(name, c)| json!({ "name": name, "ok": c.is_ok(), "detail": c.as_ref().err() }))
            .collect();
        serde_json::to_string(&rows).map_err(|e| Failure::Core(e.into()))? + "\n"
    } else {
        let mut out: String = checks
            .iter()
            .map(|(name, c)| match c {
                Ok(()) => format!("ok    {name}\n"),
                Err(why) => format!("FAIL  {name}: {why}\n"),
            })
            .collect();
        out.push_str(&format!(
            "{} of {} checks passed\n",
            checks.len() - failed,
            checks.len()
        ));
        out
    };
    if failed > 0 {
        // The report still goes out so the failing check is visible.
        print!("{out}");
        return Err(Failure::Mismatch(format!(
            "{failed} selftest checks failed"
        )));
    }
    Ok(out)
}
