#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use twinchain_core::geometry::{hull, hull_volume, is_reflexive, polar_dual};
use twinchain_core::twinned::{
    check_region_decomposition, dual_vertices, facet_normals, gamma_vertices, normals_as_bigint,
    volume_formula, GammaKind,
};
use twinchain_core::{LabelSet, Poset};

/// Random labeled poset: a random total order thinned with a random
/// density, then transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, d: usize) -> Poset {
    let mut order: Vec<usize> = (0..d).collect();
    order.shuffle(rng);
    let density: f64 = rng.gen_range(0.0..1.0);
    let mut relations = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            if rng.gen_bool(density) {
                relations.push((order[a], order[b]));
            }
        }
    }
    Poset::from_relations(d, relations).expect("a thinned total order is acyclic")
}

/// The exact checks shared by the exhaustive and randomized oracle suites.
pub fn check_pair(p: &Poset, q: &Poset, with_regions: bool) -> Result<(), String> {
    let ctx = || format!("P={p:?} Q={q:?}");
    let cc = gamma_vertices(GammaKind::CC, p, q).map_err(|e| e.to_string())?;
    let h = hull(&cc).map_err(|e| e.to_string())?;

    let formula = volume_formula(p, q).map_err(|e| e.to_string())?;
    let volume = hull_volume(&cc).map_err(|e| e.to_string())?;
    if formula != volume {
        return Err(format!(
            "volume: formula {formula} vs hull {volume} for {}",
            ctx()
        ));
    }

    let hrep = h.hrep();
    if !hrep.all_unit_rhs() {
        return Err(format!("facet with rhs != 1 for {}", ctx()));
    }
    let normals = facet_normals(p, q).map_err(|e| e.to_string())?;
    if normals_as_bigint(&normals) != hrep.normals() {
        return Err(format!("facet normals differ for {}", ctx()));
    }

    let dual = dual_vertices(p, q).map_err(|e| e.to_string())?;
    let polar = polar_dual(&hrep).map_err(|e| e.to_string())?;
    if dual != polar {
        return Err(format!("dual vertices differ for {}", ctx()));
    }

    if !is_reflexive(&cc).map_err(|e| e.to_string())? {
        return Err(format!("CC not reflexive for {}", ctx()));
    }
    let oc = gamma_vertices(GammaKind::OC, p, q).map_err(|e| e.to_string())?;
    if !is_reflexive(&oc).map_err(|e| e.to_string())? {
        return Err(format!("OC not reflexive for {}", ctx()));
    }

    if with_regions {
        for bits in 0u64..1 << p.d() {
            let w = LabelSet::from_bits(bits);
            if !check_region_decomposition(p, q, w).map_err(|e| e.to_string())? {
                return Err(format!("region {w} fails for {}", ctx()));
            }
        }
    }
    Ok(())
}
