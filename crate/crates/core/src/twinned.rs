//! Order, chain and twinned chain polytopes of posets, the closed-form
//! volume and facet descriptions of `Γ(C(P), -C(Q))`, and checks of those
//! descriptions against the polyhedral kernel.
//!
//! For `W ⊆ [d]` the signed poset `Δ_W(P,Q)` puts `P` restricted to `W`
//! below `Q` restricted to the complement. The twinned chain polytope is
//! the union over `W` of the signed chain polytopes `C'(Δ_W)`, one per
//! closed orthant, which gives
//!
//! * volume `Σ_W e(Δ_W) / d!`,
//! * facet normals `ρ'(C)` for `C` a maximal chain of some `Δ_W`, every
//!   facet at height one,
//! * dual polytope with exactly those normals as vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    canonical_vrep, format_rational, hull, hull_volume, is_centrally_symmetric, is_reflexive,
    restrict_to_orthant, HRep, HalfSpace, RationalPoint, VRep,
};
use crate::poset::{
    antichains, count_linear_extensions_signed, delta, enumerate_posets,
    has_common_linear_extension, ideals, maximal_chains, LabelSet, Poset, SignedPoset,
    MAX_EXTENSION_SIZE,
};

/// Which pair of polytopes is glued: `Γ(X(P), -Y(Q))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaKind {
    /// `Γ(C(P), -C(Q))`, the twinned chain polytope.
    CC,
    /// `Γ(O(P), -C(Q))`.
    OC,
    /// `Γ(O(P), -O(Q))`.
    OO,
}

impl GammaKind {
    pub const ALL: [GammaKind; 3] = [GammaKind::CC, GammaKind::OC, GammaKind::OO];
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaKind::CC => "cc",
            GammaKind::OC => "oc",
            GammaKind::OO => "oo",
        })
    }
}

impl FromStr for GammaKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cc" => Ok(GammaKind::CC),
            "oc" => Ok(GammaKind::OC),
            "oo" => Ok(GammaKind::OO),
            other => Err(format!(
                "unknown polytope kind `{other}` (expected cc, oc or oo)"
            )),
        }
    }
}

/// `ρ(S)`: the 0/1 indicator vector of `s` in `Z^d`.
pub fn indicator(s: LabelSet, d: usize) -> Vec<i64> {
    (0..d).map(|i| i64::from(s.contains(i))).collect()
}

/// `ρ'(S)`: `+1` on elements of `s` in `plus`, `-1` on the rest of `s`.
pub fn signed_indicator(s: LabelSet, plus: LabelSet, d: usize) -> Vec<i64> {
    (0..d)
        .map(|i| match (s.contains(i), plus.contains(i)) {
            (false, _) => 0,
            (true, true) => 1,
            (true, false) => -1,
        })
        .collect()
}

/// Vertices of the order polytope `O(P)`: indicators of order ideals.
pub fn order_polytope_vertices(p: &Poset) -> VRep {
    let d = p.d();
    VRep::from_integer_points(d, ideals(p).iter().map(|&s| indicator(s, d)))
        .expect("indicators have length d")
}

/// Vertices of the chain polytope `C(P)`: indicators of antichains.
pub fn chain_polytope_vertices(p: &Poset) -> VRep {
    let d = p.d();
    VRep::from_integer_points(d, antichains(p).iter().map(|&s| indicator(s, d)))
        .expect("indicators have length d")
}

/// Vertices of `C'(Δ_W)`: signed indicators `ρ'(A)` of its antichains.
pub fn signed_chain_vertices(sp: &SignedPoset) -> VRep {
    let d = sp.d();
    VRep::from_integer_points(
        d,
        antichains(sp.poset())
            .iter()
            .map(|&s| signed_indicator(s, sp.plus(), d)),
    )
    .expect("indicators have length d")
}

fn check_sizes(p: &Poset, q: &Poset) -> Result<usize> {
    if p.d() != q.d() {
        return Err(Error::SizeMismatch {
            left: p.d(),
            right: q.d(),
        });
    }
    Ok(p.d())
}

/// Generators of `Γ(X(P), -Y(Q))` before reduction to vertices.
pub fn gamma_generators(kind: GammaKind, p: &Poset, q: &Poset) -> Result<VRep> {
    check_sizes(p, q)?;
    let (upper, lower) = match kind {
        GammaKind::CC => (chain_polytope_vertices(p), chain_polytope_vertices(q)),
        GammaKind::OC => (order_polytope_vertices(p), chain_polytope_vertices(q)),
        GammaKind::OO => (order_polytope_vertices(p), order_polytope_vertices(q)),
    };
    upper.union(&lower.neg())
}

/// Vertices of `Γ(X(P), -Y(Q))` for the given kind.
pub fn gamma_vertices(kind: GammaKind, p: &Poset, q: &Poset) -> Result<VRep> {
    canonical_vrep(&gamma_generators(kind, p, q)?)
}

/// A glued polytope together with the common-linear-extension flag that
/// its `OO` volume and reflexivity statements depend on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma {
    pub kind: GammaKind,
    pub common_linear_extension: bool,
    pub vertices: VRep,
}

impl Gamma {
    pub fn build(kind: GammaKind, p: &Poset, q: &Poset) -> Result<Self> {
        Ok(Gamma {
            kind,
            common_linear_extension: has_common_linear_extension(p, q)?,
            vertices: gamma_vertices(kind, p, q)?,
        })
    }

    /// Whether the closed-form volume is known to apply to this kind.
    pub fn formula_applies(&self) -> bool {
        self.kind != GammaKind::OO || self.common_linear_extension
    }
}

/// Per-orthant terms `(W, e(Δ_W(P,Q)))` for every `W ⊆ [d]`, `W` in
/// increasing bitmask order.
pub fn volume_terms(p: &Poset, q: &Poset) -> Result<Vec<(LabelSet, BigUint)>> {
    let d = check_sizes(p, q)?;
    if d > MAX_EXTENSION_SIZE {
        return Err(Error::capacity(
            "volume formula size",
            d,
            MAX_EXTENSION_SIZE,
        ));
    }
    (0u64..1 << d)
        .map(|bits| {
            let w = LabelSet::from_bits(bits);
            let e = count_linear_extensions_signed(&delta(p, q, w)?)?;
            Ok((w, e))
        })
        .collect()
}

/// `vol Γ(C(P), -C(Q)) = Σ_W e(Δ_W(P,Q)) / d!`, exactly.
pub fn volume_formula(p: &Poset, q: &Poset) -> Result<BigRational> {
    let terms = volume_terms(p, q)?;
    let total: BigUint = terms.into_iter().map(|(_, e)| e).sum();
    let d_factorial: BigUint = (1..=p.d() as u64).map(BigUint::from).product();
    Ok(BigRational::new(total.into(), d_factorial.into()))
}

/// Deduplicated facet normals `ρ'(C)` of a twinned chain polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetNormalSet {
    dim: usize,
    normals: Vec<Vec<i64>>,
}

impl FacetNormalSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn contains(&self, normal: &[i64]) -> bool {
        self.normals
            .binary_search_by(|n| n.as_slice().cmp(normal))
            .is_ok()
    }

    /// The inequalities `a . x <= 1`.
    pub fn to_hrep(&self) -> HRep {
        let rows = self
            .normals
            .iter()
            .map(|a| {
                HalfSpace::from_integers(a.iter().copied(), BigRational::from_integer(1.into()))
            })
            .collect::<Result<Vec<_>>>()
            .expect("signed chain indicators are nonzero");
        HRep::new(self.dim, rows).expect("normals have length d")
    }

    /// The normals as points: the vertices of the dual polytope.
    pub fn to_vrep(&self) -> VRep {
        VRep::from_integer_points(self.dim, self.normals.iter().cloned())
            .expect("normals have length d")
    }
}

/// Maximal chains of `Δ_W(P,Q)` for each `W`, as signed indicators.
pub fn chain_normals_by_orthant(p: &Poset, q: &Poset) -> Result<Vec<(LabelSet, Vec<Vec<i64>>)>> {
    let d = check_sizes(p, q)?;
    if d > MAX_EXTENSION_SIZE {
        return Err(Error::capacity(
            "facet enumeration size",
            d,
            MAX_EXTENSION_SIZE,
        ));
    }
    (0u64..1 << d)
        .map(|bits| {
            let w = LabelSet::from_bits(bits);
            let sp = delta(p, q, w)?;
            let normals = maximal_chains(sp.poset())
                .iter()
                .map(|&c| signed_indicator(c, w, d))
                .collect();
            Ok((w, normals))
        })
        .collect()
}

/// `∪_W { ρ'(C) : C maximal chain of Δ_W(P,Q) }`.
pub fn facet_normals(p: &Poset, q: &Poset) -> Result<FacetNormalSet> {
    let d = check_sizes(p, q)?;
    let set: BTreeSet<Vec<i64>> = chain_normals_by_orthant(p, q)?
        .into_iter()
        .flat_map(|(_, normals)| normals)
        .collect();
    Ok(FacetNormalSet {
        dim: d,
        normals: set.into_iter().collect(),
    })
}

/// `Σ_W |M(Δ_W(P,Q))|`, counting chains shared between orthants repeatedly.
pub fn chain_multiset_count(p: &Poset, q: &Poset) -> Result<usize> {
    Ok(chain_normals_by_orthant(p, q)?
        .iter()
        .map(|(_, normals)| normals.len())
        .sum())
}

/// Vertices of the dual of `Γ(C(P), -C(Q))`, read off from the facet normals.
pub fn dual_vertices(p: &Poset, q: &Poset) -> Result<VRep> {
    Ok(facet_normals(p, q)?.to_vrep())
}

/// Outcome of comparing one orthant of a glued polytope with `C'(Δ_W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionCheck {
    pub w: LabelSet,
    /// Vertices of the polytope cut down to the closed orthant of `w`.
    pub restricted: VRep,
    /// Vertices of `C'(Δ_W(P,Q))`.
    pub expected: VRep,
    /// The polytope's own vertices inside the orthant equal those of
    /// `C'(Δ_W)` minus the origin.
    pub vertex_identity: bool,
}

impl RegionCheck {
    pub fn holds(&self) -> bool {
        self.restricted == self.expected && self.vertex_identity
    }

    pub fn restricted_is_integral(&self) -> bool {
        self.restricted.is_integral()
    }
}

fn in_closed_orthant(x: &RationalPoint, w: LabelSet) -> bool {
    x.coords().iter().enumerate().all(|(i, c)| {
        if w.contains(i) {
            c >= &BigRational::from_integer(0.into())
        } else {
            c <= &BigRational::from_integer(0.into())
        }
    })
}

/// Compares `Γ(X(P), -Y(Q))` cut to the orthant of `w` with `C'(Δ_W(P,Q))`.
pub fn region_check(kind: GammaKind, p: &Poset, q: &Poset, w: LabelSet) -> Result<RegionCheck> {
    let d = check_sizes(p, q)?;
    if let Some(i) = w.indices().find(|&i| i >= d) {
        return Err(Error::LabelOutOfRange { label: i + 1, d });
    }
    let gamma = gamma_vertices(kind, p, q)?;
    let restricted = restrict_to_orthant(&gamma, w)?;
    let expected = canonical_vrep(&signed_chain_vertices(&delta(p, q, w)?))?;

    let in_orthant: Vec<RationalPoint> = gamma
        .vertices()
        .iter()
        .filter(|x| in_closed_orthant(x, w))
        .cloned()
        .collect();
    let without_origin: Vec<RationalPoint> = expected
        .vertices()
        .iter()
        .filter(|x| !x.is_zero())
        .cloned()
        .collect();
    let vertex_identity = VRep::new(d, in_orthant)? == VRep::new(d, without_origin)?;

    Ok(RegionCheck {
        w,
        restricted,
        expected,
        vertex_identity,
    })
}

/// Whether `Γ(C(P), -C(Q))` restricted to the orthant of `w` is exactly
/// `C'(Δ_W(P,Q))`, including the vertex-level identity.
pub fn check_region_decomposition(p: &Poset, q: &Poset, w: LabelSet) -> Result<bool> {
    Ok(region_check(GammaKind::CC, p, q, w)?.holds())
}

/// True iff no labeled poset on `d` elements has exactly `k` antichains.
pub fn no_poset_with_k_antichains(d: usize, k: usize) -> Result<bool> {
    Ok(enumerate_posets(d)?
        .iter()
        .all(|p| antichains(p).len() != k))
}

/// Summary of a glued polytope, as emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub volume: String,
    pub facet_count: usize,
    pub reflexive: bool,
    pub centrally_symmetric: bool,
}

impl Report {
    /// Computes every field from the hull of the polytope.
    pub fn from_hull(kind: GammaKind, p: &Poset, q: &Poset) -> Result<Self> {
        let vertices = gamma_vertices(kind, p, q)?;
        let h = hull(&vertices)?;
        Ok(Report {
            volume: format_rational(&hull_volume(&vertices)?),
            facet_count: h.facets.len(),
            reflexive: is_reflexive(&vertices)?,
            centrally_symmetric: is_centrally_symmetric(&vertices),
        })
    }

    /// Volume and facet count from the closed forms; valid for any `d`
    /// within the linear-extension bound. Reflexivity is taken as given for
    /// `Γ(C(P), -C(Q))`.
    pub fn from_formula(p: &Poset, q: &Poset) -> Result<Self> {
        let normals = facet_normals(p, q)?;
        let generators = gamma_generators(GammaKind::CC, p, q)?;
        let nonzero: Vec<RationalPoint> = generators
            .vertices()
            .iter()
            .filter(|x| !x.is_zero())
            .cloned()
            .collect();
        Ok(Report {
            volume: format_rational(&volume_formula(p, q)?),
            facet_count: normals.len(),
            reflexive: true,
            centrally_symmetric: is_centrally_symmetric(&VRep::new(p.d(), nonzero)?),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

/// `ρ'(C)` vectors as `BigInt` rows, for comparison with hull normals.
pub fn normals_as_bigint(set: &FacetNormalSet) -> Vec<Vec<BigInt>> {
    set.normals()
        .iter()
        .map(|n| n.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}
