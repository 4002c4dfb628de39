use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use twinchain_core::geometry::{hull_facets, hull_volume, is_reflexive, polar_dual};
use twinchain_core::poset::{
    antichains, count_linear_extensions, has_common_linear_extension, ideals, maximal_chains,
    parse_poset,
};
use twinchain_core::twinned::{
    dual_vertices, facet_normals, gamma_vertices, region_check, volume_formula,
};
use twinchain_core::{
    BigRational, Error, GammaKind, HRep, LabelSet, Poset, Report, SubsetList, VRep,
};

use crate::args::{Kind, Method, Pair};

/// Largest `d` accepted by the hull-based methods.
pub const MAX_HULL_SIZE: usize = 5;

/// A failed invocation, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or flags (exit 1).
    Usage(String),
    /// An error from the core library; capacity errors exit 2, others 1.
    Core(Error),
    /// Two methods disagreed (exit 3).
    Mismatch(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Core(e) if e.is_capacity() => 2,
            Failure::Core(_) => 1,
            Failure::Mismatch(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Mismatch(msg) => f.write_str(msg),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<String, Failure>;

pub fn load_poset(path: &Path) -> Result<Poset, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_poset(&text).map_err(|e| match e {
        e if e.is_capacity() => Failure::Core(e),
        e => Failure::Usage(format!("{}: {e}", path.display())),
    })
}

fn load_pair(pair: &Pair) -> Result<(Poset, Poset), Failure> {
    let p = load_poset(&pair.p)?;
    let q = load_poset(&pair.q)?;
    if p.d() != q.d() {
        return Err(Error::SizeMismatch {
            left: p.d(),
            right: q.d(),
        }
        .into());
    }
    Ok((p, q))
}

fn require_hull_size(d: usize) -> Result<(), Failure> {
    if d > MAX_HULL_SIZE {
        return Err(Error::Capacity {
            what: "hull-based method size",
            value: d,
            limit: MAX_HULL_SIZE,
        }
        .into());
    }
    Ok(())
}

fn require_cc(kind: GammaKind, what: &str) -> Result<(), Failure> {
    if kind != GammaKind::CC {
        return Err(Failure::Usage(format!(
            "the {what} formula covers --kind cc only; use --method hull for --kind {kind}"
        )));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Error::from(e).into())
}

fn labels_json(sets: &SubsetList) -> Value {
    sets.iter().map(|s| json!(s.labels())).collect()
}

fn join_sets(sets: &SubsetList) -> String {
    sets.iter()
        .map(LabelSet::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn validate(p: &Path, q: Option<&Path>, as_json: bool) -> Outcome {
    let mut posets = vec![("p", load_poset(p)?)];
    if let Some(q) = q {
        posets.push(("q", load_poset(q)?));
    }
    if as_json {
        let mut map = serde_json::Map::new();
        for (name, poset) in &posets {
            let relations: Vec<[usize; 2]> = poset
                .relations()
                .iter()
                .map(|&(i, j)| [i + 1, j + 1])
                .collect();
            map.insert(
                name.to_string(),
                json!({ "d": poset.d(), "relations": relations }),
            );
        }
        return to_json(&Value::Object(map));
    }
    Ok(posets
        .iter()
        .map(|(name, poset)| {
            format!(
                "{}: valid, d = {}, {} relations ({} covers)\n",
                name.to_uppercase(),
                poset.d(),
                poset.relations().len(),
                poset.covers().len()
            )
        })
        .collect())
}

pub fn enumerate(path: &Path, count_only: bool, as_json: bool) -> Outcome {
    let p = load_poset(path)?;
    let ideals = ideals(&p);
    let antichains = antichains(&p);
    let chains = maximal_chains(&p);
    let extensions = count_linear_extensions(&p)?;
    if as_json {
        let value = if count_only {
            json!({
                "d": p.d(),
                "ideals": ideals.len(),
                "antichains": antichains.len(),
                "maximal_chains": chains.len(),
                "linear_extensions": extensions.to_string(),
            })
        } else {
            json!({
                "d": p.d(),
                "ideals": labels_json(&ideals),
                "antichains": labels_json(&antichains),
                "maximal_chains": labels_json(&chains),
                "linear_extensions": extensions.to_string(),
            })
        };
        return to_json(&value);
    }
    let mut out = String::new();
    for (name, sets) in [
        ("ideals", &ideals),
        ("antichains", &antichains),
        ("maximal chains", &chains),
    ] {
        if count_only {
            out.push_str(&format!("{name}: {}\n", sets.len()));
        } else {
            out.push_str(&format!("{name} ({}): {}\n", sets.len(), join_sets(sets)));
        }
    }
    out.push_str(&format!("linear extensions: {extensions}\n"));
    Ok(out)
}

fn formula_volume(kind: GammaKind, p: &Poset, q: &Poset) -> Result<BigRational, Failure> {
    if kind == GammaKind::OO && !has_common_linear_extension(p, q)? {
        return Err(Failure::Usage(
            "the volume formula covers --kind oo only when P and Q share a linear extension; use --method hull".into(),
        ));
    }
    Ok(volume_formula(p, q)?)
}

fn hull_of(kind: GammaKind, p: &Poset, q: &Poset) -> Result<VRep, Failure> {
    require_hull_size(p.d())?;
    Ok(gamma_vertices(kind, p, q)?)
}

pub fn volume(pair: &Pair, kind: Kind, method: Method, as_json: bool) -> Outcome {
    let (p, q) = load_pair(pair)?;
    let kind = GammaKind::from(kind);
    let text = match method {
        Method::Formula => {
            let v = formula_volume(kind, &p, &q)?;
            if as_json && kind == GammaKind::CC {
                return to_json(&Report::from_formula(&p, &q)?);
            }
            format!("volume = {v}\n")
        }
        Method::Hull => format!("volume = {}\n", hull_volume(&hull_of(kind, &p, &q)?)?),
        Method::Both => {
            let f = formula_volume(kind, &p, &q)?;
            let h = hull_volume(&hull_of(kind, &p, &q)?)?;
            if f != h {
                return Err(Failure::Mismatch(format!(
                    "formula = {f}, hull = {h}, disagree"
                )));
            }
            format!("formula = {f}, hull = {h}, agree\n")
        }
    };
    if as_json {
        require_hull_size(p.d())?;
        return to_json(&Report::from_hull(kind, &p, &q)?);
    }
    Ok(text)
}

fn format_hrep(h: &HRep) -> String {
    h.rows()
        .iter()
        .map(|r| {
            let normal: Vec<String> = r.normal.iter().map(ToString::to_string).collect();
            format!("({}) . x <= {}\n", normal.join(","), r.rhs)
        })
        .collect()
}

pub fn facets(pair: &Pair, kind: Kind, method: Method, count_only: bool, as_json: bool) -> Outcome {
    let (p, q) = load_pair(pair)?;
    let kind = GammaKind::from(kind);
    let h = match method {
        Method::Formula => {
            require_cc(kind, "facet")?;
            facet_normals(&p, &q)?.to_hrep()
        }
        Method::Hull => hull_facets(&hull_of(kind, &p, &q)?)?,
        Method::Both => {
            require_cc(kind, "facet")?;
            let f = facet_normals(&p, &q)?.to_hrep();
            let h = hull_facets(&hull_of(kind, &p, &q)?)?;
            let verdict = if f == h { "agree" } else { "disagree" };
            let line = format!(
                "formula = {} facets, hull = {} facets, {verdict}",
                f.len(),
                h.len()
            );
            if f != h {
                return Err(Failure::Mismatch(line));
            }
            if !count_only {
                return Ok(format!("{line}\n"));
            }
            h
        }
    };
    match (count_only, as_json) {
        (true, true) => to_json(&json!({ "facet_count": h.len() })),
        (true, false) => Ok(format!("{}\n", h.len())),
        (false, true) => to_json(&h),
        (false, false) => Ok(format_hrep(&h)),
    }
}

pub fn dual(pair: &Pair, kind: Kind, method: Method, count_only: bool, as_json: bool) -> Outcome {
    let (p, q) = load_pair(pair)?;
    let kind = GammaKind::from(kind);
    let v = match method {
        Method::Formula => {
            require_cc(kind, "dual")?;
            dual_vertices(&p, &q)?
        }
        Method::Hull => polar_dual(&hull_facets(&hull_of(kind, &p, &q)?)?)?,
        Method::Both => {
            require_cc(kind, "dual")?;
            let f = dual_vertices(&p, &q)?;
            let h = polar_dual(&hull_facets(&hull_of(kind, &p, &q)?)?)?;
            let verdict = if f == h { "agree" } else { "disagree" };
            let line = format!(
                "formula = {} vertices, hull = {} vertices, {verdict}",
                f.len(),
                h.len()
            );
            if f != h {
                return Err(Failure::Mismatch(line));
            }
            if !count_only {
                return Ok(format!("{line}\n"));
            }
            h
        }
    };
    match (count_only, as_json) {
        (true, true) => to_json(&json!({ "vertex_count": v.len() })),
        (true, false) => Ok(format!("{}\n", v.len())),
        (false, true) => to_json(&v),
        (false, false) => Ok(v.vertices().iter().map(|x| format!("{x}\n")).collect()),
    }
}

pub fn reflexive(pair: &Pair, kind: Kind, as_json: bool) -> Outcome {
    let (p, q) = load_pair(pair)?;
    let kind = GammaKind::from(kind);
    if as_json {
        require_hull_size(p.d())?;
        return to_json(&Report::from_hull(kind, &p, &q)?);
    }
    let answer = is_reflexive(&hull_of(kind, &p, &q)?)?;
    Ok(format!("reflexive = {answer}\n"))
}

fn parse_w(list: &str, d: usize) -> Result<LabelSet, Failure> {
    let mut w = LabelSet::EMPTY;
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let label: usize = item
            .parse()
            .map_err(|_| Failure::Usage(format!("--w: `{item}` is not a label")))?;
        if label == 0 || label > d {
            return Err(Error::LabelOutOfRange { label, d }.into());
        }
        w.insert(label - 1);
    }
    Ok(w)
}

pub fn region_check_cmd(pair: &Pair, kind: Kind, w: Option<&str>, as_json: bool) -> Outcome {
    let (p, q) = load_pair(pair)?;
    let d = p.d();
    require_hull_size(d)?;
    let kind = GammaKind::from(kind);
    let orthants: Vec<LabelSet> = match w {
        Some(list) => vec![parse_w(list, d)?],
        None => {
            let mut all: Vec<LabelSet> = (0u64..1 << d).map(LabelSet::from_bits).collect();
            all.sort();
            all
        }
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for w in orthants {
        let check = region_check(kind, &p, &q, w)?;
        if as_json {
            rows.push(json!({
                "w": w.labels(),
                "holds": check.holds(),
                "vertex_identity": check.vertex_identity,
                "integral": check.restricted_is_integral(),
                "restricted": check.restricted,
            }));
        } else {
            let vertices: Vec<String> = check
                .restricted
                .vertices()
                .iter()
                .map(ToString::to_string)
                .collect();
            text.push_str(&format!(
                "W = {w}: matches signed chain polytope = {}, integral = {}\n  {}\n",
                check.holds(),
                check.restricted_is_integral(),
                vertices.join(" ")
            ));
        }
    }
    if as_json {
        return to_json(&Value::Array(rows));
    }
    Ok(text)
}
