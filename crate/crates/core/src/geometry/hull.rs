use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::dd::{extreme_rays, NotPointed};
use super::linalg::{clear_denominators, determinant, dot, make_primitive, rank};
use super::{Facet, HRep, HalfSpace, RationalPoint, VRep};

/// A full-dimensional polytope with both representations and facet-vertex
/// incidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    pub vertices: VRep,
    pub facets: Vec<Facet>,
}

impl Hull {
    pub fn dim(&self) -> usize {
        self.vertices.dim()
    }

    pub fn hrep(&self) -> HRep {
        let rows = self
            .facets
            .iter()
            .map(|f| HalfSpace {
                normal: f.normal.clone(),
                rhs: f.rhs.clone(),
            })
            .collect();
        HRep::new(self.dim(), rows).expect("facet normals match the ambient dimension")
    }
}

/// Convex hull of a full-dimensional point set.
///
/// Facets come from the double description method on the cone of valid
/// inequalities. Input points that are not vertices are dropped.
pub fn hull(v: &VRep) -> Result<Hull> {
    let d = v.dim();
    let points: Vec<Vec<BigRational>> = v.vertices().iter().map(|p| p.coords().to_vec()).collect();
    let (scaled, scale) = clear_denominators(&points);

    // Variables (a, c); row i says c - a.(scale * v_i) >= 0.
    let rows: Vec<Vec<BigInt>> = scaled
        .iter()
        .map(|u| {
            let mut row: Vec<BigInt> = u.iter().map(|x| -x).collect();
            row.push(BigInt::from(1));
            row
        })
        .collect();
    let rays = extreme_rays(&rows, d + 1).map_err(|NotPointed { rank }| Error::Dimension {
        expected: d,
        found: rank.saturating_sub(1),
    })?;

    let mut raw_facets: Vec<(HalfSpace, Vec<usize>)> = rays
        .into_iter()
        .map(|ray| {
            let mut normal = ray.vector[..d].to_vec();
            let g = make_primitive(&mut normal);
            let rhs = BigRational::new(ray.vector[d].clone(), &scale * g);
            (HalfSpace { normal, rhs }, ray.zeros.iter().collect())
        })
        .collect();
    raw_facets.sort_by(|a, b| a.0.cmp(&b.0));

    // A point is a vertex iff the normals of its facets span R^d.
    let mut incident_normals: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); points.len()];
    for (h, incident) in &raw_facets {
        for &i in incident {
            incident_normals[i].push(h.normal.clone());
        }
    }
    let mut new_index = vec![usize::MAX; points.len()];
    let mut vertices = Vec::new();
    for (i, normals) in incident_normals.iter().enumerate() {
        if normals.len() >= d && rank(normals) == d {
            new_index[i] = vertices.len();
            vertices.push(v.vertices()[i].clone());
        }
    }

    let facets = raw_facets
        .into_iter()
        .map(|(h, incident)| Facet {
            normal: h.normal,
            rhs: h.rhs,
            incident_vertices: incident
                .into_iter()
                .filter_map(|i| (new_index[i] != usize::MAX).then_some(new_index[i]))
                .collect(),
        })
        .collect();
    Ok(Hull {
        vertices: VRep::new(d, vertices)?,
        facets,
    })
}

/// Irredundant H-representation of `conv(v)`.
pub fn hull_facets(v: &VRep) -> Result<HRep> {
    Ok(hull(v)?.hrep())
}

/// The vertices of `conv(v)`, for full-dimensional `v`.
pub fn canonical_vrep(v: &VRep) -> Result<VRep> {
    Ok(hull(v)?.vertices)
}

/// Facets by brute force: every affinely independent `d`-subset of points
/// spans a candidate hyperplane, kept when all points lie on one side.
///
/// Exponential in the number of points. Used to cross-check [`hull_facets`].
pub fn hull_facets_by_candidates(v: &VRep) -> Result<HRep> {
    let d = v.dim();
    let points: Vec<Vec<BigRational>> = v.vertices().iter().map(|p| p.coords().to_vec()).collect();
    let (scaled, scale) = clear_denominators(&points);
    if scaled.is_empty() {
        return Err(Error::Dimension {
            expected: d,
            found: 0,
        });
    }
    let diffs: Vec<Vec<BigInt>> = scaled[1..]
        .iter()
        .map(|u| u.iter().zip(&scaled[0]).map(|(x, y)| x - y).collect())
        .collect();
    let found = rank(&diffs);
    if found < d {
        return Err(Error::Dimension { expected: d, found });
    }

    let mut rows = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if let Some(row) = candidate(&scaled, &subset, &scale) {
            rows.push(row);
        }
        // Next d-combination in lexicographic order.
        let n = scaled.len();
        let Some(k) = (0..d).rev().find(|&k| subset[k] < n - d + k) else {
            break;
        };
        subset[k] += 1;
        for j in k + 1..d {
            subset[j] = subset[j - 1] + 1;
        }
    }
    HRep::new(d, rows)
}

fn candidate(points: &[Vec<BigInt>], subset: &[usize], scale: &BigInt) -> Option<HalfSpace> {
    let d = subset.len();
    let base = &points[subset[0]];
    let diffs: Vec<Vec<BigInt>> = subset[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(x, y)| x - y).collect())
        .collect();
    // Generalized cross product of the d-1 difference vectors.
    let mut normal: Vec<BigInt> = (0..d)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = diffs
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = determinant(minor);
            if j % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect();
    if normal.iter().all(Zero::is_zero) {
        return None;
    }
    make_primitive(&mut normal);
    let level = dot(&normal, base);
    let sides: Vec<BigInt> = points.iter().map(|u| dot(&normal, u) - &level).collect();
    let above = sides.iter().any(Signed::is_positive);
    let below = sides.iter().any(Signed::is_negative);
    match (above, below) {
        (true, true) => None,
        (false, _) => Some(HalfSpace {
            normal,
            rhs: BigRational::new(level, scale.clone()),
        }),
        (true, false) => Some(HalfSpace {
            normal: normal.iter().map(|x| -x).collect(),
            rhs: BigRational::new(-level, scale.clone()),
        }),
    }
}

/// Vertices of the bounded polyhedron `{ x : a_i . x <= b_i }`.
///
/// An empty polyhedron yields an empty [`VRep`]; a nonzero recession
/// direction (or lineality) yields [`Error::Unbounded`].
pub fn vertex_enumeration(h: &HRep) -> Result<VRep> {
    let d = h.dim();
    // Variables (x, t); row says b t - a.x >= 0, scaled by den(b).
    let mut rows: Vec<Vec<BigInt>> = h
        .rows()
        .iter()
        .map(|r| {
            let den = r.rhs.denom();
            let mut row: Vec<BigInt> = r.normal.iter().map(|a| -(a * den)).collect();
            row.push(r.rhs.numer().clone());
            row
        })
        .collect();
    let mut homogenizing = vec![BigInt::zero(); d + 1];
    homogenizing[d] = BigInt::from(1);
    rows.push(homogenizing);

    let rays = extreme_rays(&rows, d + 1).map_err(|_| Error::Unbounded)?;
    let (bounded, recession): (Vec<_>, Vec<_>) =
        rays.into_iter().partition(|r| r.vector[d].is_positive());
    if bounded.is_empty() {
        return VRep::new(d, Vec::new());
    }
    if !recession.is_empty() {
        return Err(Error::Unbounded);
    }
    let vertices = bounded
        .into_iter()
        .map(|ray| {
            let t = &ray.vector[d];
            RationalPoint::new(
                ray.vector[..d]
                    .iter()
                    .map(|x| BigRational::new(x.clone(), t.clone()))
                    .collect(),
            )
        })
        .collect();
    VRep::new(d, vertices)
}
