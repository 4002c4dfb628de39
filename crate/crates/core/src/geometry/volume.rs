use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::bitset::BitSet;
use super::hull::hull;
use super::linalg::{clear_denominators, determinant};
use super::{RationalPoint, VRep};

/// Exact volume of `conv(v)` by pulling triangulation.
///
/// Each face is coned from its lexicographically smallest vertex over the
/// facets of that face not containing it. Faces are handled as vertex sets;
/// the facets of a face `F` are the maximal proper sets `F ∩ G` over the
/// facets `G` of the polytope.
pub fn hull_volume(v: &VRep) -> Result<BigRational> {
    let hull = hull(v)?;
    let d = hull.dim();
    let n = hull.vertices.len();
    let facets: Vec<BitSet> = hull
        .facets
        .iter()
        .map(|f| BitSet::from_indices(n, f.incident_vertices.iter().copied()))
        .collect();

    let coords: Vec<Vec<BigRational>> = hull
        .vertices
        .vertices()
        .iter()
        .map(|p| p.coords().to_vec())
        .collect();
    let (scaled, scale) = clear_denominators(&coords);

    let mut total = BigInt::zero();
    let mut apexes = Vec::with_capacity(d + 1);
    pull(
        &BitSet::from_indices(n, 0..n),
        &facets,
        &mut apexes,
        &mut |simplex| {
            total += simplex_det(&scaled, simplex).abs();
        },
    );

    let denom: BigInt = (1..=d).map(BigInt::from).product::<BigInt>() * scale.pow(d as u32);
    Ok(BigRational::new(total, denom))
}

fn pull(
    face: &BitSet,
    facets: &[BitSet],
    apexes: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    let apex = face.first().expect("faces are nonempty");
    if face.count() == 1 {
        apexes.push(apex);
        emit(apexes);
        apexes.pop();
        return;
    }
    apexes.push(apex);
    for sub in subfacets(face, facets) {
        if !sub.contains(apex) {
            pull(&sub, facets, apexes, emit);
        }
    }
    apexes.pop();
}

/// Inclusion-maximal proper nonempty intersections of `face` with facets.
fn subfacets(face: &BitSet, facets: &[BitSet]) -> Vec<BitSet> {
    let mut candidates: Vec<BitSet> = facets
        .iter()
        .filter(|g| !face.is_subset(g))
        .map(|g| face.intersection(g))
        .filter(|s| s.count() > 0)
        .collect();
    candidates.sort();
    candidates.dedup();
    candidates
        .iter()
        .filter(|s| !candidates.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect()
}

fn simplex_det(points: &[Vec<BigInt>], simplex: &[usize]) -> BigInt {
    let base = &points[simplex[0]];
    let m = simplex[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(x, y)| x - y).collect())
        .collect();
    determinant(m)
}

/// Volume of the simplex spanned by `d + 1` points in `Q^d`.
pub fn simplex_volume(points: &[RationalPoint]) -> Result<BigRational> {
    let d = points.first().map_or(0, RationalPoint::dim);
    if points.len() != d + 1 {
        return Err(Error::Shape(format!(
            "a simplex in dimension {d} needs {} points, got {}",
            d + 1,
            points.len()
        )));
    }
    let coords: Vec<Vec<BigRational>> = points.iter().map(|p| p.coords().to_vec()).collect();
    let (scaled, scale) = clear_denominators(&coords);
    let idx: Vec<usize> = (0..=d).collect();
    let det = simplex_det(&scaled, &idx).abs();
    let denom: BigInt = (1..=d).map(BigInt::from).product::<BigInt>() * scale.pow(d as u32);
    Ok(BigRational::new(det, denom))
}
