use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poset::LabelSet;

use super::hull::{canonical_vrep, hull_facets, vertex_enumeration};
use super::{HRep, HalfSpace, RationalPoint, VRep};

/// Largest bounding box (in lattice points) that
/// [`interior_lattice_points`] will scan.
pub const MAX_LATTICE_SCAN: usize = 1 << 22;

/// Integer points strictly inside `{ x : a_i . x <= b_i }`, in
/// lexicographic order. Scans the integer bounding box of the vertices.
pub fn interior_lattice_points(h: &HRep) -> Result<Vec<Vec<BigInt>>> {
    let d = h.dim();
    let vertices = vertex_enumeration(h)?;
    if vertices.is_empty() {
        return Ok(Vec::new());
    }
    let mut lo = Vec::with_capacity(d);
    let mut hi = Vec::with_capacity(d);
    for k in 0..d {
        let column = vertices.vertices().iter().map(|v| &v.coords()[k]);
        let min = column.clone().min().expect("nonempty").floor().to_integer();
        let max = column.max().expect("nonempty").ceil().to_integer();
        lo.push(
            i64::try_from(&min).map_err(|_| {
                Error::capacity("lattice bounding box", usize::MAX, MAX_LATTICE_SCAN)
            })?,
        );
        hi.push(
            i64::try_from(&max).map_err(|_| {
                Error::capacity("lattice bounding box", usize::MAX, MAX_LATTICE_SCAN)
            })?,
        );
    }
    let box_size = lo
        .iter()
        .zip(&hi)
        .try_fold(1usize, |acc, (l, h)| acc.checked_mul((h - l + 1) as usize))
        .unwrap_or(usize::MAX);
    if box_size > MAX_LATTICE_SCAN {
        return Err(Error::capacity(
            "lattice bounding box",
            box_size,
            MAX_LATTICE_SCAN,
        ));
    }

    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let point = RationalPoint::from_integers(x.iter().copied());
        if h.strictly_contains(&point) {
            out.push(x.iter().map(|&c| BigInt::from(c)).collect());
        }
        // Odometer, last coordinate fastest.
        let Some(k) = (0..d).rev().find(|&k| x[k] < hi[k]) else {
            break;
        };
        x[k] += 1;
        x[k + 1..].copy_from_slice(&lo[k + 1..]);
    }
    Ok(out)
}

/// The polar `{ y : <x, y> <= 1 for all x in P }` of a polytope with the
/// origin in its interior, given by its facets. Its vertices are the facet
/// normals divided by their right-hand sides.
pub fn polar_dual(h: &HRep) -> Result<VRep> {
    let points = h
        .rows()
        .iter()
        .map(|r| r.polar_point().ok_or(Error::OriginNotInterior))
        .collect::<Result<Vec<_>>>()?;
    let points = VRep::new(h.dim(), points)?;
    canonical_vrep(&points)
}

/// Reflexive (Gorenstein Fano): an integral polytope whose only interior
/// lattice point is the origin and whose polar dual is integral.
pub fn is_reflexive(v: &VRep) -> Result<bool> {
    if !v.is_integral() {
        return Ok(false);
    }
    let h = hull_facets(v)?;
    if h.rows().iter().any(|r| !r.rhs.is_positive()) {
        return Ok(false);
    }
    let interior = interior_lattice_points(&h)?;
    if interior.len() != 1 || interior[0].iter().any(|x| !x.is_zero()) {
        return Ok(false);
    }
    Ok(polar_dual(&h)?.is_integral())
}

/// Vertices of `conv(v) ∩ { x : x_i >= 0 for i in w, x_j <= 0 otherwise }`.
pub fn restrict_to_orthant(v: &VRep, w: LabelSet) -> Result<VRep> {
    let d = v.dim();
    let h = hull_facets(v)?;
    let orthant = (0..d).map(|i| {
        let mut normal = vec![0i64; d];
        normal[i] = if w.contains(i) { -1 } else { 1 };
        HalfSpace::from_integers(normal, BigRational::zero()).expect("unit normal")
    });
    vertex_enumeration(&h.with_rows(orthant)?)
}

/// Whether the point set is closed under `x -> -x`.
pub fn is_centrally_symmetric(v: &VRep) -> bool {
    v.vertices().iter().all(|p| v.contains(&p.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(d: usize, lo: i64, hi: i64) -> VRep {
        let pts = (0u32..1 << d).map(|m| {
            (0..d)
                .map(|i| if m >> i & 1 == 1 { hi } else { lo })
                .collect::<Vec<_>>()
        });
        VRep::from_integer_points(d, pts).unwrap()
    }

    fn cross_polytope(d: usize) -> VRep {
        let mut pts = Vec::new();
        for i in 0..d {
            for s in [1, -1] {
                let mut p = vec![0; d];
                p[i] = s;
                pts.push(p);
            }
        }
        VRep::from_integer_points(d, pts).unwrap()
    }

    #[test]
    fn cube_has_single_interior_point() {
        let h = hull_facets(&cube(3, -1, 1)).unwrap();
        let pts = interior_lattice_points(&h).unwrap();
        assert_eq!(pts, vec![vec![BigInt::zero(); 3]]);
    }

    #[test]
    fn simplex_has_no_interior_points() {
        let v = VRep::from_integer_points(2, [vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert!(interior_lattice_points(&hull_facets(&v).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn cube_and_cross_polytope_are_dual() {
        for d in 1..=4 {
            let h = hull_facets(&cube(d, -1, 1)).unwrap();
            assert_eq!(polar_dual(&h).unwrap(), cross_polytope(d));
            let back = polar_dual(&hull_facets(&cross_polytope(d)).unwrap()).unwrap();
            assert_eq!(back, cube(d, -1, 1));
        }
    }

    #[test]
    fn origin_on_boundary_has_no_polar() {
        let h = hull_facets(&cube(2, 0, 1)).unwrap();
        assert_eq!(polar_dual(&h).unwrap_err(), Error::OriginNotInterior);
    }

    #[test]
    fn reflexivity() {
        assert!(is_reflexive(&cube(3, -1, 1)).unwrap());
        assert!(is_reflexive(&cross_polytope(3)).unwrap());
        assert!(!is_reflexive(&cube(2, 0, 1)).unwrap());
        let stretched =
            VRep::from_integer_points(2, [vec![2, 0], vec![-2, 0], vec![0, 1], vec![0, -1]])
                .unwrap();
        assert!(!is_reflexive(&stretched).unwrap());
        // Two interior lattice points.
        let long =
            VRep::from_integer_points(2, [vec![-1, -1], vec![2, -1], vec![2, 1], vec![-1, 1]])
                .unwrap();
        assert!(!is_reflexive(&long).unwrap());
    }

    #[test]
    fn orthant_restriction_of_inside_polytope_is_identity() {
        let v = cube(3, 0, 1);
        assert_eq!(restrict_to_orthant(&v, LabelSet::full(3)).unwrap(), v);
        let restricted = restrict_to_orthant(&cube(2, -1, 1), LabelSet::from_labels([1])).unwrap();
        assert_eq!(
            restricted,
            VRep::from_integer_points(2, [vec![0, 0], vec![1, 0], vec![0, -1], vec![1, -1]])
                .unwrap()
        );
    }

    #[test]
    fn central_symmetry() {
        assert!(is_centrally_symmetric(&cross_polytope(3)));
        assert!(!is_centrally_symmetric(&cube(2, 0, 1)));
        assert!(hull_facets(&cross_polytope(2)).unwrap().all_unit_rhs());
    }
}
