//! Exact polyhedral kernel over the rationals: facet enumeration, vertex
//! enumeration, volume, interior lattice points and polar duality.
//!
//! Nothing here knows about posets. The twinned-polytope formulas are
//! checked against these routines.

mod bitset;
mod dd;
mod hull;
mod json;
mod linalg;
mod polar;
mod volume;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use hull::{
    canonical_vrep, hull, hull_facets, hull_facets_by_candidates, vertex_enumeration, Hull,
};
pub use json::{format_rational, parse_rational};
pub use polar::{
    interior_lattice_points, is_centrally_symmetric, is_reflexive, polar_dual, restrict_to_orthant,
    MAX_LATTICE_SCAN,
};
pub use volume::{hull_volume, simplex_volume};

/// A point of `Q^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint(coords)
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        RationalPoint(
            coords
                .into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn zero(dim: usize) -> Self {
        RationalPoint(vec![BigRational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Integer coordinates, if the point is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.0.iter().map(|x| x.to_integer()).collect())
    }

    pub fn neg(&self) -> RationalPoint {
        RationalPoint(self.0.iter().map(|x| -x).collect())
    }

    pub fn dot_integer(&self, a: &[BigInt]) -> BigRational {
        self.0
            .iter()
            .zip(a)
            .map(|(x, y)| x * BigRational::from_integer(y.clone()))
            .sum()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite point set in `Q^dim`, kept sorted and duplicate-free.
///
/// The listed points need not all be vertices of their hull; see
/// [`canonical_vrep`] for the reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VRep {
    dim: usize,
    vertices: Vec<RationalPoint>,
}

impl VRep {
    pub fn new(dim: usize, mut vertices: Vec<RationalPoint>) -> Result<Self> {
        if let Some(bad) = vertices.iter().find(|v| v.dim() != dim) {
            return Err(Error::Shape(format!(
                "point {bad} has {} coordinates, expected {dim}",
                bad.dim()
            )));
        }
        vertices.sort();
        vertices.dedup();
        Ok(VRep { dim, vertices })
    }

    pub fn from_integer_points<I, P>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: IntoIterator<Item = i64>,
    {
        VRep::new(
            dim,
            points
                .into_iter()
                .map(RationalPoint::from_integers)
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, point: &RationalPoint) -> bool {
        self.vertices.binary_search(point).is_ok()
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(RationalPoint::is_integral)
    }

    /// Reflection through the origin.
    pub fn neg(&self) -> VRep {
        let mut vertices: Vec<RationalPoint> =
            self.vertices.iter().map(RationalPoint::neg).collect();
        vertices.sort();
        VRep {
            dim: self.dim,
            vertices,
        }
    }

    /// Union of two point sets in the same space.
    pub fn union(&self, other: &VRep) -> Result<VRep> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut all = self.vertices.clone();
        all.extend(other.vertices.iter().cloned());
        VRep::new(self.dim, all)
    }

    /// Points with integer coordinates, as `i64` vectors. `None` if any
    /// point is fractional or out of range.
    pub fn integer_points(&self) -> Option<Vec<Vec<i64>>> {
        self.vertices
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(|x| {
                        x.is_integer()
                            .then(|| i64::try_from(x.to_integer()).ok())
                            .flatten()
                    })
                    .collect()
            })
            .collect()
    }
}

/// The inequality `normal . x <= rhs`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HalfSpace {
    pub normal: Vec<BigInt>,
    pub rhs: BigRational,
}

impl HalfSpace {
    /// Scales by a positive factor so the normal is primitive.
    pub fn new(mut normal: Vec<BigInt>, rhs: BigRational) -> Result<Self> {
        let g = linalg::make_primitive(&mut normal);
        if g.is_zero() {
            return Err(Error::Shape("inequality with zero normal".into()));
        }
        let g = g.abs();
        Ok(HalfSpace {
            normal,
            rhs: rhs / BigRational::from_integer(g),
        })
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(normal: I, rhs: BigRational) -> Result<Self> {
        HalfSpace::new(normal.into_iter().map(BigInt::from).collect(), rhs)
    }

    pub fn slack(&self, x: &RationalPoint) -> BigRational {
        &self.rhs - x.dot_integer(&self.normal)
    }

    pub fn contains(&self, x: &RationalPoint) -> bool {
        !self.slack(x).is_negative()
    }

    /// Normal divided by rhs: the polar vertex of a facet.
    pub fn polar_point(&self) -> Option<RationalPoint> {
        self.rhs.is_positive().then(|| {
            RationalPoint::new(
                self.normal
                    .iter()
                    .map(|a| BigRational::from_integer(a.clone()) / &self.rhs)
                    .collect(),
            )
        })
    }

    pub fn has_unit_rhs(&self) -> bool {
        self.rhs.is_one()
    }
}

/// An inequality system `{ x : a_i . x <= b_i }` with primitive integer
/// normals, sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HRep {
    dim: usize,
    rows: Vec<HalfSpace>,
}

impl HRep {
    pub fn new(dim: usize, mut rows: Vec<HalfSpace>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.normal.len() != dim) {
            return Err(Error::Shape(format!(
                "normal has {} entries, expected {dim}",
                bad.normal.len()
            )));
        }
        rows.sort();
        rows.dedup();
        Ok(HRep { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[HalfSpace] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, x: &RationalPoint) -> bool {
        self.rows.iter().all(|r| r.contains(x))
    }

    pub fn strictly_contains(&self, x: &RationalPoint) -> bool {
        self.rows.iter().all(|r| r.slack(x).is_positive())
    }

    /// Appends rows, re-canonicalizing.
    pub fn with_rows(&self, extra: impl IntoIterator<Item = HalfSpace>) -> Result<HRep> {
        let mut rows = self.rows.clone();
        rows.extend(extra);
        HRep::new(self.dim, rows)
    }

    /// Every right-hand side equals one, as for the facets of a reflexive polytope.
    pub fn all_unit_rhs(&self) -> bool {
        self.rows.iter().all(HalfSpace::has_unit_rhs)
    }

    /// Set of normals, for comparison with formula-derived normal sets.
    pub fn normals(&self) -> Vec<Vec<BigInt>> {
        let mut v: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.normal.clone()).collect();
        v.sort();
        v
    }
}

/// A facet of a full-dimensional polytope with its vertex incidences.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub rhs: BigRational,
    /// Indices into the canonical vertex list of the owning [`Hull`].
    pub incident_vertices: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfspace_normalizes_positively() {
        let h = HalfSpace::from_integers([2, -4], BigRational::from_integer(6.into())).unwrap();
        assert_eq!(h.normal, vec![BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(h.rhs, BigRational::from_integer(3.into()));
        let h = HalfSpace::from_integers([-3, 0], BigRational::from_integer(3.into())).unwrap();
        assert_eq!(h.normal, vec![BigInt::from(-1), BigInt::from(0)]);
        assert!(HalfSpace::from_integers([0, 0], BigRational::one()).is_err());
    }

    #[test]
    fn vrep_dedups_and_checks_shape() {
        let v = VRep::from_integer_points(2, [vec![1, 0], vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(v.len(), 2);
        assert!(VRep::from_integer_points(2, [vec![1, 0, 0]]).is_err());
        assert_eq!(v.neg().vertices()[0], RationalPoint::from_integers([-1, 0]));
    }
}
