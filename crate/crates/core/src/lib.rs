//! Exact combinatorics and geometry of order, chain and twinned chain
//! polytopes of finite posets.
//!
//! * [`poset`]: posets on labels `1..=d`, ideals, antichains, maximal
//!   chains, linear extension counts and the signed ordinal sums `Δ_W(P,Q)`.
//! * [`geometry`]: an exact rational polyhedral kernel (hull, vertex
//!   enumeration, volume, lattice points, polar duals).
//! * [`twinned`]: the glued polytopes `Γ(X(P), -Y(Q))`, the closed-form
//!   volume and facet descriptions, and their checks against [`geometry`].

pub mod error;
pub mod geometry;
pub mod poset;
pub mod twinned;

pub use error::{Error, Result};
pub use geometry::{HRep, HalfSpace, RationalPoint, VRep};
pub use poset::{LabelSet, Poset, SignedPoset, SubsetList};
pub use twinned::{FacetNormalSet, Gamma, GammaKind, Report};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
