//! Double description method: extreme rays of a pointed polyhedral cone
//! `{ y : A y >= 0 }`, exact over the integers.
//!
//! Both conversions in this crate reduce to it. Facets of `conv(V)` are the
//! extreme rays of `{ (a, c) : c - a.v >= 0 for v in V }`, and vertices of
//! `{ x : A x <= b }` are the extreme rays of `{ (x, t) : b t - A x >= 0, t >= 0 }`
//! with `t > 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::bitset::BitSet;
use super::linalg::{dot, independent_rows, inverse, make_primitive};

#[derive(Clone, Debug)]
pub(crate) struct Ray {
    /// Primitive integer generator.
    pub vector: Vec<BigInt>,
    /// Constraint rows at which the ray is tight.
    pub zeros: BitSet,
}

/// The constraint matrix has rank `rank` below the ambient dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct NotPointed {
    pub rank: usize,
}

/// Extreme rays of `{ y in R^n : row . y >= 0 for every row }`.
///
/// Rows are inserted in the given order after an initial simplicial cone
/// built from the first independent rows. Adjacency of a positive and a
/// negative ray is decided combinatorially: their common tight set must have
/// at least `n - 2` rows and must not be contained in the tight set of any
/// third ray.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], n: usize) -> Result<Vec<Ray>, NotPointed> {
    let m = rows.len();
    let basis = independent_rows(rows);
    if basis.len() < n {
        return Err(NotPointed { rank: basis.len() });
    }
    let basis = &basis[..n];

    // Initial rays: columns of the inverse of the basis block.
    let block: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|&r| {
            rows[r]
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    let inv = inverse(&block).expect("independent rows form an invertible block");
    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let column: Vec<BigRational> = inv.iter().map(|row| row[j].clone()).collect();
            let zeros = BitSet::from_indices(
                m,
                basis
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &r)| r),
            );
            Ray {
                vector: integer_direction(&column),
                zeros,
            }
        })
        .collect();

    let in_basis = BitSet::from_indices(m, basis.iter().copied());
    for (r, row) in rows.iter().enumerate() {
        if in_basis.contains(r) {
            continue;
        }
        rays = insert_row(rays, r, row, n);
    }
    Ok(rays)
}

fn insert_row(rays: Vec<Ray>, r: usize, row: &[BigInt], n: usize) -> Vec<Ray> {
    let values: Vec<BigInt> = rays.iter().map(|ray| dot(row, &ray.vector)).collect();
    let positive: Vec<usize> = (0..rays.len())
        .filter(|&k| values[k].is_positive())
        .collect();
    let negative: Vec<usize> = (0..rays.len())
        .filter(|&k| values[k].is_negative())
        .collect();

    let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
    for &p in &positive {
        for &q in &negative {
            let common = rays[p].zeros.intersection(&rays[q].zeros);
            if common.count() + 2 < n {
                continue;
            }
            let blocked = rays
                .iter()
                .enumerate()
                .any(|(k, other)| k != p && k != q && common.is_subset(&other.zeros));
            if blocked {
                continue;
            }
            // a.p > 0 > a.q; the combination below is tight on `row`.
            let mut vector: Vec<BigInt> = rays[q]
                .vector
                .iter()
                .zip(&rays[p].vector)
                .map(|(y, x)| &values[p] * y - &values[q] * x)
                .collect();
            make_primitive(&mut vector);
            let mut zeros = common;
            zeros.insert(r);
            next.push(Ray { vector, zeros });
        }
    }

    for (k, mut ray) in rays.into_iter().enumerate() {
        if values[k].is_zero() {
            ray.zeros.insert(r);
            next.push(ray);
        } else if values[k].is_positive() {
            next.push(ray);
        }
    }
    next
}

fn integer_direction(v: &[BigRational]) -> Vec<BigInt> {
    let (ints, _) = super::linalg::clear_denominators(&[v.to_vec()]);
    let mut out = ints.into_iter().next().unwrap_or_default();
    make_primitive(&mut out);
    out
}
