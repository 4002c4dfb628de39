//! Exact integer and rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Divides `v` by the gcd of its entries. Zero vectors are left alone.
pub(crate) fn make_primitive(v: &mut [BigInt]) -> BigInt {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    g
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank of an integer matrix given as rows.
pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    independent_rows(rows).len()
}

/// Indices of a greedily chosen maximal independent subset of `rows`,
/// scanning in order.
pub(crate) fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    // Echelon basis kept fraction-free: each stored row has a pivot column.
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (pivot, b) in &basis {
            if !r[*pivot].is_zero() {
                let f = r[*pivot].clone();
                let g = b[*pivot].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x = &*x * &g - y * &f;
                }
                make_primitive(&mut r);
            }
        }
        if let Some(pivot) = r.iter().position(|x| !x.is_zero()) {
            basis.push((pivot, r));
            chosen.push(idx);
        }
    }
    chosen
}

/// Inverse of a square nonsingular rational matrix (Gauss-Jordan).
pub(crate) fn inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let (pivot_row, row) = if r < col {
                    let (lo, hi) = a.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Scales rational vectors by the lcm of all denominators, returning the
/// integer vectors and the scale factor.
pub(crate) fn clear_denominators(points: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let scale = points
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints = points
        .iter()
        .map(|p| p.iter().map(|x| x.numer() * (&scale / x.denom())).collect())
        .collect();
    (ints, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_values() {
        assert_eq!(determinant(mat(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(determinant(mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(mat(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(
            determinant(mat(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
        assert_eq!(
            determinant(mat(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn rank_and_independent_rows() {
        let m = mat(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1], &[1, 2, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(independent_rows(&m), vec![0, 2]);
        assert_eq!(rank(&mat(&[&[0, 0]])), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let m: Vec<Vec<BigRational>> = mat(&[&[2, 1], &[1, 1]])
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let inv = inverse(&m).unwrap();
        let expected = mat(&[&[1, -1], &[-1, 2]]);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(inv[i][j], BigRational::from_integer(expected[i][j].clone()));
            }
        }
        let singular: Vec<Vec<BigRational>> = vec![vec![BigRational::one(); 2]; 2];
        assert!(inverse(&singular).is_none());
    }

    #[test]
    fn primitive_scaling() {
        let mut v = mat(&[&[4, -6, 0]]).remove(0);
        assert_eq!(make_primitive(&mut v), BigInt::from(2));
        assert_eq!(v, mat(&[&[2, -3, 0]]).remove(0));
    }
}
