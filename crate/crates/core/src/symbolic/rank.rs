//! Exact rank of rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rows scaled to integers by their common denominator; rank is unchanged.
fn integral_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * &lcm).to_integer()).collect()
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination. Every intermediate entry is a
/// minor of the integer matrix, so divisions are exact.
pub fn bareiss_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a = integral_rows(rows);
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot) = (rank..height).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..height {
            for c in col + 1..width {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over ℚ; returns the pivot columns.
fn rref(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a = rows.to_vec();
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    for col in 0..width {
        let r = pivots.len();
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..height {
            if i != r && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                for c in col..width {
                    let delta = &factor * &a[r][c];
                    a[i][c] -= delta;
                }
            }
        }
        pivots.push(col);
    }
    (a, pivots)
}

/// Rank via rational elimination; used to cross-check [`bareiss_rank`].
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    rref(rows).1.len()
}

/// A nonzero `v` with `A·v = 0`, if the columns are dependent. The first
/// free column gets coefficient 1.
pub fn null_vector(rows: &[Vec<BigRational>], columns: usize) -> Option<Vec<BigRational>> {
    let (reduced, pivots) = rref(rows);
    let free = (0..columns).find(|c| !pivots.contains(c))?;
    let mut v = vec![BigRational::zero(); columns];
    v[free] = BigRational::one();
    for (r, &p) in pivots.iter().enumerate() {
        v[p] = -reduced[r][free].clone();
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mat(rows: &[&[(i64, i64)]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&(n, d)| q(n, d)).collect()).collect()
    }

    #[test]
    fn ranks_agree() {
        let a = mat(&[
            &[(1, 2), (1, 1), (0, 1)],
            &[(1, 1), (2, 1), (0, 1)],
            &[(0, 1), (0, 1), (3, 7)],
        ]);
        assert_eq!(bareiss_rank(&a), 2);
        assert_eq!(rational_rank(&a), 2);
        let v = null_vector(&a, 3).unwrap();
        for row in &a {
            let dot: BigRational = row.iter().zip(&v).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_no_null_vector() {
        let a = mat(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)], &[(5, 3), (-2, 9)]]);
        assert_eq!(bareiss_rank(&a), 2);
        assert!(null_vector(&a, 2).is_none());
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(bareiss_rank(&[]), 0);
        assert_eq!(bareiss_rank(&[vec![], vec![]]), 0);
        assert_eq!(null_vector(&[], 2).unwrap(), vec![q(1, 1), q(0, 1)]);
    }
}
