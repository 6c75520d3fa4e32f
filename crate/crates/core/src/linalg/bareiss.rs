//! Fraction-free Gaussian elimination on arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rank of an integer matrix given as rows of length `cols`.
///
/// Each elimination step replaces `a[i][j]` by
/// `(a[r][c]·a[i][j] − a[i][c]·a[r][j]) / prev`, where `prev` is the previous
/// pivot; the division is exact, so every intermediate is an integer minor.
pub fn bareiss_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank_big(&mut m, cols)
}

/// In-place variant over `BigInt` rows. The contents are destroyed.
pub fn bareiss_rank_big(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let n = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = pivot * &row[j];
                if !factor.is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(bareiss_rank(&[vec![1, 2], vec![2, 4]], 2), 1);
        assert_eq!(bareiss_rank(&[vec![0, 0], vec![0, 0]], 2), 0);
        assert_eq!(bareiss_rank(&[vec![0, 1, 2], vec![0, 3, 4], vec![5, 0, 0]], 3), 3);
        assert_eq!(bareiss_rank(&[], 4), 0);
    }

    #[test]
    fn large_entries_stay_exact() {
        // Hilbert-like integer matrix scaled to integers has full rank
        let n = 8;
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| 840 * 27 / (i + j + 1) as i64).collect()).collect();
        let q = crate::linalg::Matrix::from_fn(n, n, |i, j| {
            crate::Rational::from_integer(BigInt::from(rows[i][j]))
        });
        assert_eq!(bareiss_rank(&rows, n), q.rank());
    }
}
