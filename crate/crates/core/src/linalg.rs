//! Exact rank of an integer matrix by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals of a row-major integer matrix.
///
/// One-step Bareiss elimination with row pivoting: every intermediate entry
/// is a minor of the original matrix, and each division by the previous
/// pivot is exact, so nothing ever leaves the integers.
pub fn integer_matrix_rank(mut matrix: Vec<Vec<BigInt>>) -> usize {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut previous_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot_row);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let numerator = &matrix[rank][col] * &matrix[r][c] - &matrix[r][col] * &matrix[rank][c];
                matrix[r][c] = numerator / &previous_pivot;
            }
            matrix[r][col] = BigInt::zero();
        }
        previous_pivot = matrix[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(integer_matrix_rank(Vec::new()), 0);
        assert_eq!(integer_matrix_rank(matrix(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_matrix_rank(matrix(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_matrix_rank(matrix(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(
            integer_matrix_rank(matrix(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])),
            2
        );
        // rank limited by the number of rows
        assert_eq!(integer_matrix_rank(matrix(&[&[5, 0, 0, 3]])), 1);
    }

    #[test]
    fn agrees_with_rational_elimination_on_random_matrices() {
        // deterministic pseudo-random fill, checked against a plain
        // rational-arithmetic elimination
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for size in 1..=8usize {
            for _ in 0..20 {
                let m: Vec<Vec<BigInt>> = (0..size)
                    .map(|_| (0..size + 1).map(|_| BigInt::from(next())).collect())
                    .collect();
                assert_eq!(integer_matrix_rank(m.clone()), rational_rank(m));
            }
        }
    }

    // Reference implementation: Gaussian elimination over exact rationals,
    // carried as integer (numerator, denominator) pairs.
    fn rational_rank(matrix: Vec<Vec<BigInt>>) -> usize {
        let mut m: Vec<Vec<(BigInt, BigInt)>> = matrix
            .into_iter()
            .map(|row| row.into_iter().map(|v| (v, BigInt::one())).collect())
            .collect();
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !m[r][col].0.is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let (pn, pd) = m[rank][col].clone();
            for r in rank + 1..rows {
                let (fn_, fd) = m[r][col].clone();
                if fn_.is_zero() {
                    continue;
                }
                for c in col..cols {
                    // m[r][c] -= m[rank][c] * (fn_/fd) / (pn/pd)
                    let (an, ad) = m[r][c].clone();
                    let (bn, bd) = m[rank][c].clone();
                    let scaled_n = bn * &fn_ * &pd;
                    let scaled_d = bd * &fd * &pn;
                    let num = an * &scaled_d - scaled_n * &ad;
                    let den = ad * scaled_d;
                    m[r][c] = (num, den);
                }
            }
            rank += 1;
        }
        rank
    }
}
