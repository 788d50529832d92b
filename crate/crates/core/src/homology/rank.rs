//! Exact matrix ranks for simplicial boundary maps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank over GF(2) of a matrix given as rows of packed 64-bit words.
///
/// Rows are inserted one at a time into an echelon basis keyed by the
/// lowest set column.
pub fn rank_gf2(rows: Vec<Vec<u64>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; width * 64];
    let mut rank = 0;
    for mut row in rows {
        loop {
            let Some(col) = lowest_bit(&row) else { break };
            match &pivots[col] {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= *b;
                    }
                }
                None => {
                    pivots[col] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

/// Rank over Q of a sparse integer matrix, each row a list of
/// `(column, coefficient)` pairs. Fraction arithmetic throughout; pivot
/// rows are normalized to a leading 1.
pub fn rank_rational(rows: &[Vec<(usize, i64)>], width: usize) -> usize {
    let mut pivots: Vec<Option<Vec<BigRational>>> = vec![None; width];
    let mut rank = 0;
    for sparse in rows {
        let mut row = vec![BigRational::zero(); width];
        for &(c, v) in sparse {
            row[c] += BigRational::from_integer(BigInt::from(v));
        }
        for col in 0..width {
            if row[col].is_zero() {
                continue;
            }
            match &pivots[col] {
                Some(p) => {
                    let factor = row[col].clone();
                    for (a, b) in row.iter_mut().zip(p).skip(col) {
                        if !b.is_zero() {
                            *a -= &factor * b;
                        }
                    }
                }
                None => {
                    let lead = row[col].clone();
                    debug_assert!(!lead.abs().is_zero());
                    if !lead.is_one() {
                        for a in row.iter_mut().skip(col) {
                            *a /= &lead;
                        }
                    }
                    pivots[col] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
