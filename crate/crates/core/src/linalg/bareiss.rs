//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Intermediate entries are signed minors of the input, so the two-step
//! division is exact and coefficient growth stays polynomial in the input
//! height. That is ideal for the small systems of this crate (cubic fitting,
//! smoothness certification, frame solving) and hopeless past a few dozen
//! rows, which is why the large oracles use the modular engine instead.

use super::normalize_primitive;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rank and primitive integer kernel basis of an integer matrix.
pub(crate) fn rank_nullspace_int(rows: &[Vec<BigInt>], cols: usize) -> (usize, Vec<Vec<BigInt>>) {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut pivot_cols: Vec<usize> = Vec::new();

    for col in 0..cols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..nrows {
            for j in col + 1..cols {
                let num = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                m[i][j] = num / &prev; // exact: Sylvester identity
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }

    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let kernel = free_cols
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for i in (0..rank).rev() {
                let pc = pivot_cols[i];
                let mut acc = BigRational::zero();
                for j in pc + 1..cols {
                    if !v[j].is_zero() && !m[i][j].is_zero() {
                        acc += BigRational::from_integer(m[i][j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / BigRational::from_integer(m[i][pc].clone());
            }
            let mut lcm = BigInt::one();
            for x in &v {
                lcm = num_integer::lcm(lcm, x.denom().clone());
            }
            let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            normalize_primitive(&mut ints);
            ints
        })
        .collect();

    (rank, kernel)
}
