//! Exact integer linear algebra: small determinants, Smith normal form,
//! unimodularity of vector collections, and fraction-free rank.
//!
//! Entry points take machine integers; everything that can grow during
//! elimination is promoted to `BigInt` internally.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Determinant of a 4x4 integer matrix, exact in i128.
pub fn det4(m: &[[i64; 4]; 4]) -> i128 {
    let a = |r: usize, c: usize| m[r][c] as i128;
    let minor2 =
        |r0: usize, r1: usize, c0: usize, c1: usize| a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
    // Laplace expansion along the first two rows.
    minor2(0, 1, 0, 1) * minor2(2, 3, 2, 3) - minor2(0, 1, 0, 2) * minor2(2, 3, 1, 3)
        + minor2(0, 1, 0, 3) * minor2(2, 3, 1, 2)
        + minor2(0, 1, 1, 2) * minor2(2, 3, 0, 3)
        - minor2(0, 1, 1, 3) * minor2(2, 3, 0, 2)
        + minor2(0, 1, 2, 3) * minor2(2, 3, 0, 1)
}

pub fn is_primitive(v: &[i64]) -> bool {
    let mut g: u64 = 0;
    for &x in v {
        g = g.gcd(&x.unsigned_abs());
        if g == 1 {
            return true;
        }
    }
    false
}

/// Smith invariant factors of an integer matrix, nonnegative and in
/// divisibility order. The length equals the rank.
#[allow(clippy::needless_range_loop)] // row ops read one row while writing another
pub fn smith_invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut factors = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            // Clear column t, restarting with a smaller pivot on any remainder.
            let mut dirty = false;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = div_round(&a[i][t], &a[t][t]);
                    for j in t..nc {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = div_round(&a[t][j], &a[t][t]);
                    for i in t..nr {
                        let d = &q * &a[i][t];
                        a[i][j] -= d;
                    }
                    if !a[t][j].is_zero() {
                        swap_cols(&mut a, t, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide the remaining submatrix; if not, fold the
            // offending row in and keep reducing.
            let mut fixed = true;
            'scan: for i in t + 1..nr {
                for j in t + 1..nc {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for jj in t..nc {
                            let add = a[i][jj].clone();
                            a[t][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    factors
}

/// Whether the vectors extend to a basis of Z^r: there are k <= r of them and
/// every Smith invariant factor equals 1. The empty collection qualifies.
pub fn unimodular(vectors: &[Vec<i64>], r: usize) -> Result<bool> {
    if vectors.len() > r {
        return Err(Error::RankTooLarge(vectors.len(), r));
    }
    for v in vectors {
        debug_assert_eq!(v.len(), r);
    }
    if vectors.is_empty() {
        return Ok(true);
    }
    let factors = smith_invariant_factors(vectors);
    Ok(factors.len() == vectors.len() && factors.iter().all(|f| f.is_one()))
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for t in 0..nr.min(nc) {
        let Some((pi, pj)) = first_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        for i in t + 1..nr {
            for j in t + 1..nc {
                let num = &a[t][t] * &a[i][j] - &a[i][t] * &a[t][j];
                a[i][j] = num / &prev;
            }
            a[i][t] = BigInt::zero();
        }
        prev = a[t][t].clone();
        rank += 1;
    }
    rank
}

fn min_abs_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn first_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn swap_cols(a: &mut [Vec<BigInt>], j0: usize, j1: usize) {
    if j0 != j1 {
        for row in a.iter_mut() {
            row.swap(j0, j1);
        }
    }
}

/// Quotient rounded toward nearest, which keeps remainders at most |d|/2
/// and makes the Smith reduction terminate quickly.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > d.abs() {
        if (r.is_negative()) == (d.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det4_known_values() {
        // Two unit rows, the all-ones row, and a row (0,0,b,a) give a - b.
        for (a, b) in [(1i64, 0i64), (1, 2), (-1, 0), (3, -2)] {
            let m = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1], [0, 0, b, a]];
            assert_eq!(det4(&m), (a - b) as i128);
        }
        // The disjoint-support obstruction matrix evaluates to 3.
        let m = [[1, -1, 0, 0], [0, 1, -1, 0], [1, 1, 1, 1], [0, 0, 0, 1]];
        assert_eq!(det4(&m), 3);
        assert_eq!(det4(&[[1, 0, 0, 0]; 4]), 0);
    }

    #[test]
    fn smith_factors_of_diagonal_regroup_into_divisibility_chain() {
        let factors = smith_invariant_factors(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(factors, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn unimodular_examples() {
        // Standard basis columns inside Z^4.
        let basis: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| i64::from(i == j)).collect())
            .collect();
        assert!(unimodular(&basis, 4).unwrap());
        // (2, 0) alone is not part of any basis.
        assert!(!unimodular(&[vec![2, 0]], 2).unwrap());
        // (1, 1) alone is.
        assert!(unimodular(&[vec![1, 1]], 2).unwrap());
        assert!(unimodular(&[], 3).unwrap());
        assert!(matches!(
            unimodular(&[vec![1, 0], vec![0, 1], vec![1, 1]], 2),
            Err(Error::RankTooLarge(3, 2))
        ));
    }

    #[test]
    fn bareiss_rank_on_singular_and_regular_matrices() {
        let b = |x: i64| BigInt::from(x);
        let singular = vec![
            vec![b(1), b(2), b(3)],
            vec![b(2), b(4), b(6)],
            vec![b(0), b(1), b(1)],
        ];
        assert_eq!(bareiss_rank(singular), 2);
        let regular = vec![
            vec![b(2), b(1), b(1)],
            vec![b(1), b(3), b(1)],
            vec![b(1), b(1), b(4)],
        ];
        assert_eq!(bareiss_rank(regular), 3);
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&[2, 3]));
        assert!(!is_primitive(&[2, 4]));
        assert!(!is_primitive(&[0, 0]));
        assert!(is_primitive(&[0, -1, 5]));
    }
}
