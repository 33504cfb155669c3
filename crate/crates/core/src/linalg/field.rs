//! Rank of sparse integer matrices over a choice of coefficient field.

use num_bigint::BigInt;

use super::exact::bareiss_rank;
use super::gf2::BitMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    GF2,
    /// Prime field of odd characteristic p, p < 2^31.
    GFp(u64),
    Rationals,
}

impl FieldSpec {
    pub fn validate(self) -> Result<()> {
        if let FieldSpec::GFp(p) = self {
            if !(2..1 << 31).contains(&p) || !is_prime(p) {
                return Err(Error::InvalidPrime(p));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::GF2 => write!(f, "gf2"),
            FieldSpec::GFp(p) => write!(f, "gfp:{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

/// Sparse integer matrix; entries at the same position accumulate.
#[derive(Clone, Debug)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMat {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, r: usize, c: usize, v: i64) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries.push((r, c, v));
    }
}

const DENSE_CELL_LIMIT: usize = 1 << 26;

pub fn field_rank(m: &SparseMat, field: FieldSpec) -> Result<usize> {
    field.validate()?;
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    match field {
        FieldSpec::GF2 => {
            let mut bits = BitMatrix::zero(m.rows, m.cols);
            for &(r, c, v) in &m.entries {
                if v % 2 != 0 {
                    bits.flip(r, c);
                }
            }
            Ok(bits.rank())
        }
        FieldSpec::GFp(p) => {
            check_dense(m)?;
            let mut dense = vec![vec![0u64; m.cols]; m.rows];
            for &(r, c, v) in &m.entries {
                dense[r][c] = (dense[r][c] + v.rem_euclid(p as i64) as u64) % p;
            }
            Ok(modp_rank(dense, p))
        }
        FieldSpec::Rationals => {
            check_dense(m)?;
            let mut dense = vec![vec![BigInt::ZERO; m.cols]; m.rows];
            for &(r, c, v) in &m.entries {
                dense[r][c] += v;
            }
            Ok(bareiss_rank(dense))
        }
    }
}

fn check_dense(m: &SparseMat) -> Result<()> {
    if m.rows.saturating_mul(m.cols) > DENSE_CELL_LIMIT {
        return Err(Error::MatrixTooLarge {
            rows: m.rows,
            cols: m.cols,
        });
    }
    Ok(())
}

fn modp_rank(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let nr = a.len();
    let nc = a[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..nc {
        let Some(pivot) = (row..nr).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(row, pivot);
        let inv = modp_inverse(a[row][col], p);
        for x in a[row][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, rest) = a.split_at_mut(row + 1);
        let prow = &top[row];
        for other in rest.iter_mut() {
            let f = other[col];
            if f != 0 {
                for (x, &y) in other[col..].iter_mut().zip(&prow[col..]) {
                    *x = (*x + (p - f % p) * y) % p;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == nr {
            break;
        }
    }
    rank
}

fn modp_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p.
    modp_pow(a % p, p - 2, p)
}

fn modp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == d {
            return true;
        }
        if n.is_multiple_of(d) {
            return false;
        }
    }
    let mut d = 37u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
