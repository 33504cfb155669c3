//! GF(2) vectors of width <= 64 and bit-packed rank computation.

use crate::error::{Error, Result};

/// A vector over GF(2), bit i = coordinate i, width at most 64.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf2Vec {
    pub bits: u64,
    pub width: usize,
}

impl Gf2Vec {
    pub fn new(bits: u64, width: usize) -> Result<Self> {
        if width > 64 {
            return Err(Error::WidthTooLarge { width });
        }
        let mask = if width == 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        if bits & !mask != 0 {
            return Err(Error::BadFormat(format!(
                "bits 0x{bits:x} exceed width {width}"
            )));
        }
        Ok(Gf2Vec { bits, width })
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn coord(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }
}

/// Rank of a collection of packed GF(2) vectors.
pub fn gf2_rank(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in rows {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                rank += 1;
                break;
            }
            v ^= basis[h];
        }
    }
    rank
}

pub fn gf2_independent(rows: &[u64]) -> bool {
    gf2_rank(rows.iter().copied()) == rows.len()
}

/// Incremental xor-basis, used by backtracking searches that add one vector
/// at a time and need cheap independence checks.
#[derive(Clone)]
pub struct Gf2Basis {
    by_high_bit: [u64; 64],
    pub rank: usize,
}

impl Default for Gf2Basis {
    fn default() -> Self {
        Gf2Basis {
            by_high_bit: [0u64; 64],
            rank: 0,
        }
    }
}

impl Gf2Basis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `v`; returns false when `v` was already in the span.
    pub fn insert(&mut self, mut v: u64) -> bool {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if self.by_high_bit[h] == 0 {
                self.by_high_bit[h] = v;
                self.rank += 1;
                return true;
            }
            v ^= self.by_high_bit[h];
        }
        false
    }

    pub fn contains(&self, mut v: u64) -> bool {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if self.by_high_bit[h] == 0 {
                return false;
            }
            v ^= self.by_high_bit[h];
        }
        true
    }
}

/// Dense GF(2) matrix with arbitrarily many columns, rows packed into u64 words.
pub struct BitMatrix {
    rows: Vec<Vec<u64>>,
    words: usize,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows: vec![vec![0u64; words]; rows],
            words,
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r][c / 64] ^= 1u64 << (c % 64);
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.rows[r][c / 64] |= 1u64 << (c % 64);
    }

    /// Rank by in-place row elimination.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        let mut pivot_rows: Vec<usize> = Vec::new();
        for r in 0..self.rows.len() {
            // Reduce row r by previously found pivots.
            for &p in &pivot_rows {
                let lead = leading_bit(&self.rows[p]);
                if let Some((w, b)) = lead {
                    if self.rows[r][w] >> b & 1 == 1 {
                        let (pr, cr) = split_rows(&mut self.rows, p, r);
                        for (x, y) in cr.iter_mut().zip(pr.iter()) {
                            *x ^= *y;
                        }
                    }
                }
            }
            if leading_bit(&self.rows[r]).is_some() {
                pivot_rows.push(r);
                rank += 1;
                if rank == self.words * 64 {
                    break;
                }
            }
        }
        rank
    }
}

fn leading_bit(row: &[u64]) -> Option<(usize, u32)> {
    for (w, &word) in row.iter().enumerate().rev() {
        if word != 0 {
            return Some((w, 63 - word.leading_zeros()));
        }
    }
    None
}

/// Two distinct mutable row references out of one buffer.
fn split_rows(rows: &mut [Vec<u64>], a: usize, b: usize) -> (&[u64], &mut [u64]) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}
