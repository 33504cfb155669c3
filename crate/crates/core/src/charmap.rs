//! Vertex-to-vector assignments and the independence condition that makes
//! them characteristic-like: on every facet the assigned vectors must be
//! linearly independent (over GF(2)) or form part of a basis of the integer
//! lattice (over the integers).

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{is_primitive, unimodular, Gf2Basis};
use crate::vertexset::VertexSet;

/// An assignment of a nonzero-allowed GF(2) vector of width `r` to each
/// vertex, columns packed as bitmasks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharMapGF2 {
    pub r: usize,
    columns: Vec<u64>,
}

impl CharMapGF2 {
    pub fn new(r: usize, columns: Vec<u64>) -> Result<Self> {
        if r == 0 || r > 64 {
            return Err(Error::WidthTooLarge { width: r });
        }
        for &c in &columns {
            if r < 64 && c >> r != 0 {
                return Err(Error::BadFormat(format!(
                    "column {c:#b} does not fit in width {r}"
                )));
            }
        }
        Ok(CharMapGF2 { r, columns })
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    /// Column of a 1-based vertex label.
    pub fn column(&self, vertex: usize) -> u64 {
        self.columns[vertex - 1]
    }

    pub fn columns(&self) -> &[u64] {
        &self.columns
    }

    fn set_independent(&self, set: VertexSet) -> bool {
        let mut basis = Gf2Basis::default();
        set.iter().all(|v| basis.insert(self.columns[v]))
    }

    /// The independence condition checked on every facet. Faces inherit
    /// independence from the facets containing them, so this is enough.
    pub fn verify_star(&self, k: &SimplicialComplex) -> Result<bool> {
        self.check_size(k)?;
        Ok(k.facets()?.iter().all(|&f| self.set_independent(f)))
    }

    /// The same condition checked on every face separately; quadratic
    /// overkill kept as an oracle for the facet shortcut.
    pub fn verify_star_all_faces(&self, k: &SimplicialComplex) -> Result<bool> {
        self.check_size(k)?;
        let mut ok = true;
        for (card, level) in k.faces_by_card()?.iter().enumerate() {
            if card == 0 {
                continue;
            }
            for &f in level {
                ok &= self.set_independent(VertexSet::from_bits(f));
            }
        }
        Ok(ok)
    }

    fn check_size(&self, k: &SimplicialComplex) -> Result<()> {
        if self.columns.len() != k.m() {
            return Err(Error::MapSizeMismatch {
                got: self.columns.len(),
                want: k.m(),
            });
        }
        Ok(())
    }
}

/// An assignment of an integer vector of length `r` to each vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharMapInt {
    pub r: usize,
    columns: Vec<Vec<i64>>,
}

impl CharMapInt {
    pub fn new(r: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        for c in &columns {
            if c.len() != r {
                return Err(Error::MapSizeMismatch {
                    got: c.len(),
                    want: r,
                });
            }
        }
        Ok(CharMapInt { r, columns })
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, vertex: usize) -> &[i64] {
        &self.columns[vertex - 1]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Every column must be nonzero and have coprime entries; a column that
    /// fails can never sit inside a lattice basis.
    pub fn require_primitive_columns(&self) -> Result<()> {
        for (i, c) in self.columns.iter().enumerate() {
            if c.iter().all(|&x| x == 0) {
                return Err(Error::ZeroVector { vertex: i + 1 });
            }
            if !is_primitive(c) {
                return Err(Error::NonPrimitiveVector { vertex: i + 1 });
            }
        }
        Ok(())
    }

    /// The lattice condition checked on every facet: the facet's columns
    /// must extend to a basis of the integer lattice, detected by all
    /// invariant factors being one.
    pub fn verify_star(&self, k: &SimplicialComplex) -> Result<bool> {
        if self.columns.len() != k.m() {
            return Err(Error::MapSizeMismatch {
                got: self.columns.len(),
                want: k.m(),
            });
        }
        for &f in k.facets()? {
            if f.card() > self.r {
                return Ok(false);
            }
            let vectors: Vec<Vec<i64>> = f.iter().map(|v| self.columns[v].clone()).collect();
            if !unimodular(&vectors, self.r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reduce every entry mod 2. A facet whose columns extend to a lattice
    /// basis keeps independent columns mod 2, so validity descends.
    pub fn mod2_reduce(&self) -> CharMapGF2 {
        let columns = self
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &x)| acc | (((x & 1) as u64) << i))
            })
            .collect();
        CharMapGF2 { r: self.r, columns }
    }
}

/// Lift a GF(2) map to integer columns with entries zero and one.
pub fn zero_one_lift(map: &CharMapGF2) -> CharMapInt {
    let columns = map
        .columns()
        .iter()
        .map(|&c| (0..map.r).map(|i| (c >> i & 1) as i64).collect())
        .collect();
    CharMapInt { r: map.r, columns }
}
