//! The universal complexes on the nonzero vectors of GF(2)^n: vertices are
//! the vectors, faces the linearly independent subsets. Small ranks can be
//! materialized as ordinary complexes; mid ranks still expose face counts
//! through depth-first enumeration.

use crate::charmap::CharMapGF2;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::Gf2Basis;
use crate::vertexset::VertexSet;

/// Face enumeration walks every independent subset; rank six is the last
/// size where that count (about thirty million) stays comfortable.
pub const MAX_RANK_ENUM: usize = 6;

/// Largest rank whose facet list is materialized explicitly.
pub const MAX_RANK_FACETS: usize = 5;

/// Largest rank that fits a full simplicial complex with its face table.
pub const MAX_RANK_COMPLEX: usize = 4;

#[derive(Clone, Debug)]
pub struct RUComplex {
    n: usize,
    vertices: Vec<u64>,
}

impl RUComplex {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_RANK_ENUM {
            return Err(Error::RankOutOfRange {
                n,
                lo: 1,
                hi: MAX_RANK_ENUM,
            });
        }
        let mut vertices: Vec<u64> = (1..1u64 << n).collect();
        if n == 4 {
            // The order used throughout rank four: units, then pairs of
            // units ascending, then complements of units, then the full
            // vector.
            vertices = vec![1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 14, 13, 11, 7, 15];
        } else {
            vertices.sort_by_key(|&v| (v.count_ones(), v));
        }
        Ok(RUComplex { n, vertices })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of vertices: the nonzero vectors of the space.
    pub fn m(&self) -> usize {
        (1 << self.n) - 1
    }

    /// The vector of a 1-based vertex label.
    pub fn vertex_vector(&self, vertex: usize) -> u64 {
        self.vertices[vertex - 1]
    }

    pub fn vertex_vectors(&self) -> &[u64] {
        &self.vertices
    }

    /// A set of vertices is a face exactly when their vectors are
    /// independent.
    pub fn is_face(&self, set: VertexSet) -> bool {
        let mut basis = Gf2Basis::default();
        set.iter().all(|v| basis.insert(self.vertices[v]))
    }

    /// Face counts by cardinality, walking the tree of independent subsets
    /// in vertex order.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.n + 1];
        f[0] = 1;
        let mut basis = Gf2Basis::default();
        self.count_extensions(0, 0, &mut basis, &mut f);
        f
    }

    fn count_extensions(&self, from: usize, depth: usize, basis: &mut Gf2Basis, f: &mut [u64]) {
        if depth == self.n {
            return;
        }
        for i in from..self.vertices.len() {
            let mut extended = basis.clone();
            if extended.insert(self.vertices[i]) {
                f[depth + 1] += 1;
                self.count_extensions(i + 1, depth + 1, &mut extended, f);
            }
        }
    }

    /// All facets, which are exactly the bases of the space: every
    /// independent set extends to a basis, so maximal faces all have full
    /// rank.
    pub fn facets(&self) -> Result<Vec<VertexSet>> {
        if self.n > MAX_RANK_FACETS {
            return Err(Error::RankOutOfRange {
                n: self.n,
                lo: 1,
                hi: MAX_RANK_FACETS,
            });
        }
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(self.n);
        self.collect_bases(0, &Gf2Basis::default(), &mut stack, &mut out);
        Ok(out)
    }

    fn collect_bases(
        &self,
        from: usize,
        basis: &Gf2Basis,
        stack: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if stack.len() == self.n {
            let mut s = VertexSet::EMPTY;
            for &v in stack.iter() {
                s = s.with(v);
            }
            out.push(s);
            return;
        }
        for i in from..self.vertices.len() {
            let mut extended = basis.clone();
            if extended.insert(self.vertices[i]) {
                stack.push(i);
                self.collect_bases(i + 1, &extended, stack, out);
                stack.pop();
            }
        }
    }

    /// Materialize as a simplicial complex with its face table.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        if self.n > MAX_RANK_COMPLEX {
            return Err(Error::RankOutOfRange {
                n: self.n,
                lo: 1,
                hi: MAX_RANK_COMPLEX,
            });
        }
        SimplicialComplex::from_facet_sets(self.m(), self.facets()?)
    }

    /// The tautological assignment sending each vertex to its own vector;
    /// it satisfies the independence condition by construction.
    pub fn char_map_gf2(&self) -> CharMapGF2 {
        CharMapGF2::new(self.n, self.vertices.clone()).expect("vectors fit the rank")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent k-subsets of GF(2)^n, counted by the standard product
    /// over successive basis choices divided by the orderings.
    fn independent_count(n: usize, k: usize) -> u64 {
        let mut num = 1u128;
        for i in 0..k {
            num *= (1u128 << n) - (1u128 << i);
        }
        let mut fact = 1u128;
        for i in 1..=k {
            fact *= i as u128;
        }
        (num / fact) as u64
    }

    #[test]
    fn rank_four_vertex_order_lists_units_pairs_triples_full() {
        let ru = RUComplex::new(4).unwrap();
        assert_eq!(ru.m(), 15);
        assert_eq!(
            ru.vertex_vectors(),
            &[1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 14, 13, 11, 7, 15]
        );
        // Every nonzero vector appears exactly once.
        let mut sorted = ru.vertex_vectors().to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, (1..16).collect::<Vec<u64>>());
    }

    #[test]
    fn face_counts_match_the_product_formula() {
        for n in 1..=4 {
            let ru = RUComplex::new(n).unwrap();
            let f = ru.f_vector();
            assert_eq!(f.len(), n + 1);
            for (k, &count) in f.iter().enumerate() {
                assert_eq!(count, independent_count(n, k), "rank {n} size {k}");
            }
        }
    }

    #[test]
    fn rank_four_has_the_expected_counts() {
        let ru = RUComplex::new(4).unwrap();
        assert_eq!(ru.f_vector(), vec![1, 15, 105, 420, 840]);
        let facets = ru.facets().unwrap();
        assert_eq!(facets.len(), 840);
        assert!(facets.iter().all(|f| f.card() == 4));
    }

    #[test]
    fn materialized_complex_agrees_with_the_oracle() {
        let ru = RUComplex::new(3).unwrap();
        let k = ru.complex().unwrap();
        assert_eq!(k.f_vector().unwrap(), ru.f_vector());
        for bits in 0u64..1 << ru.m() {
            let s = VertexSet::from_bits(bits);
            assert_eq!(k.is_face(s), ru.is_face(s));
        }
    }

    #[test]
    fn tautological_map_satisfies_the_condition() {
        let ru = RUComplex::new(4).unwrap();
        let k = ru.complex().unwrap();
        let map = ru.char_map_gf2();
        assert!(map.verify_star(&k).unwrap());
    }

    #[test]
    fn triples_in_rank_four_order_are_unit_complements() {
        let ru = RUComplex::new(4).unwrap();
        // Vertices 11..14 carry the weight-three vectors; vertex 10+i
        // misses exactly coordinate i.
        for (i, vertex) in (11..=14).enumerate() {
            let v = ru.vertex_vector(vertex);
            assert_eq!(v.count_ones(), 3);
            assert_eq!(v, 0b1111 ^ (1 << i));
        }
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(RUComplex::new(0).is_err());
        assert!(RUComplex::new(7).is_err());
        assert!(RUComplex::new(6).unwrap().facets().is_err());
        assert!(RUComplex::new(5).unwrap().complex().is_err());
    }
}
