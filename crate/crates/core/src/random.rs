//! Seeded complex generators for randomized property tests. Everything is
//! driven by an explicit StdRng so failures reproduce from the seed.

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::vertexset::VertexSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn random_subset(rng: &mut StdRng, m: usize, card: usize) -> VertexSet {
    let mut picked = VertexSet::EMPTY;
    while picked.card() < card {
        picked = picked.with(rng.gen_range(0..m));
    }
    picked
}

/// A complex on m vertices from a handful of random candidate facets.
/// Ghost vertices and the full simplex both occur.
pub fn random_complex(rng: &mut StdRng, m: usize) -> Result<SimplicialComplex> {
    let count = rng.gen_range(1..=m + 2);
    let sets = (0..count)
        .map(|_| {
            let card = rng.gen_range(1..=m);
            random_subset(rng, m, card)
        })
        .collect();
    SimplicialComplex::from_facet_sets(m, sets)
}

/// As [`random_complex`] but with every singleton a face.
pub fn random_no_ghost_complex(rng: &mut StdRng, m: usize) -> Result<SimplicialComplex> {
    let count = rng.gen_range(1..=m + 2);
    let mut sets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let card = rng.gen_range(1..=m);
            random_subset(rng, m, card)
        })
        .collect();
    for v in 0..m {
        sets.push(VertexSet::EMPTY.with(v));
    }
    SimplicialComplex::from_facet_sets(m, sets)
}

/// No ghosts and not the full simplex: facet candidates stay below
/// cardinality m, so the full vertex set is never a face. Needs m >= 2.
pub fn random_proper_complex(rng: &mut StdRng, m: usize) -> Result<SimplicialComplex> {
    let count = rng.gen_range(1..=m + 2);
    let mut sets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let card = rng.gen_range(1..m);
            random_subset(rng, m, card)
        })
        .collect();
    for v in 0..m {
        sets.push(VertexSet::EMPTY.with(v));
    }
    SimplicialComplex::from_facet_sets(m, sets)
}

/// A one-dimensional complex: each pair becomes an edge with the given
/// probability, and every vertex is a face.
pub fn random_graph(rng: &mut StdRng, m: usize, edge_prob: f64) -> Result<SimplicialComplex> {
    let mut sets: Vec<VertexSet> = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen_bool(edge_prob) {
                sets.push(VertexSet::EMPTY.with(u).with(v));
            }
        }
    }
    for v in 0..m {
        sets.push(VertexSet::EMPTY.with(v));
    }
    SimplicialComplex::from_facet_sets(m, sets)
}
