//! Finite simplicial complexes on a ground set `{1, ..., m}`.
//!
//! A complex is stored through either of its two dual descriptions: the
//! facets (maximal faces) or the minimal non-faces. Whichever side was not
//! given is derived lazily and cached. The empty face always belongs to the
//! complex, so the void complex is not constructible; the complex whose only
//! face is empty (every vertex a ghost) is fine and is stored with an empty
//! facet list.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::vertexset::{VertexSet, MAX_VERTICES};

/// Cap for algorithms that sweep all 2^m subsets of the ground set.
pub const MAX_ENUM_M: usize = 22;

#[derive(Debug, Clone, Default)]
pub struct SimplicialComplex {
    m: usize,
    facets: OnceLock<Vec<VertexSet>>,
    nonfaces: OnceLock<Vec<VertexSet>>,
    table: OnceLock<Vec<bool>>,
}

/// Dimension, f-vector and h-vector of a complex. `f[0]` counts the empty
/// face, so `f[k]` is the number of faces of cardinality k; `h` has length
/// `dim + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorStats {
    pub dim: i64,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
}

impl SimplicialComplex {
    fn check_ground(m: usize) -> Result<()> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                m,
                max: MAX_VERTICES,
            });
        }
        Ok(())
    }

    /// Builds from a family of faces; the family is deduplicated and pruned
    /// to its maximal members, so redundant input is allowed.
    pub fn from_facets(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let sets = facets
            .iter()
            .map(|f| VertexSet::from_labels(f, m))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facet_sets(m, sets)
    }

    pub fn from_facet_sets(m: usize, mut sets: Vec<VertexSet>) -> Result<Self> {
        Self::check_ground(m)?;
        for s in &sets {
            debug_assert!(s.is_subset(VertexSet::full(m)));
        }
        sets.retain(|s| !s.is_empty());
        sets.sort();
        sets.dedup();
        // Canonical order is ascending in cardinality, so a face can only be
        // swallowed by one that comes later; equal cardinalities never nest.
        let mut keep = vec![true; sets.len()];
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[j].card() > sets[i].card() && sets[i].is_subset(sets[j]) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut it = keep.iter();
        sets.retain(|_| *it.next().unwrap());
        let c = SimplicialComplex {
            m,
            ..Default::default()
        };
        c.facets.set(sets).unwrap();
        Ok(c)
    }

    /// Builds from the family of minimal non-faces, which must be an
    /// antichain of nonempty sets. An empty member would mean the void
    /// complex and is rejected.
    pub fn from_minimal_nonfaces(m: usize, nonfaces: &[Vec<usize>]) -> Result<Self> {
        let sets = nonfaces
            .iter()
            .map(|f| VertexSet::from_labels(f, m))
            .collect::<Result<Vec<_>>>()?;
        Self::from_nonface_sets(m, sets)
    }

    pub fn from_nonface_sets(m: usize, mut sets: Vec<VertexSet>) -> Result<Self> {
        Self::check_ground(m)?;
        for s in &sets {
            if s.is_empty() {
                return Err(Error::VoidComplex);
            }
            debug_assert!(s.is_subset(VertexSet::full(m)));
        }
        sets.sort();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[i].is_subset(sets[j]) {
                    return Err(Error::NotAntichain {
                        what: "minimal non-face family",
                        a: sets[i].to_string(),
                        b: sets[j].to_string(),
                    });
                }
            }
        }
        let c = SimplicialComplex {
            m,
            ..Default::default()
        };
        c.nonfaces.set(sets).unwrap();
        Ok(c)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        if let Some(facets) = self.facets.get() {
            s.is_empty() || facets.iter().any(|f| s.is_subset(*f))
        } else {
            let nf = self.nonfaces.get().expect("one description always set");
            !nf.iter().any(|n| n.is_subset(s))
        }
    }

    /// Face indicator over all 2^m subsets, index = packed bits.
    pub fn face_table(&self) -> Result<&[bool]> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        if self.m > MAX_ENUM_M {
            return Err(Error::SubsetEnumerationTooLarge {
                m: self.m,
                max: MAX_ENUM_M,
            });
        }
        let size = 1usize << self.m;
        let tab = if let Some(facets) = self.facets.get() {
            let mut tab = vec![false; size];
            for f in facets {
                tab[f.bits() as usize] = true;
            }
            for s in (1..size).rev() {
                if tab[s] {
                    let mut bits = s;
                    while bits != 0 {
                        let i = bits.trailing_zeros();
                        bits &= bits - 1;
                        tab[s & !(1usize << i)] = true;
                    }
                }
            }
            tab[0] = true;
            tab
        } else {
            let nf = self.nonfaces.get().unwrap();
            let mut bad = vec![false; size];
            for n in nf {
                bad[n.bits() as usize] = true;
            }
            for s in 1..size {
                if !bad[s] {
                    let mut bits = s;
                    while bits != 0 {
                        let i = bits.trailing_zeros();
                        bits &= bits - 1;
                        if bad[s & !(1usize << i)] {
                            bad[s] = true;
                            break;
                        }
                    }
                }
            }
            bad.iter().map(|b| !b).collect()
        };
        let _ = self.table.set(tab);
        Ok(self.table.get().unwrap())
    }

    /// Maximal faces in canonical order. The empty face is never listed: an
    /// empty result means the complex has no nonempty faces at all.
    pub fn facets(&self) -> Result<&[VertexSet]> {
        if let Some(f) = self.facets.get() {
            return Ok(f);
        }
        let m = self.m;
        let tab = self.face_table()?;
        let mut out = Vec::new();
        for s in 1..tab.len() {
            if tab[s] {
                let mut maximal = true;
                for i in 0..m {
                    if s & (1usize << i) == 0 && tab[s | (1usize << i)] {
                        maximal = false;
                        break;
                    }
                }
                if maximal {
                    out.push(VertexSet::from_bits(s as u64));
                }
            }
        }
        out.sort();
        let _ = self.facets.set(out);
        Ok(self.facets.get().unwrap())
    }

    /// Minimal non-faces in canonical order.
    pub fn minimal_nonfaces(&self) -> Result<&[VertexSet]> {
        if let Some(n) = self.nonfaces.get() {
            return Ok(n);
        }
        let tab = self.face_table()?;
        let mut out = Vec::new();
        for s in 1..tab.len() {
            if !tab[s] {
                let mut bits = s;
                let mut minimal = true;
                while bits != 0 {
                    let i = bits.trailing_zeros();
                    bits &= bits - 1;
                    if !tab[s & !(1usize << i)] {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    out.push(VertexSet::from_bits(s as u64));
                }
            }
        }
        out.sort();
        let _ = self.nonfaces.set(out);
        Ok(self.nonfaces.get().unwrap())
    }

    pub fn dimension(&self) -> Result<i64> {
        Ok(self
            .facets()?
            .iter()
            .map(|f| f.card() as i64 - 1)
            .max()
            .unwrap_or(-1))
    }

    /// Vertices that are not faces.
    pub fn ghost_vertices(&self) -> Vec<usize> {
        (1..=self.m)
            .filter(|&v| !self.is_face(VertexSet::singleton(v)))
            .collect()
    }

    pub fn require_no_ghosts(&self) -> Result<()> {
        let ghosts = self.ghost_vertices();
        if ghosts.is_empty() {
            Ok(())
        } else {
            Err(Error::GhostVertices { ghosts })
        }
    }

    /// `f[k]` = number of faces of cardinality k; `f[0] = 1` for the empty face.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let tab = self.face_table()?;
        let dim = self.dimension()?;
        let mut f = vec![0u64; (dim + 2) as usize];
        for (s, &is_face) in tab.iter().enumerate() {
            if is_face {
                f[s.count_ones() as usize] += 1;
            }
        }
        Ok(f)
    }

    pub fn h_vector(&self) -> Result<Vec<i64>> {
        let f = self.f_vector()?;
        let n = f.len() - 1; // dim + 1
                             // h(t) = sum_i f_{i-1} t^i (1-t)^(n-i)
        let mut h = vec![0i128; n + 1];
        for (i, &fi) in f.iter().enumerate() {
            let pow = binomial_signs(n - i);
            for (k, &c) in pow.iter().enumerate() {
                h[i + k] += fi as i128 * c;
            }
        }
        Ok(h.into_iter().map(|x| i64::try_from(x).unwrap()).collect())
    }

    pub fn vector_stats(&self) -> Result<VectorStats> {
        Ok(VectorStats {
            dim: self.dimension()?,
            f: self.f_vector()?,
            h: self.h_vector()?,
        })
    }

    /// Non-reduced Euler characteristic, the alternating sum over nonempty faces.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let f = self.f_vector()?;
        Ok(f.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum())
    }

    /// Faces grouped by cardinality, packed; index = cardinality.
    pub(crate) fn faces_by_card(&self) -> Result<Vec<Vec<u64>>> {
        let tab = self.face_table()?;
        let dim = self.dimension()?;
        let mut groups = vec![Vec::new(); (dim + 2) as usize];
        for (s, &is_face) in tab.iter().enumerate() {
            if is_face {
                groups[s.count_ones() as usize].push(s as u64);
            }
        }
        Ok(groups)
    }

    /// Adjoins one fresh vertex per minimal non-face: the k-th minimal
    /// non-face J (canonical order) becomes J together with new vertex m+k.
    /// The result's non-face family is again an antichain with strictly
    /// larger members, and its Taylor complex is always minimal.
    pub fn resolve(&self) -> Result<Self> {
        let nf = self.minimal_nonfaces()?;
        if nf.is_empty() {
            return Err(Error::EmptySystem);
        }
        let m2 = self.m + nf.len();
        Self::check_ground(m2)?;
        let sets: Vec<VertexSet> = nf
            .iter()
            .enumerate()
            .map(|(k, n)| n.with(self.m + k))
            .collect();
        Self::from_nonface_sets(m2, sets)
    }

    /// Join on the disjoint union of the ground sets; the second complex's
    /// vertices are shifted up by `self.m`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let m2 = self.m + other.m;
        Self::check_ground(m2)?;
        let fa = self.facets()?;
        let fb = other.facets()?;
        let left: &[VertexSet] = if fa.is_empty() {
            &[VertexSet::EMPTY]
        } else {
            fa
        };
        let right: &[VertexSet] = if fb.is_empty() {
            &[VertexSet::EMPTY]
        } else {
            fb
        };
        let mut sets = Vec::with_capacity(left.len() * right.len());
        for f in left {
            for g in right {
                sets.push(VertexSet::from_bits(f.bits() | g.bits() << self.m));
            }
        }
        Self::from_facet_sets(m2, sets)
    }

    /// Cone: one new apex vertex m+1 joined to every face.
    pub fn cone(&self) -> Result<Self> {
        self.join(&simplex(1)?)
    }

    /// Faces of cardinality at most l+1.
    pub fn skeleton(&self, l: i64) -> Result<Self> {
        if l < 0 {
            return Err(Error::NegativeSkeleton(l));
        }
        let cap = (l + 1) as usize;
        let mut sets = Vec::new();
        for f in self.facets()? {
            if f.card() <= cap {
                sets.push(*f);
            } else {
                k_subsets(&f.iter().collect::<Vec<_>>(), cap, &mut sets);
            }
        }
        Self::from_facet_sets(self.m, sets)
    }

    /// Exact chromatic number of the 1-skeleton by branch and bound.
    /// A complete 1-skeleton short-circuits to m.
    pub fn chromatic_number(&self) -> Result<usize> {
        self.require_no_ghosts()?;
        let m = self.m;
        if m == 0 {
            return Ok(0);
        }
        let mut adj = vec![0u64; m];
        for f in self.facets()? {
            let members: Vec<usize> = f.iter().collect();
            for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    adj[u] |= 1u64 << v;
                    adj[v] |= 1u64 << u;
                }
            }
        }
        let edges: usize = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        if edges == m * (m - 1) / 2 {
            return Ok(m);
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
        // Greedy clique gives the lower bound.
        let mut clique = 0u64;
        for &v in &order {
            if clique & !adj[v] == 0 {
                clique |= 1u64 << v;
            }
        }
        let lb = (clique.count_ones() as usize).max(1);
        // Greedy coloring gives the upper bound.
        let mut color = vec![0usize; m];
        let mut ub = 0;
        for &v in &order {
            let mut used = 0u64;
            for u in VertexSet::from_bits(adj[v]).iter() {
                if color[u] > 0 {
                    used |= 1u64 << (color[u] - 1);
                }
            }
            let c = (used.trailing_ones() + 1) as usize;
            color[v] = c;
            ub = ub.max(c);
        }
        for k in lb..ub {
            let mut colors = vec![0u8; m];
            if color_dfs(&adj, &order, 0, k as u8, 0, &mut colors) {
                return Ok(k);
            }
        }
        Ok(ub)
    }

    /// Whether the vertex map `to` (1-based images, one per vertex) is
    /// injective on every facet with every facet image a face of `target`.
    pub fn is_nondegenerate_map(&self, to: &[usize], target: &Self) -> Result<bool> {
        if to.len() != self.m {
            return Err(Error::MapSizeMismatch {
                got: to.len(),
                want: self.m,
            });
        }
        for &v in to {
            if v == 0 || v > target.m {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    m: target.m,
                });
            }
        }
        for f in self.facets()? {
            let mut image = VertexSet::EMPTY;
            let mut count = 0;
            for u in f.iter() {
                image = image.union(VertexSet::singleton(to[u]));
                count += 1;
            }
            if image.card() != count || !target.is_face(image) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Structural equality: same ground set size and same facets.
    pub fn same_complex(&self, other: &Self) -> Result<bool> {
        Ok(self.m == other.m && self.facets()? == other.facets()?)
    }
}

fn color_dfs(
    adj: &[u64],
    order: &[usize],
    pos: usize,
    k: u8,
    max_used: u8,
    colors: &mut [u8],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let mut banned = 0u64;
    for u in VertexSet::from_bits(adj[v]).iter() {
        if colors[u] > 0 {
            banned |= 1u64 << (colors[u] - 1);
        }
    }
    // Color symmetry: allow at most one fresh color beyond those in use.
    let limit = k.min(max_used + 1);
    for c in 1..=limit {
        if banned >> (c - 1) & 1 == 0 {
            colors[v] = c;
            if color_dfs(adj, order, pos + 1, k, max_used.max(c), colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

fn k_subsets(elems: &[usize], k: usize, out: &mut Vec<VertexSet>) {
    fn rec(elems: &[usize], k: usize, start: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=elems.len() - k {
            rec(elems, k - 1, i + 1, acc.with(elems[i]), out);
        }
    }
    rec(elems, k, 0, VertexSet::EMPTY, out);
}

/// Coefficients of (1-t)^k.
fn binomial_signs(k: usize) -> Vec<i128> {
    let mut c = vec![1i128];
    for _ in 0..k {
        let mut next = vec![0i128; c.len() + 1];
        for (i, &x) in c.iter().enumerate() {
            next[i] += x;
            next[i + 1] -= x;
        }
        c = next;
    }
    c
}

pub fn simplex(m: usize) -> Result<SimplicialComplex> {
    if m == 0 {
        SimplicialComplex::from_facet_sets(0, vec![])
    } else {
        SimplicialComplex::from_facet_sets(m, vec![VertexSet::full(m)])
    }
}

/// Boundary of the simplex on k vertices: every proper subset is a face.
pub fn boundary_simplex(k: usize) -> Result<SimplicialComplex> {
    SimplicialComplex::check_ground(k)?;
    SimplicialComplex::from_nonface_sets(k, vec![VertexSet::full(k)])
}

/// The complex on m vertices whose only face is empty.
pub fn empty_complex(m: usize) -> Result<SimplicialComplex> {
    SimplicialComplex::from_facet_sets(m, vec![])
}

/// A family of subsets of `{1, ..., ground}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub ground: usize,
    pub members: Vec<VertexSet>,
}

impl SetSystem {
    pub fn new(ground: usize, members: &[Vec<usize>]) -> Result<Self> {
        SimplicialComplex::check_ground(ground)?;
        let members = members
            .iter()
            .map(|f| VertexSet::from_labels(f, ground))
            .collect::<Result<Vec<_>>>()?;
        Ok(SetSystem { ground, members })
    }

    /// Member-wise complement in the ground set. Each member must be a
    /// proper nonempty subset so every complement is too.
    pub fn complement_system(&self) -> Result<SetSystem> {
        let full = VertexSet::full(self.ground);
        let members = self
            .members
            .iter()
            .map(|s| {
                if s.is_empty() || *s == full {
                    Err(Error::ImproperMember {
                        member: s.to_string(),
                    })
                } else {
                    Ok(s.complement(self.ground))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetSystem {
            ground: self.ground,
            members,
        })
    }

    pub fn union_of_members(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::EMPTY, |a, b| a.union(*b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
            .unwrap()
    }

    #[test]
    fn facet_input_is_deduplicated_and_pruned() {
        let k =
            SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2], vec![1, 2], vec![3], vec![]])
                .unwrap();
        let shown: Vec<String> = k.facets().unwrap().iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["{3}", "{1,2}"]);
        assert_eq!(k.ghost_vertices(), vec![4]);
    }

    #[test]
    fn empty_facet_list_gives_the_all_ghost_complex() {
        let k = SimplicialComplex::from_facets(3, &[]).unwrap();
        assert_eq!(k.dimension().unwrap(), -1);
        assert_eq!(k.f_vector().unwrap(), vec![1]);
        assert_eq!(k.ghost_vertices(), vec![1, 2, 3]);
        let nf: Vec<String> = k
            .minimal_nonfaces()
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(nf, ["{1}", "{2}", "{3}"]);
    }

    #[test]
    fn square_boundary_conversions_roundtrip() {
        let k = square();
        let nf: Vec<String> = k
            .minimal_nonfaces()
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(nf, ["{1,3}", "{2,4}"]);
        let k2 = SimplicialComplex::from_minimal_nonfaces(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert!(k.same_complex(&k2).unwrap());
        assert_eq!(k2.f_vector().unwrap(), vec![1, 4, 4]);
        assert_eq!(k2.h_vector().unwrap(), vec![1, 2, 1]);
        assert_eq!(k2.euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn nonface_constructor_rejects_nested_families_and_the_void_complex() {
        assert!(matches!(
            SimplicialComplex::from_minimal_nonfaces(4, &[vec![1], vec![1, 2]]),
            Err(Error::NotAntichain { .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_minimal_nonfaces(4, &[vec![1, 2], vec![1, 2]]),
            Err(Error::NotAntichain { .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_minimal_nonfaces(4, &[vec![]]),
            Err(Error::VoidComplex)
        ));
    }

    #[test]
    fn simplex_has_no_nonfaces_and_full_h_concentration() {
        let d = simplex(3).unwrap();
        assert!(d.minimal_nonfaces().unwrap().is_empty());
        assert_eq!(d.h_vector().unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(d.dimension().unwrap(), 2);
    }

    #[test]
    fn boundary_simplex_is_a_sphere() {
        let s = boundary_simplex(4).unwrap();
        assert_eq!(s.dimension().unwrap(), 2);
        assert_eq!(s.f_vector().unwrap(), vec![1, 4, 6, 4]);
        // h-vector of the 2-sphere boundary: (1,1,1,1)
        assert_eq!(s.h_vector().unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn resolve_square_appends_one_vertex_per_nonface() {
        let r = square().resolve().unwrap();
        assert_eq!(r.m(), 6);
        let nf: Vec<String> = r
            .minimal_nonfaces()
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(nf, ["{1,3,5}", "{2,4,6}"]);
    }

    #[test]
    fn join_of_two_boundaries_has_product_nonfaces() {
        let a = boundary_simplex(2).unwrap();
        let b = boundary_simplex(3).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.m(), 5);
        let nf: Vec<String> = j
            .minimal_nonfaces()
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(nf, ["{1,2}", "{3,4,5}"]);
        assert_eq!(j.dimension().unwrap(), 2);
    }

    #[test]
    fn cone_preserves_minimal_nonfaces() {
        let c = square().cone().unwrap();
        assert_eq!(c.m(), 5);
        let nf: Vec<String> = c
            .minimal_nonfaces()
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(nf, ["{1,3}", "{2,4}"]);
        assert_eq!(c.dimension().unwrap(), 2);
    }

    #[test]
    fn skeleton_cuts_at_the_requested_dimension() {
        let d = simplex(4).unwrap();
        let s = d.skeleton(1).unwrap();
        assert_eq!(s.dimension().unwrap(), 1);
        assert_eq!(s.f_vector().unwrap(), vec![1, 4, 6]);
        assert!(matches!(d.skeleton(-1), Err(Error::NegativeSkeleton(-1))));
    }

    #[test]
    fn chromatic_numbers_of_small_complexes() {
        assert_eq!(square().chromatic_number().unwrap(), 2);
        let c5 = SimplicialComplex::from_facets(
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
        )
        .unwrap();
        assert_eq!(c5.chromatic_number().unwrap(), 3);
        assert_eq!(simplex(6).unwrap().chromatic_number().unwrap(), 6);
        let disconnected = SimplicialComplex::from_facets(3, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(disconnected.chromatic_number().unwrap(), 1);
        assert!(matches!(
            empty_complex(2).unwrap().chromatic_number(),
            Err(Error::GhostVertices { .. })
        ));
    }

    #[test]
    fn nondegenerate_maps() {
        let path = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let edge = simplex(2).unwrap();
        // Fold the path onto the edge: 1,3 -> 1 and 2 -> 2.
        assert!(path.is_nondegenerate_map(&[1, 2, 1], &edge).unwrap());
        // Collapsing an edge is degenerate.
        assert!(!path.is_nondegenerate_map(&[1, 1, 2], &edge).unwrap());
        assert!(matches!(
            path.is_nondegenerate_map(&[1, 2], &edge),
            Err(Error::MapSizeMismatch { .. })
        ));
    }

    #[test]
    fn complement_system_flips_members() {
        let s = SetSystem::new(5, &[vec![1, 2], vec![3]]).unwrap();
        let c = s.complement_system().unwrap();
        let shown: Vec<String> = c.members.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["{3,4,5}", "{1,2,4,5}"]);
        let bad = SetSystem::new(3, &[vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            bad.complement_system(),
            Err(Error::ImproperMember { .. })
        ));
    }
}
