//! Bigraded Betti numbers of the Stanley-Reisner ring by three independent
//! routes: counting generators of a minimal Taylor resolution, reduced
//! cohomology of full subcomplexes, and ranks inside the Koszul complex.
//! The entry at (l, j) is the multiplicity in homological degree -l and
//! internal degree 2j.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{closure_groups, collapse_groups, reduced_betti_dims};
use crate::linalg::{field_rank, FieldSpec, SparseMat};
use crate::taylor::taylor_is_minimal;
use crate::vertexset::VertexSet;

/// Koszul blocks enumerate pairs (subset, complement face); keep the ambient
/// vertex count small enough that the 3^m total stays reasonable.
pub const MAX_KOSZUL_M: usize = 10;

/// One multidegree's worth of output: the multidegree bits together with its
/// (homological degree, rank) pairs.
type PerDegree = Vec<(u64, Vec<(usize, u64)>)>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BettiMethod {
    MinimalTaylor,
    Hochster,
    Koszul,
}

impl std::fmt::Display for BettiMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BettiMethod::MinimalTaylor => write!(f, "minimal-taylor"),
            BettiMethod::Hochster => write!(f, "hochster"),
            BettiMethod::Koszul => write!(f, "koszul"),
        }
    }
}

/// Betti numbers collected by (l, j). Equality compares the numbers only,
/// never the method or field used to produce them, so tables from different
/// routes can be checked against each other directly.
#[derive(Clone, Debug)]
pub struct BettiTable {
    pub method: BettiMethod,
    pub field: Option<FieldSpec>,
    entries: BTreeMap<(usize, usize), u64>,
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for BettiTable {}

impl BettiTable {
    fn new(method: BettiMethod, field: Option<FieldSpec>) -> Self {
        BettiTable {
            method,
            field,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, ell: usize, j: usize, weight: u64) {
        if weight > 0 {
            *self.entries.entry((ell, j)).or_insert(0) += weight;
        }
    }

    pub fn get(&self, ell: usize, j: usize) -> u64 {
        self.entries.get(&(ell, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by (homological degree, half the internal
    /// degree), in lexicographic order.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    /// Sum of all multiplicities; the total rank of the resolution.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn max_ell(&self) -> usize {
        self.entries.keys().map(|&(l, _)| l).max().unwrap_or(0)
    }

    /// Coefficients of the alternating sum over homological degrees, indexed
    /// by j: the numerator polynomial of the Hilbert series over (1-t)^m.
    pub fn alternating_polynomial(&self) -> Vec<i128> {
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut poly = vec![0i128; max_j + 1];
        for (&(ell, j), &w) in &self.entries {
            let signed = if ell % 2 == 0 {
                w as i128
            } else {
                -(w as i128)
            };
            poly[j] += signed;
        }
        poly
    }
}

/// Betti numbers refined by the squarefree multidegree itself rather than
/// its size. Equality compares entries only, like the graded table.
#[derive(Clone, Debug)]
pub struct MultigradedBetti {
    pub method: BettiMethod,
    pub field: Option<FieldSpec>,
    entries: BTreeMap<(usize, VertexSet), u64>,
}

impl PartialEq for MultigradedBetti {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for MultigradedBetti {}

impl MultigradedBetti {
    fn new(method: BettiMethod, field: Option<FieldSpec>) -> Self {
        MultigradedBetti {
            method,
            field,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, ell: usize, a: VertexSet, weight: u64) {
        if weight > 0 {
            *self.entries.entry((ell, a)).or_insert(0) += weight;
        }
    }

    pub fn get(&self, ell: usize, a: VertexSet) -> u64 {
        self.entries.get(&(ell, a)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, VertexSet), u64> {
        &self.entries
    }

    /// Collapse multidegrees to their sizes.
    pub fn graded(&self) -> BettiTable {
        let mut table = BettiTable::new(self.method, self.field);
        for (&(ell, a), &w) in &self.entries {
            table.add(ell, a.card(), w);
        }
        table
    }
}

/// Betti numbers read off a minimal Taylor resolution: the count of
/// non-face subsets by size and union. Fails when the resolution is not
/// minimal, where the count would overshoot.
pub fn betti_minimal_taylor(k: &SimplicialComplex) -> Result<BettiTable> {
    Ok(betti_minimal_taylor_multigraded(k)?.graded())
}

/// Multigraded version of the minimal Taylor count.
pub fn betti_minimal_taylor_multigraded(k: &SimplicialComplex) -> Result<MultigradedBetti> {
    if !taylor_is_minimal(k)? {
        return Err(Error::NotMinimal);
    }
    let nonfaces = k.minimal_nonfaces()?;
    // Minimality forces a private vertex per non-face, so their number is
    // at most m and the subset enumeration below is safe.
    let t = nonfaces.len();
    let mut multi = MultigradedBetti::new(BettiMethod::MinimalTaylor, None);
    for bits in 0u64..1 << t {
        let mut union = VertexSet::EMPTY;
        let mut rest = bits;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            union = union.union(nonfaces[p]);
        }
        multi.add(bits.count_ones() as usize, union, 1);
    }
    Ok(multi)
}

/// Route selection for the subcomplex engine. Forced routes exist so tests
/// can cross-check the two ways of reading the same cohomology.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) enum HochsterRoute {
    Auto,
    Direct,
    Dual,
}

/// Betti numbers from reduced cohomology of full subcomplexes over the
/// given field.
pub fn betti_hochster(k: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    Ok(betti_hochster_multigraded(k, field)?.graded())
}

/// Multigraded version of the subcomplex route.
pub fn betti_hochster_multigraded(
    k: &SimplicialComplex,
    field: FieldSpec,
) -> Result<MultigradedBetti> {
    hochster_multigraded_with_route(k, field, HochsterRoute::Auto)
}

pub(crate) fn hochster_multigraded_with_route(
    k: &SimplicialComplex,
    field: FieldSpec,
    route: HochsterRoute,
) -> Result<MultigradedBetti> {
    field.validate()?;
    let m = k.m();
    k.face_table()?;
    let nonfaces = k.minimal_nonfaces()?;
    // A multidegree can only carry Betti numbers if it is a union of
    // minimal non-faces: otherwise its subcomplex is a cone over the
    // vertices missed by every non-face inside it, hence acyclic. This
    // covers the empty multidegree too, as the empty union.
    let candidates: Vec<u64> = (0u64..1 << m)
        .filter(|&a| {
            let mut union = 0u64;
            for nf in nonfaces {
                if nf.bits() & !a == 0 {
                    union |= nf.bits();
                }
            }
            union == a
        })
        .collect();
    let per_a: Result<PerDegree> = candidates
        .par_iter()
        .map(|&a| Ok((a, hochster_at(k, a, nonfaces, field, route)?)))
        .collect();
    let mut multi = MultigradedBetti::new(BettiMethod::Hochster, Some(field));
    for (a, contributions) in per_a? {
        for (ell, w) in contributions {
            multi.add(ell, VertexSet::from_bits(a), w);
        }
    }
    Ok(multi)
}

/// Contributions of one multidegree: pairs (homological degree, dimension).
fn hochster_at(
    k: &SimplicialComplex,
    a: u64,
    nonfaces: &[VertexSet],
    field: FieldSpec,
    route: HochsterRoute,
) -> Result<Vec<(usize, u64)>> {
    let m = k.m();
    let acard = a.count_ones() as usize;
    let inside: Vec<u64> = nonfaces
        .iter()
        .map(|nf| nf.bits())
        .filter(|nf| nf & !a == 0)
        .collect();
    let use_dual = match route {
        HochsterRoute::Direct => false,
        HochsterRoute::Dual => !inside.is_empty(),
        HochsterRoute::Auto => {
            let direct_cost = 1u128 << acard;
            let dual_cost: u128 = inside
                .iter()
                .map(|nf| 1u128 << (acard - nf.count_ones() as usize))
                .sum();
            !inside.is_empty() && dual_cost < direct_cost
        }
    };
    let mut out = Vec::new();
    if use_dual {
        // Combinatorial Alexander duality inside the multidegree: the
        // complex generated by the complements of the non-faces has the
        // reduced homology of the subcomplex, reindexed so that homological
        // degree l reads off dual degree l-2.
        let generators: Vec<u64> = inside.iter().map(|nf| a & !nf).collect();
        let groups = closure_groups(&generators);
        let collapsed = collapse_groups(&groups, m);
        let dims = reduced_betti_dims(&collapsed, field)?;
        for (j, &d) in dims.iter().enumerate() {
            if d > 0 {
                out.push((j + 1, d));
            }
        }
    } else {
        let mut groups: Vec<Vec<u64>> = vec![Vec::new(); acard + 1];
        for s in VertexSet::from_bits(a).subsets() {
            if k.is_face(s) {
                groups[s.card()].push(s.bits());
            }
        }
        while groups.last().is_some_and(|g| g.is_empty()) {
            groups.pop();
        }
        let collapsed = collapse_groups(&groups, m);
        let dims = reduced_betti_dims(&collapsed, field)?;
        for (j, &d) in dims.iter().enumerate() {
            if d > 0 {
                out.push((acard - j, d));
            }
        }
    }
    Ok(out)
}

/// Betti numbers as cohomology of the Koszul complex: for each squarefree
/// multidegree the basis pairs a subset of it with a complementary face,
/// and the entry is the failure of exactness at that spot.
pub fn betti_koszul(k: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    Ok(betti_koszul_multigraded(k, field)?.graded())
}

/// Multigraded version of the Koszul route.
pub fn betti_koszul_multigraded(
    k: &SimplicialComplex,
    field: FieldSpec,
) -> Result<MultigradedBetti> {
    field.validate()?;
    let m = k.m();
    if m > MAX_KOSZUL_M {
        return Err(Error::SubsetEnumerationTooLarge {
            m,
            max: MAX_KOSZUL_M,
        });
    }
    k.face_table()?;
    let per_a: Result<PerDegree> = (0u64..1 << m)
        .into_par_iter()
        .map(|a| Ok((a, koszul_at(k, a, field)?)))
        .collect();
    let mut multi = MultigradedBetti::new(BettiMethod::Koszul, Some(field));
    for (a, contributions) in per_a? {
        for (ell, w) in contributions {
            multi.add(ell, VertexSet::from_bits(a), w);
        }
    }
    Ok(multi)
}

fn koszul_at(k: &SimplicialComplex, a: u64, field: FieldSpec) -> Result<Vec<(usize, u64)>> {
    let aset = VertexSet::from_bits(a);
    let acard = aset.card();
    // Level l holds the subsets of size l whose complement inside the
    // multidegree is a face.
    let mut levels: Vec<Vec<u64>> = vec![Vec::new(); acard + 1];
    for sigma in aset.subsets() {
        if k.is_face(VertexSet::from_bits(a & !sigma.bits())) {
            levels[sigma.card()].push(sigma.bits());
        }
    }
    let mut ranks = vec![0usize; acard + 2];
    for ell in 1..=acard {
        if levels[ell].is_empty() || levels[ell - 1].is_empty() {
            continue;
        }
        let rows = &levels[ell - 1];
        let cols = &levels[ell];
        let mut mat = SparseMat::new(rows.len(), cols.len());
        for (c, &sigma) in cols.iter().enumerate() {
            let sset = VertexSet::from_bits(sigma);
            for i in sset.iter() {
                let tau = sigma & !(1 << i);
                if let Ok(r) = rows.binary_search(&tau) {
                    let sign = if sset.rank_of(i).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    };
                    mat.push(r, c, sign);
                }
            }
        }
        ranks[ell] = field_rank(&mat, field)?;
    }
    let mut out = Vec::new();
    for ell in 0..=acard {
        let c = levels[ell].len() as i64;
        let b = c - ranks[ell] as i64 - ranks[ell + 1] as i64;
        debug_assert!(b >= 0, "rank bookkeeping broke in a Koszul block");
        if b > 0 {
            out.push((ell, b as u64));
        }
    }
    Ok(out)
}

/// Check the Hilbert series identity tying the alternating sum of the table
/// to the h-vector: the alternating polynomial must equal
/// (1-t)^(m-d) (h_0 + h_1 t + ... + h_d t^d) with d the dimension plus one.
pub fn h_vector_identity_holds(k: &SimplicialComplex, table: &BettiTable) -> Result<bool> {
    let stats = k.vector_stats()?;
    let m = k.m();
    let n = stats.h.len() - 1;
    let lhs = table.alternating_polynomial();
    let mut rhs = vec![0i128; m - n + stats.h.len()];
    for (i, &h) in stats.h.iter().enumerate() {
        for r in 0..=m - n {
            let sign = if r % 2 == 0 { 1i128 } else { -1 };
            rhs[i + r] += sign * binomial(m - n, r) * h as i128;
        }
    }
    let width = lhs.len().max(rhs.len());
    let padded = |v: &Vec<i128>, i: usize| v.get(i).copied().unwrap_or(0);
    Ok((0..width).all(|i| padded(&lhs, i) == padded(&rhs, i)))
}

fn binomial(n: usize, r: usize) -> i128 {
    let mut acc = 1i128;
    for i in 0..r {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Additive cohomology of the moment-angle complex read off the table:
/// the entry at (l, j) sits in total degree 2j - l.
pub fn zk_cohomology_dims(table: &BettiTable) -> Vec<u64> {
    let top = table
        .entries()
        .keys()
        .map(|&(ell, j)| 2 * j - ell)
        .max()
        .unwrap_or(0);
    let mut dims = vec![0u64; top + 1];
    for (&(ell, j), &w) in table.entries() {
        dims[2 * j - ell] += w;
    }
    dims
}
