//! The Taylor complex of the Stanley-Reisner ideal: generators indexed by
//! subsets of the minimal non-faces, the standard differential and product,
//! minimality detection, and the induced product table on Tor when the
//! resolution is minimal.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::BitMatrix;
use crate::vertexset::VertexSet;

/// Largest supported number of minimal non-faces; generator index sets are
/// packed into a u32.
pub const MAX_NONFACES: usize = 32;

/// A Taylor generator: a subset of the minimal non-faces, packed by their
/// position in the canonical non-face order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TaylorGenerator(u32);

impl TaylorGenerator {
    /// The degree-zero generator with empty index set.
    pub const UNIT: TaylorGenerator = TaylorGenerator(0);

    pub fn from_bits(bits: u32) -> Self {
        TaylorGenerator(bits)
    }

    /// Build from 0-based positions into the non-face list.
    pub fn from_positions(positions: &[usize]) -> Self {
        let mut bits = 0u32;
        for &p in positions {
            assert!(p < MAX_NONFACES, "non-face position out of range");
            bits |= 1 << p;
        }
        TaylorGenerator(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Homological degree: the number of non-faces in the index set.
    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, position: usize) -> bool {
        position < MAX_NONFACES && self.0 >> position & 1 == 1
    }

    pub fn with(self, position: usize) -> Self {
        TaylorGenerator(self.0 | 1 << position)
    }

    pub fn without(self, position: usize) -> Self {
        TaylorGenerator(self.0 & !(1 << position))
    }

    pub fn disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn merge(self, other: Self) -> Self {
        TaylorGenerator(self.0 | other.0)
    }

    /// 0-based positions in ascending order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// Union of the indexed non-faces; the squarefree multidegree.
    pub fn union_of(self, nonfaces: &[VertexSet]) -> VertexSet {
        self.positions()
            .fold(VertexSet::EMPTY, |acc, p| acc.union(nonfaces[p]))
    }
}

impl fmt::Display for TaylorGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W(")?;
        let mut first = true;
        for p in self.positions() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
            first = false;
        }
        write!(f, ")")
    }
}

/// One summand of a differential or a product: a signed monomial times a
/// generator. The monomial is squarefree, recorded by its support.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TaylorTerm {
    pub sign: i64,
    pub monomial: VertexSet,
    pub target: TaylorGenerator,
}

fn nonface_list(k: &SimplicialComplex) -> Result<&[VertexSet]> {
    let n = k.minimal_nonfaces()?;
    if n.len() > MAX_NONFACES {
        return Err(Error::TooManyNonfaces {
            n: n.len(),
            max: MAX_NONFACES,
        });
    }
    Ok(n)
}

fn check_generator(sigma: TaylorGenerator, t: usize) -> Result<()> {
    if t < MAX_NONFACES && sigma.bits() >> t != 0 {
        return Err(Error::BadFormat(format!(
            "generator indexes non-face {} but only {} exist",
            32 - sigma.bits().leading_zeros(),
            t
        )));
    }
    Ok(())
}

/// The differential applied to one generator. The term for the p-th member
/// of the index set (counting from one, in non-face order) carries sign
/// (-1)^(p+1) and the monomial supported on the vertices that member
/// contributes to the union beyond the other members.
pub fn taylor_differential(
    k: &SimplicialComplex,
    sigma: TaylorGenerator,
) -> Result<Vec<TaylorTerm>> {
    let nonfaces = nonface_list(k)?;
    check_generator(sigma, nonfaces.len())?;
    let mut terms = Vec::with_capacity(sigma.card());
    for (idx, p) in sigma.positions().enumerate() {
        let rest = sigma.without(p);
        let others = rest.union_of(nonfaces);
        let escaped = nonfaces[p].minus(others);
        terms.push(TaylorTerm {
            sign: if idx % 2 == 0 { 1 } else { -1 },
            monomial: escaped,
            target: rest,
        });
    }
    Ok(terms)
}

/// Sign of the shuffle that sorts the concatenation of two disjoint index
/// sets: parity of the number of pairs that appear out of order.
fn merge_sign(sigma: TaylorGenerator, tau: TaylorGenerator) -> i64 {
    let mut inversions = 0u32;
    for a in sigma.positions() {
        let below = tau.bits() & ((1u32 << a) - 1);
        inversions += below.count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product of two generators. Zero exactly when the index sets overlap;
/// otherwise a signed monomial (the overlap of the two unions) times the
/// merged generator.
pub fn taylor_product(
    k: &SimplicialComplex,
    sigma: TaylorGenerator,
    tau: TaylorGenerator,
) -> Result<Option<TaylorTerm>> {
    let nonfaces = nonface_list(k)?;
    check_generator(sigma, nonfaces.len())?;
    check_generator(tau, nonfaces.len())?;
    if !sigma.disjoint(tau) {
        return Ok(None);
    }
    let overlap = sigma.union_of(nonfaces).inter(tau.union_of(nonfaces));
    Ok(Some(TaylorTerm {
        sign: merge_sign(sigma, tau),
        monomial: overlap,
        target: sigma.merge(tau),
    }))
}

/// The Taylor resolution is minimal exactly when no non-face is contained
/// in the union of the others, equivalently every non-face has a vertex
/// private to it. This test needs no generator arithmetic, so it works for
/// any number of non-faces.
pub fn taylor_is_minimal(k: &SimplicialComplex) -> Result<bool> {
    let nonfaces = k.minimal_nonfaces()?;
    let mut multiplicity = vec![0u32; 64];
    for nf in nonfaces {
        for v in nf.iter() {
            multiplicity[v] += 1;
        }
    }
    Ok(nonfaces
        .iter()
        .all(|nf| nf.iter().any(|v| multiplicity[v] == 1)))
}

/// Products of positive-degree Tor classes when the Taylor resolution is
/// minimal: the class of a product survives exactly when both the index
/// sets and the unions of the two generators are disjoint. Entries are
/// keyed by the two generator masks with the smaller mask first.
#[derive(Clone, Debug)]
pub struct TorProductTable {
    pub generator_count: usize,
    pub entries: BTreeMap<(u32, u32), TaylorTerm>,
}

impl TorProductTable {
    /// True when every product of positive-degree classes vanishes.
    pub fn is_trivial(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Compute all nonzero products of positive-degree Tor classes. Requires a
/// minimal Taylor resolution, where the generators descend to a basis of Tor
/// and a product survives exactly when its monomial is trivial.
pub fn tor_product_table(k: &SimplicialComplex) -> Result<TorProductTable> {
    let nonfaces = nonface_list(k)?;
    if !taylor_is_minimal(k)? {
        return Err(Error::NotMinimal);
    }
    let t = nonfaces.len();
    let unions: Vec<VertexSet> = (0u32..1 << t)
        .map(|bits| TaylorGenerator::from_bits(bits).union_of(nonfaces))
        .collect();
    let mut entries = BTreeMap::new();
    for sigma in 1u32..1 << t {
        for tau in sigma + 1..1u32 << t {
            if sigma & tau != 0 {
                continue;
            }
            if !unions[sigma as usize]
                .inter(unions[tau as usize])
                .is_empty()
            {
                continue;
            }
            let s = TaylorGenerator::from_bits(sigma);
            let u = TaylorGenerator::from_bits(tau);
            entries.insert(
                (sigma, tau),
                TaylorTerm {
                    sign: merge_sign(s, u),
                    monomial: VertexSet::EMPTY,
                    target: s.merge(u),
                },
            );
        }
    }
    Ok(TorProductTable {
        generator_count: t,
        entries,
    })
}

/// A sum of signed monomial multiples of generators, keyed by the exponent
/// vector of the coefficient monomial and the generator. Used only by the
/// structural checks below, where exponents above one can appear.
type Accumulator = BTreeMap<(Vec<u8>, u32), i64>;

fn add_term(acc: &mut Accumulator, mut exps: Vec<u8>, extra: VertexSet, target: u32, coeff: i64) {
    for v in extra.iter() {
        exps[v] += 1;
    }
    *acc.entry((exps, target)).or_insert(0) += coeff;
}

fn prune(acc: &mut Accumulator) {
    acc.retain(|_, c| *c != 0);
}

fn exps_of(m: usize, s: VertexSet) -> Vec<u8> {
    let mut e = vec![0u8; m];
    for v in s.iter() {
        e[v] = 1;
    }
    e
}

/// Verify that applying the differential twice annihilates every generator.
pub fn check_d_squared(k: &SimplicialComplex) -> Result<bool> {
    let nonfaces = nonface_list(k)?;
    let t = nonfaces.len();
    let m = k.m();
    for bits in 0u32..1 << t {
        let sigma = TaylorGenerator::from_bits(bits);
        let mut acc = Accumulator::new();
        for outer in taylor_differential(k, sigma)? {
            for inner in taylor_differential(k, outer.target)? {
                add_term(
                    &mut acc,
                    exps_of(m, outer.monomial),
                    inner.monomial,
                    inner.target.bits(),
                    outer.sign * inner.sign,
                );
            }
        }
        prune(&mut acc);
        if !acc.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verify the signed product rule d(ab) = d(a) b + (-1)^deg(a) a d(b) for one
/// pair of generators.
pub fn check_leibniz(
    k: &SimplicialComplex,
    sigma: TaylorGenerator,
    tau: TaylorGenerator,
) -> Result<bool> {
    let m = k.m();
    let mut lhs = Accumulator::new();
    if let Some(prod) = taylor_product(k, sigma, tau)? {
        for term in taylor_differential(k, prod.target)? {
            add_term(
                &mut lhs,
                exps_of(m, prod.monomial),
                term.monomial,
                term.target.bits(),
                prod.sign * term.sign,
            );
        }
    }
    let mut rhs = Accumulator::new();
    for left in taylor_differential(k, sigma)? {
        if let Some(prod) = taylor_product(k, left.target, tau)? {
            add_term(
                &mut rhs,
                exps_of(m, left.monomial),
                prod.monomial,
                prod.target.bits(),
                left.sign * prod.sign,
            );
        }
    }
    let front = if sigma.card().is_multiple_of(2) {
        1
    } else {
        -1
    };
    for right in taylor_differential(k, tau)? {
        if let Some(prod) = taylor_product(k, sigma, right.target)? {
            add_term(
                &mut rhs,
                exps_of(m, right.monomial),
                prod.monomial,
                prod.target.bits(),
                front * right.sign * prod.sign,
            );
        }
    }
    prune(&mut lhs);
    prune(&mut rhs);
    Ok(lhs == rhs)
}

/// Verify, over GF(2), that every squarefree strand of the Taylor complex is
/// exact: for each multidegree the strand is spanned by the subsets of the
/// non-faces lying inside it and must resolve the quotient with no homology.
pub fn check_exactness(k: &SimplicialComplex) -> Result<bool> {
    let nonfaces = nonface_list(k)?;
    let m = k.m();
    if m > crate::complex::MAX_ENUM_M {
        return Err(Error::SubsetEnumerationTooLarge {
            m,
            max: crate::complex::MAX_ENUM_M,
        });
    }
    let mut seen = HashSet::new();
    for a_bits in 0u64..1 << m {
        let a = VertexSet::from_bits(a_bits);
        let mut strand = 0u32;
        for (i, nf) in nonfaces.iter().enumerate() {
            if nf.is_subset(a) {
                strand |= 1 << i;
            }
        }
        if strand == 0 || !seen.insert(strand) {
            continue;
        }
        if !strand_is_exact(strand) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank-nullity check that the power set of one strand mask, with the
/// member-removal differential, has no homology in any degree.
fn strand_is_exact(strand: u32) -> bool {
    let ts = strand.count_ones() as usize;
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); ts + 1];
    let mut sub = strand;
    loop {
        levels[sub.count_ones() as usize].push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & strand;
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    let mut ranks = vec![0usize; ts + 2];
    for ell in 1..=ts {
        let rows = &levels[ell - 1];
        let cols = &levels[ell];
        let mut mat = BitMatrix::zero(rows.len(), cols.len());
        for (c, &col) in cols.iter().enumerate() {
            let gen = TaylorGenerator::from_bits(col);
            for p in gen.positions() {
                let r = rows
                    .binary_search(&gen.without(p).bits())
                    .expect("strand closed under subsets");
                mat.flip(r, c);
            }
        }
        ranks[ell] = mat.rank();
    }
    (0..=ts).all(|ell| levels[ell].len() == ranks[ell] + ranks[ell + 1])
}
