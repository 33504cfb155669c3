//! Buchstaber invariants: the largest rank of a torus acting freely on the
//! moment-angle complex, here computed through the complementary rank of a
//! characteristic-like map. The real flavor works over GF(2) and is found
//! by exhaustive search; the integral flavor is pinned down by bounds and
//! theorems wherever they apply.

use crate::charmap::CharMapGF2;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::Gf2Basis;
use crate::vertexset::VertexSet;

/// Default cap on search nodes before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// A triple of minimal non-faces with empty common intersection, repetition
/// allowed. Its existence is equivalent to a free torus of rank two acting
/// on the moment-angle complex, in both the real and the integral sense.
pub fn erokhovets_witness(k: &SimplicialComplex) -> Result<Option<[VertexSet; 3]>> {
    let nonfaces = k.minimal_nonfaces()?;
    let t = nonfaces.len();
    for i in 0..t {
        for j in i..t {
            let ij = nonfaces[i].inter(nonfaces[j]);
            if ij.is_empty() {
                return Ok(Some([nonfaces[i], nonfaces[j], nonfaces[j]]));
            }
            for l in j..t {
                if ij.inter(nonfaces[l]).is_empty() {
                    return Ok(Some([nonfaces[i], nonfaces[j], nonfaces[l]]));
                }
            }
        }
    }
    Ok(None)
}

/// How the minimal rank over GF(2) was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealRShortcut {
    /// The full simplex needs the identity assignment and nothing smaller.
    Simplex,
    /// No covering triple of non-faces: rank m-1 is forced, with an
    /// explicit unit-basis-plus-diagonal witness.
    NoCoveringTriple,
    /// Exhaustive search over normalized assignments.
    Search,
}

impl std::fmt::Display for RealRShortcut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RealRShortcut::Simplex => write!(f, "simplex"),
            RealRShortcut::NoCoveringTriple => write!(f, "no-covering-triple"),
            RealRShortcut::Search => write!(f, "search"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RealRResult {
    pub r: usize,
    pub witness: CharMapGF2,
    pub nodes: u64,
    pub shortcut: RealRShortcut,
}

/// A priori interval for the minimal GF(2) width, from theorems alone.
/// Lower: facet size, and the number of bits needed to color the
/// 1-skeleton with nonzero vectors. Upper: a proper coloring yields an
/// assignment by unit vectors, the unit-plus-diagonal witness caps a
/// proper complex at m-1, and a covering triple of non-faces caps it
/// at m-2.
pub fn real_r_bounds(k: &SimplicialComplex) -> Result<(usize, usize)> {
    k.require_no_ghosts()?;
    let m = k.m();
    let gamma = k.chromatic_number()?;
    if k.minimal_nonfaces()?.is_empty() {
        return Ok((m, m));
    }
    let max_facet = k.facets()?.iter().map(|f| f.card()).max().unwrap_or(0);
    let color_bits = usize::BITS as usize - gamma.leading_zeros() as usize;
    let lo = max_facet.max(color_bits).max(1);
    let mut hi = gamma.min(m - 1);
    if erokhovets_witness(k)?.is_some() {
        hi = hi.min(m - 2);
    }
    Ok((lo, hi))
}

/// Minimal width r admitting a GF(2) assignment with independent columns on
/// every facet. Ghost vertices are rejected: they would make the width
/// meaningless. Exceeding the node budget returns an error; callers that
/// prefer an interval can fall back to [`real_r_bounds`].
pub fn real_r(k: &SimplicialComplex, budget: u64) -> Result<RealRResult> {
    k.require_no_ghosts()?;
    let m = k.m();
    let facets = k.facets()?.to_vec();
    if k.minimal_nonfaces()?.is_empty() {
        // Full simplex: the single facet needs m independent columns.
        let witness = CharMapGF2::new(m, (0..m).map(|i| 1u64 << i).collect())?;
        return Ok(RealRResult {
            r: m,
            witness,
            nodes: 0,
            shortcut: RealRShortcut::Simplex,
        });
    }
    if erokhovets_witness(k)?.is_none() {
        // Without a covering triple the rank cannot drop below m-1, and
        // units plus the all-ones column always work on a proper complex.
        let mut columns: Vec<u64> = (0..m - 1).map(|i| 1u64 << i).collect();
        columns.push((1u64 << (m - 1)) - 1);
        let witness = CharMapGF2::new(m - 1, columns)?;
        debug_assert!(witness.verify_star(k)?);
        return Ok(RealRResult {
            r: m - 1,
            witness,
            nodes: 0,
            shortcut: RealRShortcut::NoCoveringTriple,
        });
    }
    let (lo, hi) = real_r_bounds(k)?;
    let mut nodes = 0u64;
    for r in lo..=hi {
        if let Some(columns) = search_width(k, &facets, r, budget, &mut nodes)? {
            let witness = CharMapGF2::new(r, columns)?;
            return Ok(RealRResult {
                r,
                witness,
                nodes,
                shortcut: RealRShortcut::Search,
            });
        }
    }
    unreachable!("unit vectors on color classes succeed at the upper bound")
}

/// Exhaustive search for a valid assignment of the given width, complete up
/// to the base-change symmetry: a facet of maximal size is pinned to the
/// first unit vectors, and each later vertex either reuses the span of the
/// columns assigned so far or opens the next fresh coordinate.
fn search_width(
    k: &SimplicialComplex,
    facets: &[VertexSet],
    r: usize,
    budget: u64,
    nodes: &mut u64,
) -> Result<Option<Vec<u64>>> {
    let m = k.m();
    let max_card = facets.iter().map(|f| f.card()).max().unwrap_or(0);
    let pinned = facets
        .iter()
        .copied()
        .find(|f| f.card() == max_card)
        .expect("a nonempty complex has facets");
    let mut order: Vec<usize> = pinned.iter().collect();
    for v in 0..m {
        if !pinned.contains(v) {
            order.push(v);
        }
    }
    let mut facets_of: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, f) in facets.iter().enumerate() {
        for v in f.iter() {
            facets_of[v].push(i);
        }
    }
    let mut state = SearchState {
        facets,
        facets_of: &facets_of,
        order: &order,
        columns: vec![0u64; m],
        assigned: VertexSet::EMPTY,
        r,
        budget,
        nodes,
    };
    for (i, v) in pinned.iter().enumerate() {
        state.columns[v] = 1 << i;
        state.assigned = state.assigned.with(v);
    }
    state.dfs(pinned.card(), pinned.card())
}

struct SearchState<'a> {
    facets: &'a [VertexSet],
    facets_of: &'a [Vec<usize>],
    order: &'a [usize],
    columns: Vec<u64>,
    assigned: VertexSet,
    r: usize,
    budget: u64,
    nodes: &'a mut u64,
}

impl SearchState<'_> {
    fn dfs(&mut self, idx: usize, used: usize) -> Result<Option<Vec<u64>>> {
        if idx == self.order.len() {
            return Ok(Some(self.columns.clone()));
        }
        let v = self.order[idx];
        let top = if used < self.r {
            (1u64 << used) + 1
        } else {
            1u64 << used
        };
        for c in 1..top {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(Error::BudgetExhausted {
                    budget: self.budget,
                });
            }
            if !self.candidate_fits(v, c) {
                continue;
            }
            self.columns[v] = c;
            self.assigned = self.assigned.with(v);
            let grown = if c >> used != 0 { used + 1 } else { used };
            let found = self.dfs(idx + 1, grown)?;
            self.assigned = self.assigned.without(v);
            self.columns[v] = 0;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// The columns already assigned inside any facet through v must stay
    /// independent once c joins them.
    fn candidate_fits(&self, v: usize, c: u64) -> bool {
        for &fi in &self.facets_of[v] {
            let mut basis = Gf2Basis::default();
            basis.insert(c);
            let present = self.facets[fi].inter(self.assigned);
            if !present.iter().all(|w| basis.insert(self.columns[w])) {
                return false;
            }
        }
        true
    }
}

/// Why the integral invariant is known exactly, when it is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SExactReason {
    /// The simplex admits no free circle at all.
    Simplex,
    /// No covering triple: exactly the diagonal circle acts freely.
    NoCoveringTriple,
    /// In dimension at most two the integral and real invariants agree.
    LowDimension,
    /// The general bounds happen to meet.
    IntervalCollapse,
    /// Only the bounds are known.
    Bounds,
}

impl std::fmt::Display for SExactReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SExactReason::Simplex => write!(f, "simplex"),
            SExactReason::NoCoveringTriple => write!(f, "no-covering-triple"),
            SExactReason::LowDimension => write!(f, "dimension-at-most-two"),
            SExactReason::IntervalCollapse => write!(f, "interval-collapse"),
            SExactReason::Bounds => write!(f, "bounds-only"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BuchstaberReport {
    pub m: usize,
    pub dim: i64,
    pub gamma: usize,
    pub erokhovets_witness: Option<[VertexSet; 3]>,
    /// Interval for the minimal GF(2) width; equal endpoints when exact.
    pub r_real_lower: usize,
    pub r_real_upper: usize,
    pub r_real: Option<usize>,
    pub s_real: Option<usize>,
    pub real_witness: Option<CharMapGF2>,
    pub real_shortcut: Option<RealRShortcut>,
    pub search_nodes: u64,
    pub budget_exhausted: bool,
    pub s_lower: usize,
    pub s_upper: usize,
    pub s_exact: Option<usize>,
    pub s_reason: SExactReason,
}

/// Compute the real invariant exactly when the budget allows, otherwise
/// keep the theorem interval, and bracket the integral one, closing the
/// bracket whenever a theorem applies.
pub fn buchstaber_report(k: &SimplicialComplex, budget: u64) -> Result<BuchstaberReport> {
    k.require_no_ghosts()?;
    let m = k.m();
    let dim = k.dimension()?;
    let gamma = k.chromatic_number()?;
    let erokhovets = erokhovets_witness(k)?;
    let simplex = k.minimal_nonfaces()?.is_empty();
    let (mut r_lower, mut r_upper) = real_r_bounds(k)?;
    let (r_real, real_witness, real_shortcut, search_nodes, budget_exhausted) =
        match real_r(k, budget) {
            Ok(rr) => {
                r_lower = rr.r;
                r_upper = rr.r;
                (
                    Some(rr.r),
                    Some(rr.witness),
                    Some(rr.shortcut),
                    rr.nodes,
                    false,
                )
            }
            Err(Error::BudgetExhausted { .. }) => (None, None, None, budget, true),
            Err(e) => return Err(e),
        };
    let s_real = r_real.map(|r| m - r);
    let mut s_lower = m.saturating_sub(gamma);
    if !simplex {
        s_lower = s_lower.max(1);
    }
    if erokhovets.is_some() {
        s_lower = s_lower.max(2);
    }
    let s_upper = m - r_lower;
    let (s_exact, s_reason) = if simplex {
        (Some(0), SExactReason::Simplex)
    } else if erokhovets.is_none() {
        (Some(1), SExactReason::NoCoveringTriple)
    } else if dim <= 2 && s_real.is_some() {
        (s_real, SExactReason::LowDimension)
    } else if s_lower == s_upper {
        (Some(s_lower), SExactReason::IntervalCollapse)
    } else {
        (None, SExactReason::Bounds)
    };
    Ok(BuchstaberReport {
        m,
        dim,
        gamma,
        erokhovets_witness: erokhovets,
        r_real_lower: r_lower,
        r_real_upper: r_upper,
        r_real,
        s_real,
        real_witness,
        real_shortcut,
        search_nodes,
        budget_exhausted,
        s_lower,
        s_upper,
        s_exact,
        s_reason,
    })
}
