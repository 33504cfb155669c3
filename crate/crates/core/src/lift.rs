//! Exhaustive search for an integral characteristic map on the rank-4
//! binary universal complex whose mod-2 reduction is the identity. The
//! normalizations below cut the infinite lattice problem down to a finite
//! enumeration: the four unit vertices and the all-ones vertex are pinned,
//! every on-support entry is +1 or -1 with the first one +1, and every
//! off-support entry is 0 or 2, forced to 0 whenever the on-support
//! entries mix signs ("alternated"). Two independent strategies walk that
//! space; both are expected to come back empty.

use crate::charmap::CharMapInt;
use crate::error::Result;
use crate::linalg::Gf2Basis;
use crate::universal::RUComplex;
use rayon::prelude::*;
use std::time::Instant;

/// Search strategy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LiftMode {
    /// Two-step case split: the weight-2 rows are classified by their
    /// alternated members (none, one, or two with disjoint supports, the
    /// only shapes coordinate permutations leave), evens are filtered
    /// against the bases avoiding the weight-3 vertices, and survivors
    /// are extended over the weight-3 rows.
    Staged,
    /// Plain depth-first assignment of the ten non-pinned vertices from
    /// their five-candidate domains, pruning by determinant checks as
    /// soon as a base is fully assigned. No case split: this validates
    /// the staged mode's symmetry reduction.
    Backtrack,
}

impl std::fmt::Display for LiftMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LiftMode::Staged => write!(f, "staged"),
            LiftMode::Backtrack => write!(f, "backtrack"),
        }
    }
}

/// A full assignment of integer vectors to the fifteen vertices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LiftCandidate {
    pub images: [[i64; 4]; 15],
}

impl LiftCandidate {
    pub fn char_map(&self) -> Result<CharMapInt> {
        CharMapInt::new(4, self.images.iter().map(|row| row.to_vec()).collect())
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub mode: LiftMode,
    pub cases: usize,
    pub nodes: u64,
    pub solutions: Vec<LiftCandidate>,
    pub seconds: f64,
}

/// Run the requested search over all normalized candidates. Any solution
/// is revalidated against the full facet list through exact integer
/// unimodularity before being reported.
pub fn ru4_lift_search(mode: LiftMode) -> Result<SearchReport> {
    let start = Instant::now();
    let ru = RUComplex::new(4)?;
    let vecs = ru.vertex_vectors().to_vec();
    let bases = all_bases(&vecs);
    let (cases, nodes, solutions) = match mode {
        LiftMode::Staged => staged(&vecs, &bases),
        LiftMode::Backtrack => backtrack(&vecs, &bases),
    };
    let full = ru.complex()?;
    for sol in &solutions {
        let ok = sol.char_map()?.verify_star(&full)?;
        assert!(ok, "search produced a candidate the exact oracle rejects");
    }
    Ok(SearchReport {
        mode,
        cases,
        nodes,
        solutions,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// All quadruples of vertices independent over GF(2), in index order.
fn all_bases(vecs: &[u64]) -> Vec<[usize; 4]> {
    let n = vecs.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let mut basis = Gf2Basis::default();
                    if basis.insert(vecs[a])
                        && basis.insert(vecs[b])
                        && basis.insert(vecs[c])
                        && basis.insert(vecs[d])
                    {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(r0: &[i64; 4], r1: &[i64; 4], r2: &[i64; 4], r3: &[i64; 4]) -> i64 {
    let minor = |col: usize| {
        let pick = |r: &[i64; 4]| {
            let mut row = [0i64; 3];
            let mut j = 0;
            for (c, &x) in r.iter().enumerate() {
                if c != col {
                    row[j] = x;
                    j += 1;
                }
            }
            row
        };
        det3([pick(r1), pick(r2), pick(r3)])
    };
    r0[0] * minor(0) - r0[1] * minor(1) + r0[2] * minor(2) - r0[3] * minor(3)
}

fn passes(imgs: &[[i64; 4]; 15], bases: &[[usize; 4]]) -> bool {
    bases
        .iter()
        .all(|b| det4(&imgs[b[0]], &imgs[b[1]], &imgs[b[2]], &imgs[b[3]]).abs() == 1)
}

fn positions(vec: u64) -> Vec<usize> {
    (0..4).filter(|p| vec >> p & 1 == 1).collect()
}

/// Unit rows for the four weight-1 vertices and the all-ones row for the
/// last one; everything else zeroed until a search fills it.
fn fixed_template() -> [[i64; 4]; 15] {
    let mut imgs = [[0i64; 4]; 15];
    for (i, row) in imgs.iter_mut().enumerate().take(4) {
        row[i] = 1;
    }
    imgs[14] = [1, 1, 1, 1];
    imgs
}

/// Every normalized image of one vertex: sign patterns on the support with
/// the first entry +1 (mixed signs force zero evens), or the all-plus
/// pattern with evens free over {0,2}.
fn vertex_domain(vec: u64) -> Vec<[i64; 4]> {
    let supp = positions(vec);
    let off: Vec<usize> = (0..4).filter(|p| vec >> p & 1 == 0).collect();
    let mut out = Vec::new();
    for signs in 1u32..1 << (supp.len() - 1) {
        let mut row = [0i64; 4];
        row[supp[0]] = 1;
        for (i, &p) in supp[1..].iter().enumerate() {
            row[p] = 1 - 2 * (signs >> i & 1) as i64;
        }
        out.push(row);
    }
    for evens in 0u32..1 << off.len() {
        let mut row = [0i64; 4];
        for &p in &supp {
            row[p] = 1;
        }
        for (i, &p) in off.iter().enumerate() {
            row[p] = 2 * (evens >> i & 1) as i64;
        }
        out.push(row);
    }
    out
}

struct StagedCase {
    alternated: &'static [usize],
}

/// The three shapes of the weight-2 block up to coordinate permutations:
/// no alternated vertex, one (representative: support {1,2}), or two with
/// disjoint supports (representatives: supports {1,2} and {3,4}).
const STAGED_CASES: [StagedCase; 3] = [
    StagedCase { alternated: &[] },
    StagedCase { alternated: &[4] },
    StagedCase {
        alternated: &[4, 9],
    },
];

fn staged(vecs: &[u64], bases: &[[usize; 4]]) -> (usize, u64, Vec<LiftCandidate>) {
    let step1_bases: Vec<[usize; 4]> = bases
        .iter()
        .copied()
        .filter(|b| b.iter().all(|&v| v < 10 || v == 14))
        .collect();
    let step2_bases: Vec<[usize; 4]> = bases
        .iter()
        .copied()
        .filter(|b| b.iter().any(|&v| (10..14).contains(&v)))
        .collect();
    let w3 = weight3_slots(vecs);
    let mut nodes = 0u64;
    let mut solutions = Vec::new();
    for case in &STAGED_CASES {
        let template = case_template(vecs, case.alternated);
        let slots = even_slots(vecs, case.alternated);
        nodes += 1u64 << slots.len();
        let survivors: Vec<[[i64; 4]; 15]> = (0u32..1 << slots.len())
            .into_par_iter()
            .filter_map(|bits| {
                let mut imgs = template;
                for (si, &(v, p)) in slots.iter().enumerate() {
                    imgs[v][p] = 2 * (bits >> si & 1) as i64;
                }
                passes(&imgs, &step1_bases).then_some(imgs)
            })
            .collect();
        nodes += (survivors.len() as u64) << 12;
        let step2 = &step2_bases;
        solutions.par_extend(survivors.par_iter().flat_map_iter(|sv| {
            let w3 = &w3;
            (0u32..1 << 12).filter_map(move |bits| {
                let mut imgs = *sv;
                fill_weight3(&mut imgs, w3, bits);
                passes(&imgs, step2).then_some(LiftCandidate { images: imgs })
            })
        }));
    }
    (STAGED_CASES.len(), nodes, solutions)
}

/// Weight-2 rows under a case: alternated representatives get (+1,-1) on
/// the support and zero evens; the rest start all-plus with evens to be
/// filled from the enumeration bits.
fn case_template(vecs: &[u64], alternated: &[usize]) -> [[i64; 4]; 15] {
    let mut imgs = fixed_template();
    for v in 4..10 {
        let supp = positions(vecs[v]);
        imgs[v][supp[0]] = 1;
        imgs[v][supp[1]] = if alternated.contains(&v) { -1 } else { 1 };
    }
    imgs
}

/// Free even coordinates of the non-alternated weight-2 vertices, vertex
/// by vertex, positions ascending.
#[allow(clippy::needless_range_loop)] // v is a slot in the fixed vertex layout
fn even_slots(vecs: &[u64], alternated: &[usize]) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for v in 4..10 {
        if alternated.contains(&v) {
            continue;
        }
        for p in 0..4 {
            if vecs[v] >> p & 1 == 0 {
                slots.push((v, p));
            }
        }
    }
    slots
}

/// Per weight-3 vertex: its support (ascending) and its single off-support
/// position.
fn weight3_slots(vecs: &[u64]) -> Vec<(usize, [usize; 3], usize)> {
    (10..14)
        .map(|v| {
            let supp = positions(vecs[v]);
            let off = (0..4).find(|p| vecs[v] >> p & 1 == 0).unwrap();
            (v, [supp[0], supp[1], supp[2]], off)
        })
        .collect()
}

/// Low four bits drive the evens, the next eight drive the two free odd
/// signs of each weight-3 row; the first odd stays +1.
fn fill_weight3(imgs: &mut [[i64; 4]; 15], w3: &[(usize, [usize; 3], usize)], bits: u32) {
    let evens = bits & 0xf;
    let odds = bits >> 4;
    for (i, &(v, supp, off)) in w3.iter().enumerate() {
        imgs[v][supp[0]] = 1;
        imgs[v][supp[1]] = 1 - 2 * (odds >> (2 * i) & 1) as i64;
        imgs[v][supp[2]] = 1 - 2 * (odds >> (2 * i + 1) & 1) as i64;
        imgs[v][off] = 2 * (evens >> i & 1) as i64;
    }
}

fn backtrack(vecs: &[u64], bases: &[[usize; 4]]) -> (usize, u64, Vec<LiftCandidate>) {
    let domains: Vec<Vec<[i64; 4]>> = (4..14).map(|v| vertex_domain(vecs[v])).collect();
    // schedule[i] holds the bases whose last free vertex is 4+i, so each
    // base is checked exactly once, as early as possible. Mixed-sign
    // incompatibilities between overlapping weight-2 supports are caught
    // here automatically by the bases through the all-ones vertex.
    let mut schedule: Vec<Vec<[usize; 4]>> = vec![Vec::new(); 10];
    let mut fixed_only: Vec<[usize; 4]> = Vec::new();
    for b in bases {
        match b.iter().filter(|&&v| (4..14).contains(&v)).max() {
            Some(&latest) => schedule[latest - 4].push(*b),
            None => fixed_only.push(*b),
        }
    }
    let template = fixed_template();
    assert!(passes(&template, &fixed_only));
    let mut nodes = 0u64;
    let mut prefixes = Vec::new();
    for c0 in &domains[0] {
        nodes += 1;
        let mut imgs = template;
        imgs[4] = *c0;
        if !passes(&imgs, &schedule[0]) {
            continue;
        }
        for c1 in &domains[1] {
            nodes += 1;
            let mut deeper = imgs;
            deeper[5] = *c1;
            if passes(&deeper, &schedule[1]) {
                prefixes.push(deeper);
            }
        }
    }
    let branches: Vec<(u64, Vec<LiftCandidate>)> = prefixes
        .par_iter()
        .map(|imgs| {
            let mut n = 0u64;
            let mut found = Vec::new();
            bt_dfs(*imgs, 2, &domains, &schedule, &mut n, &mut found);
            (n, found)
        })
        .collect();
    let mut solutions = Vec::new();
    for (n, found) in branches {
        nodes += n;
        solutions.extend(found);
    }
    (1, nodes, solutions)
}

fn bt_dfs(
    mut imgs: [[i64; 4]; 15],
    depth: usize,
    domains: &[Vec<[i64; 4]>],
    schedule: &[Vec<[usize; 4]>],
    nodes: &mut u64,
    found: &mut Vec<LiftCandidate>,
) {
    if depth == domains.len() {
        found.push(LiftCandidate { images: imgs });
        return;
    }
    for cand in &domains[depth] {
        *nodes += 1;
        imgs[4 + depth] = *cand;
        if passes(&imgs, &schedule[depth]) {
            bt_dfs(imgs, depth + 1, domains, schedule, nodes, found);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertexset::VertexSet;

    fn ru4_vectors() -> Vec<u64> {
        RUComplex::new(4).unwrap().vertex_vectors().to_vec()
    }

    #[test]
    fn base_enumeration_matches_the_facet_list() {
        let ru = RUComplex::new(4).unwrap();
        let bases = all_bases(ru.vertex_vectors());
        assert_eq!(bases.len(), 840);
        let as_sets: std::collections::BTreeSet<VertexSet> = bases
            .iter()
            .map(|b| VertexSet::from_labels(&b.map(|v| v + 1), 15).unwrap())
            .collect();
        let facet_sets: std::collections::BTreeSet<VertexSet> = ru
            .complex()
            .unwrap()
            .facets()
            .unwrap()
            .iter()
            .copied()
            .collect();
        assert_eq!(as_sets, facet_sets);
    }

    #[test]
    fn determinant_flags_the_mixed_sign_overlap() {
        assert_eq!(
            det4(&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]),
            1
        );
        // Two alternated rows with overlapping supports against the
        // all-ones row: the determinant jumps to 3.
        assert_eq!(
            det4(&[1, -1, 0, 0], &[0, 1, -1, 0], &[1, 1, 1, 1], &[0, 0, 0, 1]),
            3
        );
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // v and p are layout positions
    fn domains_offer_five_candidates_per_free_vertex() {
        let vecs = ru4_vectors();
        for v in 4..14 {
            let dom = vertex_domain(vecs[v]);
            assert_eq!(dom.len(), 5);
            for row in &dom {
                let on: Vec<i64> = positions(vecs[v]).iter().map(|&p| row[p]).collect();
                assert_eq!(on[0], 1);
                let mixed = on.contains(&-1);
                for p in 0..4 {
                    if vecs[v] >> p & 1 == 0 {
                        assert!(row[p] == 0 || (!mixed && row[p] == 2));
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_rows_are_unimodular_on_their_own_bases() {
        let vecs = ru4_vectors();
        let fixed: Vec<[usize; 4]> = all_bases(&vecs)
            .into_iter()
            .filter(|b| b.iter().all(|&v| v < 4 || v == 14))
            .collect();
        assert_eq!(fixed.len(), 5);
        assert!(passes(&fixed_template(), &fixed));
    }

    #[test]
    fn staged_search_finds_no_lift() {
        let report = ru4_lift_search(LiftMode::Staged).unwrap();
        assert_eq!(report.cases, 3);
        assert!(report.solutions.is_empty());
        assert!(report.nodes >= (1 << 12) + (1 << 10) + (1 << 8));
    }

    #[test]
    fn backtrack_search_finds_no_lift() {
        let report = ru4_lift_search(LiftMode::Backtrack).unwrap();
        assert_eq!(report.cases, 1);
        assert!(report.solutions.is_empty());
        assert!(report.nodes > 0);
    }
}
