//! The named complexes the tool can build without an input file. The
//! centerpiece is a pair of resolved complexes on fifteen vertices with
//! identical Betti tables whose torus invariants nevertheless differ; they
//! arise from two six-member systems of subsets of {1..9} sharing every
//! counting statistic the table computation can see, but differing in
//! whether three members can cover the ground set.

use topo_core::{Result, SetSystem, SimplicialComplex, VertexSet};

const GROUND: usize = 9;

const SYSTEM_ONE: [&[usize]; 6] = [
    &[1, 2, 3],
    &[3, 4, 5],
    &[5, 6, 7],
    &[7, 8],
    &[8, 9],
    &[2, 9],
];

const SYSTEM_TWO: [&[usize]; 6] = [
    &[1, 2, 3],
    &[4, 5, 6],
    &[7, 8, 9],
    &[3, 4],
    &[6, 7],
    &[1, 9],
];

/// The two set systems and the four complexes built from them: the base
/// complexes whose minimal non-faces are the member complements, and their
/// resolutions on 9 + 6 = 15 vertices.
pub struct TwinComplexes {
    pub c1: SetSystem,
    pub c2: SetSystem,
    pub l1: SimplicialComplex,
    pub l2: SimplicialComplex,
    pub k1: SimplicialComplex,
    pub k2: SimplicialComplex,
}

/// Build and exhaustively re-verify the whole family. Every structural
/// property the equal-tables argument rests on is asserted here, so a bad
/// edit to the member lists aborts immediately.
pub fn build_twin_complexes() -> Result<TwinComplexes> {
    let c1 = SetSystem::new(GROUND, &SYSTEM_ONE.map(|s| s.to_vec()))?;
    let c2 = SetSystem::new(GROUND, &SYSTEM_TWO.map(|s| s.to_vec()))?;
    verify_profile(&c1);
    verify_profile(&c2);
    assert!(
        cover_triple(&c1).is_none(),
        "system one must not admit a covering triple"
    );
    assert!(
        cover_triple(&c2).is_some(),
        "system two must admit a covering triple"
    );
    let l1 = SimplicialComplex::from_nonface_sets(GROUND, c1.complement_system()?.members)?;
    let l2 = SimplicialComplex::from_nonface_sets(GROUND, c2.complement_system()?.members)?;
    let k1 = l1.resolve()?;
    let k2 = l2.resolve()?;
    assert_eq!(k1.m(), 15);
    assert_eq!(k2.m(), 15);
    Ok(TwinComplexes {
        c1,
        c2,
        l1,
        l2,
        k1,
        k2,
    })
}

/// The counting statistics both systems share: three members of size two
/// and three of size three; exactly six unordered pairs meeting in exactly
/// one element and all other pairs disjoint; every triple intersection
/// empty; union the whole ground set.
fn verify_profile(c: &SetSystem) {
    let n = c.members.len();
    assert_eq!(n, 6);
    let mut sizes: Vec<usize> = c.members.iter().map(|s| s.card()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [2, 2, 2, 3, 3, 3]);
    let mut singleton_meets = 0;
    for i in 0..n {
        for j in i + 1..n {
            match c.members[i].inter(c.members[j]).card() {
                0 => {}
                1 => singleton_meets += 1,
                _ => panic!("two members share more than one element"),
            }
            for k in j + 1..n {
                assert!(c.members[i]
                    .inter(c.members[j])
                    .inter(c.members[k])
                    .is_empty());
            }
        }
    }
    assert_eq!(singleton_meets, 6);
    assert_eq!(c.union_of_members(), VertexSet::full(GROUND));
}

/// Three members (repetition allowed) whose union is the ground set, if
/// any exist.
pub fn cover_triple(c: &SetSystem) -> Option<[VertexSet; 3]> {
    let full = VertexSet::full(c.ground);
    let n = c.members.len();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let union = VertexSet::from_bits(
                    c.members[i].bits() | c.members[j].bits() | c.members[k].bits(),
                );
                if union == full {
                    return Some([c.members[i], c.members[j], c.members[k]]);
                }
            }
        }
    }
    None
}

/// Boundary of the square: four vertices, four edges.
pub fn square() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
        .expect("the square is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use topo_core::{
        betti_hochster, betti_minimal_taylor, buchstaber_report, erokhovets_witness,
        taylor_is_minimal, tor_product_table, FieldSpec, DEFAULT_BUDGET,
    };

    #[test]
    fn profiles_verify_and_resolutions_have_fifteen_vertices() {
        let twins = build_twin_complexes().unwrap();
        assert_eq!(twins.l1.m(), 9);
        assert_eq!(twins.l2.m(), 9);
        assert_eq!(twins.k1.dimension().unwrap(), 12);
        assert_eq!(twins.k2.dimension().unwrap(), 12);
        assert_eq!(twins.k1.chromatic_number().unwrap(), 15);
        assert_eq!(twins.k2.chromatic_number().unwrap(), 15);
    }

    #[test]
    fn covering_triples_separate_the_systems_and_their_complexes() {
        let twins = build_twin_complexes().unwrap();
        assert!(erokhovets_witness(&twins.l1).unwrap().is_none());
        assert!(erokhovets_witness(&twins.l2).unwrap().is_some());
        assert!(erokhovets_witness(&twins.k1).unwrap().is_none());
        assert!(erokhovets_witness(&twins.k2).unwrap().is_some());
    }

    #[test]
    fn resolutions_are_minimal_but_the_bases_are_not() {
        let twins = build_twin_complexes().unwrap();
        assert!(taylor_is_minimal(&twins.k1).unwrap());
        assert!(taylor_is_minimal(&twins.k2).unwrap());
        assert!(!taylor_is_minimal(&twins.l1).unwrap());
        assert!(!taylor_is_minimal(&twins.l2).unwrap());
        assert!(tor_product_table(&twins.k1).unwrap().is_trivial());
        assert!(tor_product_table(&twins.k2).unwrap().is_trivial());
    }

    #[test]
    fn torus_invariants_separate_the_twins() {
        let twins = build_twin_complexes().unwrap();
        let r1 = buchstaber_report(&twins.k1, DEFAULT_BUDGET).unwrap();
        let r2 = buchstaber_report(&twins.k2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r1.r_real, Some(14));
        assert_eq!((r1.s_real, r1.s_exact), (Some(1), Some(1)));
        assert_eq!(r2.r_real, Some(13));
        assert_eq!((r2.s_real, r2.s_exact), (Some(2), Some(2)));
    }

    #[test]
    fn twin_betti_tables_agree_by_two_engines() {
        let twins = build_twin_complexes().unwrap();
        let t1 = betti_minimal_taylor(&twins.k1).unwrap();
        let t2 = betti_minimal_taylor(&twins.k2).unwrap();
        assert_eq!(t1, t2);
        let expected: Vec<((usize, usize), u64)> = vec![
            ((0, 0), 1),
            ((1, 7), 3),
            ((1, 8), 3),
            ((2, 10), 6),
            ((2, 11), 9),
            ((3, 12), 20),
            ((4, 13), 15),
            ((5, 14), 6),
            ((6, 15), 1),
        ];
        let entries: Vec<((usize, usize), u64)> = t1
            .entries()
            .iter()
            .map(|(&key, &count)| (key, count))
            .collect();
        assert_eq!(entries, expected);
        let h1 = betti_hochster(&twins.k1, FieldSpec::GF2).unwrap();
        let h2 = betti_hochster(&twins.k2, FieldSpec::GF2).unwrap();
        assert_eq!(h1, t1);
        assert_eq!(h2, t2);
        let q1 = betti_hochster(&twins.k1, FieldSpec::Rationals).unwrap();
        let q2 = betti_hochster(&twins.k2, FieldSpec::Rationals).unwrap();
        assert_eq!(q1, t1);
        assert_eq!(q2, t2);
        assert_eq!(t1.total(), 64);
    }
}
