//! Acceptance gate, one test per criterion. The first two rerun the
//! flagship computations end to end, the next two pin fixed regressions,
//! the fifth cross-validates independent engines on randomized instances,
//! and the last recounts the rank-four universal complex. Each test prints
//! a one-line verdict; a failure panics with the offending instance.

use std::collections::BTreeMap;

use rand::Rng;

use topo_cli::catalog::{build_twin_complexes, square};
use topo_cli::theorems::{lift_obstruction_report, twin_separation_report, TheoremReport};
use topo_core::random::{
    random_complex, random_graph, random_no_ghost_complex, random_proper_complex, rng,
};
use topo_core::{
    betti_hochster, betti_hochster_multigraded, betti_koszul, betti_minimal_taylor,
    boundary_simplex, buchstaber_report, check_d_squared, check_leibniz, empty_complex,
    erokhovets_witness, h_vector_identity_holds, real_r, taylor_is_minimal, tor_product_table,
    zk_cohomology_dims, BettiTable, CharMapGF2, CharMapInt, FieldSpec, LiftMode, RUComplex,
    SimplicialComplex, TaylorGenerator, VertexSet, DEFAULT_BUDGET,
};

fn failed(report: &TheoremReport) -> Vec<&'static str> {
    report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name)
        .collect()
}

#[test]
fn criterion_1_no_integral_lift_exists() {
    let staged = lift_obstruction_report(LiftMode::Staged, DEFAULT_BUDGET).unwrap();
    assert!(staged.pass(), "staged checks failed: {:?}", failed(&staged));
    let s = staged.search.as_ref().unwrap();
    assert_eq!(s.cases, 3);
    assert!(s.solutions.is_empty());
    assert!(s.seconds < 600.0, "staged search took {:.1}s", s.seconds);

    let backtrack = lift_obstruction_report(LiftMode::Backtrack, DEFAULT_BUDGET).unwrap();
    assert!(
        backtrack.pass(),
        "backtrack checks failed: {:?}",
        failed(&backtrack)
    );
    let b = backtrack.search.as_ref().unwrap();
    assert!(b.solutions.is_empty());
    assert!(
        b.seconds < 1800.0,
        "backtrack search took {:.1}s",
        b.seconds
    );
    println!(
        "criterion 1 (lift obstruction): pass, no solutions in {} staged and {} backtrack nodes",
        s.nodes, b.nodes
    );
}

/// Entries keyed by (homological degree, internal degree), the form the
/// tables are displayed in.
fn display_entries(table: &BettiTable) -> BTreeMap<(usize, usize), u64> {
    table
        .entries()
        .iter()
        .map(|(&(l, j), &n)| ((l, 2 * j), n))
        .collect()
}

#[test]
fn criterion_2_twin_tables_agree_and_invariants_differ() {
    let twins = build_twin_complexes().unwrap();
    let expected: BTreeMap<(usize, usize), u64> = [
        ((0, 0), 1),
        ((1, 14), 3),
        ((1, 16), 3),
        ((2, 20), 6),
        ((2, 22), 9),
        ((3, 24), 20),
        ((4, 26), 15),
        ((5, 28), 6),
        ((6, 30), 1),
    ]
    .into_iter()
    .collect();
    for k in [&twins.k1, &twins.k2] {
        assert!(taylor_is_minimal(k).unwrap());
        let t = betti_minimal_taylor(k).unwrap();
        assert_eq!(display_entries(&t), expected);
        assert_eq!(betti_hochster(k, FieldSpec::GF2).unwrap(), t);
        assert_eq!(betti_hochster(k, FieldSpec::Rationals).unwrap(), t);
        assert_eq!(k.dimension().unwrap(), 12);
        assert_eq!(k.chromatic_number().unwrap(), 15);
        assert!(tor_product_table(k).unwrap().is_trivial());
    }
    assert!(erokhovets_witness(&twins.k1).unwrap().is_none());
    assert!(erokhovets_witness(&twins.k2).unwrap().is_some());
    let r1 = buchstaber_report(&twins.k1, DEFAULT_BUDGET).unwrap();
    let r2 = buchstaber_report(&twins.k2, DEFAULT_BUDGET).unwrap();
    assert_eq!((r1.s_exact, r1.s_real), (Some(1), Some(1)));
    assert_eq!((r2.s_exact, r2.s_real), (Some(2), Some(2)));

    let report = twin_separation_report(DEFAULT_BUDGET).unwrap();
    assert!(report.pass(), "report checks failed: {:?}", failed(&report));
    println!("criterion 2 (twin separation): pass, equal tables of 64 generators, s = 1 vs 2");
}

#[test]
fn criterion_3_square_boundary_regression() {
    let k = square();
    let expected: BTreeMap<(usize, usize), u64> = [((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]
        .into_iter()
        .collect();
    let tables = [
        betti_minimal_taylor(&k).unwrap(),
        betti_hochster(&k, FieldSpec::GF2).unwrap(),
        betti_koszul(&k, FieldSpec::GF2).unwrap(),
    ];
    for t in &tables {
        assert_eq!(t.entries(), &expected, "method {}", t.method);
    }
    assert_eq!(zk_cohomology_dims(&tables[0]), vec![1, 0, 0, 2, 0, 0, 1]);
    assert!(h_vector_identity_holds(&k, &tables[0]).unwrap());
    println!("criterion 3 (square boundary regression): pass");
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64];
        next.extend(row.windows(2).map(|w| w[0] + w[1]));
        next.push(1);
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

#[test]
fn criterion_4_ghost_complexes_follow_the_binomial_pattern() {
    for m in 1..=8 {
        let o = empty_complex(m).unwrap();
        let expected: BTreeMap<(usize, usize), u64> =
            (0..=m).map(|l| ((l, l), binomial(m, l))).collect();
        assert!(taylor_is_minimal(&o).unwrap());
        let tables = [
            betti_minimal_taylor(&o).unwrap(),
            betti_hochster(&o, FieldSpec::GF2).unwrap(),
            betti_koszul(&o, FieldSpec::GF2).unwrap(),
        ];
        for t in &tables {
            assert_eq!(t.entries(), &expected, "m={m} method {}", t.method);
        }
    }
    println!("criterion 4 (binomial pattern on ghost complexes): pass for m <= 8");
}

/// Unit columns indexed by a greedy coloring of the 1-skeleton. Facets are
/// cliques there, so their colors are pairwise distinct and the resulting
/// map always satisfies the independence condition.
fn coloring(k: &SimplicialComplex) -> Vec<usize> {
    let m = k.m();
    let mut colors = vec![0usize; m];
    for v in 0..m {
        let used: Vec<usize> = (0..v)
            .filter(|&u| k.is_face(VertexSet::EMPTY.with(u).with(v)))
            .map(|u| colors[u])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colors
}

fn star_condition_checks_agree() {
    let mut rng = rng(0x5EED_0001);
    for trial in 0..200 {
        let m = 2 + trial % 6;
        let k = random_no_ghost_complex(&mut rng, m).unwrap();
        let units = coloring(&k).iter().map(|&c| 1u64 << c).collect();
        let unit_map = CharMapGF2::new(m, units).unwrap();
        assert!(unit_map.verify_star(&k).unwrap(), "trial {trial}");
        assert!(unit_map.verify_star_all_faces(&k).unwrap(), "trial {trial}");
        for _ in 0..4 {
            let r = rng.gen_range(1..=m);
            let cols = (0..m).map(|_| rng.gen_range(0..1u64 << r)).collect();
            let map = CharMapGF2::new(r, cols).unwrap();
            assert_eq!(
                map.verify_star(&k).unwrap(),
                map.verify_star_all_faces(&k).unwrap(),
                "trial {trial}"
            );
        }
    }
}

fn taylor_calculus_holds() {
    let mut rng = rng(0x5EED_0002);
    for trial in 0..200 {
        let m = 2 + trial % 5;
        let mut k = random_complex(&mut rng, m).unwrap();
        // 2^t generators get enumerated below; keep the instance honest but small.
        while k.minimal_nonfaces().unwrap().len() > 10 {
            k = random_complex(&mut rng, m).unwrap();
        }
        assert!(check_d_squared(&k).unwrap(), "trial {trial}");
        let t = k.minimal_nonfaces().unwrap().len() as u32;
        for _ in 0..20 {
            let sigma = TaylorGenerator::from_bits(rng.gen_range(0..1u32 << t));
            let tau = TaylorGenerator::from_bits(rng.gen_range(0..1u32 << t));
            assert!(
                check_leibniz(&k, sigma, tau).unwrap(),
                "trial {trial} generators {} and {}",
                sigma.bits(),
                tau.bits()
            );
        }
    }
}

fn hochster_matches_koszul() {
    let mut rng = rng(0x5EED_0003);
    for trial in 0..200 {
        let m = 2 + trial % 6;
        let k = random_complex(&mut rng, m).unwrap();
        for field in [FieldSpec::GF2, FieldSpec::GFp(32003)] {
            let h = betti_hochster(&k, field).unwrap();
            let z = betti_koszul(&k, field).unwrap();
            assert_eq!(h, z, "trial {trial} field {field}");
        }
    }
}

fn degree_one_rows_are_the_minimal_nonfaces() {
    let mut rng = rng(0x5EED_0004);
    for trial in 0..200 {
        let m = 2 + trial % 6;
        let k = random_complex(&mut rng, m).unwrap();
        let multi = betti_hochster_multigraded(&k, FieldSpec::GF2).unwrap();
        let rows: BTreeMap<VertexSet, u64> = multi
            .entries()
            .iter()
            .filter(|(key, _)| key.0 == 1)
            .map(|(key, &n)| (key.1, n))
            .collect();
        let expected: BTreeMap<VertexSet, u64> = k
            .minimal_nonfaces()
            .unwrap()
            .iter()
            .map(|&a| (a, 1))
            .collect();
        assert_eq!(rows, expected, "trial {trial}");
    }
}

/// Exhaustive decision of whether some width-r assignment satisfies the
/// independence condition, complete up to base change: each column either
/// lies in the span of the unit coordinates opened so far or opens the
/// next one. Deliberately independent of the library search, which pins a
/// maximal facet instead.
fn some_map_of_width_works(k: &SimplicialComplex, r: usize) -> bool {
    let m = k.m();
    let mut by_last: Vec<Vec<VertexSet>> = vec![Vec::new(); m];
    for &f in k.facets().unwrap() {
        if let Some(last) = f.iter().last() {
            by_last[last].push(f);
        }
    }

    fn independent(cols: &[u64], f: VertexSet) -> bool {
        let mut basis = [0u64; 16];
        f.iter().all(|v| {
            let mut x = cols[v];
            loop {
                if x == 0 {
                    return false;
                }
                let lead = 63 - x.leading_zeros() as usize;
                if basis[lead] == 0 {
                    basis[lead] = x;
                    return true;
                }
                x ^= basis[lead];
            }
        })
    }

    fn extend(by_last: &[Vec<VertexSet>], cols: &mut Vec<u64>, opened: usize, r: usize) -> bool {
        let v = cols.len();
        if v == by_last.len() {
            return true;
        }
        let limit = (1u64 << opened) + u64::from(opened < r);
        for x in 0..limit {
            let opened_now = opened + usize::from(x == 1u64 << opened);
            cols.push(x);
            let ok = by_last[v].iter().all(|&f| independent(cols, f));
            if ok && extend(by_last, cols, opened_now, r) {
                return true;
            }
            cols.pop();
        }
        false
    }

    extend(&by_last, &mut Vec::with_capacity(m), 0, r)
}

fn covering_triples_match_the_exhaustive_width_search() {
    let mut rng = rng(0x5EED_0005);
    for trial in 0..200 {
        let m = 3 + trial % 4;
        let k = random_proper_complex(&mut rng, m).unwrap();
        let witness = erokhovets_witness(&k).unwrap();
        if let Some(triple) = witness {
            let nf = k.minimal_nonfaces().unwrap();
            assert!(triple.iter().all(|w| nf.contains(w)), "trial {trial}");
            let common = triple[0].bits() & triple[1].bits() & triple[2].bits();
            assert_eq!(common, 0, "trial {trial}");
        }
        assert_eq!(
            some_map_of_width_works(&k, m - 2),
            witness.is_some(),
            "trial {trial} m={m}"
        );
        let res = real_r(&k, DEFAULT_BUDGET).unwrap();
        assert!(
            res.witness.verify_star_all_faces(&k).unwrap(),
            "trial {trial}"
        );
        assert_eq!(res.r <= m - 2, witness.is_some(), "trial {trial}");
        assert!(some_map_of_width_works(&k, res.r), "trial {trial}");
        if res.r > 1 {
            assert!(!some_map_of_width_works(&k, res.r - 1), "trial {trial}");
        }
    }
}

fn graph_widths_follow_the_coloring_formula() {
    let mut rng = rng(0x5EED_0006);
    for trial in 0..200 {
        let m = 2 + trial % 6;
        let g = random_graph(&mut rng, m, 0.5).unwrap();
        let gamma = g.chromatic_number().unwrap();
        let res = real_r(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            res.r,
            gamma.ilog2() as usize + 1,
            "trial {trial} m={m} gamma={gamma}"
        );
    }
}

fn coning_preserves_betti_numbers() {
    let mut rng = rng(0x5EED_0007);
    for trial in 0..200 {
        let m = 2 + trial % 5;
        let k = random_complex(&mut rng, m).unwrap();
        let cone = k.cone().unwrap();
        let base = betti_hochster(&k, FieldSpec::GF2).unwrap();
        assert_eq!(
            betti_hochster(&cone, FieldSpec::GF2).unwrap(),
            base,
            "trial {trial}"
        );
        assert_eq!(
            betti_koszul(&cone, FieldSpec::GF2).unwrap(),
            base,
            "trial {trial}"
        );
    }
}

fn joins_of_boundaries_multiply_out() {
    let mut rng = rng(0x5EED_0008);
    for trial in 0..200 {
        let blocks = 1 + trial % 3;
        let mut sizes = Vec::new();
        let mut total = 0;
        for _ in 0..blocks {
            let left = 7 - total;
            if left < 2 {
                break;
            }
            let s = rng.gen_range(2..=left.min(4));
            sizes.push(s);
            total += s;
        }
        let mut k = boundary_simplex(sizes[0]).unwrap();
        for &s in &sizes[1..] {
            k = k.join(&boundary_simplex(s).unwrap()).unwrap();
        }
        // One non-face per block, on disjoint supports: the table is the
        // exterior one, a generator per subset of the blocks.
        let mut expected: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for mask in 0u32..1 << sizes.len() {
            let ell = mask.count_ones() as usize;
            let j: usize = sizes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s)
                .sum();
            *expected.entry((ell, j)).or_insert(0) += 1;
        }
        assert!(
            taylor_is_minimal(&k).unwrap(),
            "trial {trial} sizes {sizes:?}"
        );
        for t in [
            betti_minimal_taylor(&k).unwrap(),
            betti_hochster(&k, FieldSpec::GF2).unwrap(),
        ] {
            assert_eq!(t.entries(), &expected, "trial {trial} sizes {sizes:?}");
        }
    }
}

fn mod_two_reduction_preserves_validity() {
    let mut rng = rng(0x5EED_0009);
    for trial in 0..200 {
        let m = 2 + trial % 6;
        let k = random_proper_complex(&mut rng, m).unwrap();
        // Signed unit columns on a proper coloring are always valid over
        // the integers, so the implication is exercised on every trial.
        let signed_units: Vec<Vec<i64>> = coloring(&k)
            .iter()
            .map(|&c| {
                let mut col = vec![0i64; m];
                col[c] = if rng.gen_bool(0.5) { 1 } else { -1 };
                col
            })
            .collect();
        let base = CharMapInt::new(m, signed_units).unwrap();
        assert!(base.verify_star(&k).unwrap(), "trial {trial}");
        assert!(base.mod2_reduce().verify_star(&k).unwrap(), "trial {trial}");
        let perturbed: Vec<Vec<i64>> = base
            .columns()
            .iter()
            .map(|col| col.iter().map(|&x| x + 2 * rng.gen_range(-1..=1)).collect())
            .collect();
        let perturbed = CharMapInt::new(m, perturbed).unwrap();
        if perturbed.verify_star(&k).unwrap() {
            assert!(
                perturbed.mod2_reduce().verify_star(&k).unwrap(),
                "trial {trial}"
            );
        }
        for _ in 0..3 {
            let cols: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..m).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let map = CharMapInt::new(m, cols).unwrap();
            if map.verify_star(&k).unwrap() {
                assert!(map.mod2_reduce().verify_star(&k).unwrap(), "trial {trial}");
            }
        }
    }
}

#[test]
fn criterion_5_randomized_property_suites() {
    star_condition_checks_agree();
    taylor_calculus_holds();
    hochster_matches_koszul();
    degree_one_rows_are_the_minimal_nonfaces();
    covering_triples_match_the_exhaustive_width_search();
    graph_widths_follow_the_coloring_formula();
    coning_preserves_betti_numbers();
    joins_of_boundaries_multiply_out();
    mod_two_reduction_preserves_validity();
    println!("criterion 5 (randomized property suites): pass, nine suites at 200 instances each");
}

#[test]
fn criterion_6_rank_four_universal_complex_counts() {
    let ru = RUComplex::new(4).unwrap();
    assert_eq!(ru.f_vector(), vec![1, 15, 105, 420, 840]);
    let facets = ru.facets().unwrap();
    assert_eq!(facets.len(), 840);
    assert!(facets.iter().all(|f| f.card() == 4));
    println!("criterion 6 (universal complex enumeration): pass, 840 facets");
}
