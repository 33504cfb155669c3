//! Reduced (co)homology dimensions of face families over a coefficient field.
//!
//! Everything reduces to ranks of boundary matrices between consecutive
//! cardinality levels. Over a field the cochain ranks are the same numbers,
//! so one engine serves both directions.

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::linalg::{field_rank, FieldSpec, SparseMat};
use crate::vertexset::VertexSet;

/// Reduced Betti numbers of a family of faces grouped by cardinality:
/// `groups[k]` lists the faces with k vertices as packed sets, each group
/// sorted ascending. Index j of the result is the dimension of the reduced
/// homology in degree j-1, so index 0 reports the empty-face degree.
/// An empty family (no faces at all) yields an empty vector.
pub fn reduced_betti_dims(groups: &[Vec<u64>], field: FieldSpec) -> Result<Vec<u64>> {
    let n = groups.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    debug_assert_eq!(groups[0], vec![0u64], "the empty face must be present");
    let mut ranks = vec![0usize; n + 1];
    for k in 1..n {
        ranks[k] = field_rank(&boundary_matrix(&groups[k - 1], &groups[k]), field)?;
    }
    let mut dims = Vec::with_capacity(n);
    for k in 0..n {
        let c = groups[k].len();
        let d = c as i64 - ranks[k] as i64 - ranks[k + 1] as i64;
        debug_assert!(d >= 0, "rank bookkeeping broke at level {k}");
        dims.push(d as u64);
    }
    Ok(dims)
}

/// Boundary map from cardinality k faces (columns) to k-1 faces (rows) with
/// the orientation induced by ascending vertex order.
fn boundary_matrix(rows: &[u64], cols: &[u64]) -> SparseMat {
    let mut m = SparseMat::new(rows.len(), cols.len());
    for (c, &face) in cols.iter().enumerate() {
        let s = VertexSet::from_bits(face);
        for v in s.iter() {
            let sub = s.without(v).bits();
            let r = rows
                .binary_search(&sub)
                .expect("family closed under subsets");
            let sign = if s.rank_of(v).is_multiple_of(2) {
                1
            } else {
                -1
            };
            m.push(r, c, sign);
        }
    }
    m
}

/// All subsets of the generators, grouped by cardinality; the downward
/// closure of a facet list given as packed sets.
pub fn closure_groups(generators: &[u64]) -> Vec<Vec<u64>> {
    if generators.is_empty() {
        return Vec::new();
    }
    let mut seen = std::collections::HashSet::new();
    let max_card = generators
        .iter()
        .map(|g| g.count_ones() as usize)
        .max()
        .unwrap();
    let mut groups = vec![Vec::new(); max_card + 1];
    for &g in generators {
        for sub in VertexSet::from_bits(g).subsets() {
            if seen.insert(sub.bits()) {
                groups[sub.card()].push(sub.bits());
            }
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Dimensions of the reduced cohomology of the complex over the field;
/// index j of the result is degree j-1, running from the empty-face degree
/// up to the dimension of the complex.
pub fn reduced_cohomology_dims(k: &SimplicialComplex, field: FieldSpec) -> Result<Vec<u64>> {
    let groups = k.faces_by_card()?;
    reduced_betti_dims(&groups, field)
}

/// Shrink a downward-closed family by elementary collapses: repeatedly drop
/// a pair (f, g) where g is the unique face properly containing f and g is
/// itself maximal. Each step preserves the homotopy type and keeps the
/// family downward closed, so homology over any field is unchanged. The
/// empty face participates: a lone point collapses away entirely, which is
/// exactly the statement that a point has no reduced homology. `m` bounds
/// the ambient vertex labels; masks index flat scratch tables of size 2^m.
pub fn collapse_groups(groups: &[Vec<u64>], m: usize) -> Vec<Vec<u64>> {
    let size = 1usize << m;
    let mut alive = vec![false; size];
    let mut cover = vec![0u8; size];
    let mut queue: Vec<u64> = Vec::new();
    for level in groups {
        for &f in level {
            alive[f as usize] = true;
        }
    }
    for level in groups.iter().skip(1) {
        for &f in level {
            for v in VertexSet::from_bits(f).iter() {
                cover[(f & !(1 << v)) as usize] += 1;
            }
        }
    }
    for level in groups {
        for &f in level {
            if cover[f as usize] == 1 {
                queue.push(f);
            }
        }
    }
    while let Some(f) = queue.pop() {
        let fi = f as usize;
        if !alive[fi] || cover[fi] != 1 {
            continue;
        }
        let mut g = 0u64;
        for v in 0..m {
            let up = f | 1 << v;
            if up != f && alive[up as usize] {
                g = up;
                break;
            }
        }
        // The unique cover must be maximal, otherwise f sits inside an even
        // larger face and is not free yet; a later removal may requeue it.
        if cover[g as usize] != 0 {
            continue;
        }
        alive[fi] = false;
        alive[g as usize] = false;
        for v in VertexSet::from_bits(f).iter() {
            drop_cover(f & !(1 << v), &alive, &mut cover, &mut queue);
        }
        for v in VertexSet::from_bits(g).iter() {
            let y = g & !(1 << v);
            if y != f {
                drop_cover(y, &alive, &mut cover, &mut queue);
            }
        }
    }
    let mut out: Vec<Vec<u64>> = Vec::new();
    for level in groups {
        let survivors: Vec<u64> = level
            .iter()
            .copied()
            .filter(|&f| alive[f as usize])
            .collect();
        out.push(survivors);
    }
    while out.last().is_some_and(|l| l.is_empty()) {
        out.pop();
    }
    if out.iter().all(|l| l.is_empty()) {
        return Vec::new();
    }
    out
}

fn drop_cover(y: u64, alive: &[bool], cover: &mut [u8], queue: &mut Vec<u64>) {
    let yi = y as usize;
    cover[yi] -= 1;
    if !alive[yi] {
        return;
    }
    match cover[yi] {
        1 => queue.push(y),
        0 => {
            // y just became maximal: any boundary face of y that already has
            // a unique cover may now be collapsible into y.
            for v in VertexSet::from_bits(y).iter() {
                let z = y & !(1 << v);
                if alive[z as usize] && cover[z as usize] == 1 {
                    queue.push(z);
                }
            }
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_simplex, empty_complex, simplex, SimplicialComplex};

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::GFp(32003), FieldSpec::Rationals];

    #[test]
    fn empty_face_only_complex_has_degree_minus_one_homology() {
        let k = empty_complex(3).unwrap();
        for f in FIELDS {
            assert_eq!(reduced_cohomology_dims(&k, f).unwrap(), vec![1]);
        }
    }

    #[test]
    fn two_points_have_one_reduced_class_in_degree_zero() {
        let k = boundary_simplex(2).unwrap();
        for f in FIELDS {
            assert_eq!(reduced_cohomology_dims(&k, f).unwrap(), vec![0, 1]);
        }
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = simplex(4).unwrap();
        for f in FIELDS {
            assert_eq!(reduced_cohomology_dims(&k, f).unwrap(), vec![0; 5]);
        }
    }

    #[test]
    fn circle_and_two_sphere() {
        let square =
            SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
                .unwrap();
        for f in FIELDS {
            assert_eq!(reduced_cohomology_dims(&square, f).unwrap(), vec![0, 0, 1]);
        }
        let sphere = boundary_simplex(4).unwrap();
        for f in FIELDS {
            assert_eq!(
                reduced_cohomology_dims(&sphere, f).unwrap(),
                vec![0, 0, 0, 1]
            );
        }
    }

    #[test]
    fn six_vertex_projective_plane_sees_torsion_only_in_characteristic_two() {
        // Antipodal quotient of the icosahedron: 10 triangles on 6 vertices,
        // complete 1-skeleton, every edge in exactly two triangles.
        let rp2 = SimplicialComplex::from_facets(
            6,
            &[
                vec![1, 2, 5],
                vec![1, 2, 6],
                vec![1, 3, 4],
                vec![1, 3, 6],
                vec![1, 4, 5],
                vec![2, 3, 4],
                vec![2, 3, 5],
                vec![2, 4, 6],
                vec![3, 5, 6],
                vec![4, 5, 6],
            ],
        )
        .unwrap();
        assert_eq!(rp2.f_vector().unwrap(), vec![1, 6, 15, 10]);
        let mut edge_use = std::collections::HashMap::new();
        for t in rp2.facets().unwrap() {
            let vs: Vec<usize> = t.iter().collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    *edge_use.entry((a, b)).or_insert(0) += 1;
                }
            }
        }
        assert!(edge_use.values().all(|&c| c == 2), "closed surface check");
        assert_eq!(
            reduced_cohomology_dims(&rp2, FieldSpec::GF2).unwrap(),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_cohomology_dims(&rp2, FieldSpec::Rationals).unwrap(),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_cohomology_dims(&rp2, FieldSpec::GFp(32003)).unwrap(),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn closure_groups_build_the_power_sets_of_generators() {
        let groups = closure_groups(&[0b011, 0b110]);
        assert_eq!(groups[0], vec![0]);
        assert_eq!(groups[1], vec![0b001, 0b010, 0b100]);
        assert_eq!(groups[2], vec![0b011, 0b110]);
        for f in FIELDS {
            // Two edges sharing a vertex: contractible.
            assert_eq!(reduced_betti_dims(&groups, f).unwrap(), vec![0, 0, 0]);
        }
    }
}
