mod common;

use common::*;
use proptest::prelude::*;
use srinv_core::{
    betti_table, boundary_matrices, independence_complex, invariant_report, is_cohen_macaulay,
    is_vertex_decomposable, reduced_homology_ranks, s_suspension, whisker, Face, FieldSpec, Graph,
    SimplicialComplex,
};

const GF2: FieldSpec = FieldSpec::GF2;

fn corpus() -> Vec<SimplicialComplex> {
    (0..=5).flat_map(all_complexes).collect()
}

#[test]
fn complex_counts() {
    // nonvoid down-sets of the Boolean lattice on n points
    let counts: Vec<usize> = (0..=4).map(|n| all_complexes(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 19, 167]);
}

#[test]
fn boundary_squares_to_zero() {
    for field in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::new(5).unwrap()] {
        for cx in all_complexes(4) {
            let maps = boundary_matrices(&cx, field);
            for pair in maps.windows(2) {
                assert!(pair[1].matrix.mul(&pair[0].matrix).is_zero());
            }
        }
    }
}

#[test]
fn euler_poincare() {
    for cx in corpus() {
        let alternating: i64 = cx
            .f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum();
        assert_eq!(reduced_homology_ranks(&cx, GF2).euler_characteristic(), alternating);
    }
}

#[test]
fn cones_are_acyclic() {
    for cx in all_complexes(4) {
        let cone = cx.cone(4).unwrap();
        for field in [FieldSpec::GF2, FieldSpec::GF3] {
            assert!(reduced_homology_ranks(&cone, field).is_acyclic(), "{cx:?}");
        }
    }
}

#[test]
fn cm_oracles_agree_and_match_test_oracle() {
    for cx in corpus() {
        let verdict = is_cohen_macaulay(&cx, GF2).unwrap();
        assert!(verdict.agree(), "{cx:?}");
        let facets: Vec<u64> = cx.facets().iter().map(|f| f.mask()).collect();
        let n = cx.ground_size();
        assert_eq!(verdict.reisner, oracle_reisner(n, &|s| facets.iter().any(|&m| s & !m == 0)));
    }
}

#[test]
fn betti_tables_match_oracle() {
    for cx in all_complexes(4) {
        let facets: Vec<u64> = cx.facets().iter().map(|f| f.mask()).collect();
        let oracle = oracle_betti(4, &|s| facets.iter().any(|&m| s & !m == 0));
        let lib: std::collections::BTreeMap<_, _> = betti_table(&cx, GF2).unwrap().entries().collect();
        assert_eq!(lib, oracle, "{cx:?}");
    }
}

#[test]
fn indeg_two_iff_flag() {
    for cx in corpus() {
        let n = cx.ground_size();
        if cx.vertex_support() != cx.ground() || cx.is_simplex() {
            continue;
        }
        // flag: every set whose pairs are all faces is a face
        let flag = (0u64..1 << n).all(|s| {
            let pairs_ok = (0..n).all(|u| {
                (u + 1..n).all(|v| s >> u & s >> v & 1 == 0 || cx.contains(f(&[u, v])))
            });
            !pairs_ok || cx.contains(Face::from_mask(s))
        });
        assert_eq!(cx.indeg() == 2, flag, "{cx:?}");
    }
}

#[test]
fn pure_vertex_decomposable_implies_cm() {
    for cx in corpus() {
        if cx.is_pure() && is_vertex_decomposable(&cx) {
            assert!(is_cohen_macaulay(&cx, GF2).unwrap().reisner, "{cx:?}");
        }
    }
}

#[test]
fn whiskered_graphs_are_pure_and_vertex_decomposable() {
    for n in 1..=4 {
        for g in all_graphs(n) {
            let cx = independence_complex(&whisker(&g).unwrap());
            assert!(cx.is_pure());
            assert_eq!(cx.krull_dim(), n);
            assert!(is_vertex_decomposable(&cx), "{g:?}");
        }
    }
}

#[test]
fn suspension_is_a_ridge_sum() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            if g.edge_count() == 0 {
                continue;
            }
            let base = independence_complex(&g);
            if !base.is_pure() || base.krull_dim() < 2 {
                continue;
            }
            let ridge = base.krull_dim() - 1;
            for s in base.faces().into_iter().filter(|s| s.len() == ridge) {
                let suspended = independence_complex(&s_suspension(&g, s).unwrap());
                let simplex = SimplicialComplex::simplex(s.with(n));
                let glued = base.ridge_sum(s, &simplex, s).unwrap();
                assert_eq!(glued, suspended, "{g:?} {s}");
            }
        }
    }
}

#[test]
fn link_is_star_minus_face() {
    for cx in all_complexes(4) {
        for face in cx.faces() {
            let link = cx.link(face).unwrap();
            let star = cx.star(face).unwrap();
            let expected: Vec<Face> = star
                .faces()
                .into_iter()
                .filter(|g| g.intersection(face).is_empty())
                .collect();
            assert_eq!(link.faces(), expected);
        }
    }
}

#[test]
fn linear_cm_complexes_have_binomial_type() {
    for cx in corpus() {
        let r = invariant_report(&cx, GF2).unwrap();
        if !r.is_cm() {
            continue;
        }
        let c = (r.n - r.krull_dim) as u64;
        for p in 1..=r.n {
            if r.betti.is_linear(p) == Some(true) {
                // binom(c + p - 1, p)
                let binom = (1..=p as u64).fold(1u64, |acc, k| acc * (c + k - 1) / k);
                assert_eq!(r.cm_type, Some(binom), "{cx:?}");
            }
        }
    }
}

#[test]
fn field_choice_on_small_graphs() {
    // no torsion appears in independence complexes on at most 5 vertices
    for n in 1..=5 {
        for g in all_graphs(n) {
            let cx = independence_complex(&g);
            let a = invariant_report(&cx, FieldSpec::GF2).unwrap();
            let b = invariant_report(&cx, FieldSpec::GF3).unwrap();
            assert_eq!(a.betti, b.betti, "{g:?}");
        }
    }
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..8, proptest::collection::vec(any::<u8>(), 1..5)).prop_map(|(n, raw)| {
        let facets: Vec<Vec<usize>> = raw
            .iter()
            .map(|&m| (0..n).filter(|v| m >> v & 1 == 1).collect())
            .collect();
        SimplicialComplex::from_facets(n, facets).unwrap()
    })
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..7, any::<u32>()).prop_map(|(n, mask)| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(
            n,
            pairs.into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn core_is_idempotent(cx in arb_complex()) {
        let core = cx.core();
        prop_assert!(core.is_core());
        prop_assert_eq!(core.core(), core);
    }

    #[test]
    fn regularity_paths_agree(g in arb_graph()) {
        let cx = independence_complex(&g);
        let table = betti_table(&cx, GF2).unwrap();
        let scan = srinv_core::invariants::regularity_from_restrictions(&cx, GF2).unwrap();
        prop_assert_eq!(table.regularity(), scan);
    }

    #[test]
    fn restriction_homology_matches_oracle(cx in arb_complex(), w in any::<u8>()) {
        let w = w as u64 & cx.ground().mask();
        let facets: Vec<u64> = cx.facets().iter().map(|f| f.mask()).collect();
        let oracle = oracle_homology(w, &|s| s & !w == 0 && facets.iter().any(|&m| s & !m == 0));
        let lib = reduced_homology_ranks(&cx.restriction(Face::from_mask(w)).unwrap(), GF2);
        prop_assert_eq!(lib.as_slice(), oracle.as_slice());
    }
}
