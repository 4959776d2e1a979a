//! Graph-model invariants: serialization round trips, matrix totality and
//! symmetry, and the four-pattern classification of 3-edge matchings.

mod common;

use common::{random_graph, rng};
use geomgraph::matrix::{matching_intersection_graph, CircleGraphPattern3, IntersectionMatrix};
use geomgraph::{load_graph, save_graph, IntersectionType};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn roundtrip_identity_on_random_graphs() {
    let mut r = rng(0x5E71A);
    for _ in 0..1000 {
        let n_points = r.gen_range(3..=12);
        let n_edges = r.gen_range(0..=14);
        let g = random_graph(&mut r, n_points, n_edges, 200);
        let loaded = load_graph(&save_graph(&g)).unwrap();
        assert_eq!(g, loaded);
    }
}

#[test]
fn matrix_total_and_symmetric() {
    let mut r = rng(0x3A7);
    for _ in 0..100 {
        let g = random_graph(&mut r, 9, 12, 150);
        let m = IntersectionMatrix::from_graph(&g).unwrap();
        for j in 0..m.edge_count() {
            for i in 0..j {
                // Both orders read the same entry; classification matches
                // the segments directly.
                assert_eq!(m.get(i, j), m.get(j, i));
                assert_eq!(
                    m.get(i, j),
                    geomgraph::classify_pair(g.segment(i), g.segment(j)).unwrap()
                );
            }
        }
    }
}

#[test]
fn three_edge_matchings_realize_only_the_four_patterns() {
    let mut r = rng(0x3333);
    let mut seen = [false; 4];
    for _ in 0..400 {
        let g = random_graph(&mut r, 10, 10, 300);
        let m = IntersectionMatrix::from_graph(&g).unwrap();
        let e = m.edge_count();
        for a in 0..e {
            for b in (a + 1)..e {
                for c in (b + 1)..e {
                    if let Ok(mig) = matching_intersection_graph(&m, &[a, b, c]) {
                        let p = mig.pattern3().expect("three ids give a pattern");
                        seen[match p {
                            CircleGraphPattern3::TripleCrossing => 0,
                            CircleGraphPattern3::TripleDisjoint => 1,
                            CircleGraphPattern3::Grid21 => 2,
                            CircleGraphPattern3::Family21 => 3,
                        }] = true;
                        // The degree multiset determines the same pattern.
                        let crossings = mig.adjacency.len();
                        assert_eq!(crossings, p.crossing_pairs());
                    }
                }
            }
        }
    }
    assert!(
        seen.iter().all(|&s| s),
        "all four patterns exercised: {seen:?}"
    );
}

proptest! {
    #[test]
    fn adjacency_matches_matrix_cross_entries(seed in 0u64..500) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 8, 8, 100);
        let m = IntersectionMatrix::from_graph(&g).unwrap();
        let ids: Vec<usize> = (0..m.edge_count()).collect();
        if let Ok(mig) = matching_intersection_graph(&m, &ids) {
            for (a, b) in mig.adjacency {
                prop_assert_eq!(
                    m.get(mig.edge_ids[a], mig.edge_ids[b]),
                    IntersectionType::Cross
                );
            }
        }
    }
}
