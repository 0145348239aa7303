mod common;

use acl_lab::embed::count_embeddings;
use acl_lab::enumerate::{connected_graphs_up_to, graphs_of_order, graphs_up_to};
use acl_lab::{
    canonical_code, chromatic_number, embeddings, hom_images, is_isomorphic, longest_path_edges, minimal_hom_images,
    EmbeddingMode, Graph,
};
use proptest::prelude::*;

fn graph_strategy(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn embedding_counts_match_exhaustive_maps(p in graph_strategy(4), h in graph_strategy(6)) {
        prop_assert_eq!(count_embeddings(&p, &h, EmbeddingMode::Weak), common::count_maps(&p, &h, false));
        prop_assert_eq!(count_embeddings(&p, &h, EmbeddingMode::Induced), common::count_maps(&p, &h, true));
        let all = embeddings(&p, &h, EmbeddingMode::Induced, &[]).unwrap();
        prop_assert!(all.iter().all(|m| m.is_valid(&p, &h)));
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_code_is_a_complete_invariant(a in graph_strategy(6), b in graph_strategy(6), seed in any::<u64>()) {
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&a).unwrap(), canonical_code(&a.permuted(&perm)).unwrap());
        let same = canonical_code(&a).unwrap() == canonical_code(&b).unwrap();
        prop_assert_eq!(same, common::isomorphic(&a, &b));
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), common::isomorphic(&a, &b));
    }

    #[test]
    fn edge_list_and_dot_round_trip(g in graph_strategy(9)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g.clone());
        prop_assert_eq!(Graph::parse_dot(&g.to_dot("g")).unwrap(), g);
    }
}

#[test]
fn enumeration_counts() {
    // Unlabelled graphs and connected graphs by order.
    let counts: Vec<usize> = (0..=6).map(|n| graphs_of_order(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    let conn = connected_graphs_up_to(6).unwrap();
    let by_order: Vec<usize> = (1..=6).map(|n| conn.iter().filter(|g| g.order() == n).count()).collect();
    assert_eq!(by_order, vec![1, 1, 2, 6, 21, 112]);
}

#[test]
fn enumeration_has_no_isomorphic_pairs() {
    for n in 0..=5 {
        let gs = graphs_of_order(n).unwrap();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert!(!common::isomorphic(&gs[i], &gs[j]));
            }
        }
    }
}

#[test]
fn chromatic_number_matches_exhaustive_colorings() {
    for g in graphs_up_to(6).unwrap() {
        assert_eq!(chromatic_number(&g), common::chromatic(&g), "{:?}", g.edge_vec());
    }
}

#[test]
fn longest_path_matches_exhaustive_search() {
    for g in graphs_up_to(6).unwrap() {
        assert_eq!(longest_path_edges(&g), common::longest_path(&g));
    }
}

#[test]
fn hom_images_match_exhaustive_partitions() {
    for g in connected_graphs_up_to(5).unwrap() {
        let lib: Vec<Graph> = hom_images(&g).unwrap().images.into_iter().map(|i| i.graph).collect();
        assert!(common::same_classes(&lib, &common::images(&g)), "{:?}", g.edge_vec());
        let min: Vec<Graph> = minimal_hom_images(&g).unwrap().images.into_iter().map(|i| i.graph).collect();
        assert!(common::same_classes(&min, &common::minimal_images(&g)), "{:?}", g.edge_vec());
    }
}
