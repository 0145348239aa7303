mod common;

use acl_lab::cases::{claims_within, clique_intersection_audit, erdos_gallai_audit, omega, End};
use acl_lab::constructions::{bowtie, complete_triangle};
use acl_lab::enumerate::{connected_graphs_up_to, for_each_graph_of_order_unsorted, graphs_up_to};
use acl_lab::{hom_images, join, omits, ConstraintSet, Graph};
use proptest::prelude::*;

#[test]
fn images_of_a_join_are_joins_of_images() {
    let small = connected_graphs_up_to(3).unwrap();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            let mut pairs: Vec<Graph> = Vec::new();
            for x in common::images(a) {
                for y in common::images(b) {
                    let j = common::brute_join(&x, &y);
                    if !pairs.iter().any(|p| common::isomorphic(p, &j)) {
                        pairs.push(j);
                    }
                }
            }
            let direct = common::images(&common::brute_join(a, b));
            assert!(common::same_classes(&direct, &pairs));
            let lib: Vec<Graph> = hom_images(&join(a, b)).unwrap().images.into_iter().map(|i| i.graph).collect();
            assert!(common::same_classes(&lib, &pairs));
        }
    }
}

#[test]
fn the_only_complete_minimal_image_is_k_chi() {
    for g in connected_graphs_up_to(6).unwrap() {
        let complete: Vec<Graph> = common::minimal_images(&g).into_iter().filter(|x| x.is_complete()).collect();
        assert_eq!(complete.len(), 1, "{:?}", g.edge_vec());
        assert_eq!(complete[0].order(), common::chromatic(&g));
    }
}

#[test]
fn bowtie_claims_two_and_three_hold_in_every_small_bowtie_free_graph() {
    let cs = ConstraintSet::single(bowtie()).unwrap();
    let mut checked = 0;
    for n in 1..=8 {
        for_each_graph_of_order_unsorted(n, |g| {
            if omits(g, &cs) {
                let claims = claims_within(g, None);
                assert!(claims[1].holds, "claim 2 on {:?}", g.edge_vec());
                assert!(claims[2].holds, "claim 3 on {:?}", g.edge_vec());
                checked += 1;
            }
        })
        .unwrap();
    }
    assert!(checked > 1000);
}

#[test]
fn clique_intersection_law_in_every_small_host() {
    let cs = ConstraintSet::single(complete_triangle(4).unwrap()).unwrap();
    let mut with_pairs = 0;
    for n in 1..=8 {
        for_each_graph_of_order_unsorted(n, |g| {
            if omits(g, &cs) {
                let audit = clique_intersection_audit(g, 4);
                assert!(audit.holds, "{:?}", audit.counterexample);
                with_pairs += usize::from(audit.pairs_checked > 0);
            }
        })
        .unwrap();
    }
    assert!(with_pairs > 0);
}

#[test]
fn erdos_gallai_audit_fields() {
    for g in graphs_up_to(7).unwrap() {
        let a = erdos_gallai_audit(&g);
        assert!(a.holds, "{:?}", g.edge_vec());
        if g.order() <= 6 {
            assert_eq!(a.longest_path, common::longest_path(&g));
        }
        assert_eq!(a.twice_bound, g.order() * (a.l - 1));
    }
}

fn connected_graph(max: usize) -> impl Strategy<Value = Graph> {
    (3..=max)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
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
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omega_is_monotone_in_the_threshold(g in connected_graph(7)) {
        let n = g.order();
        for (u, v) in [(0, n - 1), (0, 1)] {
            let mut prev = usize::MAX;
            for t in 1..=4 {
                let w = omega(&g, u, End::Vertex(v), t).unwrap();
                prop_assert!(w <= prev);
                prev = w;
            }
        }
        let mut prev = usize::MAX;
        for t in 1..=3 {
            let w = omega(&g, 0, End::Infinity, t).unwrap();
            prop_assert!(w <= prev);
            prev = w;
        }
    }
}

/// Minimal images of `C_s × K_n`: `K_{n+2}` for even `s`; for odd `s` the
/// joins `C_t × K_n` over odd `5 ≤ t ≤ s` together with `K_{n+3}`.
#[test]
fn minimal_images_of_cycle_clique_joins() {
    use acl_lab::standard::{complete, cycle};
    for n in 1..=2 {
        for s in 4..=7 {
            let g = join(&cycle(s).unwrap(), &complete(n));
            let lib: Vec<Graph> = acl_lab::minimal_hom_images(&g).unwrap().images.into_iter().map(|i| i.graph).collect();
            let want: Vec<Graph> = if s % 2 == 0 {
                vec![complete(n + 2)]
            } else {
                (5..=s)
                    .step_by(2)
                    .map(|t| join(&cycle(t).unwrap(), &complete(n)))
                    .chain([complete(n + 3)])
                    .collect()
            };
            assert!(common::same_classes(&lib, &want), "s = {s}, n = {n}");
            if s + n <= 7 {
                assert!(common::same_classes(&common::minimal_images(&g), &want), "s = {s}, n = {n}");
            }
        }
    }
}
