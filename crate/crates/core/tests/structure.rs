mod common;

use std::sync::OnceLock;

use bicritical::criticality::{
    classify_brick, deletable_edges, is_bicritical, is_k_factor_critical, two_separations,
};
use bicritical::decomposition::{brick_decomposition, SeparationPolicy};
use bicritical::scan::{enumerate_all, enumerate_connected};
use bicritical::{BrickKind, Edge, Graph};
use itertools::Itertools;
use proptest::prelude::*;

fn brute_perfect_after_removing(g: &Graph, removed: &[usize]) -> bool {
    let keep: Vec<usize> = (0..g.order()).filter(|v| !removed.contains(v)).collect();
    let h = g.induced(&keep);
    2 * common::brute_max_matching(&h) == h.order()
}

fn brute_k_critical(g: &Graph, k: usize) -> bool {
    (0..g.order())
        .combinations(k)
        .all(|s| brute_perfect_after_removing(g, &s))
}

fn brute_bicritical(g: &Graph) -> bool {
    g.order() >= 4 && brute_k_critical(g, 2)
}

fn components_without(g: &Graph, removed: &[usize]) -> Vec<usize> {
    let adj = common::matrix(g);
    let n = g.order();
    let mut seen: Vec<bool> = (0..n).map(|v| removed.contains(&v)).collect();
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let (mut stack, mut size) = (vec![s], 0);
        while let Some(x) = stack.pop() {
            size += 1;
            for y in 0..n {
                if adj[x][y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

fn brute_three_connected(g: &Graph) -> bool {
    g.order() >= 4
        && (0..=2).all(|k| {
            (0..g.order())
                .combinations(k)
                .all(|s| components_without(g, &s).len() == 1)
        })
}

/// Wheel subgraph by trying every hub and every cyclic order of rim vertices.
fn brute_contains_wheel(g: &Graph) -> bool {
    (0..g.order()).any(|hub| {
        let nbrs: Vec<usize> = g.neighbors(hub).collect();
        (3..=nbrs.len()).any(|k| {
            nbrs.iter()
                .copied()
                .permutations(k)
                .any(|rim| (0..k).all(|i| g.has_edge(rim[i], rim[(i + 1) % k])))
        })
    })
}

fn brute_contains_k33(g: &Graph) -> bool {
    (0..g.order()).combinations(6).any(|six| {
        six.iter().copied().combinations(3).any(|a| {
            let b: Vec<usize> = six.iter().copied().filter(|v| !a.contains(v)).collect();
            a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
        })
    })
}

#[test]
fn criticality_agrees_with_brute_force() {
    for n in 1..=7 {
        for g in enumerate_all(n).unwrap() {
            for k in 1..n.min(4) {
                assert_eq!(
                    is_k_factor_critical(&g, k).unwrap(),
                    brute_k_critical(&g, k),
                    "{g:?} k={k}"
                );
            }
            assert_eq!(is_bicritical(&g), brute_bicritical(&g), "{g:?}");
        }
    }
}

#[test]
fn deletable_edges_and_bricks_agree_with_brute_force() {
    for n in [4, 6] {
        for g in enumerate_connected(n)
            .unwrap()
            .into_iter()
            .filter(brute_bicritical)
        {
            let expected: Vec<Edge> = g
                .edges()
                .into_iter()
                .filter(|&e| brute_bicritical(&g.without_edge(e)))
                .collect();
            assert_eq!(deletable_edges(&g).unwrap(), expected);
            let brick = brute_three_connected(&g);
            let kind = classify_brick(&g);
            assert_eq!(kind.is_brick(), brick, "{g:?}");
            if brick {
                let minimal = g.edges().into_iter().all(|e| {
                    !(brute_bicritical(&g.without_edge(e))
                        && brute_three_connected(&g.without_edge(e)))
                });
                assert_eq!(kind == BrickKind::MinimalBrick, minimal, "{g:?}");
            }
        }
    }
}

#[test]
fn separations_are_non_barrier_cuts() {
    for g in enumerate_connected(6).unwrap() {
        if 2 * common::brute_max_matching(&g) != g.order() {
            continue;
        }
        let expected: Vec<Vec<usize>> = (0..6)
            .combinations(2)
            .filter(|s| {
                let sizes = components_without(&g, s);
                sizes.len() >= 2 && sizes.iter().filter(|&&c| c % 2 == 1).count() != 2
            })
            .collect();
        let found: Vec<Vec<usize>> = two_separations(&g)
            .unwrap()
            .iter()
            .map(|s| s.as_slice().to_vec())
            .collect();
        assert_eq!(found, expected, "{g:?}");
    }
}

#[test]
fn subgraph_searches_agree_with_brute_force() {
    for n in 4..=7 {
        for g in enumerate_connected(n).unwrap() {
            assert_eq!(g.contains_wheel().0, brute_contains_wheel(&g), "{g:?}");
            assert_eq!(g.contains_k33(), brute_contains_k33(&g), "{g:?}");
            if let Some((hub, rim)) = g.find_wheel() {
                assert!(rim.len() >= 3 && rim.iter().all(|&x| g.has_edge(hub, x)));
                assert!((0..rim.len()).all(|i| g.has_edge(rim[i], rim[(i + 1) % rim.len()])));
            }
        }
    }
}

fn bicritical_order_eight() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        enumerate_connected(8)
            .unwrap()
            .into_iter()
            .filter(|g| g.min_degree() >= Some(3) && is_bicritical(g) && !g.is_k_connected(3))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_is_label_invariant(
        index in 0usize..1000,
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
        seed in any::<u64>(),
    ) {
        let graphs = bicritical_order_eight();
        let g = &graphs[index % graphs.len()];
        let lex = brick_decomposition(g, SeparationPolicy::Lexicographic).unwrap();
        let relabeled = brick_decomposition(&g.permuted(&perm), SeparationPolicy::SeededRandom(seed)).unwrap();
        prop_assert_eq!(lex.brick_multiset().unwrap(), relabeled.brick_multiset().unwrap());
        prop_assert_eq!(lex.counts(), relabeled.counts());
        for (_, leaf) in relabeled.leaves() {
            prop_assert!(leaf.graph.graph().is_k_connected(3));
            prop_assert!(is_bicritical(leaf.graph.graph()));
        }
    }
}
