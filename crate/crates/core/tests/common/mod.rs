//! Brute-force references shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bicritical::{canonical_form, CanonicalCode, Graph};

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|a| (0..n).map(|b| g.has_edge(a, b)).collect())
        .collect()
}

/// Largest matching by trying every way to treat the lowest free vertex.
pub fn brute_max_matching(g: &Graph) -> usize {
    fn rec(adj: &[Vec<bool>], free: &mut [bool]) -> usize {
        let Some(x) = free.iter().position(|&f| f) else {
            return 0;
        };
        free[x] = false;
        let mut best = rec(adj, free);
        for y in x + 1..adj.len() {
            if free[y] && adj[x][y] {
                free[y] = false;
                best = best.max(1 + rec(adj, free));
                free[y] = true;
            }
        }
        free[x] = true;
        best
    }
    rec(&matrix(g), &mut vec![true; g.order()])
}

fn odd_components(adj: &[Vec<bool>], gone: &[bool]) -> usize {
    let n = adj.len();
    let mut seen = gone.to_vec();
    let mut odd = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for y in 0..n {
                if adj[x][y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        odd += size % 2;
    }
    odd
}

/// `min over S of (n + |S| - odd(G - S)) / 2`.
pub fn tutte_berge(g: &Graph) -> usize {
    let n = g.order();
    let adj = matrix(g);
    (0u32..1 << n)
        .map(|s| {
            let gone: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
            (n + s.count_ones() as usize - odd_components(&adj, &gone)) / 2
        })
        .min()
        .unwrap_or(0)
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edge_list(n, edges).unwrap()
    })
}

/// Isomorphism classes by generating every labeled graph and deduplicating.
pub fn brute_classes(n: usize, connected_only: bool) -> BTreeSet<CanonicalCode> {
    labeled_graphs(n)
        .filter(|g| !connected_only || g.is_connected())
        .map(|g| canonical_form(&g).unwrap())
        .collect()
}
