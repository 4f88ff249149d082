//! Small named graphs used as fixtures throughout the toolkit.

use crate::graph::Graph;

fn build(order: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(order, edges.iter().copied()).expect("fixture edges are valid")
}

/// `copies` copies of `K4 - uv` glued on the shared pair `u = 0`, `v = 1`.
/// Copy `i` contributes vertices `2 + 2i` and `3 + 2i`.
pub fn k4_minus_edge_chain(copies: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..copies {
        let (a, b) = (2 + 2 * i, 3 + 2 * i);
        edges.extend([(0, a), (0, b), (1, a), (1, b), (a, b)]);
    }
    build(2 + 2 * copies, &edges)
}

/// Two copies of `K4 - uv` sharing the non-adjacent pair `{0, 1}`.
pub fn d4() -> Graph {
    k4_minus_edge_chain(2)
}

/// Three copies of `K4 - uv` sharing the non-adjacent pair `{0, 1}`.
pub fn t8() -> Graph {
    k4_minus_edge_chain(3)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    build(6, &edges)
}

/// The 3-cube `Q3`.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for a in 0..8usize {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    build(8, &edges)
}

/// `K_{2,2,2}`: vertex `i` is non-adjacent only to `i ^ 1`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for a in 0..6usize {
        for b in a + 1..6 {
            if b != (a ^ 1) {
                edges.push((a, b));
            }
        }
    }
    build(6, &edges)
}

/// Wheel `W_k`: hub `0` joined to the rim cycle `1..=k`.
pub fn wheel(k: usize) -> Graph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push((0, i));
        edges.push((i, if i == k { 1 } else { i + 1 }));
    }
    build(k + 1, &edges)
}

/// Prism `C3 x K2`.
pub fn prism() -> Graph {
    build(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}
