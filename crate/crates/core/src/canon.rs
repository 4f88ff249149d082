//! Canonical labeling by individualization and refinement.
//!
//! The search tree individualizes one vertex of the first non-singleton cell
//! of an equitable ordered partition at every level. Each leaf induces a
//! labeling whose certificate is the relabeled upper triangle packed into a
//! `u128`; the canonical form is the leaf with the greatest certificate.
//! Automorphisms discovered from equal certificates prune sibling branches
//! and cut back to the common ancestor of the two leaves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the canonical labeler.
pub const MAX_CANON_ORDER: usize = 16;

/// Isomorphism-invariant code: equal codes iff isomorphic graphs.
///
/// Codes order first by vertex count, then by certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    order: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph_from_certificate(self.order as usize, self.bits)
    }
}

impl fmt::Display for CanonicalCode {
    /// graph6 of the canonical representative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::emit_graph6(&self.to_graph()))
    }
}

/// Result of canonically labeling a (possibly vertex-coloured) graph.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
    pub code: CanonicalCode,
}

fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

// Bit for pair (i, j), i < j, in graph6 column order, most significant first.
fn pair_shift(n: usize, i: usize, j: usize) -> usize {
    let k = j * (j - 1) / 2 + i;
    triangle_bits(n) - 1 - k
}

fn graph_from_certificate(n: usize, bits: u128) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if (bits >> pair_shift(n, i, j)) & 1 == 1 {
                g.insert(i, j);
            }
        }
    }
    g
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_labeling(g, None)?.code)
}

/// Canonically label `g`. With `colors`, vertices of different colours are
/// never mapped onto each other and colour classes receive consecutive labels
/// in ascending colour order.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> Result<Labeling> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderLimit {
            order: n,
            limit: MAX_CANON_ORDER,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let mut cells: Vec<Vec<usize>> = match colors {
        None => vec![(0..n).collect()],
        Some(colors) => {
            assert_eq!(colors.len(), n);
            let mut distinct: Vec<u32> = colors.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            distinct
                .iter()
                .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
                .collect()
        }
    };
    cells.retain(|c| !c.is_empty());
    refine(&adj, &mut cells);
    let mut search = Search {
        adj: &adj,
        n,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    Ok(Labeling {
        position: best.position,
        code: CanonicalCode {
            order: n as u8,
            bits: best.certificate,
        },
    })
}

/// Split cells until every cell is equitable with respect to every other.
fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u32, |m, &v| m | (1 << v));
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: &usize| (adj[*v] & splitter).count_ones();
                let first = count(&cells[c][0]);
                if cells[c].iter().all(|v| count(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut cells[c]);
                cell.sort_by_key(|v| (count(v), *v));
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for v in cell {
                    let k = count(&v);
                    if last != Some(k) {
                        groups.push(Vec::new());
                        last = Some(k);
                    }
                    groups.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, groups);
                continue 'restart;
            }
        }
        return;
    }
}

struct Leaf {
    certificate: u128,
    position: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, position: &[usize]) -> u128 {
        let mut bits = 0u128;
        for a in 0..self.n {
            let mut row = self.adj[a];
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                row &= row - 1;
                let (i, j) = (position[a], position[b]);
                if i < j {
                    bits |= 1 << pair_shift(self.n, i, j);
                }
            }
        }
        bits
    }

    /// Explore the subtree below `cells`. Returns `Some(level)` when an
    /// automorphism shows the rest of the subtree down from `level` is redundant.
    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.visit_leaf(&cells, path);
        };
        let level = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let candidates = cells[target].clone();
        for &v in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(path, &explored, v) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            refine(self.adj, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    /// Whether `v` lies in the orbit of an explored vertex under the group
    /// generated by known automorphisms fixing `path` pointwise.
    fn equivalent_to_explored(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut y = x;
            while parent[y] != root {
                let next = parent[y];
                parent[y] = root;
                y = next;
            }
            root
        }
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn visit_leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let mut position = vec![0; self.n];
        for (i, cell) in cells.iter().enumerate() {
            position[cell[0]] = i;
        }
        let certificate = self.certificate(&position);
        let leaf = Leaf {
            certificate,
            position,
            path: path.to_vec(),
        };
        let mut jump = None;
        for earlier in [&self.first, &self.best].into_iter().flatten() {
            if earlier.certificate == leaf.certificate {
                // Map this leaf's labeling onto the earlier one.
                let mut inverse = vec![0; self.n];
                for (v, &p) in earlier.position.iter().enumerate() {
                    inverse[p] = v;
                }
                let gamma: Vec<usize> = leaf.position.iter().map(|&p| inverse[p]).collect();
                let common = earlier
                    .path
                    .iter()
                    .zip(&leaf.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                if gamma.iter().enumerate().any(|(x, &y)| x != y) {
                    self.automorphisms.push(gamma);
                }
                jump = Some(jump.map_or(common, |j: usize| j.min(common)));
            }
        }
        if self.first.is_none() {
            self.first = Some(Leaf {
                certificate: leaf.certificate,
                position: leaf.position.clone(),
                path: leaf.path.clone(),
            });
        }
        if self
            .best
            .as_ref()
            .is_none_or(|b| leaf.certificate > b.certificate)
        {
            self.best = Some(leaf);
        }
        jump
    }
}
