//! Brick decomposition of bicritical graphs along 2-separations.
//!
//! A split at a 2-separation `{u, v}` groups the components of `G - u - v`
//! into two nonempty sides. Each child is its side plus `u`, `v`, all edges
//! among them, and the edge `uv`, which is flagged as a marker edge in both
//! children. Markers already present in the parent follow their endpoints;
//! a marker equal to `uv` itself lands in both children. Repeating the split
//! on every non-3-connected node yields a binary tree whose leaves are the
//! bricks of the input.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalCode};
use crate::criticality::{is_bicritical, two_separations};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// A node of a decomposition: a graph whose vertices remember their
/// identity in the root graph, plus its marker edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    origin: Vec<usize>,
    markers: BTreeSet<Edge>,
}

impl LabeledGraph {
    /// The undecomposed input: identity origin map, no markers.
    pub fn root(graph: Graph) -> Self {
        let origin = (0..graph.order()).collect();
        LabeledGraph {
            graph,
            origin,
            markers: BTreeSet::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `origin()[i]` is the root-graph vertex behind local vertex `i`.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    /// Marker edges in local indices.
    pub fn markers(&self) -> &BTreeSet<Edge> {
        &self.markers
    }

    pub fn marker_count(&self) -> usize {
        self.markers.len()
    }

    pub fn is_marker(&self, e: Edge) -> bool {
        self.markers.contains(&e)
    }

    pub fn to_original(&self, e: Edge) -> Edge {
        e.map(|x| self.origin[x])
    }

    pub fn local_index(&self, original: usize) -> Option<usize> {
        self.origin.binary_search(&original).ok()
    }

    /// Every edge translated to root-graph vertices.
    pub fn original_edges(&self) -> BTreeSet<Edge> {
        self.graph
            .edges()
            .into_iter()
            .map(|e| self.to_original(e))
            .collect()
    }

    pub fn original_markers(&self) -> BTreeSet<Edge> {
        self.markers.iter().map(|&e| self.to_original(e)).collect()
    }
}

fn child(parent: &LabeledGraph, side: &[usize], cut: (usize, usize)) -> LabeledGraph {
    let mut vertices: Vec<usize> = side.iter().copied().chain([cut.0, cut.1]).collect();
    vertices.sort_unstable();
    let mut local = vec![usize::MAX; parent.graph.order()];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    let mut graph = parent.graph.induced(&vertices);
    let uv = Edge::new(local[cut.0], local[cut.1]);
    graph.insert(uv.u(), uv.v());
    let mut markers: BTreeSet<Edge> = parent
        .markers
        .iter()
        .filter(|e| local[e.u()] != usize::MAX && local[e.v()] != usize::MAX)
        .map(|e| e.map(|x| local[x]))
        .collect();
    markers.insert(uv);
    LabeledGraph {
        graph,
        origin: vertices.iter().map(|&v| parent.origin[v]).collect(),
        markers,
    }
}

/// Split `node` at the 2-separation `cut`.
///
/// The component containing the smallest original vertex forms the first
/// side on its own; all remaining components form the second side. The
/// node's graph is expected to be bicritical; that is not rechecked here.
pub fn split_at(node: &LabeledGraph, cut: &VertexSet) -> Result<(LabeledGraph, LabeledGraph)> {
    let g = &node.graph;
    let &[u, v] = cut.as_slice() else {
        return Err(Error::InvalidArgument(format!(
            "cut {cut} must have two vertices"
        )));
    };
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let comps = g.components_excluding(&cut.mask(g.order()));
    if comps.len() < 2 {
        return Err(Error::NotACut(node.origin[u], node.origin[v]));
    }
    if comps.iter().filter(|c| c.len() % 2 == 1).count() == 2 {
        return Err(Error::Barrier(node.origin[u], node.origin[v]));
    }
    let first = comps
        .iter()
        .enumerate()
        .min_by_key(|(_, c)| c.iter().map(|&x| node.origin[x]).min())
        .map(|(i, _)| i)
        .expect("at least two components");
    let rest: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != first)
        .flat_map(|(_, c)| c.iter().copied())
        .collect();
    let left = child(node, &comps[first], (u, v));
    let right = child(node, &rest, (u, v));
    for c in [&left, &right] {
        if c.graph.order() <= 2 {
            return Err(Error::ChildTooSmall(c.graph.order()));
        }
    }
    Ok((left, right))
}

/// How the next 2-separation is chosen at every split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationPolicy {
    /// Smallest separation by original vertex indices.
    Lexicographic,
    /// Uniform among all separations, from a ChaCha stream with this seed.
    SeededRandom(u64),
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub graph: LabeledGraph,
    pub children: Option<(usize, usize)>,
    /// Separation used at this node, as original vertex indices.
    pub split: Option<(usize, usize)>,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCounts {
    /// Number of splits (internal nodes).
    pub splits: usize,
    /// Number of bricks (leaves).
    pub bricks: usize,
    pub marker_total: usize,
}

/// Binary decomposition tree; node `0` is the root, nodes are stored in
/// depth-first preorder.
#[derive(Clone, Debug)]
pub struct DecompositionTree {
    nodes: Vec<TreeNode>,
}

impl DecompositionTree {
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = (usize, &TreeNode)> {
        self.nodes.iter().enumerate().filter(|(_, n)| n.is_leaf())
    }

    pub fn counts(&self) -> TreeCounts {
        let bricks = self.leaves().count();
        TreeCounts {
            splits: self.nodes.len() - bricks,
            bricks,
            marker_total: self.leaves().map(|(_, n)| n.graph.marker_count()).sum(),
        }
    }

    /// Sorted canonical codes of the leaves; markers are ignored.
    pub fn brick_multiset(&self) -> Result<Vec<CanonicalCode>> {
        let mut codes = self
            .leaves()
            .map(|(_, n)| canonical_form(n.graph.graph()))
            .collect::<Result<Vec<_>>>()?;
        codes.sort_unstable();
        Ok(codes)
    }

    /// Graphviz rendering of the tree. With `with_nodes`, every tree node
    /// also gets a cluster drawing its graph on original vertex labels with
    /// marker edges in bold.
    pub fn to_dot(&self, with_nodes: bool) -> String {
        let mut s = String::from("digraph decomposition {\n  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label = match node.split {
                Some((a, b)) => format!("split {{{a},{b}}}"),
                None => {
                    let code = canonical_form(node.graph.graph())
                        .map(|c| c.to_string())
                        .unwrap_or_else(|_| crate::graph6::emit_graph6(node.graph.graph()));
                    format!("brick {code}\\nmarkers={}", node.graph.marker_count())
                }
            };
            let _ = writeln!(s, "  t{i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if let Some((a, b)) = node.children {
                let _ = writeln!(s, "  t{i} -> t{a};\n  t{i} -> t{b};");
            }
        }
        if with_nodes {
            for (i, node) in self.nodes.iter().enumerate() {
                let lg = &node.graph;
                let _ = writeln!(s, "  subgraph cluster_{i} {{\n    label=\"node {i}\";");
                for &o in lg.origin() {
                    let _ = writeln!(s, "    n{i}_{o} [label=\"{o}\", shape=circle];");
                }
                for e in lg.graph().edges() {
                    let (a, b) = lg.to_original(e).endpoints();
                    let style = if lg.is_marker(e) {
                        ", style=bold, penwidth=3"
                    } else {
                        ""
                    };
                    let _ = writeln!(s, "    n{i}_{a} -> n{i}_{b} [dir=none{style}];");
                }
                s.push_str("  }\n");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Decompose a bicritical graph into bricks.
pub fn brick_decomposition(g: &Graph, policy: SeparationPolicy) -> Result<DecompositionTree> {
    if !is_bicritical(g) {
        return Err(Error::NotBicritical);
    }
    decompose_from(LabeledGraph::root(g.clone()), policy)
}

/// Decompose starting from an already labeled node (used when a subtree of
/// an existing decomposition is expanded again).
pub fn decompose_from(root: LabeledGraph, policy: SeparationPolicy) -> Result<DecompositionTree> {
    let mut rng = match policy {
        SeparationPolicy::Lexicographic => None,
        SeparationPolicy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut nodes = vec![TreeNode {
        graph: root,
        children: None,
        split: None,
    }];
    // Depth-first preorder: children are appended right after their parent's
    // subtree is started, so a stack of pending indices suffices.
    let mut stack = vec![0usize];
    let mut order = Vec::new();
    while let Some(i) = stack.pop() {
        order.push(i);
        let g = nodes[i].graph.graph().clone();
        if g.is_k_connected(3) {
            continue;
        }
        let mut seps = two_separations(&g)?;
        if seps.is_empty() {
            return Err(Error::NotBicritical);
        }
        let origin = nodes[i].graph.origin().to_vec();
        seps.sort_by_key(|s| {
            let mut o: Vec<usize> = s.iter().map(|x| origin[x]).collect();
            o.sort_unstable();
            o
        });
        let cut = match rng.as_mut() {
            None => seps[0].clone(),
            Some(r) => seps.choose(r).expect("nonempty").clone(),
        };
        let (left, right) = split_at(&nodes[i].graph, &cut)?;
        assert!(
            left.graph().order() < g.order() && right.graph().order() < g.order(),
            "split must shrink both sides"
        );
        let (a, b) = (cut.as_slice()[0], cut.as_slice()[1]);
        let (oa, ob) = (origin[a].min(origin[b]), origin[a].max(origin[b]));
        let li = nodes.len();
        nodes.push(TreeNode {
            graph: left,
            children: None,
            split: None,
        });
        nodes.push(TreeNode {
            graph: right,
            children: None,
            split: None,
        });
        nodes[i].children = Some((li, li + 1));
        nodes[i].split = Some((oa, ob));
        stack.push(li + 1);
        stack.push(li);
    }
    // Renumber into preorder so node indices are stable across runs.
    let mut rank = vec![0; nodes.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut slots: Vec<Option<TreeNode>> = nodes.into_iter().map(Some).collect();
    let mut sorted = Vec::with_capacity(slots.len());
    for &i in &order {
        let mut node = slots[i].take().expect("each node visited once");
        node.children = node.children.map(|(a, b)| (rank[a], rank[b]));
        sorted.push(node);
    }
    Ok(DecompositionTree { nodes: sorted })
}

/// Glue two graphs along designated vertex pairs: `a_pair` of `a` is
/// identified with `b_pair` of `b`. Vertices of `a` keep their indices; the
/// other vertices of `b` follow in ascending order. Shared edges collapse.
pub fn glue(a: &Graph, a_pair: (usize, usize), b: &Graph, b_pair: (usize, usize)) -> Graph {
    let mut map = vec![usize::MAX; b.order()];
    map[b_pair.0] = a_pair.0;
    map[b_pair.1] = a_pair.1;
    let mut next = a.order();
    for (x, slot) in map.iter_mut().enumerate() {
        if x != b_pair.0 && x != b_pair.1 {
            *slot = next;
            next += 1;
        }
    }
    let edges = a
        .edges()
        .into_iter()
        .chain(b.edges().into_iter().map(|e| e.map(|x| map[x])));
    Graph::from_edge_list(next, edges.map(Edge::endpoints)).expect("glued edges are in range")
}
