//! Immutable simple undirected graphs stored as one adjacency bitset per vertex.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Unordered pair of distinct vertices, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a self-loop; use [`Graph::from_edge_list`] for checked input.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// Apply a vertex map to both endpoints.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Edge {
        Edge::new(f(self.0), f(self.1))
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A set of vertex indices kept sorted ascending without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn pair(a: usize, b: usize) -> Self {
        [a, b].into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Boolean membership mask over `0..order`.
    pub fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Iterator over the set bits of a bitset row.
pub struct Bits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

fn bits(words: &[u64]) -> Bits<'_> {
    Bits {
        words,
        index: 0,
        current: words.first().copied().unwrap_or(0),
    }
}

/// A finite simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(WORD).max(1);
        Graph {
            order,
            words,
            rows: vec![0; words * order],
        }
    }

    /// Build a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list<I, E>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.insert(a, b);
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for (a, b) in (0..order).tuple_combinations() {
            g.insert(a, b);
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3);
        let mut g = Graph::empty(order);
        for i in 0..order {
            g.insert(i, (i + 1) % order);
        }
        g
    }

    pub(crate) fn insert(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.order && b < self.order);
        self.rows[a * self.words + b / WORD] |= 1 << (b % WORD);
        self.rows[b * self.words + a / WORD] |= 1 << (a % WORD);
    }

    pub(crate) fn remove(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / WORD] &= !(1 << (b % WORD));
        self.rows[b * self.words + a / WORD] &= !(1 << (a % WORD));
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && (self.row(a)[b / WORD] >> (b % WORD)) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Bits<'_> {
        bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).min()
    }

    /// Number of common neighbours of `a` and `b`.
    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    /// All edges in ascending lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for a in 0..self.order {
            for b in self.neighbors(a) {
                if a < b {
                    out.push(Edge(a, b));
                }
            }
        }
        out
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.remove(e.0, e.1);
        g
    }

    pub fn with_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.insert(e.0, e.1);
        g
    }

    /// Subgraph induced on `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order);
        for e in self.edges() {
            g.insert(perm[e.0], perm[e.1]);
        }
        g
    }

    /// Connected components of the graph with the `removed` vertices deleted.
    /// Components are listed by their smallest vertex and each is sorted.
    pub fn components_excluding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        seen.resize(self.order, false);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_excluding(&[])
    }

    /// True for a nonempty graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.components().len() == 1
    }

    fn is_connected_excluding(&self, removed: &[bool]) -> bool {
        self.components_excluding(removed).len() <= 1
    }

    /// Number of odd components of `self - s`.
    pub fn odd_component_count(&self, s: &VertexSet) -> usize {
        self.components_excluding(&s.mask(self.order))
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count()
    }

    /// All `size`-subsets whose removal disconnects the graph, in lexicographic order.
    pub fn vertex_cuts(&self, size: usize) -> Result<Vec<VertexSet>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if size >= self.order {
            return Err(Error::InvalidArgument(format!(
                "cut size {size} must be below the order {}",
                self.order
            )));
        }
        let mut mask = vec![false; self.order];
        let mut out = Vec::new();
        for subset in (0..self.order).combinations(size) {
            subset.iter().for_each(|&v| mask[v] = true);
            if !self.is_connected_excluding(&mask) {
                out.push(VertexSet(subset.clone()));
            }
            subset.iter().for_each(|&v| mask[v] = false);
        }
        Ok(out)
    }

    /// `order > k` and no set of fewer than `k` vertices disconnects the graph.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.order <= k || !self.is_connected() {
            return false;
        }
        let mut mask = vec![false; self.order];
        for size in 1..k {
            for subset in (0..self.order).combinations(size) {
                subset.iter().for_each(|&v| mask[v] = true);
                let split = !self.is_connected_excluding(&mask);
                subset.iter().for_each(|&v| mask[v] = false);
                if split {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices of degree exactly three.
    pub fn cubic_vertices(&self) -> VertexSet {
        (0..self.order).filter(|&v| self.degree(v) == 3).collect()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.order];
        for start in 0..self.order {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let s = side[x].unwrap();
                for y in self.neighbors(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!s);
                            stack.push(y);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Two disjoint triples with all nine cross edges, if any. The first
    /// triple is the lexicographically smallest one admitting a partner.
    pub fn find_k33(&self) -> Option<(VertexSet, VertexSet)> {
        for t in (0..self.order).combinations(3) {
            let common: Vec<usize> = self
                .neighbors(t[0])
                .filter(|&x| self.has_edge(t[1], x) && self.has_edge(t[2], x))
                .take(3)
                .collect();
            if common.len() == 3 {
                return Some((VertexSet(t), VertexSet(common)));
            }
        }
        None
    }

    /// True iff the graph has `K_{3,3}` as a (not necessarily induced) subgraph.
    pub fn contains_k33(&self) -> bool {
        self.find_k33().is_some()
    }

    /// A hub together with a cycle inside its neighbourhood, if any.
    pub fn find_wheel(&self) -> Option<(usize, Vec<usize>)> {
        (0..self.order).find_map(|hub| {
            let nbrs: Vec<usize> = self.neighbors(hub).collect();
            find_cycle_in(self, &nbrs).map(|cycle| (hub, cycle))
        })
    }

    /// Returns `(contains some wheel as a subgraph, is exactly a wheel)`.
    pub fn contains_wheel(&self) -> (bool, bool) {
        (self.find_wheel().is_some(), self.is_wheel())
    }

    /// One hub adjacent to every other vertex, the rest forming a single cycle.
    pub fn is_wheel(&self) -> bool {
        let n = self.order;
        if n < 4 || self.size() != 2 * (n - 1) {
            return false;
        }
        (0..n).any(|hub| {
            if self.degree(hub) != n - 1 {
                return false;
            }
            let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
            let ring = self.induced(&rim);
            ring.is_connected() && (0..ring.order()).all(|v| ring.degree(v) == 2)
        })
    }

    /// Plain edge-list text: `n m` on the first line, then one `u v` per edge.
    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.order, edges.len());
        for e in edges {
            s.push_str(&format!("{} {}\n", e.0, e.1));
        }
        s
    }

    pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing header line".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::EdgeList(format!(
                "unexpected trailing line {extra:?}"
            )));
        }
        Graph::from_edge_list(n, edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!(
            "expected two integers, got {line:?}"
        ))),
    }
}

/// Depth-first search for a cycle in the subgraph induced on `vertices`.
fn find_cycle_in(g: &Graph, vertices: &[usize]) -> Option<Vec<usize>> {
    let k = vertices.len();
    let mut parent: Vec<Option<usize>> = vec![None; k];
    let mut visited = vec![false; k];
    for root in 0..k {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in 0..k {
                if y == x || !g.has_edge(vertices[x], vertices[y]) || parent[x] == Some(y) {
                    continue;
                }
                if visited[y] {
                    // Non-tree edge closes a cycle through the lowest common ancestor.
                    let mut path_x = vec![x];
                    while let Some(p) = parent[*path_x.last().unwrap()] {
                        path_x.push(p);
                    }
                    let mut path_y = vec![y];
                    while let Some(p) = parent[*path_y.last().unwrap()] {
                        path_y.push(p);
                    }
                    while path_x.len() > 1
                        && path_y.len() > 1
                        && path_x[path_x.len() - 2] == path_y[path_y.len() - 2]
                    {
                        path_x.pop();
                        path_y.pop();
                    }
                    path_y.pop();
                    path_y.reverse();
                    path_x.extend(path_y);
                    return Some(path_x.into_iter().map(|i| vertices[i]).collect());
                }
                visited[y] = true;
                parent[y] = Some(x);
                stack.push(y);
            }
        }
    }
    None
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}; {})",
            self.order,
            self.edges().iter().join(" ")
        )
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::emit_graph6(self))
    }
}
