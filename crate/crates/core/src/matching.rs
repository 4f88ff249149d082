//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! contraction) and the matching-covered / removable-edge predicates.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    /// Matched edges in ascending order.
    pub fn edges(&self) -> Vec<Edge> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge::new(v, w)))
            .collect()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }
}

/// Reusable scratch space for the blossom algorithm. Not shareable between
/// threads; keep one per worker.
#[derive(Default)]
pub struct MatchingEngine {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl MatchingEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn load(&mut self, g: &Graph, removed: &[bool]) {
        let n = g.order();
        let gone = |v: usize| removed.get(v).copied().unwrap_or(false);
        self.adj.resize_with(n, Vec::new);
        for v in 0..n {
            self.adj[v].clear();
            if !gone(v) {
                self.adj[v].extend(g.neighbors(v).filter(|&w| !gone(w)));
            }
        }
        self.adj.truncate(n);
        self.mate.clear();
        self.mate.resize(n, NONE);
        self.parent.resize(n, NONE);
        self.base.resize(n, 0);
        self.used.resize(n, false);
        self.blossom.resize(n, false);
        self.on_path.resize(n, false);
    }

    fn greedy(&mut self, active: &[usize]) {
        for &v in active {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Search for an augmenting path from the exposed vertex `root`; returns
    /// its other exposed endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    /// Run the search from every exposed vertex in ascending order. With
    /// `stop_on_exposed`, give up at the first vertex that stays exposed.
    fn solve(&mut self, g: &Graph, removed: &[bool], stop_on_exposed: bool) -> bool {
        self.load(g, removed);
        let active: Vec<usize> = (0..g.order())
            .filter(|&v| !removed.get(v).copied().unwrap_or(false))
            .collect();
        self.greedy(&active);
        let mut all_covered = true;
        for &root in &active {
            if self.mate[root] != NONE {
                continue;
            }
            match self.find_path(root) {
                Some(end) => self.augment(end),
                None => {
                    // An exposed vertex without an augmenting path stays
                    // exposed in some maximum matching.
                    all_covered = false;
                    if stop_on_exposed {
                        return false;
                    }
                }
            }
        }
        all_covered
    }

    /// Maximum matching of `g` with the `removed` vertices deleted.
    pub fn maximum_matching_excluding(&mut self, g: &Graph, removed: &[bool]) -> Matching {
        self.solve(g, removed, false);
        Matching {
            mate: self
                .mate
                .iter()
                .map(|&m| (m != NONE).then_some(m))
                .collect(),
        }
    }

    pub fn maximum_matching(&mut self, g: &Graph) -> Matching {
        self.maximum_matching_excluding(g, &[])
    }

    /// Whether `g` minus the `removed` vertices has a perfect matching.
    pub fn has_perfect_matching_excluding(&mut self, g: &Graph, removed: &[bool]) -> bool {
        let remaining = (0..g.order())
            .filter(|&v| !removed.get(v).copied().unwrap_or(false))
            .count();
        remaining % 2 == 0 && self.solve(g, removed, true)
    }

    pub fn has_perfect_matching(&mut self, g: &Graph) -> bool {
        self.has_perfect_matching_excluding(g, &[])
    }
}

pub fn maximum_matching(g: &Graph) -> Matching {
    MatchingEngine::new().maximum_matching(g)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    MatchingEngine::new().has_perfect_matching(g)
}

/// Connected, at least two vertices, and every edge in some perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 || n % 2 == 1 || !g.is_connected() {
        return false;
    }
    let mut engine = MatchingEngine::new();
    let witness = engine.maximum_matching(g);
    if witness.size() * 2 != n {
        return false;
    }
    let mut removed = vec![false; n];
    g.edges().into_iter().all(|e| {
        if witness.mate(e.u()) == Some(e.v()) {
            return true;
        }
        removed[e.u()] = true;
        removed[e.v()] = true;
        let ok = engine.has_perfect_matching_excluding(g, &removed);
        removed[e.u()] = false;
        removed[e.v()] = false;
        ok
    })
}

/// Edges `e` with `g - e` matching covered, in ascending order.
pub fn removable_edges(g: &Graph) -> Result<Vec<Edge>> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    Ok(g.edges()
        .into_iter()
        .filter(|&e| is_matching_covered(&g.without_edge(e)))
        .collect())
}
