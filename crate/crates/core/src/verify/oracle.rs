//! Brute-force predicates used to recheck failing verdicts. Deliberately
//! share nothing with the blossom engine or the bitset connectivity code.

/// Adjacency matrix snapshot of a graph.
pub struct Dense {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn new(g: &crate::graph::Graph) -> Self {
        let n = g.order();
        let adj = (0..n)
            .map(|a| (0..n).map(|b| g.has_edge(a, b)).collect())
            .collect();
        Dense { n, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn without_edge(&self, a: usize, b: usize) -> Dense {
        let mut adj = self.adj.clone();
        adj[a][b] = false;
        adj[b][a] = false;
        Dense { n: self.n, adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Exhaustive search: match the lowest free vertex with each free neighbour.
    pub fn perfect_matching_avoiding(&self, gone: &mut Vec<bool>) -> bool {
        let Some(x) = (0..self.n).find(|&v| !gone[v]) else {
            return true;
        };
        gone[x] = true;
        for y in 0..self.n {
            if !gone[y] && self.adj[x][y] {
                gone[y] = true;
                let found = self.perfect_matching_avoiding(gone);
                gone[y] = false;
                if found {
                    gone[x] = false;
                    return true;
                }
            }
        }
        gone[x] = false;
        false
    }

    fn subsets(&self, k: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(n, k, v + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.n, k, 0, &mut Vec::new(), &mut out);
        out
    }

    pub fn k_factor_critical(&self, k: usize) -> bool {
        self.subsets(k).into_iter().all(|s| {
            let mut gone = vec![false; self.n];
            s.iter().for_each(|&v| gone[v] = true);
            self.perfect_matching_avoiding(&mut gone)
        })
    }

    pub fn bicritical(&self) -> bool {
        self.n >= 4 && self.k_factor_critical(2)
    }

    pub fn minimal_k_factor_critical(&self, k: usize) -> bool {
        self.k_factor_critical(k)
            && self
                .edges()
                .into_iter()
                .all(|(a, b)| !self.without_edge(a, b).k_factor_critical(k))
    }

    pub fn connected_avoiding(&self, gone: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| !gone[v]) else {
            return true;
        };
        let mut seen = gone.to_vec();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for (y, s) in seen.iter_mut().enumerate() {
                if self.adj[x][y] && !*s {
                    *s = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn three_connected(&self) -> bool {
        if self.n <= 3 {
            return false;
        }
        (0..=2).all(|k| {
            self.subsets(k).into_iter().all(|s| {
                let mut gone = vec![false; self.n];
                s.iter().for_each(|&v| gone[v] = true);
                self.connected_avoiding(&gone)
            })
        })
    }

    /// Components of the graph minus `gone`, as vertex lists.
    pub fn components_avoiding(&self, gone: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = gone.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                for (y, s) in seen.iter_mut().enumerate() {
                    if self.adj[x][y] && !*s {
                        *s = true;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::named;

    #[test]
    fn agrees_on_named_graphs() {
        assert!(Dense::new(&Graph::complete(4)).bicritical());
        assert!(Dense::new(&named::d4()).minimal_k_factor_critical(2));
        assert!(!Dense::new(&named::octahedron()).minimal_k_factor_critical(2));
        assert!(!Dense::new(&named::d4()).three_connected());
        assert!(Dense::new(&named::petersen()).three_connected());
        assert!(!Dense::new(&Graph::cycle(6)).bicritical());
    }
}
