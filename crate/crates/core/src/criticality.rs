//! Factor-criticality, deletable edges, barriers, 2-separations and brick
//! classification.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::{has_perfect_matching, MatchingEngine};

/// How a 2-vertex cut behaves with respect to odd components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationKind {
    Barrier,
    Separation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BrickKind {
    NotBicritical,
    BicriticalNotBrick,
    BrickNotMinimal,
    MinimalBrick,
}

impl BrickKind {
    pub fn is_brick(self) -> bool {
        matches!(self, BrickKind::BrickNotMinimal | BrickKind::MinimalBrick)
    }
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k >= g.order() {
        return Err(Error::KOutOfRange {
            k,
            order: g.order(),
        });
    }
    Ok(())
}

fn first_failing_subset(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.order();
    let mut engine = MatchingEngine::new();
    let mut removed = vec![false; n];
    for subset in (0..n).combinations(k) {
        subset.iter().for_each(|&v| removed[v] = true);
        let ok = engine.has_perfect_matching_excluding(g, &removed);
        subset.iter().for_each(|&v| removed[v] = false);
        if !ok {
            return Some(subset.into_iter().collect());
        }
    }
    None
}

/// First `k`-subset in lexicographic order whose removal leaves no perfect
/// matching; `None` when `g` is `k`-factor-critical.
pub fn k_factor_critical_witness(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    check_k(g, k)?;
    if (g.order() - k) % 2 == 1 {
        return Ok(Some((0..k).collect()));
    }
    Ok(first_failing_subset(g, k))
}

/// Deleting any `k` vertices leaves a graph with a perfect matching.
///
/// Rejects on parity and on minimum degree below `k + 1` before touching
/// the matching engine.
pub fn is_k_factor_critical(g: &Graph, k: usize) -> Result<bool> {
    check_k(g, k)?;
    if (g.order() - k) % 2 == 1 || g.min_degree().is_some_and(|d| d <= k) {
        return Ok(false);
    }
    Ok(first_failing_subset(g, k).is_none())
}

/// At least four vertices and deleting any two leaves a perfect matching.
pub fn is_bicritical(g: &Graph) -> bool {
    g.order() >= 4 && is_k_factor_critical(g, 2).unwrap_or(false)
}

/// The pair witnessing non-bicriticality, if any. Graphs of order below four
/// return `Some` with an empty set.
pub fn bicritical_witness(g: &Graph) -> Option<VertexSet> {
    if g.order() < 4 {
        return Some(VertexSet::new());
    }
    k_factor_critical_witness(g, 2).expect("k = 2 is in range")
}

/// `DE(g)`: edges whose deletion leaves `g` bicritical, ascending.
pub fn deletable_edges(g: &Graph) -> Result<Vec<Edge>> {
    if !is_bicritical(g) {
        return Err(Error::NotBicritical);
    }
    Ok(g.edges()
        .into_iter()
        .filter(|&e| is_bicritical(&g.without_edge(e)))
        .collect())
}

/// `k`-factor-critical with no edge whose deletion preserves it.
pub fn is_minimal_k_factor_critical(g: &Graph, k: usize) -> Result<bool> {
    if !is_k_factor_critical(g, k)? {
        return Ok(false);
    }
    for e in g.edges() {
        if is_k_factor_critical(&g.without_edge(e), k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_minimal_bicritical(g: &Graph) -> bool {
    g.order() >= 4 && is_minimal_k_factor_critical(g, 2).unwrap_or(false)
}

/// `c_o(g - s) = |s|`.
pub fn is_barrier(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !has_perfect_matching(g) {
        return Err(Error::NoPerfectMatching);
    }
    Ok(g.odd_component_count(s) == s.len())
}

/// Classify a two-vertex set; `None` when it does not disconnect `g`.
pub fn classify_two_cut(g: &Graph, cut: &VertexSet) -> Option<SeparationKind> {
    assert_eq!(cut.len(), 2);
    let comps = g.components_excluding(&cut.mask(g.order()));
    if comps.len() < 2 {
        return None;
    }
    let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
    Some(if odd == 2 {
        SeparationKind::Barrier
    } else {
        SeparationKind::Separation
    })
}

/// All 2-vertex cuts that are not barriers, in lexicographic order.
pub fn two_separations(g: &Graph) -> Result<Vec<VertexSet>> {
    if !has_perfect_matching(g) {
        return Err(Error::NoPerfectMatching);
    }
    if g.order() < 3 {
        return Ok(Vec::new());
    }
    Ok(g.vertex_cuts(2)?
        .into_iter()
        .filter(|c| g.odd_component_count(c) != 2)
        .collect())
}

/// 3-connected and bicritical.
pub fn is_brick(g: &Graph) -> bool {
    g.is_k_connected(3) && is_bicritical(g)
}

pub fn classify_brick(g: &Graph) -> BrickKind {
    if !is_bicritical(g) {
        return BrickKind::NotBicritical;
    }
    if !g.is_k_connected(3) {
        return BrickKind::BicriticalNotBrick;
    }
    if g.edges().into_iter().any(|e| is_brick(&g.without_edge(e))) {
        BrickKind::BrickNotMinimal
    } else {
        BrickKind::MinimalBrick
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn k_factor_critical_examples() {
        assert!(is_k_factor_critical(&Graph::complete(4), 2).unwrap());
        assert!(!is_k_factor_critical(&Graph::cycle(4), 2).unwrap());
        assert!(!is_k_factor_critical(&Graph::cycle(4), 1).unwrap());
        assert!(is_k_factor_critical(&Graph::cycle(5), 1).unwrap());
        assert_eq!(
            is_k_factor_critical(&Graph::cycle(4), 4),
            Err(Error::KOutOfRange { k: 4, order: 4 })
        );
        assert!(is_k_factor_critical(&Graph::cycle(4), 0).is_err());
    }

    #[test]
    fn witness_points_at_the_failure() {
        let w = k_factor_critical_witness(&Graph::cycle(6), 2)
            .unwrap()
            .unwrap();
        let mut g = Graph::cycle(6);
        let mask = w.mask(6);
        assert!(!MatchingEngine::new().has_perfect_matching_excluding(&g, &mask));
        // Degree pruning path on a pendant vertex.
        g = Graph::complete(5);
        let g = Graph::from_edge_list(
            6,
            g.edges().into_iter().map(|e| e.endpoints()).chain([(4, 5)]),
        )
        .unwrap();
        let w = k_factor_critical_witness(&g, 2).unwrap().unwrap();
        assert!(!MatchingEngine::new().has_perfect_matching_excluding(&g, &w.mask(6)));
    }

    #[test]
    fn bicritical_examples() {
        assert!(is_bicritical(&Graph::complete(4)));
        assert!(!is_bicritical(&named::k33()));
        assert!(is_bicritical(&named::octahedron()));
        assert!(!is_bicritical(&Graph::complete(2)));
        assert!(is_bicritical(&named::d4()));
        assert!(is_bicritical(&named::t8()));
        assert!(!is_bicritical(&named::cube()));
    }

    #[test]
    fn deletable_edge_examples() {
        assert!(deletable_edges(&Graph::complete(4)).unwrap().is_empty());
        let oct = named::octahedron();
        let de = deletable_edges(&oct).unwrap();
        assert!(!de.is_empty());
        assert!(is_bicritical(&oct.without_edge(de[0])));
        assert!(deletable_edges(&named::d4()).unwrap().is_empty());
        assert_eq!(deletable_edges(&Graph::cycle(6)), Err(Error::NotBicritical));
    }

    #[test]
    fn minimal_examples() {
        assert!(is_minimal_k_factor_critical(&Graph::complete(4), 2).unwrap());
        assert!(!is_minimal_k_factor_critical(&named::octahedron(), 2).unwrap());
        assert!(is_minimal_k_factor_critical(&named::t8(), 2).unwrap());
        assert!(is_minimal_k_factor_critical(&Graph::cycle(5), 1).unwrap());
        assert!(is_minimal_bicritical(&named::d4()));
    }

    #[test]
    fn barrier_examples() {
        let k4 = Graph::complete(4);
        assert!(is_barrier(&k4, &[0].into_iter().collect()).unwrap());
        assert!(is_barrier(&Graph::cycle(4), &VertexSet::pair(0, 2)).unwrap());
        assert!(!is_barrier(&named::d4(), &VertexSet::pair(0, 1)).unwrap());
        assert!(is_barrier(&named::d4(), &VertexSet::new()).unwrap());
        assert_eq!(
            is_barrier(&Graph::cycle(5), &VertexSet::new()),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn separation_examples() {
        assert!(two_separations(&Graph::cycle(4)).unwrap().is_empty());
        assert!(two_separations(&Graph::complete(4)).unwrap().is_empty());
        assert_eq!(
            two_separations(&named::d4()).unwrap(),
            vec![VertexSet::pair(0, 1)]
        );
        assert_eq!(
            classify_two_cut(&Graph::cycle(4), &VertexSet::pair(0, 2)),
            Some(SeparationKind::Barrier)
        );
        assert_eq!(
            classify_two_cut(&named::d4(), &VertexSet::pair(0, 1)),
            Some(SeparationKind::Separation)
        );
        assert_eq!(classify_two_cut(&named::d4(), &VertexSet::pair(2, 3)), None);
        assert_eq!(
            two_separations(&Graph::cycle(5)),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn brick_classification() {
        assert_eq!(classify_brick(&Graph::complete(4)), BrickKind::MinimalBrick);
        assert_eq!(classify_brick(&named::petersen()), BrickKind::MinimalBrick);
        assert_eq!(classify_brick(&named::d4()), BrickKind::BicriticalNotBrick);
        assert_eq!(
            classify_brick(&named::octahedron()),
            BrickKind::BrickNotMinimal
        );
        assert_eq!(classify_brick(&Graph::cycle(6)), BrickKind::NotBicritical);
    }
}
