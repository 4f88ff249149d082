//! Gluing two halves along a shared vertex pair, and random instances of it.
//!
//! A half is a connected graph on at least three vertices whose shared pair
//! sits at local vertices `0` and `1`. The glued graph is their union; the
//! closure of a half is the half plus the edge `01`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Status, VerdictReport, Witness};
use crate::criticality::{deletable_edges, is_bicritical};
use crate::decomposition::glue;
use crate::graph::{Edge, Graph};
use crate::graph6::emit_graph6;
use crate::named;

/// Largest glued order produced by [`random_instances`].
pub const MAX_GLUED_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueInstance {
    pub left: Graph,
    pub right: Graph,
}

fn closure(half: &Graph) -> Graph {
    half.with_edge(Edge::new(0, 1))
}

impl GlueInstance {
    /// Both halves must be connected with at least three vertices.
    pub fn new(left: Graph, right: Graph) -> Option<Self> {
        let ok = |h: &Graph| h.order() >= 3 && h.is_connected();
        (ok(&left) && ok(&right)).then_some(GlueInstance { left, right })
    }

    pub fn glued(&self) -> Graph {
        glue(&self.left, (0, 1), &self.right, (0, 1))
    }

    pub fn closures(&self) -> (Graph, Graph) {
        (closure(&self.left), closure(&self.right))
    }
}

fn minimal(g: &Graph) -> bool {
    deletable_edges(g).is_ok_and(|d| d.is_empty())
}

/// The glued graph is bicritical exactly when both closures are; when the
/// pair is nonadjacent in the glued graph and both closures are minimal
/// bicritical, so is the glued graph.
pub fn verify_gluing(inst: &GlueInstance) -> VerdictReport {
    let g = inst.glued();
    let (a, b) = inst.closures();
    let mut report = VerdictReport::new("gluing", &g);
    let (ba, bb, bg) = (is_bicritical(&a), is_bicritical(&b), is_bicritical(&g));
    report = report
        .stat("halves_bicritical", ba as usize + bb as usize)
        .stat("glued_bicritical", bg as usize);
    let halves = Witness::Halves {
        left: emit_graph6(&a),
        right: emit_graph6(&b),
    };
    if bg != (ba && bb) {
        return report.fail(
            halves,
            format!("glued graph bicritical = {bg}, halves {ba} and {bb}"),
        );
    }
    if !g.has_edge(0, 1) && ba && bb && minimal(&a) && minimal(&b) {
        report = report.stat("minimal_case", 1);
        if !minimal(&g) {
            return report.fail(halves, "minimal halves glue to a non-minimal graph");
        }
    }
    report
}

/// Relabel `g` so that `x` and `y` become vertices `0` and `1`.
fn pair_first(g: &Graph, x: usize, y: usize) -> Graph {
    let mut order = vec![x, y];
    order.extend((0..g.order()).filter(|&v| v != x && v != y));
    let mut perm = vec![0; g.order()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm)
}

fn random_connected(rng: &mut ChaCha8Rng, order: usize) -> Graph {
    let p = rng.gen_range(0.3..0.9);
    loop {
        let edges = (0..order)
            .flat_map(|a| (a + 1..order).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p));
        let g = Graph::from_edge_list(order, edges.collect::<Vec<_>>()).expect("in range");
        if g.is_connected() {
            return g;
        }
    }
}

fn pool() -> Vec<Graph> {
    [
        Graph::complete(4),
        named::d4(),
        named::octahedron(),
        named::prism(),
        named::wheel(5),
        Graph::complete(6),
    ]
    .into_iter()
    .filter(is_bicritical)
    .collect()
}

/// A half with at most `max_inner` vertices besides the pair. Mixes random
/// connected graphs with bicritical graphs opened at a random pair, so both
/// outcomes of the equivalence are exercised.
fn random_half(rng: &mut ChaCha8Rng, pool: &[Graph], max_inner: usize) -> Graph {
    let fitting: Vec<&Graph> = pool.iter().filter(|g| g.order() - 2 <= max_inner).collect();
    if !fitting.is_empty() && rng.gen_bool(0.5) {
        let g = *fitting.choose(rng).unwrap();
        let x = rng.gen_range(0..g.order());
        let y = (x + rng.gen_range(1..g.order())) % g.order();
        let h = pair_first(g, x, y);
        if rng.gen_bool(0.5) {
            return h.without_edge(Edge::new(0, 1));
        }
        return h;
    }
    let inner = rng.gen_range(1..=max_inner);
    random_connected(rng, 2 + inner)
}

/// `count` reproducible instances with glued order at most
/// [`MAX_GLUED_ORDER`]. The edge `01` appears in at most one half.
pub fn random_instances(count: usize, seed: u64) -> Vec<GlueInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = pool();
    let budget = MAX_GLUED_ORDER - 2;
    (0..count)
        .map(|_| loop {
            let left = random_half(&mut rng, &pool, budget - 1);
            let right = random_half(&mut rng, &pool, budget - (left.order() - 2));
            let right = if left.has_edge(0, 1) {
                right.without_edge(Edge::new(0, 1))
            } else {
                right
            };
            if let Some(inst) = GlueInstance::new(left, right) {
                break inst;
            }
        })
        .collect()
}

/// Outcome counts over a batch of instances; the first failure is kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GluingSummary {
    pub instances: usize,
    pub bicritical: usize,
    pub non_bicritical: usize,
    pub minimal_case: usize,
    pub first_failure: Option<VerdictReport>,
}

pub fn verify_random_gluings(count: usize, seed: u64) -> GluingSummary {
    let mut s = GluingSummary::default();
    for inst in random_instances(count, seed) {
        let r = verify_gluing(&inst);
        s.instances += 1;
        if r.stats["glued_bicritical"] == 1 {
            s.bicritical += 1;
        } else {
            s.non_bicritical += 1;
        }
        s.minimal_case += r.stats.get("minimal_case").copied().unwrap_or(0) as usize;
        if r.status == Status::Fail && s.first_failure.is_none() {
            s.first_failure = Some(r);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_halves_glue_to_d4() {
        let half = Graph::complete(4).without_edge(Edge::new(0, 1));
        let inst = GlueInstance::new(half.clone(), half).unwrap();
        assert_eq!(inst.glued(), named::d4());
        let r = verify_gluing(&inst);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.stats["minimal_case"], 1);
        assert_eq!(r.stats["glued_bicritical"], 1);
    }

    #[test]
    fn path_half_is_not_bicritical() {
        let path = Graph::from_edge_list(3, [(0, 2), (2, 1)]).unwrap();
        let k4 = Graph::complete(4).without_edge(Edge::new(0, 1));
        let r = verify_gluing(&GlueInstance::new(path, k4).unwrap());
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.stats["glued_bicritical"], 0);
        assert!(GlueInstance::new(Graph::complete(2), Graph::complete(3)).is_none());
    }

    #[test]
    fn instances_are_reproducible_and_bounded() {
        let a = random_instances(50, 9);
        assert_eq!(a, random_instances(50, 9));
        for inst in &a {
            assert!(inst.glued().order() <= MAX_GLUED_ORDER);
            assert!(!(inst.left.has_edge(0, 1) && inst.right.has_edge(0, 1)));
        }
    }

    #[test]
    fn batch_covers_both_outcomes() {
        let s = verify_random_gluings(200, 1);
        assert_eq!(s.first_failure, None);
        assert!(s.bicritical > 0 && s.non_bicritical > 0, "{s:?}");
    }
}
