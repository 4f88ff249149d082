//! One named check per structural statement about bicritical graphs and
//! their brick decompositions. Every check yields a [`VerdictReport`]; a
//! failing report always carries a witness that [`recheck`] can confirm
//! through the brute-force [`oracle`].

pub mod gluing;
pub mod oracle;

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::criticality::{
    classify_brick, deletable_edges, is_bicritical, is_minimal_k_factor_critical, two_separations,
    BrickKind,
};
use crate::decomposition::{
    brick_decomposition, decompose_from, split_at, DecompositionTree, LabeledGraph,
    SeparationPolicy,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::matching::{is_matching_covered, removable_edges};
use oracle::Dense;

/// Outcome of one check on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// The hypothesis of the statement does not apply to this graph.
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Vertices {
        vertices: Vec<usize>,
    },
    Pair {
        u: usize,
        v: usize,
    },
    Edge {
        u: usize,
        v: usize,
    },
    /// A node of the lexicographic decomposition tree (preorder index).
    Node {
        node: usize,
        policy: SeparationPolicy,
    },
    /// The two closed halves of a glued graph, shared pair at `0` and `1`.
    Halves {
        left: String,
        right: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub check: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(default)]
    pub stats: BTreeMap<String, u64>,
}

impl VerdictReport {
    fn new(check: impl Into<String>, g: &Graph) -> Self {
        VerdictReport {
            check: check.into(),
            subject: emit_graph6(g),
            status: Status::Pass,
            witness: None,
            detail: None,
            stats: BTreeMap::new(),
        }
    }

    fn vacuous(mut self, why: &str) -> Self {
        self.status = Status::Vacuous;
        self.detail = Some(why.to_string());
        self
    }

    fn fail(mut self, witness: Witness, detail: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self.detail = Some(detail.into());
        self
    }

    fn stat(mut self, key: &str, value: usize) -> Self {
        self.stats.insert(key.to_string(), value as u64);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One JSON object on a single line.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

/// The registered checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    MainTheorem,
    MinimalBrickCubics,
    MarkerLemma,
    DecompositionInvariance,
    DeletableTransfer,
    SeparationProperties,
    StructuralExclusions,
    MinDegree,
    SplitBicriticality,
    LeafDeletables,
    DegreePreservation,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::MainTheorem,
        Check::MinimalBrickCubics,
        Check::MarkerLemma,
        Check::DecompositionInvariance,
        Check::DeletableTransfer,
        Check::SeparationProperties,
        Check::StructuralExclusions,
        Check::MinDegree,
        Check::SplitBicriticality,
        Check::LeafDeletables,
        Check::DegreePreservation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::MainTheorem => "main_theorem",
            Check::MinimalBrickCubics => "minimal_brick_cubics",
            Check::MarkerLemma => "marker_lemma",
            Check::DecompositionInvariance => "decomposition_invariance",
            Check::DeletableTransfer => "deletable_transfer",
            Check::SeparationProperties => "separation_properties",
            Check::StructuralExclusions => "structural_exclusions",
            Check::MinDegree => "min_degree",
            Check::SplitBicriticality => "split_bicriticality",
            Check::LeafDeletables => "leaf_deletables",
            Check::DegreePreservation => "degree_preservation",
        }
    }

    /// Parse a comma-separated suite; `all` expands to every check.
    pub fn parse_suite(text: &str) -> Result<Vec<Check>> {
        let mut out = BTreeSet::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.insert(part.parse()?);
            }
        }
        Ok(out.into_iter().collect())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// Deliberately simple predicates for exercising the counterexample hunt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Probe {
    /// False claim: every bicritical graph is 3-connected.
    EveryBicriticalIsBrick,
    AlwaysTrue,
}

impl Probe {
    pub fn name(self) -> &'static str {
        match self {
            Probe::EveryBicriticalIsBrick => "every_bicritical_is_brick",
            Probe::AlwaysTrue => "always_true",
        }
    }
}

/// Anything the hunt can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Check(Check),
    Probe(Probe),
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        for p in [Probe::EveryBicriticalIsBrick, Probe::AlwaysTrue] {
            if p.name() == s {
                return Ok(Predicate::Probe(p));
            }
        }
        s.parse().map(Predicate::Check)
    }
}

/// Parameters shared by the checks that build random decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Number of seeded-random policies compared against the lexicographic one.
    pub trials: usize,
    /// Seeds used are `seed..seed + trials`.
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 10,
            seed: 0,
        }
    }
}

/// Per-graph analysis shared read-only by every check on that graph.
pub struct Analysis {
    graph: Graph,
    config: CheckConfig,
    bicritical: OnceCell<bool>,
    deletable: OnceCell<Vec<Edge>>,
    brick_kind: OnceCell<BrickKind>,
    three_connected: OnceCell<bool>,
    lex_tree: OnceCell<DecompositionTree>,
}

impl Analysis {
    pub fn new(graph: Graph, config: CheckConfig) -> Self {
        Analysis {
            graph,
            config,
            bicritical: OnceCell::new(),
            deletable: OnceCell::new(),
            brick_kind: OnceCell::new(),
            three_connected: OnceCell::new(),
            lex_tree: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_bicritical(&self) -> bool {
        *self.bicritical.get_or_init(|| is_bicritical(&self.graph))
    }

    /// `DE(g)`; empty for non-bicritical graphs.
    pub fn deletable(&self) -> &[Edge] {
        self.deletable.get_or_init(|| {
            if self.is_bicritical() {
                deletable_edges(&self.graph).expect("bicritical")
            } else {
                Vec::new()
            }
        })
    }

    pub fn is_minimal_bicritical(&self) -> bool {
        self.is_bicritical() && self.deletable().is_empty()
    }

    pub fn is_three_connected(&self) -> bool {
        *self
            .three_connected
            .get_or_init(|| self.graph.is_k_connected(3))
    }

    pub fn is_brick(&self) -> bool {
        self.is_bicritical() && self.is_three_connected()
    }

    pub fn brick_kind(&self) -> BrickKind {
        *self.brick_kind.get_or_init(|| {
            if !self.is_bicritical() {
                BrickKind::NotBicritical
            } else if !self.is_three_connected() {
                BrickKind::BicriticalNotBrick
            } else {
                classify_brick(&self.graph)
            }
        })
    }

    /// Lexicographic decomposition tree of a bicritical graph.
    pub fn lex_tree(&self) -> Option<&DecompositionTree> {
        if !self.is_bicritical() {
            return None;
        }
        Some(self.lex_tree.get_or_init(|| {
            brick_decomposition(&self.graph, SeparationPolicy::Lexicographic)
                .expect("bicritical input decomposes")
        }))
    }

    fn trees(&self) -> Result<Vec<(SeparationPolicy, DecompositionTree)>> {
        let mut out = vec![(
            SeparationPolicy::Lexicographic,
            self.lex_tree().unwrap().clone(),
        )];
        for seed in self.config.seed..self.config.seed + self.config.trials as u64 {
            let policy = SeparationPolicy::SeededRandom(seed);
            out.push((policy, brick_decomposition(&self.graph, policy)?));
        }
        Ok(out)
    }

    pub fn run(&self, check: Check) -> VerdictReport {
        let g = &self.graph;
        let inapplicable = |e: Error| VerdictReport::new(check.name(), g).vacuous(&e.to_string());
        match check {
            Check::MainTheorem => main_theorem(self),
            Check::MinimalBrickCubics => minimal_brick_cubics(self),
            Check::MarkerLemma => match self.lex_tree() {
                Some(t) => verify_marker_lemma_named(g, t).unwrap_or_else(inapplicable),
                None => inapplicable(Error::NotBicritical),
            },
            Check::DecompositionInvariance => {
                if !self.is_bicritical() {
                    return inapplicable(Error::NotBicritical);
                }
                decomposition_invariance(self).unwrap_or_else(inapplicable)
            }
            Check::DeletableTransfer => deletable_transfer_all(self),
            Check::SeparationProperties => {
                if !self.is_bicritical() {
                    return inapplicable(Error::NotBicritical);
                }
                separation_properties(g)
            }
            Check::StructuralExclusions => {
                if !self.is_minimal_bicritical() {
                    return inapplicable(Error::NotMinimalBicritical);
                }
                structural_exclusions(g)
            }
            Check::MinDegree => {
                let minimal = g.order() > 2 && self.is_minimal_bicritical();
                min_degree_with(g, 2, minimal)
            }
            Check::SplitBicriticality => split_bicriticality(self),
            Check::LeafDeletables => leaf_deletables(self).unwrap_or_else(inapplicable),
            Check::DegreePreservation => degree_preservation(self),
        }
    }

    pub fn run_probe(&self, probe: Probe) -> VerdictReport {
        let g = &self.graph;
        let report = VerdictReport::new(probe.name(), g);
        match probe {
            Probe::AlwaysTrue => report,
            Probe::EveryBicriticalIsBrick => {
                if !self.is_bicritical() {
                    return report.vacuous("not bicritical");
                }
                if self.is_three_connected() {
                    return report;
                }
                let cut = two_separations(g).expect("bicritical")[0].clone();
                let (u, v) = (cut.as_slice()[0], cut.as_slice()[1]);
                report.fail(
                    Witness::Pair { u, v },
                    "bicritical graph with a 2-vertex cut",
                )
            }
        }
    }

    pub fn evaluate(&self, predicate: Predicate) -> VerdictReport {
        match predicate {
            Predicate::Check(c) => self.run(c),
            Predicate::Probe(p) => self.run_probe(p),
        }
    }
}

fn main_theorem(a: &Analysis) -> VerdictReport {
    let g = a.graph();
    let report = VerdictReport::new(Check::MainTheorem.name(), g);
    if !a.is_minimal_bicritical() {
        return report
            .vacuous("not minimal bicritical")
            .stat("applicable", 0);
    }
    let cubic = g.cubic_vertices();
    let report = report
        .stat("applicable", 1)
        .stat("cubic_vertices", cubic.len());
    if cubic.len() >= 4 {
        report
    } else {
        report.fail(
            Witness::Vertices {
                vertices: cubic.as_slice().to_vec(),
            },
            format!(
                "minimal bicritical with only {} cubic vertices",
                cubic.len()
            ),
        )
    }
}

/// Minimal bicritical graphs have at least four vertices of degree three.
pub fn verify_main_theorem(g: &Graph) -> VerdictReport {
    main_theorem(&Analysis::new(g.clone(), CheckConfig::default()))
}

fn minimal_brick_cubics(a: &Analysis) -> VerdictReport {
    let g = a.graph();
    let report = VerdictReport::new(Check::MinimalBrickCubics.name(), g);
    if a.brick_kind() != BrickKind::MinimalBrick {
        return report.vacuous("not a minimal brick").stat("applicable", 0);
    }
    let cubic = g.cubic_vertices();
    let report = report
        .stat("applicable", 1)
        .stat("cubic_vertices", cubic.len())
        .stat("at_least_three", (cubic.len() >= 3) as usize);
    if cubic.len() >= 4 {
        report
    } else {
        report.fail(
            Witness::Vertices {
                vertices: cubic.as_slice().to_vec(),
            },
            format!("minimal brick with only {} cubic vertices", cubic.len()),
        )
    }
}

/// Minimal bricks have at least four (hence at least three) cubic vertices.
pub fn verify_minimal_brick_cubics(g: &Graph) -> VerdictReport {
    minimal_brick_cubics(&Analysis::new(g.clone(), CheckConfig::default()))
}

fn tree_count_failure(t: &DecompositionTree) -> Option<String> {
    let c = t.counts();
    if c.splits + 1 != c.bricks {
        return Some(format!("s = {} but b = {}", c.splits, c.bricks));
    }
    if c.marker_total > 2 * c.splits {
        return Some(format!(
            "{} markers exceed 2s = {}",
            c.marker_total,
            2 * c.splits
        ));
    }
    None
}

fn verify_marker_lemma_named(g: &Graph, t: &DecompositionTree) -> Result<VerdictReport> {
    let c = t.counts();
    if c.bricks < 2 {
        return Err(Error::Inapplicable("root is already a brick".into()));
    }
    let single: Vec<usize> = t
        .leaves()
        .filter(|(_, n)| n.graph.marker_count() == 1)
        .map(|(i, _)| i)
        .collect();
    let report = VerdictReport::new(Check::MarkerLemma.name(), g)
        .stat("splits", c.splits)
        .stat("bricks", c.bricks)
        .stat("marker_total", c.marker_total)
        .stat("single_marker_leaves", single.len());
    let node = Witness::Node {
        node: 0,
        policy: SeparationPolicy::Lexicographic,
    };
    if let Some(why) = tree_count_failure(t) {
        return Ok(report.fail(node, why));
    }
    if single.len() < 2 {
        return Ok(report.fail(
            node,
            format!("only {} leaves carry exactly one marker", single.len()),
        ));
    }
    Ok(report)
}

/// At least two leaves carry exactly one marker edge, with `s = b - 1` and
/// at most `2s` markers in total. Errors on a single-leaf tree.
pub fn verify_marker_lemma(t: &DecompositionTree) -> Result<VerdictReport> {
    verify_marker_lemma_named(t.root().graph.graph(), t)
}

fn decomposition_invariance(a: &Analysis) -> Result<VerdictReport> {
    let g = a.graph();
    let trees = a.trees()?;
    let reference = trees[0].1.brick_multiset()?;
    let mut report = VerdictReport::new(Check::DecompositionInvariance.name(), g)
        .stat("trials", trees.len() - 1)
        .stat("bricks", reference.len());
    for (policy, t) in &trees {
        let node = Witness::Node {
            node: 0,
            policy: *policy,
        };
        if let Some(why) = tree_count_failure(t) {
            return Ok(report.fail(node, why));
        }
        if t.brick_multiset()? != reference {
            return Ok(report.fail(node, "brick multiset differs from the lexicographic one"));
        }
    }
    report.detail = Some(
        reference
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    Ok(report)
}

/// Brick multisets agree across the lexicographic policy and `trials`
/// seeded-random policies (seeds `0..trials`).
pub fn verify_decomposition_invariance(g: &Graph, trials: usize) -> Result<VerdictReport> {
    let a = Analysis::new(g.clone(), CheckConfig { trials, seed: 0 });
    if !a.is_bicritical() {
        return Err(Error::NotBicritical);
    }
    decomposition_invariance(&a)
}

#[derive(Default)]
struct TransferTally {
    case_nonadjacent: usize,
    case_adjacent: usize,
}

fn original_deletables(node: &LabeledGraph) -> Result<BTreeSet<Edge>> {
    Ok(deletable_edges(node.graph())?
        .into_iter()
        .map(|e| node.to_original(e))
        .collect())
}

/// Check the deletable-edge identities at one split, then recurse into both
/// children along their lexicographic decompositions.
fn transfer_at(
    node: &LabeledGraph,
    cut: &VertexSet,
    tally: &mut TransferTally,
) -> std::result::Result<(), (Witness, String)> {
    let (cu, cv) = (cut.as_slice()[0], cut.as_slice()[1]);
    let uv = node.to_original(Edge::new(cu, cv));
    let pair = Witness::Pair {
        u: uv.u(),
        v: uv.v(),
    };
    let parent_de =
        original_deletables(node).map_err(|e| (pair.clone(), format!("parent: {e}")))?;
    let adjacent = node.graph().has_edge(cu, cv);
    let (left, right) = split_at(node, cut).map_err(|e| (pair.clone(), e.to_string()))?;
    for child in [&left, &right] {
        let child_de = original_deletables(child)
            .map_err(|e| (pair.clone(), format!("child on {:?}: {e}", child.origin())))?;
        let child_edges = child.original_edges();
        let rhs: BTreeSet<Edge> = parent_de.intersection(&child_edges).copied().collect();
        let mut lhs = child_de.clone();
        if adjacent {
            lhs.insert(uv);
            tally.case_adjacent += 1;
        } else {
            lhs.remove(&uv);
            tally.case_nonadjacent += 1;
        }
        if lhs != rhs {
            let e = lhs
                .symmetric_difference(&rhs)
                .next()
                .copied()
                .expect("sets differ");
            return Err((
                Witness::Edge { u: e.u(), v: e.v() },
                format!(
                    "split at {{{},{}}} ({}): edge {e} breaks the identity for child on {:?}",
                    uv.u(),
                    uv.v(),
                    if adjacent { "uv present" } else { "uv absent" },
                    child.origin()
                ),
            ));
        }
    }
    for child in [left, right] {
        if child.graph().is_k_connected(3) {
            continue;
        }
        let seps = two_separations(child.graph()).map_err(|e| (pair.clone(), e.to_string()))?;
        let Some(first) = seps.first() else {
            return Err((pair, "child is neither 3-connected nor separable".into()));
        };
        transfer_at(&child, first, tally)?;
    }
    Ok(())
}

/// Deletable-edge transfer across a split at `sep`, recursively through the
/// lexicographic decomposition of both children.
pub fn verify_deletable_transfer(g: &Graph, sep: &VertexSet) -> Result<VerdictReport> {
    if !is_bicritical(g) {
        return Err(Error::NotBicritical);
    }
    if sep.len() != 2 || !two_separations(g)?.contains(sep) {
        let (a, b) = (sep.as_slice()[0], *sep.as_slice().get(1).unwrap_or(&0));
        return Err(if g.components_excluding(&sep.mask(g.order())).len() < 2 {
            Error::NotACut(a, b)
        } else {
            Error::Barrier(a, b)
        });
    }
    let mut tally = TransferTally::default();
    let report = VerdictReport::new(Check::DeletableTransfer.name(), g);
    let outcome = transfer_at(&LabeledGraph::root(g.clone()), sep, &mut tally);
    let report = report
        .stat("case_uv_absent", tally.case_nonadjacent)
        .stat("case_uv_present", tally.case_adjacent);
    Ok(match outcome {
        Ok(()) => report,
        Err((w, why)) => report.fail(w, why),
    })
}

fn deletable_transfer_all(a: &Analysis) -> VerdictReport {
    let g = a.graph();
    let report = VerdictReport::new(Check::DeletableTransfer.name(), g);
    if !a.is_bicritical() {
        return report.vacuous("not bicritical");
    }
    let seps = two_separations(g).expect("bicritical");
    if seps.is_empty() {
        return report.vacuous("no 2-separation");
    }
    let mut totals: BTreeMap<String, u64> = BTreeMap::new();
    for sep in &seps {
        let r = verify_deletable_transfer(g, sep).expect("valid separation");
        if r.status == Status::Fail {
            return r;
        }
        for (k, v) in r.stats {
            *totals.entry(k).or_default() += v;
        }
    }
    let mut report = report.stat("separations", seps.len());
    report.stats.extend(totals);
    report
}

/// Properties of every 2-separation of a bicritical graph: every
/// 2-cut is a separation, components are even, both cut vertices have at
/// least two neighbours in each component, and an adjacent cut pair spans a
/// removable edge whose deletion keeps the graph bicritical.
pub fn verify_separation_properties(g: &Graph) -> Result<VerdictReport> {
    if !is_bicritical(g) {
        return Err(Error::NotBicritical);
    }
    Ok(separation_properties(g))
}

fn separation_properties(g: &Graph) -> VerdictReport {
    let report = VerdictReport::new(Check::SeparationProperties.name(), g);
    let cuts = g.vertex_cuts(2).expect("bicritical graphs are connected");
    let minimal = !cuts.is_empty() && deletable_edges(g).is_ok_and(|d| d.is_empty());
    let mut adjacent_pairs = 0;
    let mut removable: Option<Vec<Edge>> = None;
    for cut in &cuts {
        let (u, v) = (cut.as_slice()[0], cut.as_slice()[1]);
        let pair = Witness::Pair { u, v };
        let comps = g.components_excluding(&cut.mask(g.order()));
        if let Some(c) = comps.iter().find(|c| c.len() % 2 == 1) {
            return report.fail(pair, format!("odd component {c:?}"));
        }
        for c in &comps {
            for x in [u, v] {
                let k = c.iter().filter(|&&y| g.has_edge(x, y)).count();
                if k < 2 {
                    return report.fail(
                        pair,
                        format!("vertex {x} has {k} neighbours in component {c:?}"),
                    );
                }
            }
        }
        if g.has_edge(u, v) {
            adjacent_pairs += 1;
            let e = Edge::new(u, v);
            if minimal {
                return report.fail(
                    pair,
                    "2-separation of a minimal bicritical graph is not independent",
                );
            }
            if !is_bicritical(&g.without_edge(e)) {
                return report.fail(pair, "deleting the cut edge destroys bicriticality");
            }
            let rem = removable.get_or_insert_with(|| removable_edges(g).unwrap_or_default());
            if !rem.contains(&e) || !is_matching_covered(&g.without_edge(e)) {
                return report.fail(pair, "cut edge is not removable");
            }
        }
    }
    report
        .stat("separations", cuts.len())
        .stat("adjacent_separations", adjacent_pairs)
}

/// No `K_{3,3}` subgraph, and no wheel subgraph unless the graph is a wheel.
pub fn verify_structural_exclusions(g: &Graph) -> Result<VerdictReport> {
    if !crate::criticality::is_minimal_bicritical(g) {
        return Err(Error::NotMinimalBicritical);
    }
    Ok(structural_exclusions(g))
}

fn structural_exclusions(g: &Graph) -> VerdictReport {
    let report = VerdictReport::new(Check::StructuralExclusions.name(), g);
    if let Some((a, b)) = g.find_k33() {
        let vertices = a.iter().chain(b.iter()).collect();
        return report.fail(Witness::Vertices { vertices }, "contains K_{3,3}");
    }
    let is_wheel = g.is_wheel();
    match g.find_wheel() {
        Some((hub, cycle)) if !is_wheel => {
            let vertices = std::iter::once(hub).chain(cycle).collect();
            report.fail(
                Witness::Vertices { vertices },
                "contains a wheel but is not one",
            )
        }
        found => report
            .stat("contains_wheel", found.is_some() as usize)
            .stat("is_wheel", is_wheel as usize),
    }
}

fn min_degree_with(g: &Graph, k: usize, minimal: bool) -> VerdictReport {
    let report = VerdictReport::new(Check::MinDegree.name(), g).stat("k", k);
    if !minimal {
        return report
            .vacuous("not minimal k-factor-critical")
            .stat("applicable", 0);
    }
    let d = g.min_degree().unwrap_or(0);
    let report = report.stat("applicable", 1).stat("min_degree", d);
    if d == k + 1 {
        report
    } else {
        let v = (0..g.order()).find(|&v| g.degree(v) == d).unwrap_or(0);
        report.fail(
            Witness::Vertices { vertices: vec![v] },
            format!("minimum degree {d}, expected {}", k + 1),
        )
    }
}

/// Minimal `k`-factor-critical graphs have minimum degree exactly `k + 1`.
pub fn verify_min_degree(g: &Graph, k: usize) -> VerdictReport {
    let minimal = is_minimal_k_factor_critical(g, k).unwrap_or(false);
    min_degree_with(g, k, minimal)
}

fn split_bicriticality(a: &Analysis) -> VerdictReport {
    let g = a.graph();
    let report = VerdictReport::new(Check::SplitBicriticality.name(), g);
    let Some(t) = a.lex_tree() else {
        return report.vacuous("not bicritical");
    };
    for (i, node) in t.nodes().iter().enumerate().skip(1) {
        let witness = Witness::Node {
            node: i,
            policy: SeparationPolicy::Lexicographic,
        };
        if !is_bicritical(node.graph.graph()) {
            return report.fail(witness, "split produced a non-bicritical child");
        }
        let lg = &node.graph;
        if let Some(e) = lg
            .graph()
            .edges()
            .into_iter()
            .find(|&e| !lg.is_marker(e) && !g.has_edge(lg.origin()[e.u()], lg.origin()[e.v()]))
        {
            return report.fail(
                witness,
                format!("edge {} has no counterpart in the root", lg.to_original(e)),
            );
        }
        if node.is_leaf() && !node.graph.graph().is_k_connected(3) {
            return report.fail(witness, "leaf is not 3-connected");
        }
    }
    report.stat("nodes", t.nodes().len())
}

fn leaf_deletables(a: &Analysis) -> Result<VerdictReport> {
    let g = a.graph();
    let report = VerdictReport::new(Check::LeafDeletables.name(), g);
    if !a.is_minimal_bicritical() {
        return Ok(report.vacuous("not minimal bicritical"));
    }
    if a.is_three_connected() {
        return Ok(report.vacuous("already a brick"));
    }
    let mut checked = 0;
    for (policy, t) in a.trees()? {
        for (i, node) in t.nodes().iter().enumerate().skip(1) {
            let lg = &node.graph;
            for e in deletable_edges(lg.graph())? {
                if !lg.is_marker(e) {
                    let o = lg.to_original(e);
                    return Ok(report.fail(
                        Witness::Node { node: i, policy },
                        format!("non-marker edge {o} is deletable"),
                    ));
                }
            }
            checked += 1;
        }
    }
    Ok(report.stat("nodes_checked", checked))
}

fn degree_preservation(a: &Analysis) -> VerdictReport {
    let g = a.graph();
    let report = VerdictReport::new(Check::DegreePreservation.name(), g);
    let Some(t) = a.lex_tree() else {
        return report.vacuous("not bicritical");
    };
    if t.nodes().len() == 1 {
        return report.vacuous("already a brick");
    }
    let mut leaves = 0;
    for (i, node) in t.leaves() {
        let lg = &node.graph;
        if lg.marker_count() != 1 {
            continue;
        }
        leaves += 1;
        let marker = *lg.markers().iter().next().unwrap();
        for x in 0..lg.graph().order() {
            if marker.contains(x) {
                continue;
            }
            let (local, root) = (lg.graph().degree(x), g.degree(lg.origin()[x]));
            if local != root {
                return report.fail(
                    Witness::Node {
                        node: i,
                        policy: SeparationPolicy::Lexicographic,
                    },
                    format!(
                        "vertex {} has degree {local} in the leaf, {root} in the root",
                        lg.origin()[x]
                    ),
                );
            }
        }
    }
    report.stat("single_marker_leaves", leaves)
}

/// Run every check in `checks` against `g`, sharing one analysis.
pub fn run_checks(g: &Graph, checks: &[Check], config: CheckConfig) -> Vec<VerdictReport> {
    let a = Analysis::new(g.clone(), config);
    checks.iter().map(|&c| a.run(c)).collect()
}

/// Confirm a failing report through the brute-force oracle. Returns
/// `Ok(true)` when the failure reproduces, `Ok(false)` when it does not.
pub fn recheck(report: &VerdictReport) -> Result<bool> {
    if report.status != Status::Fail {
        return Ok(false);
    }
    let g = parse_graph6(&report.subject)?;
    let dense = Dense::new(&g);
    let cubic = (0..g.order()).filter(|&v| dense.degree(v) == 3).count();
    let witness = report
        .witness
        .clone()
        .ok_or_else(|| Error::InvalidArgument("failing report without witness".into()))?;
    let ok = match (report.check.as_str(), &witness) {
        ("main_theorem", Witness::Vertices { .. }) => {
            dense.minimal_k_factor_critical(2) && g.order() >= 4 && cubic < 4
        }
        ("minimal_brick_cubics", Witness::Vertices { .. }) => {
            dense.bicritical()
                && dense.three_connected()
                && dense.edges().into_iter().all(|(a, b)| {
                    let h = dense.without_edge(a, b);
                    !(h.bicritical() && h.three_connected())
                })
                && cubic < 4
        }
        ("structural_exclusions", Witness::Vertices { vertices }) => {
            let k33 = vertices.len() == 6
                && vertices[..3]
                    .iter()
                    .all(|&x| vertices[3..].iter().all(|&y| dense.adjacent(x, y)));
            let wheel = vertices.len() >= 4 && {
                let (hub, rim) = (vertices[0], &vertices[1..]);
                rim.iter().all(|&x| dense.adjacent(hub, x))
                    && (0..rim.len()).all(|i| dense.adjacent(rim[i], rim[(i + 1) % rim.len()]))
                    && !g.is_wheel()
            };
            dense.minimal_k_factor_critical(2) && (k33 || wheel)
        }
        ("min_degree", Witness::Vertices { vertices }) => {
            let k = *report.stats.get("k").unwrap_or(&2) as usize;
            let min = (0..g.order()).map(|v| dense.degree(v)).min().unwrap_or(0);
            dense.minimal_k_factor_critical(k) && min != k + 1 && dense.degree(vertices[0]) == min
        }
        ("every_bicritical_is_brick", &Witness::Pair { u, v }) => {
            let mut gone = vec![false; g.order()];
            gone[u] = true;
            gone[v] = true;
            dense.bicritical() && !dense.connected_avoiding(&gone)
        }
        ("separation_properties", &Witness::Pair { u, v }) => {
            let mut gone = vec![false; g.order()];
            gone[u] = true;
            gone[v] = true;
            let comps = dense.components_avoiding(&gone);
            let bad_component = comps.iter().any(|c| {
                c.len() % 2 == 1
                    || [u, v]
                        .iter()
                        .any(|&x| c.iter().filter(|&&y| dense.adjacent(x, y)).count() < 2)
            });
            let bad_edge = dense.adjacent(u, v) && {
                let h = dense.without_edge(u, v);
                !h.bicritical() || !dense.edges().is_empty() && dense.minimal_k_factor_critical(2)
            };
            dense.bicritical() && comps.len() >= 2 && (bad_component || bad_edge)
        }
        (_, Witness::Node { node, policy }) => {
            recheck_tree_failure(&g, &dense, &report.check, *node, *policy)?
        }
        ("gluing", Witness::Halves { left, right }) => {
            let (a, b) = (
                Dense::new(&parse_graph6(left)?),
                Dense::new(&parse_graph6(right)?),
            );
            let (ba, bb) = (a.bicritical(), b.bicritical());
            let minimal = |d: &Dense| d.minimal_k_factor_critical(2);
            dense.bicritical() != (ba && bb)
                || (!dense.adjacent(0, 1)
                    && ba
                    && bb
                    && minimal(&a)
                    && minimal(&b)
                    && !minimal(&dense))
        }
        ("deletable_transfer", Witness::Edge { u, v }) => {
            // Recompute the two sides of the identity for this edge by brute force.
            dense.bicritical() && transfer_edge_disagrees(&g, &dense, Edge::new(*u, *v))?
        }
        _ => false,
    };
    Ok(ok)
}

fn recheck_tree_failure(
    g: &Graph,
    dense: &Dense,
    check: &str,
    node: usize,
    policy: SeparationPolicy,
) -> Result<bool> {
    if !dense.bicritical() {
        return Ok(false);
    }
    let t = brick_decomposition(g, policy)?;
    let Some(n) = t.nodes().get(node) else {
        return Ok(false);
    };
    let local = Dense::new(n.graph.graph());
    Ok(match check {
        "split_bicriticality" => {
            let lg = &n.graph;
            !local.bicritical()
                || (n.is_leaf() && !local.three_connected())
                || local.edges().into_iter().any(|(a, b)| {
                    !lg.is_marker(Edge::new(a, b))
                        && !dense.adjacent(lg.origin()[a], lg.origin()[b])
                })
        }
        "leaf_deletables" => local.edges().into_iter().any(|(a, b)| {
            !n.graph.is_marker(Edge::new(a, b)) && local.without_edge(a, b).bicritical()
        }),
        "degree_preservation" => {
            let m = n.graph.markers().iter().next().copied();
            n.graph.marker_count() == 1
                && (0..local.order()).any(|x| {
                    !m.unwrap().contains(x) && local.degree(x) != dense.degree(n.graph.origin()[x])
                })
        }
        "marker_lemma" | "decomposition_invariance" => {
            let c = t.counts();
            let single = t
                .leaves()
                .filter(|(_, l)| l.graph.marker_count() == 1)
                .count();
            let lex = brick_decomposition(g, SeparationPolicy::Lexicographic)?;
            c.splits + 1 != c.bricks
                || c.marker_total > 2 * c.splits
                || (check == "marker_lemma" && single < 2)
                || (check == "decomposition_invariance"
                    && t.brick_multiset()? != lex.brick_multiset()?)
        }
        _ => false,
    })
}

/// Whether `e` lies in exactly one side of a deletable-edge identity at some
/// split along the lexicographic decomposition, recomputed by brute force.
fn transfer_edge_disagrees(g: &Graph, dense: &Dense, e: Edge) -> Result<bool> {
    let root = LabeledGraph::root(g.clone());
    let mut pending = vec![root];
    while let Some(node) = pending.pop() {
        let local = Dense::new(node.graph());
        if node.graph().is_k_connected(3) {
            continue;
        }
        let seps = two_separations(node.graph())?;
        let parent_de: BTreeSet<Edge> = local
            .edges()
            .into_iter()
            .filter(|&(a, b)| local.without_edge(a, b).bicritical())
            .map(|(a, b)| node.to_original(Edge::new(a, b)))
            .collect();
        for sep in &seps {
            let (cu, cv) = (sep.as_slice()[0], sep.as_slice()[1]);
            let uv = node.to_original(Edge::new(cu, cv));
            let adjacent = local.adjacent(cu, cv);
            let (l, r) = split_at(&node, sep)?;
            for child in [&l, &r] {
                let cd = Dense::new(child.graph());
                let mut lhs: BTreeSet<Edge> = cd
                    .edges()
                    .into_iter()
                    .filter(|&(a, b)| cd.without_edge(a, b).bicritical())
                    .map(|(a, b)| child.to_original(Edge::new(a, b)))
                    .collect();
                if adjacent {
                    lhs.insert(uv);
                } else {
                    lhs.remove(&uv);
                }
                let in_rhs = parent_de.contains(&e) && child.original_edges().contains(&e);
                if lhs.contains(&e) != in_rhs && child.original_edges().contains(&e) {
                    return Ok(true);
                }
            }
            if sep == &seps[0] {
                let _ = dense;
                pending.push(l);
                pending.push(r);
            }
        }
    }
    Ok(false)
}

/// Re-expand a subtree from one of its nodes with another policy.
pub fn redecompose(node: &LabeledGraph, policy: SeparationPolicy) -> Result<DecompositionTree> {
    decompose_from(node.clone(), policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn main_theorem_examples() {
        let r = verify_main_theorem(&Graph::complete(4));
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.stats["cubic_vertices"], 4);
        let r = verify_main_theorem(&named::d4());
        assert_eq!((r.status, r.stats["cubic_vertices"]), (Status::Pass, 4));
        assert_eq!(
            verify_main_theorem(&Graph::cycle(6)).status,
            Status::Vacuous
        );
    }

    #[test]
    fn minimal_brick_examples() {
        assert_eq!(
            verify_minimal_brick_cubics(&Graph::complete(4)).status,
            Status::Pass
        );
        let r = verify_minimal_brick_cubics(&named::petersen());
        assert_eq!((r.status, r.stats["cubic_vertices"]), (Status::Pass, 10));
        assert_eq!(
            verify_minimal_brick_cubics(&named::octahedron()).status,
            Status::Vacuous
        );
    }

    #[test]
    fn marker_lemma_examples() {
        let d4 = brick_decomposition(&named::d4(), SeparationPolicy::Lexicographic).unwrap();
        let r = verify_marker_lemma(&d4).unwrap();
        assert_eq!(
            (r.status, r.stats["single_marker_leaves"]),
            (Status::Pass, 2)
        );
        let t8 = brick_decomposition(&named::t8(), SeparationPolicy::Lexicographic).unwrap();
        let r = verify_marker_lemma(&t8).unwrap();
        assert_eq!(
            (r.status, r.stats["single_marker_leaves"]),
            (Status::Pass, 3)
        );
        let k4 = brick_decomposition(&Graph::complete(4), SeparationPolicy::Lexicographic).unwrap();
        assert!(matches!(
            verify_marker_lemma(&k4),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn invariance_examples() {
        for g in [named::t8(), named::d4(), Graph::complete(4)] {
            assert_eq!(
                verify_decomposition_invariance(&g, 10).unwrap().status,
                Status::Pass
            );
        }
        assert_eq!(
            verify_decomposition_invariance(&Graph::cycle(6), 10),
            Err(Error::NotBicritical)
        );
    }

    #[test]
    fn transfer_examples() {
        let r = verify_deletable_transfer(&named::d4(), &VertexSet::pair(0, 1)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.stats["case_uv_absent"], 2);
        let r = verify_deletable_transfer(&named::t8(), &VertexSet::pair(0, 1)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.stats["case_uv_present"], 2, "{r:?}");
        assert!(verify_deletable_transfer(&named::d4(), &VertexSet::pair(2, 3)).is_err());
        assert_eq!(
            verify_deletable_transfer(&Graph::cycle(4), &VertexSet::pair(0, 2)),
            Err(Error::NotBicritical)
        );
    }

    #[test]
    fn separation_examples() {
        let r = verify_separation_properties(&named::d4()).unwrap();
        assert_eq!((r.status, r.stats["separations"]), (Status::Pass, 1));
        let r = verify_separation_properties(&Graph::complete(4)).unwrap();
        assert_eq!((r.status, r.stats["separations"]), (Status::Pass, 0));
        let with_edge = named::d4().with_edge(Edge::new(0, 1));
        let r = verify_separation_properties(&with_edge).unwrap();
        assert_eq!(
            (r.status, r.stats["adjacent_separations"]),
            (Status::Pass, 1)
        );
        assert_eq!(
            verify_separation_properties(&named::k33()),
            Err(Error::NotBicritical)
        );
    }

    #[test]
    fn exclusion_examples() {
        for g in [Graph::complete(4), named::d4(), named::t8()] {
            assert_eq!(
                verify_structural_exclusions(&g).unwrap().status,
                Status::Pass
            );
        }
        assert_eq!(
            verify_structural_exclusions(&named::octahedron()),
            Err(Error::NotMinimalBicritical)
        );
    }

    #[test]
    fn min_degree_examples() {
        let r = verify_min_degree(&Graph::complete(4), 2);
        assert_eq!((r.status, r.stats["min_degree"]), (Status::Pass, 3));
        assert_eq!(verify_min_degree(&Graph::cycle(5), 1).status, Status::Pass);
        assert_eq!(
            verify_min_degree(&named::octahedron(), 2).status,
            Status::Vacuous
        );
    }

    #[test]
    fn tree_checks_pass_on_named_graphs() {
        for g in [
            named::d4(),
            named::t8(),
            named::d4().with_edge(Edge::new(0, 1)),
        ] {
            let reports = run_checks(&g, &Check::ALL, CheckConfig::default());
            for r in reports {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn probe_failure_rechecks() {
        let a = Analysis::new(named::d4(), CheckConfig::default());
        let r = a.run_probe(Probe::EveryBicriticalIsBrick);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness, Some(Witness::Pair { u: 0, v: 1 }));
        assert!(recheck(&r).unwrap());
        assert_eq!(VerdictReport::from_line(&r.to_line()).unwrap(), r);
    }

    #[test]
    fn fabricated_failures_do_not_recheck() {
        let mut r = verify_main_theorem(&Graph::complete(4));
        r.status = Status::Fail;
        r.witness = Some(Witness::Vertices {
            vertices: vec![0, 1, 2, 3],
        });
        assert!(!recheck(&r).unwrap());
        let mut r = verify_structural_exclusions(&named::d4()).unwrap();
        r.status = Status::Fail;
        r.witness = Some(Witness::Vertices {
            vertices: vec![0, 2, 3, 1],
        });
        assert!(!recheck(&r).unwrap());
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(Check::parse_suite("all").unwrap().len(), Check::ALL.len());
        assert_eq!(
            Check::parse_suite("main_theorem, min_degree").unwrap(),
            vec![Check::MainTheorem, Check::MinDegree]
        );
        assert!(Check::parse_suite("nope").is_err());
        assert_eq!(
            "always_true".parse::<Predicate>().unwrap(),
            Predicate::Probe(Probe::AlwaysTrue)
        );
    }

    #[test]
    fn report_line_is_stable() {
        let r = verify_main_theorem(&Graph::complete(4));
        assert_eq!(
            r.to_line(),
            r#"{"check":"main_theorem","subject":"C~","status":"pass","stats":{"applicable":1,"cubic_vertices":4}}"#
        );
    }
}
