//! Exhaustive generation of small graphs, the census over them, and the
//! counterexample hunt.
//!
//! Generation is by canonical augmentation: a graph on `n` vertices is
//! produced from its canonical parent, obtained by deleting a canonically
//! chosen vertex, and kept only if the added vertex is in the orbit of that
//! choice.

use std::collections::{BTreeMap, HashSet};
use std::io::BufRead;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_labeling, CanonicalCode};
use crate::criticality::BrickKind;
use crate::decomposition::{split_at, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, read_graph6_stream};
use crate::matching::removable_edges;
use crate::verify::{Analysis, Check, CheckConfig, Predicate, Status, VerdictReport};

/// Largest order the built-in generator produces.
pub const MAX_BUILTIN_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Connected,
    All,
}

fn non_cut_vertices(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut mask = vec![false; n];
    (0..n)
        .map(|v| {
            mask[v] = true;
            let ok = g.components_excluding(&mask).len() <= 1;
            mask[v] = false;
            ok
        })
        .collect()
}

fn deletion_key(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbors(v).map(|w| g.degree(w)).sum())
}

/// Code of `child` if its last vertex is a canonical deletion, else `None`.
fn accept(child: &Graph, family: Family) -> Result<Option<CanonicalCode>> {
    let n = child.order();
    let w = n - 1;
    let eligible = match family {
        Family::Connected => non_cut_vertices(child),
        Family::All => vec![true; n],
    };
    let best = (0..n)
        .filter(|&v| eligible[v])
        .map(|v| deletion_key(child, v))
        .max();
    if Some(deletion_key(child, w)) != best {
        return Ok(None);
    }
    let candidates: Vec<usize> = (0..n)
        .filter(|&v| eligible[v] && Some(deletion_key(child, v)) == best)
        .collect();
    let labeling = canonical_labeling(child, None)?;
    if candidates.len() == 1 {
        return Ok(Some(labeling.code));
    }
    let m = *candidates
        .iter()
        .max_by_key(|&&v| labeling.position[v])
        .expect("w is a candidate");
    if m == w {
        return Ok(Some(labeling.code));
    }
    let marked = |x: usize| -> Result<CanonicalCode> {
        let colors: Vec<u32> = (0..n).map(|v| (v == x) as u32).collect();
        Ok(canonical_labeling(child, Some(&colors))?.code)
    };
    Ok((marked(w)? == marked(m)?).then_some(labeling.code))
}

fn children(parent: &CanonicalCode, family: Family) -> Result<Vec<CanonicalCode>> {
    let p = parent.to_graph();
    let n = p.order() + 1;
    let first = match family {
        Family::Connected => 1u32,
        Family::All => 0,
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in first..(1u32 << (n - 1)) {
        let edges = p.edges().into_iter().map(|e| e.endpoints()).chain(
            (0..n - 1)
                .filter(|&v| subset >> v & 1 == 1)
                .map(|v| (v, n - 1)),
        );
        let child = Graph::from_edge_list(n, edges.collect::<Vec<_>>())?;
        if let Some(code) = accept(&child, family)? {
            if seen.insert(code) {
                out.push(code);
            }
        }
    }
    Ok(out)
}

fn next_level(prev: &[CanonicalCode], family: Family) -> Result<Vec<CanonicalCode>> {
    let nested: Vec<Vec<CanonicalCode>> = prev
        .par_iter()
        .map(|p| children(p, family))
        .collect::<Result<_>>()?;
    let mut level: Vec<CanonicalCode> = nested.into_iter().flatten().collect();
    level.par_sort_unstable();
    let before = level.len();
    level.dedup();
    debug_assert_eq!(before, level.len(), "augmentation produced a duplicate");
    Ok(level)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if n > MAX_BUILTIN_ORDER {
        return Err(Error::OrderLimit {
            order: n,
            limit: MAX_BUILTIN_ORDER,
        });
    }
    Ok(())
}

/// Incremental generator: level `n` is derived from level `n - 1`.
struct Levels {
    family: Family,
    current: Vec<CanonicalCode>,
}

impl Levels {
    fn new(family: Family) -> Self {
        Levels {
            family,
            current: vec![canonical_form(&Graph::empty(1)).expect("order 1")],
        }
    }

    fn order(&self) -> usize {
        self.current[0].order()
    }

    fn advance_to(&mut self, n: usize) -> Result<&[CanonicalCode]> {
        check_order(n)?;
        if n < self.order() {
            *self = Levels::new(self.family);
        }
        while self.order() < n {
            self.current = next_level(&self.current, self.family)?;
        }
        Ok(&self.current)
    }
}

/// Canonical codes of all connected graphs on `n` vertices, ascending.
pub fn connected_codes(n: usize) -> Result<Vec<CanonicalCode>> {
    Ok(Levels::new(Family::Connected).advance_to(n)?.to_vec())
}

/// Every connected simple graph on `n` vertices once up to isomorphism, as
/// canonical representatives in ascending code order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_codes(n)?
        .iter()
        .map(CanonicalCode::to_graph)
        .collect())
}

/// Every simple graph on `n` vertices once up to isomorphism.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    Ok(Levels::new(Family::All)
        .advance_to(n)?
        .iter()
        .map(CanonicalCode::to_graph)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusConfig {
    pub orders: Vec<usize>,
    pub checks: Vec<Check>,
    /// Worker threads; `0` uses the available parallelism.
    pub workers: usize,
    pub check_config: CheckConfig,
}

impl CensusConfig {
    pub fn new(orders: impl IntoIterator<Item = usize>, checks: &[Check]) -> Self {
        CensusConfig {
            orders: orders.into_iter().collect(),
            checks: checks.to_vec(),
            workers: 0,
            check_config: CheckConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: u64,
    pub vacuous: u64,
    pub fail: u64,
    /// Sums of the numeric stats of every verdict.
    pub stats: BTreeMap<String, u64>,
}

impl Tally {
    fn record(&mut self, r: &VerdictReport) {
        match r.status {
            Status::Pass => self.pass += 1,
            Status::Vacuous => self.vacuous += 1,
            Status::Fail => self.fail += 1,
        }
        for (k, v) in &r.stats {
            *self.stats.entry(k.clone()).or_default() += v;
        }
    }

    fn merge(&mut self, other: Tally) {
        self.pass += other.pass;
        self.vacuous += other.vacuous;
        self.fail += other.fail;
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
    }
}

/// Census results for one order. Merging is commutative once witness lists
/// are sorted, which [`OrderReport::finish`] does.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub order: usize,
    pub examined: u64,
    pub connected: u64,
    pub bicritical: u64,
    pub minimal_bicritical: u64,
    pub bricks: u64,
    pub minimal_bricks: u64,
    /// Bicritical graphs with no removable edge.
    pub bicritical_without_removable: u64,
    /// Fewest cubic vertices over the minimal bicritical graphs.
    pub min_cubic: Option<usize>,
    /// Minimal bicritical graphs with exactly four cubic vertices.
    pub sharpness: Vec<String>,
    /// Minimal bicritical graphs with a removable edge and a 2-separation
    /// whose split leaves a non-minimal half.
    pub nonminimal_half: Vec<String>,
    /// Minimal bicritical graphs that are wheels.
    pub minimal_wheels: Vec<String>,
    pub checks: BTreeMap<String, Tally>,
    pub failures: Vec<VerdictReport>,
}

impl OrderReport {
    fn merge(mut self, other: OrderReport) -> OrderReport {
        self.order = self.order.max(other.order);
        self.examined += other.examined;
        self.connected += other.connected;
        self.bicritical += other.bicritical;
        self.minimal_bicritical += other.minimal_bicritical;
        self.bricks += other.bricks;
        self.minimal_bricks += other.minimal_bricks;
        self.bicritical_without_removable += other.bicritical_without_removable;
        self.min_cubic = match (self.min_cubic, other.min_cubic) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.sharpness.extend(other.sharpness);
        self.nonminimal_half.extend(other.nonminimal_half);
        self.minimal_wheels.extend(other.minimal_wheels);
        for (k, t) in other.checks {
            self.checks.entry(k).or_default().merge(t);
        }
        self.failures.extend(other.failures);
        self
    }

    fn finish(&mut self) {
        self.sharpness.sort();
        self.nonminimal_half.sort();
        self.minimal_wheels.sort();
        self.failures
            .sort_by(|a, b| (&a.subject, &a.check).cmp(&(&b.subject, &b.check)));
    }

    pub fn failure_count(&self) -> u64 {
        self.checks.values().map(|t| t.fail).sum()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub checks: Vec<String>,
    pub trials: usize,
    pub seed: u64,
    pub orders: Vec<OrderReport>,
    /// Set when a main-theorem failure stopped the census; holds the witness.
    pub aborted: Option<String>,
}

impl CensusReport {
    pub fn failure_count(&self) -> u64 {
        self.orders.iter().map(OrderReport::failure_count).sum()
    }

    pub fn order(&self, n: usize) -> Option<&OrderReport> {
        self.orders.iter().find(|o| o.order == n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per listed witness: `kind<TAB>order<TAB>graph6`.
    pub fn witness_sidecar(&self) -> String {
        let mut out = String::new();
        for o in &self.orders {
            let lists = [
                ("sharpness", &o.sharpness),
                ("nonminimal_half", &o.nonminimal_half),
                ("minimal_wheel", &o.minimal_wheels),
            ];
            for (kind, list) in lists {
                for g6 in list {
                    out.push_str(&format!("{kind}\t{}\t{g6}\n", o.order));
                }
            }
            for f in &o.failures {
                out.push_str(&format!(
                    "failure:{}\t{}\t{}\n",
                    f.check, o.order, f.subject
                ));
            }
        }
        out
    }
}

/// A minimal bicritical graph has a split that leaves a non-minimal half.
fn has_nonminimal_half(g: &Graph) -> Result<bool> {
    let root = LabeledGraph::root(g.clone());
    for sep in crate::criticality::two_separations(g)? {
        let (a, b) = split_at(&root, &sep)?;
        for half in [a, b] {
            if !crate::criticality::deletable_edges(half.graph())?.is_empty() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn examine(g: Graph, subject: String, config: &CensusConfig) -> OrderReport {
    let mut r = OrderReport {
        order: g.order(),
        examined: 1,
        ..OrderReport::default()
    };
    let filtered = |r: &mut OrderReport| {
        for c in &config.checks {
            r.checks.entry(c.name().to_string()).or_default().vacuous += 1;
        }
    };
    if !g.is_connected() {
        filtered(&mut r);
        return r;
    }
    r.connected = 1;
    if g.min_degree().unwrap_or(0) < 3 || g.order() % 2 == 1 {
        filtered(&mut r);
        return r;
    }
    let a = Analysis::new(g, config.check_config);
    if !a.is_bicritical() {
        filtered(&mut r);
        return r;
    }
    let g = a.graph();
    r.bicritical = 1;
    let kind = a.brick_kind();
    r.bricks = kind.is_brick() as u64;
    r.minimal_bricks = (kind == BrickKind::MinimalBrick) as u64;
    let removable = removable_edges(g).expect("bicritical graphs are matching covered");
    r.bicritical_without_removable = removable.is_empty() as u64;
    if a.is_minimal_bicritical() {
        r.minimal_bicritical = 1;
        let cubic = g.cubic_vertices().len();
        r.min_cubic = Some(cubic);
        if cubic == 4 {
            r.sharpness.push(subject.clone());
        }
        if g.is_wheel() {
            r.minimal_wheels.push(subject.clone());
        }
        if !removable.is_empty() && has_nonminimal_half(g).expect("bicritical") {
            r.nonminimal_half.push(subject.clone());
        }
    }
    for &c in &config.checks {
        let verdict = a.run(c);
        r.checks
            .entry(c.name().to_string())
            .or_default()
            .record(&verdict);
        if verdict.status == Status::Fail {
            r.failures.push(verdict);
        }
    }
    r
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(pool.install(f))
}

fn empty_report(config: &CensusConfig) -> CensusReport {
    CensusReport {
        checks: config.checks.iter().map(|c| c.name().to_string()).collect(),
        trials: config.check_config.trials,
        seed: config.check_config.seed,
        orders: Vec::new(),
        aborted: None,
    }
}

fn main_theorem_failure(o: &OrderReport) -> Option<String> {
    o.failures
        .iter()
        .find(|f| f.check == Check::MainTheorem.name())
        .map(|f| f.subject.clone())
}

/// Census over every connected graph of the configured orders from the
/// built-in generator. The report does not depend on the worker count.
pub fn census(config: &CensusConfig) -> Result<CensusReport> {
    let mut orders = config.orders.clone();
    orders.sort_unstable();
    orders.dedup();
    orders.iter().try_for_each(|&n| check_order(n))?;
    with_pool(config.workers, || {
        let mut report = empty_report(config);
        let mut levels = Levels::new(Family::Connected);
        for &n in &orders {
            let codes = levels.advance_to(n)?;
            let mut o = codes
                .par_iter()
                .map(|code| examine(code.to_graph(), code.to_string(), config))
                .reduce(OrderReport::default, OrderReport::merge);
            o.order = n;
            o.finish();
            let abort = main_theorem_failure(&o);
            report.orders.push(o);
            if abort.is_some() {
                report.aborted = abort;
                break;
            }
        }
        Ok(report)
    })?
}

/// Census over a graph6 stream. Orders in the config are ignored; every
/// graph in the stream is examined and grouped by its order. Graphs are not
/// deduplicated.
pub fn census_stream<R: BufRead>(reader: R, config: &CensusConfig) -> Result<CensusReport> {
    let mut by_order: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in read_graph6_stream(reader) {
        let g = g?;
        by_order.entry(g.order()).or_default().push(g);
    }
    with_pool(config.workers, || {
        let mut report = empty_report(config);
        for (n, graphs) in by_order {
            let mut o = graphs
                .into_par_iter()
                .map(|g| {
                    let subject = emit_graph6(&g);
                    examine(g, subject, config)
                })
                .reduce(OrderReport::default, OrderReport::merge);
            o.order = n;
            o.finish();
            let abort = main_theorem_failure(&o);
            report.orders.push(o);
            if abort.is_some() {
                report.aborted = abort;
                break;
            }
        }
        report
    })
}

/// First graph, by order and then canonical code, on which `predicate`
/// fails; the search covers every connected graph up to `n_max` vertices.
pub fn hunt_counterexample(
    predicate: &str,
    n_max: usize,
    config: CheckConfig,
) -> Result<Option<VerdictReport>> {
    let predicate: Predicate = predicate.parse()?;
    let mut levels = Levels::new(Family::Connected);
    for n in 1..=n_max {
        let codes = levels.advance_to(n)?;
        let found = codes.par_iter().find_map_first(|code| {
            let r = Analysis::new(code.to_graph(), config).evaluate(predicate);
            (r.status == Status::Fail).then_some(r)
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
