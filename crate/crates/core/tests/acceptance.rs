//! Acceptance gate: one line per criterion, non-zero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use bicritical::canon::canonical_form;
use bicritical::matching::maximum_matching;
use bicritical::named;
use bicritical::scan::{census, enumerate_all, CensusConfig, CensusReport, Tally};
use bicritical::verify::gluing::verify_random_gluings;
use bicritical::verify::{recheck, Check};
use bicritical::Graph;

const ORDERS: [usize; 3] = [4, 6, 8];

struct Gate {
    failed: usize,
}

impl Gate {
    fn report(&mut self, id: usize, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("PASS  {id:>2} {name}: {detail}"),
            Err(detail) => {
                self.failed += 1;
                println!("FAIL  {id:>2} {name}: {detail}");
            }
        }
    }
}

fn tally(report: &CensusReport, check: Check) -> Tally {
    let mut total = Tally::default();
    for o in &report.orders {
        if let Some(t) = o.checks.get(check.name()) {
            total.pass += t.pass;
            total.vacuous += t.vacuous;
            total.fail += t.fail;
            for (k, v) in &t.stats {
                *total.stats.entry(k.clone()).or_default() += v;
            }
        }
    }
    total
}

fn clean(report: &CensusReport, check: Check) -> Result<Tally, String> {
    let t = tally(report, check);
    if t.fail > 0 {
        let first = report
            .orders
            .iter()
            .flat_map(|o| &o.failures)
            .find(|f| f.check == check.name())
            .map(|f| {
                let confirmed = recheck(f).unwrap_or(false);
                format!("{} (oracle confirms: {confirmed})", f.to_line())
            })
            .unwrap_or_default();
        return Err(format!("{} failures, first {first}", t.fail));
    }
    Ok(t)
}

fn sum(report: &CensusReport, f: impl Fn(&bicritical::scan::OrderReport) -> u64) -> u64 {
    report.orders.iter().map(f).sum()
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut gate = Gate { failed: 0 };
    let report = census(&CensusConfig::new(ORDERS, &Check::ALL)).expect("census runs");
    let bicritical = sum(&report, |o| o.bicritical);
    let bricks = sum(&report, |o| o.bricks);
    let minimal = sum(&report, |o| o.minimal_bicritical);
    println!(
        "census n in {ORDERS:?}: examined {}, bicritical {bicritical}, minimal bicritical {minimal}, bricks {bricks}, {:.1}s",
        sum(&report, |o| o.examined),
        started.elapsed().as_secs_f64()
    );

    gate.report(1, "main theorem", {
        clean(&report, Check::MainTheorem).and_then(|t| {
            let mins: Vec<String> = report
                .orders
                .iter()
                .map(|o| format!("n={} min cubic {:?}", o.order, o.min_cubic))
                .collect();
            let min_degree = clean(&report, Check::MinDegree)?;
            if report.aborted.is_some() || t.pass != minimal {
                return Err(format!("{} applicable of {minimal}", t.pass));
            }
            Ok(format!(
                "{} minimal bicritical graphs, none below 4 cubic vertices ({}); min degree 3 on {}",
                t.pass,
                mins.join(", "),
                min_degree.pass
            ))
        })
    });

    gate.report(2, "sharpness", {
        let k4 = canonical_form(&Graph::complete(4)).unwrap().to_string();
        let d4 = canonical_form(&named::d4()).unwrap().to_string();
        let has = |n: usize, g6: &str| {
            report
                .order(n)
                .is_some_and(|o| o.sharpness.iter().any(|s| s == g6))
        };
        if has(4, &k4) && has(6, &d4) {
            let counts: Vec<String> = report
                .orders
                .iter()
                .map(|o| format!("n={}: {}", o.order, o.sharpness.len()))
                .collect();
            Ok(format!(
                "K4 and D4 listed; exactly-four witnesses {}",
                counts.join(", ")
            ))
        } else {
            Err("K4 at order 4 or D4 at order 6 missing from sharpness witnesses".into())
        }
    });

    gate.report(3, "s = b - 1 and marker bound", {
        clean(&report, Check::MarkerLemma).and_then(|m| {
            let inv = clean(&report, Check::DecompositionInvariance)?;
            Ok(format!(
                "{} trees ({} lexicographic + {} random), splits {} bricks {} markers {}",
                inv.pass * 11,
                inv.pass,
                inv.pass * 10,
                m.stats["splits"],
                m.stats["bricks"],
                m.stats["marker_total"]
            ))
        })
    });

    gate.report(4, "single-marker leaves", {
        clean(&report, Check::MarkerLemma).and_then(|t| {
            if t.pass != bicritical - bricks {
                return Err(format!(
                    "{} checked, {} non-brick bicritical",
                    t.pass,
                    bicritical - bricks
                ));
            }
            Ok(format!(
                "{} non-brick bicritical graphs, {} single-marker leaves in total",
                t.pass, t.stats["single_marker_leaves"]
            ))
        })
    });

    gate.report(5, "decomposition invariance", {
        clean(&report, Check::DecompositionInvariance).and_then(|t| {
            if t.pass != bicritical || t.stats["trials"] != 10 * bicritical {
                return Err(format!(
                    "{} graphs with {} trials",
                    t.pass, t.stats["trials"]
                ));
            }
            Ok(format!(
                "{} bicritical graphs x (lexicographic + 10 seeded policies)",
                t.pass
            ))
        })
    });

    gate.report(6, "gluing equivalence", {
        clean(&report, Check::SplitBicriticality).and_then(|t| {
            let s = verify_random_gluings(1000, 0x5eed);
            if let Some(f) = s.first_failure {
                return Err(format!("glue instance failed: {}", f.to_line()));
            }
            if s.bicritical == 0 || s.non_bicritical == 0 || s.minimal_case == 0 {
                return Err(format!("instances do not cover both outcomes: {s:?}"));
            }
            Ok(format!(
                "children bicritical on {} trees ({} nodes); 1000 glue instances: {} bicritical, {} not, {} minimal-halves cases",
                t.pass, t.stats["nodes"], s.bicritical, s.non_bicritical, s.minimal_case
            ))
        })
    });

    gate.report(7, "separation properties", {
        clean(&report, Check::SeparationProperties).map(|t| {
            format!(
                "{} bicritical graphs, {} separations ({} with adjacent ends)",
                t.pass, t.stats["separations"], t.stats["adjacent_separations"]
            )
        })
    });

    gate.report(8, "deletable-edge transfer", {
        clean(&report, Check::DeletableTransfer).and_then(|t| {
            let present = t.stats.get("case_uv_present").copied().unwrap_or(0);
            if present == 0 {
                return Err("no instance with adjacent separation ends was exercised".into());
            }
            Ok(format!(
                "{} graphs, {} separations; child identities checked: {} with uv absent, {present} with uv present",
                t.pass, t.stats["separations"], t.stats["case_uv_absent"]
            ))
        })
    });

    gate.report(9, "no deletable non-marker edge in split halves", {
        clean(&report, Check::LeafDeletables).map(|t| {
            let halves: Vec<String> = report
                .orders
                .iter()
                .flat_map(|o| o.nonminimal_half.iter().cloned())
                .collect();
            format!(
                "{} minimal non-brick graphs, {} tree nodes; removable edge with a non-minimal half: {}",
                t.pass,
                t.stats["nodes_checked"],
                if halves.is_empty() { "none".to_string() } else { halves.join(" ") }
            )
        })
    });

    gate.report(10, "minimal brick cubic vertices", {
        clean(&report, Check::MinimalBrickCubics).and_then(|t| {
            let count = sum(&report, |o| o.minimal_bricks);
            if t.pass != count || t.stats["at_least_three"] != count {
                return Err(format!("{} checked of {count} minimal bricks", t.pass));
            }
            Ok(format!(
                "{count} minimal bricks, each with at least four cubic vertices"
            ))
        })
    });

    gate.report(11, "structural exclusions", {
        clean(&report, Check::StructuralExclusions).map(|t| {
            let wheels: Vec<String> = report
                .orders
                .iter()
                .flat_map(|o| o.minimal_wheels.iter().cloned())
                .collect();
            format!(
                "{} minimal bicritical graphs free of K33 and non-spanning wheels; minimal wheels: {}",
                t.pass,
                wheels.join(" ")
            )
        })
    });

    gate.report(12, "matching oracle", {
        let started = Instant::now();
        let mut checked = 0;
        let mut outcome = Ok(());
        'outer: for n in 1..=7 {
            for g in enumerate_all(n).unwrap() {
                let (fast, brute, tb) = (
                    maximum_matching(&g).size(),
                    common::brute_max_matching(&g),
                    common::tutte_berge(&g),
                );
                if fast != brute || brute != tb {
                    outcome = Err(format!(
                        "{g:?}: blossom {fast}, brute {brute}, Tutte-Berge {tb}"
                    ));
                    break 'outer;
                }
                checked += 1;
            }
        }
        outcome.map(|()| {
            format!(
                "{checked} graphs on at most 7 vertices, {:.1}s",
                started.elapsed().as_secs_f64()
            )
        })
    });

    gate.report(13, "determinism across workers", {
        let mut outputs = Vec::new();
        for workers in [1, 2, 8] {
            let mut config = CensusConfig::new(ORDERS, &Check::ALL);
            config.workers = workers;
            outputs.push(census(&config).expect("census runs").to_json());
        }
        if outputs.windows(2).all(|w| w[0] == w[1]) && outputs[0] == report.to_json() {
            Ok(format!(
                "identical {}-byte reports for 1, 2, 8 workers",
                outputs[0].len()
            ))
        } else {
            Err("reports differ between worker counts".into())
        }
    });

    println!(
        "acceptance: {} of 13 criteria passed in {:.1}s",
        13 - gate.failed,
        started.elapsed().as_secs_f64()
    );
    if gate.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
