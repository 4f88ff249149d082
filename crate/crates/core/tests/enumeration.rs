mod common;

use std::collections::BTreeSet;

use bicritical::canon::canonical_form;
use bicritical::scan::{connected_codes, enumerate_all, enumerate_connected};
use bicritical::Error;

#[test]
fn connected_matches_brute_force() {
    for n in 1..=6 {
        let generated: Vec<_> = connected_codes(n).unwrap();
        let set: BTreeSet<_> = generated.iter().copied().collect();
        assert_eq!(set.len(), generated.len(), "duplicates at n={n}");
        assert_eq!(set, common::brute_classes(n, true), "n={n}");
    }
}

#[test]
fn all_graphs_match_brute_force() {
    for n in 1..=6 {
        let generated: BTreeSet<_> = enumerate_all(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(generated, common::brute_classes(n, false), "n={n}");
    }
}

#[test]
fn reference_counts() {
    assert_eq!(enumerate_connected(3).unwrap().len(), 2);
    assert_eq!(enumerate_connected(4).unwrap().len(), 6);
    assert_eq!(enumerate_connected(6).unwrap().len(), 112);
    assert_eq!(enumerate_connected(7).unwrap().len(), 853);
    assert_eq!(enumerate_all(7).unwrap().len(), 1044);
}

#[test]
fn order_eight_is_duplicate_free_and_connected() {
    let graphs = enumerate_connected(8).unwrap();
    assert_eq!(graphs.len(), 11117);
    let codes: BTreeSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(codes.len(), graphs.len());
    assert!(graphs.iter().all(|g| g.is_connected()));
}

#[test]
fn output_is_sorted_by_code() {
    let codes = connected_codes(6).unwrap();
    assert!(codes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn builtin_limit() {
    assert_eq!(
        enumerate_connected(11).unwrap_err(),
        Error::OrderLimit {
            order: 11,
            limit: 10
        }
    );
}
