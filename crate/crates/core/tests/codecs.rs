use bicritical::graph6::read_graph6_stream;
use bicritical::scan::enumerate_connected;
use bicritical::{emit_graph6, parse_graph6, Graph};
use proptest::prelude::*;

#[test]
fn census_round_trips() {
    for n in 1..=8 {
        for g in enumerate_connected(n).unwrap() {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
            assert_eq!(
                Graph::parse_edge_list_text(&g.to_edge_list_text()).unwrap(),
                g
            );
        }
    }
}

#[test]
fn stream_preserves_order() {
    let graphs = enumerate_connected(5).unwrap();
    let text: String = graphs
        .iter()
        .map(|g| format!("{}\n", emit_graph6(g)))
        .collect();
    let read: Vec<Graph> = read_graph6_stream(text.as_bytes())
        .map(Result::unwrap)
        .collect();
    assert_eq!(read, graphs);
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(p, _)| p)
                .collect();
            Graph::from_edge_list(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn parser_never_panics(s in "[\\x20-\\x80]{0,40}") {
        let _ = parse_graph6(&s);
    }
}
