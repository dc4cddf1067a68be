use proptest::prelude::*;

use wordrep::canon::canonical_form;
use wordrep::orientation::{
    exists_semi_transitive_naive, is_semi_transitive, is_word_representable, search_semi_transitive, Certificate,
    SearchOptions,
};
use wordrep::proof::{emit_transcript, format_transcript, parse_transcript, verify_transcript};
use wordrep::words::find_uniform_word;
use wordrep::{contains_induced, enumerate_graphs, format_graph6, parse_graph6, represents, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 1..=n as u32 {
                for b in a + 1..=n as u32 {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = format_graph6(&g);
        let h = parse_graph6(&s).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(format_graph6(&h), s);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labelling((g, perm) in graph_and_perm(10)) {
        prop_assert_eq!(canonical_form(&g.permute(&perm)), canonical_form(&g));
    }

    #[test]
    fn induced_subgraphs_embed((g, mask) in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), 1u64..(1u64 << n)) })) {
        let sub = g.induced_subgraph(&VertexSet(mask)).unwrap();
        let e = contains_induced(&g, &sub).unwrap();
        prop_assert!(e.is_valid(&g, &sub));
    }

    #[test]
    fn representability_is_hereditary(g in graph(9)) {
        prop_assume!(g.n() >= 2 && is_word_representable(&g));
        for v in 0..g.n() {
            let keep = VertexSet(g.vertex_mask() & !(1u64 << v));
            prop_assert!(is_word_representable(&g.induced_subgraph(&keep).unwrap()));
        }
    }

    #[test]
    fn twin_reduction_keeps_the_verdict(g in graph(9)) {
        let (reduced, removed) = g.twin_reduce();
        prop_assert_eq!(reduced.n() + removed.len(), g.n());
        prop_assert_eq!(is_word_representable(&reduced), is_word_representable(&g));
    }

    #[test]
    fn found_orientations_are_semi_transitive((g, src) in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), 0..n) })) {
        let opts = SearchOptions { source: Some(src), ..SearchOptions::default() };
        match search_semi_transitive(&g, &opts) {
            Certificate::Orientation(o) => {
                prop_assert!(o.is_source(src));
                prop_assert!(is_semi_transitive(&o).unwrap());
            }
            Certificate::Refutation(_) => prop_assert!(!is_word_representable(&g)),
        }
    }

    #[test]
    fn uniform_words_agree_with_search(g in graph(6)) {
        if let Some(w) = find_uniform_word(&g, 2).unwrap() {
            prop_assert!(represents(&w, &g));
            prop_assert!(represents(&w.reversed(), &g));
            prop_assert!(is_word_representable(&g));
        }
    }
}

/// Every non-representable graph on at most 7 vertices: one on 6 and 26 on 7.
fn small_non_representable() -> Vec<Graph> {
    (6..=7).flat_map(|n| enumerate_graphs(n).unwrap()).filter(|g| !is_word_representable(g)).collect()
}

#[test]
fn emitted_transcripts_verify_on_every_small_non_representable_graph() {
    let graphs = small_non_representable();
    assert_eq!(graphs.len(), 27);
    for g in &graphs {
        assert!(!exists_semi_transitive_naive(g).unwrap());
        let t = emit_transcript(&search_semi_transitive(g, &SearchOptions::default())).unwrap();
        let verdict = verify_transcript(g, &t);
        assert!(verdict.accepted, "{}: {:?}", format_graph6(g), verdict.failures);
        let text = format_transcript(&t);
        assert_eq!(parse_transcript(&text).unwrap(), t);
    }
}

#[test]
fn emitted_transcripts_are_rejected_after_any_edge_deletion() {
    // dropping any one edge of W5 gives a representable graph, which no transcript may refute
    let w5 = Graph::wheel(5);
    let t = emit_transcript(&search_semi_transitive(&w5, &SearchOptions::default())).unwrap();
    for (i, j) in w5.edges() {
        let edges: Vec<(u32, u32)> =
            w5.edges().into_iter().filter(|&e| e != (i, j)).map(|(a, b)| (w5.label(a), w5.label(b))).collect();
        let h = Graph::new(6, &edges).unwrap();
        assert!(exists_semi_transitive_naive(&h).unwrap());
        assert!(!verify_transcript(&h, &t).accepted);
    }
}
