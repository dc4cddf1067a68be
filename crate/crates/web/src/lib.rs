//! Browser bindings. Each exported function takes plain text and returns a
//! JSON document; the `*_json` functions are the native equivalents.
//!
//! Graph text is a graph6 string, an edge list (`n m` header, then `u v`
//! lines), or a bundled name such as `B4`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;
use wordrep::family::{Assets, NAMED_GRAPHS};
use wordrep::orientation::{search_semi_transitive, Certificate, SearchOptions};
use wordrep::proof::{emit_transcript, format_transcript, parse_transcript, verify_transcript};
use wordrep::words::{check_representation, Representation};
use wordrep::{format_graph6, parse_graph6, Graph, Word};

pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let body = text.trim();
    if NAMED_GRAPHS.iter().any(|(n, _)| n.eq_ignore_ascii_case(body)) {
        return Assets::bundled().graph(body).map(|g| g.graph).map_err(|e| e.to_string());
    }
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    if !body.is_empty() && !body.contains(char::is_whitespace) {
        return parse_graph6(body).map_err(|e| e.to_string());
    }
    Graph::parse_edge_list(text).map_err(|e| e.to_string())
}

fn error(msg: impl std::fmt::Display) -> Value {
    json!({ "error": msg.to_string() })
}

pub fn check_graph_json(graph: &str) -> Value {
    let g = match parse_graph(graph) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let cert = search_semi_transitive(&g, &SearchOptions::default());
    let mut out = json!({
        "graph6": format_graph6(&g),
        "n": g.n(),
        "edges": g.edge_count(),
        "representable": cert.is_orientation(),
    });
    match &cert {
        Certificate::Orientation(o) => out["orientation"] = json!(o.to_arc_list()),
        Certificate::Refutation(_) => match emit_transcript(&cert) {
            Ok(t) => out["transcript"] = json!(format_transcript(&t)),
            Err(e) => return error(e),
        },
    }
    out
}

pub fn verify_transcript_json(graph: &str, transcript: &str) -> Value {
    let g = match parse_graph(graph) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    match parse_transcript(transcript) {
        Ok(t) => serde_json::to_value(verify_transcript(&g, &t)).expect("serialisable"),
        Err(e) => error(e),
    }
}

pub fn check_word_json(graph: &str, word: &str) -> Value {
    let g = match parse_graph(graph) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let w: Word = match word.trim().parse() {
        Ok(w) => w,
        Err(e) => return error(e),
    };
    let detail = match check_representation(&w, &g) {
        Representation::Represents => "the word represents the graph".to_string(),
        Representation::MissingVertex(v) => format!("vertex {v} does not occur in the word"),
        Representation::UnknownLetter(l) => format!("letter {l} is not a vertex"),
        Representation::Mismatch { x, y, adjacent: true } => format!("{x} and {y} are adjacent but do not alternate"),
        Representation::Mismatch { x, y, adjacent: false } => format!("{x} and {y} alternate but are not adjacent"),
    };
    json!({ "represents": wordrep::represents(&w, &g), "detail": detail })
}

#[wasm_bindgen]
pub fn check_graph(graph: &str) -> String {
    check_graph_json(graph).to_string()
}

#[wasm_bindgen]
pub fn verify_transcript_text(graph: &str, transcript: &str) -> String {
    verify_transcript_json(graph, transcript).to_string()
}

#[wasm_bindgen]
pub fn check_word(graph: &str, word: &str) -> String {
    check_word_json(graph, word).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_inputs() {
        assert_eq!(parse_graph("W5").unwrap(), Graph::wheel(5));
        let g6 = format_graph6(&Graph::cycle(5));
        assert_eq!(parse_graph(&format!(" {g6}\n")).unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph("3 2\n1 2\n2 3\n").unwrap(), Graph::path(3));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn emitted_transcript_verifies() {
        let r = check_graph_json("W5");
        assert_eq!(r["representable"], false);
        let v = verify_transcript_json("W5", r["transcript"].as_str().unwrap());
        assert_eq!(v["accepted"], true);
        assert_eq!(v["accepted"], true, "{v}");
    }

    #[test]
    fn bundled_b7_transcript_is_rejected() {
        let p = Assets::bundled().proof("B7").unwrap();
        let v = verify_transcript_json(&p.host.graph.to_edge_list(), &p.text);
        assert_eq!(v["accepted"], false);
    }

    #[test]
    fn words_and_errors() {
        assert_eq!(check_word_json("3 2\n1 2\n2 3\n", "31213")["represents"], true);
        assert_eq!(check_word_json("3 2\n1 2\n2 3\n", "3123")["represents"], false);
        assert!(check_word_json("3 2\n1 2\n2 3\n", "3x").get("error").is_some());
        assert!(check_graph_json("not a graph").get("error").is_some());
    }
}
