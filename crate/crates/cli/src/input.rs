//! Graph arguments: a file path, `-` for stdin, a bundled name (`B4`, `C`),
//! a generated family (`K5`, `C5`, `P4`, `W5`) or a literal graph6 string.

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use wordrep::family::{Assets, NAMED_GRAPHS};
use wordrep::{parse_graph6, Graph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    #[default]
    Auto,
    Graph6,
    Edges,
}

pub fn read_text(spec: &str) -> Result<String, String> {
    if spec == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))
}

fn looks_like_graph6(text: &str) -> bool {
    let body = text.trim_start().strip_prefix(">>graph6<<").unwrap_or(text);
    body.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| !l.contains(char::is_whitespace))
}

pub fn parse_graph_text(text: &str, format: InputFormat) -> Result<Graph, String> {
    let graph6 = match format {
        InputFormat::Graph6 => true,
        InputFormat::Edges => false,
        InputFormat::Auto => looks_like_graph6(text),
    };
    if graph6 {
        let body = text.trim_start().strip_prefix(">>graph6<<").unwrap_or(text);
        let line = body.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
        parse_graph6(line).map_err(|e| e.to_string())
    } else {
        Graph::parse_edge_list(text).map_err(|e| e.to_string())
    }
}

fn generated(spec: &str) -> Option<Graph> {
    let (kind, n) = spec.split_at(1);
    let n: usize = n.parse().ok()?;
    match (kind, n) {
        ("K", 1..=64) => Some(Graph::complete(n)),
        ("P", 1..=64) => Some(Graph::path(n)),
        ("C", 3..=64) => Some(Graph::cycle(n)),
        ("W", 3..=63) => Some(Graph::wheel(n)),
        _ => None,
    }
}

pub fn load_graph(spec: &str, format: InputFormat, assets: &Assets) -> Result<Graph, String> {
    if spec == "-" || Path::new(spec).is_file() {
        return parse_graph_text(&read_text(spec)?, format);
    }
    if NAMED_GRAPHS.iter().any(|(n, _)| n.eq_ignore_ascii_case(spec)) {
        return assets.graph(spec).map(|g| g.graph).map_err(|e| e.to_string());
    }
    if let Some(g) = generated(spec) {
        return Ok(g);
    }
    parse_graph6(spec).map_err(|e| format!("`{spec}` is not a file, a known graph name, or graph6 ({e})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert!(looks_like_graph6("Dhc\n"));
        assert!(looks_like_graph6(">>graph6<<Dhc"));
        assert!(!looks_like_graph6("# comment\n3 2\n1 2\n2 3\n"));
    }

    #[test]
    fn names_and_families() {
        let a = Assets::bundled();
        assert_eq!(load_graph("C", InputFormat::Auto, &a).unwrap().n(), 19);
        assert_eq!(load_graph("C5", InputFormat::Auto, &a).unwrap(), Graph::cycle(5));
        assert_eq!(load_graph("w5", InputFormat::Auto, &a).unwrap().n(), 6);
        assert_eq!(load_graph("K4", InputFormat::Auto, &a).unwrap().edge_count(), 6);
        assert!(load_graph("C2", InputFormat::Auto, &a).is_err());
        assert_eq!(load_graph("Bw", InputFormat::Auto, &a).unwrap().n(), 3);
    }
}
