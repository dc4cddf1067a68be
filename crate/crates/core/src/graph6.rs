//! graph6 encoding (upper triangle, column order, 6-bit groups offset by 63).

use crate::error::GraphError;
use crate::graph::{bit, Graph, MAX_VERTICES};

pub fn format_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("byte {b:#x} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(GraphError::Graph6("malformed size header".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(GraphError::Graph6("long size header used for n < 63".into()));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(GraphError::Graph6(format!(
            "expected {} data bytes for n={n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..body.len() * 6 {
        if bit_at(k) {
            return Err(GraphError::Graph6("non-zero padding bits".into()));
        }
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Expected strings produced by networkx's graph6 writer.
    #[test]
    fn matches_reference_encoder() {
        assert_eq!(format_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(format_graph6(&Graph::wheel(5)), "Ehfw");
        assert_eq!(format_graph6(&Graph::path(3)), "Bg");
        assert_eq!(format_graph6(&Graph::complete(1)), "@");
        assert_eq!(format_graph6(&Graph::empty(2)), "A?");
        assert_eq!(format_graph6(&Graph::cycle(7)), "FhCKG");
        let k63 = format_graph6(&Graph::complete(63));
        assert_eq!(&k63[..12], "~??~~~~~~~~~");
        assert_eq!(k63.len(), 330);
        assert!(format_graph6(&Graph::path(64)).starts_with("~?@?hCGGC@?G?_@?@??_?G?@"));
    }

    #[test]
    fn round_trips() {
        for g in [Graph::wheel(5), Graph::complete(63), Graph::path(64), Graph::empty(1)] {
            assert_eq!(parse_graph6(&format_graph6(&g)).unwrap(), g);
        }
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("Bww").is_err());
        // K3 with a stray padding bit set
        assert!(parse_graph6("Bx").is_err());
        assert!(parse_graph6("B\x07").is_err());
        assert!(parse_graph6("~??").is_err());
        assert!(parse_graph6("?").is_err());
    }
}
