use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph, CanonicalCode};
use crate::error::GraphError;
use crate::graph::{bit, Graph};

pub const MAX_ENUMERATION: usize = 8;

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical code. Built by adding a vertex in every possible way
/// to each class on `n - 1` vertices and deduplicating by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_ENUMERATION {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    level.insert(canonical_form(&Graph::empty(1)), Graph::empty(1));
    for k in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0..1u64 << k {
                let mut adj = g.rows().to_vec();
                for (i, row) in adj.iter_mut().enumerate() {
                    if nbrs & bit(i) != 0 {
                        *row |= bit(k);
                    }
                }
                adj.push(nbrs);
                let h = Graph::from_adjacency(adj).expect("augmentation stays simple");
                next.entry(canonical_form(&h)).or_insert_with(|| canonical_graph(&h));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Oracle: every edge set on `n` labelled vertices, deduplicated by canonical form.
    fn brute_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = HashSet::new();
        for code in 0..1u64 << pairs.len() {
            let mut adj = vec![0u64; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if code >> k & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
            seen.insert(canonical_form(&Graph::from_adjacency(adj).unwrap()));
        }
        seen.len()
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(brute_count(4), 11);
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
        assert_eq!(brute_count(6), 156);
        assert_eq!(enumerate_graphs(6).unwrap().len(), 156);
    }

    #[test]
    #[ignore = "2^21 canonical forms; run with --ignored"]
    fn seven_vertex_count_matches_brute_force() {
        assert_eq!(brute_count(7), 1044);
    }

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn classes_are_distinct() {
        let gs = enumerate_graphs(6).unwrap();
        let codes: HashSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(codes.len(), gs.len());
    }

    #[test]
    fn guards_size() {
        assert_eq!(enumerate_graphs(9), Err(GraphError::EnumerationTooLarge(9)));
        assert!(enumerate_graphs(0).is_err());
    }
}
