use crate::graph::{bit, bits, Graph, VertexSet};

/// An induced-subgraph isomorphism: pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        VertexSet(self.map.iter().fold(0, |acc, &h| acc | bit(h)))
    }

    /// Host labels in pattern-vertex order.
    pub fn host_labels(&self, host: &Graph) -> Vec<u32> {
        self.map.iter().map(|&h| host.label(h)).collect()
    }

    /// Check that the map is injective and preserves both edges and non-edges.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        self.map.len() == pattern.n()
            && self.image().len() == pattern.n()
            && (0..pattern.n()).all(|i| {
                (0..pattern.n()).all(|j| i == j || pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
            })
    }
}

/// Find `pattern` as an induced subgraph of `host`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    contains_induced_within(host, pattern, host.vertex_mask())
}

/// As [`contains_induced`], restricted to host vertices in `allowed`.
pub fn contains_induced_within(host: &Graph, pattern: &Graph, allowed: u64) -> Option<Embedding> {
    let k = pattern.n();
    if k > allowed.count_ones() as usize {
        return None;
    }
    let order = match_order(pattern);
    let mut map = vec![usize::MAX; k];
    if extend(host, pattern, &order, 0, allowed, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

/// Most-constrained-first: each next vertex has the most already-placed neighbours.
fn match_order(p: &Graph) -> Vec<usize> {
    let k = p.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    for _ in 0..k {
        let next = (0..k)
            .filter(|&i| placed & bit(i) == 0)
            .max_by_key(|&i| ((p.neighbours(i) & placed).count_ones(), p.degree(i), std::cmp::Reverse(i)))
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= bit(next);
    }
    order
}

fn extend(host: &Graph, pattern: &Graph, order: &[usize], depth: usize, free: u64, map: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let want_deg = pattern.degree(p);
    let mut cand = free;
    for &q in &order[..depth] {
        let h = map[q];
        if pattern.has_edge(p, q) {
            cand &= host.neighbours(h);
        } else {
            cand &= !host.neighbours(h);
        }
    }
    for h in bits(cand) {
        if host.degree(h) < want_deg {
            continue;
        }
        map[p] = h;
        if extend(host, pattern, order, depth + 1, free & !bit(h), map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_has_no_induced_four_cycle() {
        assert!(contains_induced(&Graph::complete(5), &Graph::cycle(4)).is_none());
        assert!(contains_induced(&Graph::complete(5), &Graph::complete(4)).is_some());
    }

    #[test]
    fn non_edges_must_be_preserved() {
        // the path on 3 vertices is a subgraph of K3 but not an induced one
        assert!(contains_induced(&Graph::complete(3), &Graph::path(3)).is_none());
        let e = contains_induced(&Graph::cycle(6), &Graph::path(4)).unwrap();
        assert!(e.is_valid(&Graph::cycle(6), &Graph::path(4)));
    }

    #[test]
    fn wheel_contains_five_cycle() {
        let w = Graph::wheel(5);
        let e = contains_induced(&w, &Graph::cycle(5)).unwrap();
        assert_eq!(e.image().len(), 5);
        assert!(!e.image().contains(5));
    }

    #[test]
    fn restricted_search_respects_allowed_set() {
        let w = Graph::wheel(5);
        // without the hub there is no triangle
        assert!(contains_induced_within(&w, &Graph::complete(3), 0b11111).is_none());
        assert!(contains_induced_within(&w, &Graph::complete(3), 0b111111).is_some());
    }
}
