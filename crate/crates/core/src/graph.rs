//! Immutable labelled simple graphs on at most 64 vertices.
//!
//! Vertices are addressed internally by index `0..n`; every vertex also
//! carries an external label (by default `index + 1`). Drawings and proof
//! transcripts refer to vertices by label, so labels survive
//! [`Graph::induced_subgraph`].

use std::fmt;

use crate::error::GraphError;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Iterate the set bits of a word, lowest first.
#[inline]
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<u32>,
}

impl Graph {
    /// Build a graph on vertices `1..=n` from 1-based edge pairs.
    /// Duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let labels = (1..=n as u32).collect();
        Graph::with_labels(labels, edges)
    }

    /// Build a graph whose vertices carry the given labels; edge endpoints are labels.
    pub fn with_labels(labels: Vec<u32>, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(GraphError::DuplicateLabel(*l));
            }
        }
        let mut g = Graph { adj: vec![0; n], labels };
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let i = g.index_of(u).ok_or(GraphError::VertexOutOfRange(u))?;
            let j = g.index_of(v).ok_or(GraphError::VertexOutOfRange(v))?;
            g.adj[i] |= bit(j);
            g.adj[j] |= bit(i);
        }
        Ok(g)
    }

    /// Build from raw adjacency rows (index based). Rows must be symmetric and loop free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        let labels = (1..=n as u32).collect();
        Graph::from_adjacency_labelled(adj, labels)
    }

    pub(crate) fn from_adjacency_labelled(adj: Vec<u64>, labels: Vec<u32>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = full_mask(n);
        for (i, &row) in adj.iter().enumerate() {
            if row & bit(i) != 0 {
                return Err(GraphError::Loop(labels[i]));
            }
            if row & !mask != 0 {
                return Err(GraphError::Asymmetric);
            }
            for j in bits(row) {
                if adj[j] & bit(i) == 0 {
                    return Err(GraphError::Asymmetric);
                }
            }
        }
        Ok(Graph { adj, labels })
    }

    pub fn complete(n: usize) -> Graph {
        let m = full_mask(n);
        Graph::from_adjacency((0..n).map(|i| m & !bit(i)).collect()).expect("valid size")
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![0; n]).expect("valid size")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n as u32).map(|i| (i, i % n as u32 + 1)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    /// The wheel over a `k`-cycle: rim `1..=k`, hub `k + 1`.
    pub fn wheel(k: usize) -> Graph {
        let mut edges: Vec<_> = (1..=k as u32).map(|i| (i, i % k as u32 + 1)).collect();
        edges.extend((1..=k as u32).map(|i| (i, k as u32 + 1)));
        Graph::new(k + 1, &edges).expect("valid wheel")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbours(&self, i: usize) -> u64 {
        self.adj[i]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bit(j) != 0
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n())
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n() {
            for j in bits(self.adj[i] & !full_mask(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    #[inline]
    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// True when labels are exactly `1..=n` in order.
    pub fn has_default_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l == i as u32 + 1)
    }

    pub fn with_default_labels(&self) -> Graph {
        Graph { adj: self.adj.clone(), labels: (1..=self.n() as u32).collect() }
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|i| (mask & !bit(i)) & !self.adj[i] == 0)
    }

    /// Subgraph induced by an index mask; labels are carried along.
    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let adj = keep.iter().map(|&i| bits(self.adj[i] & mask).fold(0u64, |acc, j| acc | bit(pos[j]))).collect();
        let labels = keep.iter().map(|&i| self.labels[i]).collect();
        Graph { adj, labels }
    }

    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        if set.0 == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if set.0 & !self.vertex_mask() != 0 {
            return Err(GraphError::NotASubset);
        }
        Ok(self.induced_by_mask(set.0))
    }

    /// Delete the vertices with the given labels.
    pub fn remove_labels(&self, labels: &[u32]) -> Result<Graph, GraphError> {
        let drop = VertexSet::from_labels(self, labels)?;
        self.induced_subgraph(&VertexSet(self.vertex_mask() & !drop.0))
    }

    /// Relabel positions: vertex `i` of `self` becomes vertex `perm[i]` of the result.
    /// Labels are reset to `1..=n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut adj = vec![0u64; n];
        for i in 0..n {
            for j in bits(self.adj[i]) {
                adj[perm[i]] |= bit(perm[j]);
            }
        }
        Graph { adj, labels: (1..=n as u32).collect() }
    }

    pub fn complement(&self) -> Graph {
        let m = self.vertex_mask();
        Graph { adj: (0..self.n()).map(|i| !self.adj[i] & m & !bit(i)).collect(), labels: self.labels.clone() }
    }

    /// Whether `i` and `j` have equal neighbourhoods apart from each other.
    pub fn are_twins(&self, i: usize, j: usize) -> bool {
        i != j && (self.adj[i] & !bit(j)) == (self.adj[j] & !bit(i))
    }

    /// Repeatedly delete the higher-labelled vertex of the first twin pair
    /// (in index order) until no twins remain. Returns the reduced graph and
    /// the `(kept, removed)` label pairs in removal order.
    pub fn twin_reduce(&self) -> (Graph, Vec<(u32, u32)>) {
        let mut g = self.clone();
        let mut removed = Vec::new();
        'outer: loop {
            for i in 0..g.n() {
                for j in i + 1..g.n() {
                    if g.are_twins(i, j) {
                        let (keep, drop) = if g.label(i) < g.label(j) { (i, j) } else { (j, i) };
                        removed.push((g.label(keep), g.label(drop)));
                        g = g.induced_by_mask(g.vertex_mask() & !bit(drop));
                        continue 'outer;
                    }
                }
            }
            break;
        }
        (g, removed)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertex_mask()
    }

    /// Exact 3-colourability by backtracking in descending-degree order.
    pub fn is_three_colourable(&self) -> bool {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.degree(i)));
        let mut classes = [0u64; 3];
        fn go(g: &Graph, order: &[usize], k: usize, classes: &mut [u64; 3]) -> bool {
            if k == order.len() {
                return true;
            }
            let v = order[k];
            let mut tried_empty = false;
            for c in 0..3 {
                if classes[c] == 0 {
                    // empty classes are interchangeable
                    if tried_empty {
                        continue;
                    }
                    tried_empty = true;
                }
                if classes[c] & g.adj[v] == 0 {
                    classes[c] |= bit(v);
                    if go(g, order, k + 1, classes) {
                        return true;
                    }
                    classes[c] &= !bit(v);
                }
            }
            false
        }
        go(self, &order, 0, &mut classes)
    }

    /// Parse the edge-list format: first non-comment line `n m`, then `m`
    /// lines `u v`. `#` starts a comment. A directive line
    /// `#@ labels: l1 l2 ... ln` assigns external labels, in which case edge
    /// endpoints are written as labels.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut labels: Option<Vec<u32>> = None;
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            if let Some(rest) = raw.trim_start().strip_prefix("#@") {
                if let Some(list) = rest.trim().strip_prefix("labels:") {
                    let parsed: Result<Vec<u32>, _> = list.split_whitespace().map(str::parse::<u32>).collect();
                    labels =
                        Some(parsed.map_err(|e| GraphError::Parse { line: lineno, msg: format!("bad label: {e}") })?);
                }
                continue;
            }
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Result<Vec<u64>, _> = line.split_whitespace().map(str::parse::<u64>).collect();
            let nums = nums.map_err(|e| GraphError::Parse { line: lineno, msg: e.to_string() })?;
            if nums.len() != 2 {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("expected two integers, found {}", nums.len()),
                });
            }
            if header.is_none() {
                header = Some((nums[0] as usize, nums[1] as usize));
            } else {
                let to_u32 = |x: u64| u32::try_from(x).map_err(|_| GraphError::VertexOutOfRange(u32::MAX));
                edges.push((to_u32(nums[0])?, to_u32(nums[1])?));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "missing `n m` header".into() })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        match labels {
            Some(l) if l.len() != n => {
                Err(GraphError::Parse { line: 0, msg: format!("{} labels for {n} vertices", l.len()) })
            }
            Some(l) => Graph::with_labels(l, &edges),
            None => Graph::new(n, &edges),
        }
    }

    /// Inverse of [`Graph::parse_edge_list`]; emits a labels directive when
    /// labels are not the default `1..=n`.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        if !self.has_default_labels() {
            s.push_str("#@ labels:");
            for l in &self.labels {
                s.push_str(&format!(" {l}"));
            }
            s.push('\n');
        }
        s.push_str(&format!("{} {}\n", self.n(), self.edge_count()));
        for (i, j) in self.edges() {
            s.push_str(&format!("{} {}\n", self.labels[i], self.labels[j]));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, edges=[", self.n())?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", self.labels[i], self.labels[j])?;
        }
        write!(f, "])")
    }
}

/// A subset of a host graph's vertices, as an index mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn from_labels(host: &Graph, labels: &[u32]) -> Result<VertexSet, GraphError> {
        let mut mask = 0;
        for &l in labels {
            let i = host.index_of(l).ok_or(GraphError::VertexOutOfRange(l))?;
            mask |= bit(i);
        }
        Ok(VertexSet(mask))
    }

    pub fn all(host: &Graph) -> VertexSet {
        VertexSet(host.vertex_mask())
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & bit(i) != 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    pub fn labels(&self, host: &Graph) -> Vec<u32> {
        self.indices().map(|i| host.label(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, &[(1, 2), (1, 3), (2, 3), (2, 1)]).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn wheel_has_hub_adjacent_to_rim() {
        let w =
            Graph::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]).unwrap();
        assert_eq!(w, Graph::wheel(5));
        assert_eq!(w.degree(5), 5);
        assert_eq!(w.edge_count(), 10);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::new(3, &[(1, 4)]), Err(GraphError::VertexOutOfRange(4)));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::TooManyVertices(65)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::NoVertices));
        assert!(Graph::new(64, &[(1, 64)]).is_ok());
        assert_eq!(Graph::with_labels(vec![1, 1], &[]), Err(GraphError::DuplicateLabel(1)));
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let k4 = Graph::complete(4);
        let s = VertexSet::from_labels(&k4, &[1, 2, 4]).unwrap();
        let sub = k4.induced_subgraph(&s).unwrap();
        assert_eq!(sub.labels(), &[1, 2, 4]);
        assert_eq!(sub.with_default_labels(), Graph::complete(3));
        assert_eq!(k4.induced_subgraph(&VertexSet::all(&k4)).unwrap(), k4);
        assert_eq!(k4.induced_subgraph(&VertexSet(0)), Err(GraphError::EmptyVertexSet));
        assert_eq!(k4.induced_subgraph(&VertexSet(1 << 7)), Err(GraphError::NotASubset));
    }

    #[test]
    fn wheel_minus_any_vertex_has_five_vertices() {
        let w = Graph::wheel(5);
        for i in 0..6 {
            let sub = w.induced_by_mask(w.vertex_mask() & !bit(i));
            assert_eq!(sub.n(), 5);
        }
    }

    #[test]
    fn twin_reduce_collapses_clique() {
        let (g, removed) = Graph::complete(3).twin_reduce();
        assert_eq!(g.n(), 1);
        assert_eq!(removed, vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn twin_reduce_leaves_wheel_alone() {
        let w = Graph::wheel(5);
        // brute-force: no pair has equal neighbourhoods outside the pair
        for i in 0..6 {
            for j in i + 1..6 {
                let ni: Vec<_> = (0..6).filter(|&k| k != j && w.has_edge(i, k)).collect();
                let nj: Vec<_> = (0..6).filter(|&k| k != i && w.has_edge(j, k)).collect();
                assert_ne!(ni, nj);
            }
        }
        let (g, removed) = w.twin_reduce();
        assert_eq!(g, w);
        assert!(removed.is_empty());
    }

    #[test]
    fn colourability() {
        assert!(!Graph::complete(4).is_three_colourable());
        assert!(Graph::cycle(5).is_three_colourable());
        assert!(!Graph::wheel(5).is_three_colourable());
        assert!(Graph::wheel(4).is_three_colourable());
    }

    /// Exhaustive colour assignment, used to pin the W_5 answer.
    #[test]
    fn wheel_needs_four_colours_exhaustively() {
        let w = Graph::wheel(5);
        let proper = (0..3usize.pow(6)).any(|code| {
            let col: Vec<usize> = (0..6).map(|i| code / 3usize.pow(i as u32) % 3).collect();
            w.edges().iter().all(|&(i, j)| col[i] != col[j])
        });
        assert!(!proper);
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# a comment\n3 2\n1 2 # trailing\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);

        let labelled = Graph::with_labels(vec![2, 10, 7], &[(2, 10), (10, 7)]).unwrap();
        let back = Graph::parse_edge_list(&labelled.to_edge_list()).unwrap();
        assert_eq!(back, labelled);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 2\n1 2\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n1 x\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n1 2 3\n").is_err());
    }
}
