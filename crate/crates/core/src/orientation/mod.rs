//! Orientations of a host graph, shortcut detection, and the decision search.
//!
//! A shortcut is a directed path `v0 -> ... -> vk` (`k >= 3`) together with
//! the arc `v0 -> vk` where some pair of path vertices is non-adjacent. An
//! acyclic orientation without shortcuts is semi-transitive.

mod naive;
mod propagate;
mod search;

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::OrientationError;
use crate::graph::{bit, bits, Graph};

pub use naive::{
    exists_semi_transitive_naive, for_each_semi_transitive_completion, has_shortcut_by_paths, NAIVE_EDGE_LIMIT,
};
pub use propagate::{propagate, ConflictWitness, ForcedEdge, Propagation};
pub use search::{
    is_word_representable, search_semi_transitive, Certificate, LogEnd, LogNode, RefutationLog, SearchOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeState {
    Unoriented,
    /// Oriented from the first argument to the second.
    Forward,
    Backward,
}

/// Per-edge orientation state over a host graph. `out[i]` holds `j` iff `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    host: Graph,
    out: Vec<u64>,
}

impl PartialOrientation {
    pub fn new(host: Graph) -> PartialOrientation {
        let n = host.n();
        PartialOrientation { host, out: vec![0; n] }
    }

    /// Build from arcs written as label pairs `(from, to)`.
    pub fn from_arcs(host: Graph, arcs: &[(u32, u32)]) -> Result<PartialOrientation, OrientationError> {
        let mut p = PartialOrientation::new(host);
        for &(u, v) in arcs {
            p.orient_labels(u, v)?;
        }
        Ok(p)
    }

    pub(crate) fn from_rows(host: Graph, out: Vec<u64>) -> PartialOrientation {
        debug_assert!((0..host.n()).all(|i| out[i] & !host.neighbours(i) == 0));
        PartialOrientation { host, out }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    pub fn in_row(&self, i: usize) -> u64 {
        (0..self.host.n()).filter(|&j| self.out[j] & bit(i) != 0).fold(0, |acc, j| acc | bit(j))
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.out[i] & bit(j) != 0
    }

    pub fn state(&self, i: usize, j: usize) -> EdgeState {
        if self.has_arc(i, j) {
            EdgeState::Forward
        } else if self.has_arc(j, i) {
            EdgeState::Backward
        } else {
            EdgeState::Unoriented
        }
    }

    /// Orient the edge `i -> j` (indices). Re-stating an existing arc is a no-op.
    pub fn orient(&mut self, i: usize, j: usize) -> Result<(), OrientationError> {
        let (li, lj) = (self.host.label(i), self.host.label(j));
        if !self.host.has_edge(i, j) {
            return Err(OrientationError::NotAnEdge(li, lj));
        }
        if self.has_arc(j, i) {
            return Err(OrientationError::Contradictory(li, lj));
        }
        self.out[i] |= bit(j);
        Ok(())
    }

    pub fn orient_labels(&mut self, u: u32, v: u32) -> Result<(), OrientationError> {
        let i = self.index(u)?;
        let j = self.index(v)?;
        self.orient(i, j)
    }

    fn index(&self, label: u32) -> Result<usize, OrientationError> {
        self.host.index_of(label).ok_or(OrientationError::UnknownVertex(label))
    }

    /// Arcs as index pairs, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.host.n()).flat_map(|i| bits(self.out[i]).map(move |j| (i, j))).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn first_unoriented(&self) -> Option<(usize, usize)> {
        self.host.edges().into_iter().find(|&(i, j)| self.state(i, j) == EdgeState::Unoriented)
    }

    pub fn is_complete(&self) -> bool {
        self.arc_count() == self.host.edge_count()
    }

    fn require_complete(&self) -> Result<(), OrientationError> {
        match self.first_unoriented() {
            Some((i, j)) => Err(OrientationError::Incomplete(self.host.label(i), self.host.label(j))),
            None => Ok(()),
        }
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> PartialOrientation {
        let n = self.host.n();
        let mut out = vec![0u64; n];
        for (i, j) in self.arcs() {
            out[j] |= bit(i);
        }
        PartialOrientation { host: self.host.clone(), out }
    }

    /// Orient every edge at `v` away from `v`.
    pub fn make_source(&mut self, v: usize) -> Result<(), OrientationError> {
        for j in bits(self.host.neighbours(v)) {
            self.orient(v, j)?;
        }
        Ok(())
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.out[v] == self.host.neighbours(v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.host.neighbours(v) == self.in_row(v)
    }

    /// A directed cycle among the current arcs, as a vertex sequence.
    pub fn directed_cycle(&self) -> Option<Vec<usize>> {
        let reach = strict_closure(&self.out);
        let v = (0..self.host.n()).find(|&v| reach[v] & bit(v) != 0)?;
        // an arc u -> v closing a path v => u
        let u = bits(self.in_row(v)).find(|&u| reach[v] & bit(u) != 0)?;
        path_within(&self.out, v, u, u64::MAX)
    }

    /// One `u>v` line per arc, by label.
    pub fn to_arc_list(&self) -> String {
        let mut s = String::new();
        for (i, j) in self.arcs() {
            let _ = writeln!(s, "{}>{}", self.host.label(i), self.host.label(j));
        }
        s
    }

    /// Parse `u>v` lines (labels). `#` starts a comment.
    pub fn parse_arc_list(host: Graph, text: &str) -> Result<PartialOrientation, OrientationError> {
        let mut p = PartialOrientation::new(host);
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| OrientationError::Parse { line: k + 1, msg: msg.to_string() };
            let (a, b) = line.split_once('>').ok_or_else(|| err("expected `u>v`"))?;
            let a: u32 = a.trim().parse().map_err(|_| err("bad source vertex"))?;
            let b: u32 = b.trim().parse().map_err(|_| err("bad target vertex"))?;
            p.orient_labels(a, b)?;
        }
        Ok(p)
    }

    /// DOT digraph; unoriented edges are drawn dashed without arrowheads.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph orientation {\n");
        for i in 0..self.host.n() {
            let _ = writeln!(s, "  {};", self.host.label(i));
        }
        for (i, j) in self.host.edges() {
            let (a, b) = (self.host.label(i), self.host.label(j));
            match self.state(i, j) {
                EdgeState::Forward => {
                    let _ = writeln!(s, "  {a} -> {b};");
                }
                EdgeState::Backward => {
                    let _ = writeln!(s, "  {b} -> {a};");
                }
                EdgeState::Unoriented => {
                    let _ = writeln!(s, "  {a} -> {b} [dir=none, style=dashed];");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// A directed path `path[0] -> ... -> path[k]`, `k >= 3`, with the arc
/// `path[0] -> path[k]` and a non-adjacent pair of path vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutWitness {
    pub path: Vec<usize>,
    pub missing: (usize, usize),
}

impl ShortcutWitness {
    pub fn labels(&self, host: &Graph) -> Vec<u32> {
        self.path.iter().map(|&i| host.label(i)).collect()
    }

    pub fn is_valid(&self, d: &PartialOrientation) -> bool {
        let p = &self.path;
        let g = d.host();
        let (x, y) = self.missing;
        p.len() >= 4
            && p.windows(2).all(|w| d.has_arc(w[0], w[1]))
            && d.has_arc(p[0], p[p.len() - 1])
            && p.contains(&x)
            && p.contains(&y)
            && x != y
            && !g.has_edge(x, y)
    }
}

pub fn is_acyclic(d: &PartialOrientation) -> Result<bool, OrientationError> {
    d.require_complete()?;
    Ok(acyclic(&d.out))
}

/// A shortcut of a complete acyclic orientation, if any. Detection uses the
/// reachability closure: a shortcut exists iff some arc `u -> v` has a
/// non-adjacent pair `x, y` with `u => x => y => v`.
pub fn find_shortcut(d: &PartialOrientation) -> Result<Option<ShortcutWitness>, OrientationError> {
    d.require_complete()?;
    if !acyclic(&d.out) {
        return Err(OrientationError::Cyclic);
    }
    Ok(shortcut_among_arcs(&d.out, d.host.rows()))
}

pub fn is_semi_transitive(d: &PartialOrientation) -> Result<bool, OrientationError> {
    Ok(is_acyclic(d)? && find_shortcut(d)?.is_none())
}

pub(crate) fn acyclic(out: &[u64]) -> bool {
    let r = strict_closure(out);
    (0..out.len()).all(|i| r[i] & bit(i) == 0)
}

/// Reachability by one or more arcs.
fn strict_closure(out: &[u64]) -> Vec<u64> {
    let n = out.len();
    let mut r = out.to_vec();
    for k in 0..n {
        for i in 0..n {
            if r[i] & bit(k) != 0 {
                r[i] |= r[k];
            }
        }
    }
    r
}

/// Reflexive reachability: `r[i]` holds `i` and everything reachable from it.
pub(crate) fn closure(out: &[u64]) -> Vec<u64> {
    let mut r = strict_closure(out);
    for (i, row) in r.iter_mut().enumerate() {
        *row |= bit(i);
    }
    r
}

pub(crate) fn transpose(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut t = vec![0u64; n];
    for (i, &row) in rows.iter().enumerate() {
        for j in bits(row) {
            t[j] |= bit(i);
        }
    }
    t
}

/// Shortest directed path `from -> ... -> to` through vertices in `allowed`.
pub(crate) fn path_within(out: &[u64], from: usize, to: usize, allowed: u64) -> Option<Vec<usize>> {
    if from == to {
        return Some(vec![from]);
    }
    let mut prev = [usize::MAX; 64];
    let mut seen = bit(from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for y in bits(out[x] & allowed & !seen) {
            seen |= bit(y);
            prev[y] = x;
            if y == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// Join paths that share endpoints into one sequence.
pub(crate) fn concat_paths(parts: &[Vec<usize>]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for p in parts {
        let skip = usize::from(out.last().is_some() && out.last() == p.first());
        out.extend_from_slice(&p[skip..]);
    }
    out
}

/// First shortcut among the arcs of an acyclic (possibly partial) orientation.
pub(crate) fn shortcut_among_arcs(out: &[u64], adj: &[u64]) -> Option<ShortcutWitness> {
    let n = out.len();
    let r = closure(out);
    let c = transpose(&r);
    for u in 0..n {
        for v in bits(out[u]) {
            if let Some(w) = shortcut_on_arc(out, adj, &r, &c, u, v) {
                return Some(w);
            }
        }
    }
    None
}

pub(crate) fn shortcut_on_arc(
    out: &[u64],
    adj: &[u64],
    r: &[u64],
    c: &[u64],
    u: usize,
    v: usize,
) -> Option<ShortcutWitness> {
    let between = r[u] & c[v];
    for x in bits(between) {
        let ys = r[x] & !adj[x] & !bit(x) & between;
        if let Some(y) = bits(ys).next() {
            let path = concat_paths(&[
                path_within(out, u, x, r[u] & c[x])?,
                path_within(out, x, y, r[x] & c[y])?,
                path_within(out, y, v, r[y] & c[v])?,
            ]);
            return Some(ShortcutWitness { path, missing: (x, y) });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tournament(n: usize) -> PartialOrientation {
        let g = Graph::complete(n);
        let mut p = PartialOrientation::new(g);
        for i in 0..n {
            for j in i + 1..n {
                p.orient(i, j).unwrap();
            }
        }
        p
    }

    #[test]
    fn transitive_tournament_is_semi_transitive() {
        let t = tournament(4);
        assert!(is_acyclic(&t).unwrap());
        assert_eq!(find_shortcut(&t).unwrap(), None);
        assert!(is_semi_transitive(&tournament(9)).unwrap());
    }

    #[test]
    fn directed_triangle_is_cyclic() {
        let p = PartialOrientation::from_arcs(Graph::complete(3), &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!is_acyclic(&p).unwrap());
        assert!(!is_semi_transitive(&p).unwrap());
        assert_eq!(find_shortcut(&p), Err(OrientationError::Cyclic));
        let cyc = p.directed_cycle().unwrap();
        assert_eq!(cyc.len(), 3);
    }

    #[test]
    fn wheel_with_hub_source_is_acyclic() {
        let w = Graph::wheel(5);
        let p = PartialOrientation::from_arcs(
            w,
            &[(6, 1), (6, 2), (6, 3), (6, 4), (6, 5), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
        )
        .unwrap();
        assert!(is_acyclic(&p).unwrap());
    }

    #[test]
    fn four_vertex_shortcut() {
        // vertices 0..3 written as labels 1..4; 1-3 (0-based) missing
        let g = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        let p = PartialOrientation::from_arcs(g, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        let w = find_shortcut(&p).unwrap().unwrap();
        assert_eq!(w.path, vec![0, 1, 2, 3]);
        assert_eq!(w.missing, (1, 3));
        assert!(w.is_valid(&p));
    }

    #[test]
    fn incomplete_orientation_is_rejected() {
        let p = PartialOrientation::from_arcs(Graph::complete(3), &[(1, 2)]).unwrap();
        assert!(matches!(is_acyclic(&p), Err(OrientationError::Incomplete(..))));
        assert!(!p.is_complete());
    }

    #[test]
    fn orient_errors() {
        let mut p = PartialOrientation::new(Graph::path(3));
        assert_eq!(p.orient_labels(1, 3), Err(OrientationError::NotAnEdge(1, 3)));
        p.orient_labels(1, 2).unwrap();
        p.orient_labels(1, 2).unwrap();
        assert_eq!(p.orient_labels(2, 1), Err(OrientationError::Contradictory(2, 1)));
        assert_eq!(p.orient_labels(9, 1), Err(OrientationError::UnknownVertex(9)));
    }

    #[test]
    fn arc_list_round_trip_and_dot() {
        let g = Graph::with_labels(vec![2, 10, 7], &[(2, 10), (10, 7)]).unwrap();
        let p = PartialOrientation::from_arcs(g.clone(), &[(10, 2)]).unwrap();
        let text = p.to_arc_list();
        assert_eq!(text, "10>2\n");
        assert_eq!(PartialOrientation::parse_arc_list(g.clone(), &text).unwrap(), p);
        let dot = p.to_dot();
        assert!(dot.contains("10 -> 2;"));
        assert!(dot.contains("10 -> 7 [dir=none"));
        assert!(PartialOrientation::parse_arc_list(g, "2-10").is_err());
    }

    #[test]
    fn source_and_reversal() {
        let mut p = PartialOrientation::new(Graph::wheel(5));
        p.make_source(5).unwrap();
        assert!(p.is_source(5));
        assert!(p.reversed().is_sink(5));
    }
}
