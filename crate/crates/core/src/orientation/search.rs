//! Exact search for a semi-transitive orientation.
//!
//! One vertex is fixed as a source; a graph with a semi-transitive
//! orientation has one in which any chosen vertex is a source. The search
//! propagates, branches on an unoriented edge, and records a refutation
//! tree when every branch ends in a shortcut.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::graph::{bit, bits, Graph};

use super::propagate::{run, ConflictWitness, ForcedEdge, State};
use super::PartialOrientation;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Index of the vertex fixed as a source; default is the first vertex of maximum degree.
    pub source: Option<usize>,
    /// Single worker, fixed branch order.
    pub deterministic: bool,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions { source: None, deterministic: true, threads: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Orientation(PartialOrientation),
    Refutation(RefutationLog),
}

impl Certificate {
    pub fn is_orientation(&self) -> bool {
        matches!(self, Certificate::Orientation(_))
    }
}

/// Branch/propagation/conflict tree, rooted at the state where every edge at
/// `source` points away from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationLog {
    pub host: Graph,
    pub source: usize,
    pub root: LogNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogNode {
    pub forced: Vec<ForcedEdge>,
    pub end: LogEnd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogEnd {
    Conflict(ConflictWitness),
    /// `first` explores `from -> to`, `second` explores `to -> from`.
    Branch {
        from: usize,
        to: usize,
        first: Box<LogNode>,
        second: Box<LogNode>,
    },
}

impl LogNode {
    pub fn leaf_count(&self) -> usize {
        match &self.end {
            LogEnd::Conflict(_) => 1,
            LogEnd::Branch { first, second, .. } => first.leaf_count() + second.leaf_count(),
        }
    }
}

pub fn default_source(g: &Graph) -> usize {
    (0..g.n()).max_by_key(|&i| (g.degree(i), std::cmp::Reverse(i))).expect("graph has a vertex")
}

pub fn search_semi_transitive(g: &Graph, opts: &SearchOptions) -> Certificate {
    let source = opts.source.unwrap_or_else(|| default_source(g));
    let outcome = if opts.deterministic || opts.threads <= 1 {
        Searcher::new(g, true, 0).start(source)
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build();
        match pool {
            Ok(pool) => pool.install(|| Searcher::new(g, true, PARALLEL_DEPTH).start(source)),
            Err(_) => Searcher::new(g, true, 0).start(source),
        }
    };
    match outcome {
        Outcome::Found(out) => Certificate::Orientation(PartialOrientation::from_rows(g.clone(), out)),
        Outcome::Refuted(Some(root)) => Certificate::Refutation(RefutationLog { host: g.clone(), source, root }),
        Outcome::Refuted(None) => unreachable!("recording search always keeps its log"),
    }
}

/// Decision only; no refutation log is kept.
pub fn is_word_representable(g: &Graph) -> bool {
    matches!(Searcher::new(g, false, 0).start(default_source(g)), Outcome::Found(_))
}

const PARALLEL_DEPTH: usize = 6;

enum Outcome {
    Found(Vec<u64>),
    Refuted(Option<LogNode>),
}

struct Searcher<'g> {
    adj: &'g [u64],
    edges: Vec<(usize, usize)>,
    record: bool,
    parallel_depth: usize,
    found: AtomicBool,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph, record: bool, parallel_depth: usize) -> Searcher<'g> {
        Searcher { adj: g.rows(), edges: g.edges(), record, parallel_depth, found: AtomicBool::new(false) }
    }

    fn start(&self, source: usize) -> Outcome {
        let mut out = vec![0u64; self.adj.len()];
        out[source] = self.adj[source];
        self.solve(State::new(out), 0)
    }

    fn solve(&self, mut st: State, depth: usize) -> Outcome {
        if self.found.load(Ordering::Relaxed) {
            return Outcome::Refuted(None);
        }
        let mut forced = Vec::new();
        let log = if self.record { Some(&mut forced) } else { None };
        if let Err(w) = run(self.adj, &self.edges, &mut st, log) {
            return Outcome::Refuted(
                self.record.then_some(LogNode { forced, end: LogEnd::Conflict(ConflictWitness::Shortcut(w)) }),
            );
        }
        let Some((a, b)) = self.branch_edge(&st) else {
            self.found.store(true, Ordering::Relaxed);
            return Outcome::Found(st.out);
        };
        let mut first = st.clone();
        first.add_arc(a, b);
        let mut second = st;
        second.add_arc(b, a);
        let (r1, r2) = if depth < self.parallel_depth {
            rayon::join(|| self.solve(first, depth + 1), || self.solve(second, depth + 1))
        } else {
            let r1 = self.solve(first, depth + 1);
            if let Outcome::Found(out) = r1 {
                return Outcome::Found(out);
            }
            (r1, self.solve(second, depth + 1))
        };
        match (r1, r2) {
            (Outcome::Found(out), _) | (_, Outcome::Found(out)) => Outcome::Found(out),
            (Outcome::Refuted(Some(n1)), Outcome::Refuted(Some(n2))) => Outcome::Refuted(Some(LogNode {
                forced,
                end: LogEnd::Branch { from: a, to: b, first: Box::new(n1), second: Box::new(n2) },
            })),
            _ => Outcome::Refuted(None),
        }
    }

    /// Unoriented edge with the most triangles whose other two edges are
    /// oriented; ties go to the lowest `(min, max)` pair.
    fn branch_edge(&self, st: &State) -> Option<(usize, usize)> {
        let n = self.adj.len();
        let mut touched = st.out.clone();
        for i in 0..n {
            for j in bits(st.out[i]) {
                touched[j] |= bit(i);
            }
        }
        let mut best: Option<((usize, usize), u32)> = None;
        for &(a, b) in &self.edges {
            if touched[a] & bit(b) != 0 {
                continue;
            }
            let score = (touched[a] & touched[b]).count_ones();
            if best.is_none_or(|(_, s)| score > s) {
                best = Some(((a, b), score));
            }
        }
        best.map(|(e, _)| e)
    }
}
