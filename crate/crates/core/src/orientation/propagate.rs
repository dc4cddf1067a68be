//! Forcing rule for partial orientations.
//!
//! An unoriented edge `ab` is forced to `a -> b` when the trial arc `b -> a`
//! would, together with the arcs already present, produce one of:
//!
//! * a directed cycle, because `a => b` already;
//! * a directed path `s => b -> a => t` whose ends are adjacent and whose
//!   vertices include a non-adjacent pair. Whatever way `st` is oriented in
//!   a completion, it closes a cycle or becomes a shortcutting arc.
//!
//! The second case covers every cycle of the host graph on a non-clique
//! vertex set, of any length, with all but one or two edges already oriented
//! one way round. Each forced arc carries a host cycle, `s .. b a .. t`,
//! along which the trial direction is consistent with all other edges but
//! the closing one.

use crate::graph::{bit, bits};

use super::{closure, concat_paths, path_within, shortcut_on_arc, transpose, PartialOrientation, ShortcutWitness};

/// An arc fixed by propagation. Under the opposite direction, `cycle`
/// (closed by its last-to-first edge) has every edge but possibly the
/// closing one directed consistently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedEdge {
    pub from: usize,
    pub to: usize,
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConflictWitness {
    Shortcut(ShortcutWitness),
    /// Vertices of a directed cycle, closed by the last-to-first arc.
    Cycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Propagation {
    Consistent { state: PartialOrientation, forced: Vec<ForcedEdge> },
    Conflict { forced: Vec<ForcedEdge>, witness: ConflictWitness },
}

/// Close `p` under the forcing rule. The result is either a state with no
/// further forced edges and no shortcut among its arcs, or a conflict.
pub fn propagate(p: &PartialOrientation) -> Propagation {
    if let Some(cycle) = p.directed_cycle() {
        return Propagation::Conflict { forced: Vec::new(), witness: ConflictWitness::Cycle(cycle) };
    }
    let host = p.host();
    let edges = host.edges();
    let mut st = State::new(p.out_rows().to_vec());
    let mut forced = Vec::new();
    match run(host.rows(), &edges, &mut st, Some(&mut forced)) {
        Ok(()) => Propagation::Consistent { state: PartialOrientation::from_rows(host.clone(), st.out), forced },
        Err(w) => Propagation::Conflict { forced, witness: ConflictWitness::Shortcut(w) },
    }
}

/// Arcs plus reflexive reachability `r` and its transpose `c`. Always acyclic.
#[derive(Clone, Debug)]
pub(crate) struct State {
    pub out: Vec<u64>,
    pub r: Vec<u64>,
    pub c: Vec<u64>,
}

impl State {
    pub fn new(out: Vec<u64>) -> State {
        let r = closure(&out);
        let c = transpose(&r);
        State { out, r, c }
    }

    pub fn is_oriented(&self, a: usize, b: usize) -> bool {
        (self.out[a] & bit(b)) | (self.out[b] & bit(a)) != 0
    }

    /// Add `a -> b`; requires `b` not to reach `a`.
    pub fn add_arc(&mut self, a: usize, b: usize) {
        debug_assert!(self.r[b] & bit(a) == 0);
        let rb = self.r[b];
        let ca = self.c[a];
        for x in bits(ca) {
            self.r[x] |= rb;
        }
        for y in bits(rb) {
            self.c[y] |= ca;
        }
        self.out[a] |= bit(b);
    }

    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        path_within(&self.out, from, to, self.r[from] & self.c[to]).expect("reachability implies a path")
    }
}

/// Why a trial arc `p -> q` is impossible.
enum Why {
    /// `s => p` holds a non-adjacent pair; `t` is reached from `q` and adjacent to `s`.
    Head { s: usize, t: usize },
    /// `q => t` holds a non-adjacent pair; `s` reaches `p` and is adjacent to `t`.
    Tail { s: usize, t: usize },
    /// `x => p` and `q => y` with `x`, `y` non-adjacent and some `s => x`, `y => t`, `s ~ t`.
    Cross { x: usize, y: usize },
}

struct Matrices {
    far: Vec<u64>,
    // nc[p]: targets q with a non-adjacent comparable pair on some p => q path
    nc: Vec<u64>,
    // cross[x]: targets y such that something reaching x is adjacent to something y reaches
    cross: Vec<u64>,
}

impl Matrices {
    fn new(adj: &[u64], st: &State) -> Matrices {
        let n = adj.len();
        let far: Vec<u64> = (0..n).map(|x| st.r[x] & !adj[x] & !bit(x)).collect();
        let below: Vec<u64> = (0..n).map(|x| bits(far[x]).fold(0, |acc, y| acc | st.r[y])).collect();
        let nc = (0..n).map(|p| bits(st.r[p]).fold(0, |acc, x| acc | below[x])).collect();
        let cross = (0..n)
            .map(|x| {
                let touched = bits(st.c[x]).fold(0u64, |acc, s| acc | adj[s]);
                (0..n).filter(|&y| touched & st.r[y] != 0).fold(0, |acc, y| acc | bit(y))
            })
            .collect();
        Matrices { far, nc, cross }
    }

    fn bad_trial(&self, adj: &[u64], st: &State, p: usize, q: usize) -> Option<Why> {
        let heads = st.c[p];
        let tails = st.r[q];
        for s in bits(heads) {
            if self.nc[s] & bit(p) != 0 {
                if let Some(t) = bits(adj[s] & tails).next() {
                    return Some(Why::Head { s, t });
                }
            }
        }
        for t in bits(tails & self.nc[q]) {
            if let Some(s) = bits(adj[t] & heads).next() {
                return Some(Why::Tail { s, t });
            }
        }
        for x in bits(heads) {
            if let Some(y) = bits(tails & !adj[x] & self.cross[x]).next() {
                return Some(Why::Cross { x, y });
            }
        }
        None
    }

    /// A non-adjacent pair `x => y` inside `u => v`.
    fn pair_between(&self, st: &State, u: usize, v: usize) -> (usize, usize) {
        let between = st.r[u] & st.c[v];
        bits(between)
            .find_map(|x| bits(self.far[x] & between).next().map(|y| (x, y)))
            .expect("pair exists when nc holds")
    }

    /// Host cycle justifying `q -> p` from the impossibility of `p -> q`.
    fn cycle(&self, adj: &[u64], st: &State, p: usize, q: usize, why: &Why) -> Vec<usize> {
        match *why {
            Why::Head { s, t } => {
                let (x, y) = self.pair_between(st, s, p);
                concat_paths(&[st.path(s, x), st.path(x, y), st.path(y, p), st.path(q, t)])
            }
            Why::Tail { s, t } => {
                let (x, y) = self.pair_between(st, q, t);
                concat_paths(&[st.path(s, p), st.path(q, x), st.path(x, y), st.path(y, t)])
            }
            Why::Cross { x, y } => {
                let (s, t) = bits(st.c[x])
                    .find_map(|s| bits(adj[s] & st.r[y]).next().map(|t| (s, t)))
                    .expect("cross pair has an adjacent end pair");
                concat_paths(&[st.path(s, x), st.path(x, p), st.path(q, y), st.path(y, t)])
            }
        }
    }
}

/// Apply the forcing rule to a fixed point. `Err` carries a shortcut among
/// the arcs. When `log` is given, every forced arc is recorded with its cycle.
pub(crate) fn run(
    adj: &[u64],
    edges: &[(usize, usize)],
    st: &mut State,
    mut log: Option<&mut Vec<ForcedEdge>>,
) -> Result<(), ShortcutWitness> {
    let n = adj.len();
    let mut pending: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    loop {
        let m = Matrices::new(adj, st);
        for u in 0..n {
            if let Some(v) = bits(st.out[u] & m.nc[u]).next() {
                return Err(shortcut_on_arc(&st.out, adj, &st.r, &st.c, u, v).expect("nc implies a shortcut"));
            }
        }
        let record = log.is_some();
        pending.clear();
        for &(a, b) in edges {
            if st.is_oriented(a, b) {
                continue;
            }
            let choice = if st.r[a] & bit(b) != 0 {
                Some((a, b, None))
            } else if st.r[b] & bit(a) != 0 {
                Some((b, a, None))
            } else if let Some(why) = m.bad_trial(adj, st, b, a) {
                Some((a, b, Some((b, why))))
            } else {
                m.bad_trial(adj, st, a, b).map(|why| (b, a, Some((a, why))))
            };
            let Some((from, to, why)) = choice else { continue };
            let cycle = match (record, why) {
                (false, _) => Vec::new(),
                (true, None) => st.path(from, to),
                (true, Some((p, why))) => m.cycle(adj, st, p, from, &why),
            };
            pending.push((from, to, cycle));
        }
        if pending.is_empty() {
            return Ok(());
        }
        for (from, to, cycle) in pending.drain(..) {
            // an earlier arc of this pass may have made `to => from`
            let (from, to, cycle) = if st.r[to] & bit(from) != 0 {
                let c = if record { st.path(to, from) } else { Vec::new() };
                (to, from, c)
            } else {
                (from, to, cycle)
            };
            st.add_arc(from, to);
            if let Some(log) = log.as_deref_mut() {
                log.push(ForcedEdge { from, to, cycle });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn labels(g: &Graph, seq: &[usize]) -> Vec<u32> {
        seq.iter().map(|&i| g.label(i)).collect()
    }

    #[test]
    fn triangle_rule() {
        let p = PartialOrientation::from_arcs(Graph::complete(3), &[(1, 2), (2, 3)]).unwrap();
        let Propagation::Consistent { state, forced } = propagate(&p) else { panic!("conflict") };
        assert!(state.has_arc(0, 2));
        assert_eq!(forced, vec![ForcedEdge { from: 0, to: 2, cycle: vec![0, 1, 2] }]);
    }

    #[test]
    fn clique_four_cycle_is_not_forced() {
        let p = PartialOrientation::from_arcs(Graph::complete(4), &[(1, 2), (2, 3)]).unwrap();
        let Propagation::Consistent { state, .. } = propagate(&p) else { panic!("conflict") };
        assert!(state.has_arc(0, 2));
        assert_eq!(state.arc_count(), 3);
    }

    #[test]
    fn chordless_four_cycle_forces_both_remaining_edges() {
        // 1 -> 2 -> 3 on the 4-cycle 1 2 3 4: both 3-4 and 4-1 must oppose the traversal
        let p = PartialOrientation::from_arcs(Graph::cycle(4), &[(1, 2), (2, 3)]).unwrap();
        let Propagation::Consistent { state, forced } = propagate(&p) else { panic!("conflict") };
        assert!(state.has_arc(3, 2) || state.has_arc(0, 3));
        assert!(state.has_arc(3, 2) && state.has_arc(0, 3));
        for f in &forced {
            assert_eq!(f.cycle.len(), 4);
        }
    }

    #[test]
    fn input_cycle_is_reported() {
        let p = PartialOrientation::from_arcs(Graph::complete(3), &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(matches!(propagate(&p), Propagation::Conflict { witness: ConflictWitness::Cycle(_), .. }));
    }

    #[test]
    fn wheel_with_hub_source_and_two_rim_arcs_conflicts() {
        // 1 -> 2 -> 3 on the rim forces the rest of the rim around until a shortcut appears
        let mut p = PartialOrientation::new(Graph::wheel(5));
        p.make_source(5).unwrap();
        p.orient_labels(1, 2).unwrap();
        match propagate(&p) {
            Propagation::Conflict { witness: ConflictWitness::Shortcut(w), forced } => {
                let Propagation::Consistent { .. } = propagate(&PartialOrientation::new(Graph::wheel(5))) else {
                    panic!("empty state conflicts")
                };
                let mut replay = p.clone();
                for f in &forced {
                    replay.orient(f.from, f.to).unwrap();
                }
                assert!(w.is_valid(&replay), "{:?}", labels(replay.host(), &w.path));
            }
            other => panic!("expected a shortcut, got {other:?}"),
        }
    }
}
