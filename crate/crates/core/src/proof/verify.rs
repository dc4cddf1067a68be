//! Replays a transcript against a host graph.
//!
//! Accepted instructions:
//!
//! * `O a→b (C…)`: under the trial arc `b→a` the cited cycle is directed in
//!   one traversal direction, or has all edges but one directed that way on
//!   a non-clique vertex set of size at least 4. An arc already present is a
//!   restatement.
//! * `O a→b O c→d (C…)`: the cycle's other edges are all directed one way
//!   round, its vertex set is not a clique, and both arcs oppose that way.
//! * `B a→b (Copy k)`: on an unoriented edge, copy `k` receives `b→a`. On an
//!   edge at the fixed extremal vertex that already points `a→b`, the branch
//!   changes nothing and copy `k` is the fully reversed state.
//! * `S:…`: read cyclically, all edges but one are directed along the
//!   written order, the remaining one against it, and the vertex set is not
//!   a clique; some rotation is then a shortcut.
//! * `D:…`: a directed cycle in the written order.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::{bit, Graph};
use crate::orientation::{EdgeState, PartialOrientation};

use super::{Extremal, Instruction, Terminal, Transcript};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub line: u32,
    /// Position within the line; the terminal is one past the last instruction.
    pub position: usize,
    pub instruction: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub accepted: bool,
    pub failures: Vec<Failure>,
    /// Observations that do not affect acceptance.
    pub notes: Vec<String>,
}

pub fn verify_transcript(g: &Graph, t: &Transcript) -> Verdict {
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let ext = t.extremal.vertex();
    let Some(ext_idx) = g.index_of(ext) else {
        failures.push(Failure {
            line: 0,
            position: 0,
            instruction: format!("{:?}", t.extremal),
            reason: format!("vertex {ext} is not in the graph"),
        });
        return Verdict { accepted: false, failures, notes };
    };
    let mut start = PartialOrientation::new(g.clone());
    start.make_source(ext_idx).expect("fresh orientation");
    if let Extremal::Sink(_) = t.extremal {
        start = start.reversed();
    }
    let mut copies: HashMap<u32, PartialOrientation> = HashMap::new();
    for line in &t.lines {
        let mut state = match &line.resume {
            None => start.clone(),
            Some(r) => match copies.remove(&r.copy) {
                Some(s) => s,
                None => {
                    // parse guarantees resolution; a hand-built transcript may not
                    failures.push(Failure {
                        line: line.number,
                        position: 0,
                        instruction: format!("MC{}", r.copy),
                        reason: "copy was never created".into(),
                    });
                    continue;
                }
            },
        };
        let mut checking = true;
        if let Some(r) = &line.resume {
            if let Some((a, b)) = r.arc {
                if let Err(reason) = arc_present(&state, a, b) {
                    failures.push(Failure {
                        line: line.number,
                        position: 0,
                        instruction: format!("MC{} {a}→{b}", r.copy),
                        reason,
                    });
                    checking = false;
                }
            }
        }
        for (pos, ins) in line.instructions.iter().enumerate() {
            let outcome = step(&mut state, ins, ext_idx, &mut copies);
            if let Err(reason) = outcome {
                if checking {
                    failures.push(Failure { line: line.number, position: pos, instruction: ins.to_string(), reason });
                    checking = false;
                }
            }
        }
        if checking {
            match check_terminal(&state, &line.terminal) {
                Ok(Some(note)) => notes.push(format!("line {}: {note}", line.number)),
                Ok(None) => {}
                Err(reason) => failures.push(Failure {
                    line: line.number,
                    position: line.instructions.len(),
                    instruction: line.terminal.to_string(),
                    reason,
                }),
            }
        }
    }
    for copy in copies.keys() {
        failures.push(Failure {
            line: 0,
            position: 0,
            instruction: format!("Copy {copy}"),
            reason: "copy is never resumed".into(),
        });
    }
    failures.sort_by_key(|f| (f.line, f.position));
    Verdict { accepted: failures.is_empty(), failures, notes }
}

fn idx(g: &Graph, v: u32) -> Result<usize, String> {
    g.index_of(v).ok_or_else(|| format!("vertex {v} is not in the graph"))
}

fn arc_present(st: &PartialOrientation, a: u32, b: u32) -> Result<(), String> {
    let g = st.host();
    let (i, j) = (idx(g, a)?, idx(g, b)?);
    if st.has_arc(i, j) {
        Ok(())
    } else {
        Err(format!("{a}→{b} is not the arc of this copy"))
    }
}

/// Apply one instruction. On a failed check the instruction is still applied
/// when possible so that later copies exist; the caller reports only the first failure.
fn step(
    st: &mut PartialOrientation,
    ins: &Instruction,
    ext: usize,
    copies: &mut HashMap<u32, PartialOrientation>,
) -> Result<(), String> {
    let g = st.host().clone();
    match ins {
        Instruction::Branch { arc: (a, b), copy } => {
            let (i, j) = (idx(&g, *a)?, idx(&g, *b)?);
            if !g.has_edge(i, j) {
                return Err(format!("{a}{b} is not an edge"));
            }
            match st.state(i, j) {
                EdgeState::Unoriented => {
                    let mut other = st.clone();
                    other.orient(j, i).expect("unoriented edge");
                    copies.insert(*copy, other);
                    st.orient(i, j).expect("unoriented edge");
                    Ok(())
                }
                EdgeState::Forward if i == ext || j == ext => {
                    copies.insert(*copy, st.reversed());
                    Ok(())
                }
                EdgeState::Forward => {
                    copies.insert(*copy, st.clone());
                    Err(format!("{a}→{b} is already oriented; nothing to branch on"))
                }
                EdgeState::Backward => {
                    copies.insert(*copy, st.clone());
                    Err(format!("{b}→{a} is already oriented"))
                }
            }
        }
        Instruction::Orient1 { arc: (a, b), cycle } => {
            let (i, j) = (idx(&g, *a)?, idx(&g, *b)?);
            let cyc = host_cycle(&g, cycle)?;
            if !cycle_has_edge(&cyc, i, j) {
                return Err(format!("edge {a}{b} is not on the cited cycle"));
            }
            match st.state(i, j) {
                EdgeState::Forward => return Ok(()),
                EdgeState::Backward => return Err(format!("{b}→{a} is already oriented")),
                EdgeState::Unoriented => {}
            }
            let mut trial = st.clone();
            trial.orient(j, i).expect("unoriented edge");
            let ok = [false, true].iter().any(|&rev| {
                let (along, _) = count_along(&trial, &cyc, rev);
                along == cyc.len() || (along == cyc.len() - 1 && cyc.len() >= 4 && !is_clique(&g, &cyc))
            });
            st.orient(i, j).expect("unoriented edge");
            if ok {
                Ok(())
            } else {
                Err(format!("{b}→{a} is not contradicted by the cited cycle"))
            }
        }
        Instruction::Orient2 { first, second, cycle } => {
            let (a, b) = (idx(&g, first.0)?, idx(&g, first.1)?);
            let (c, d) = (idx(&g, second.0)?, idx(&g, second.1)?);
            let cyc = host_cycle(&g, cycle)?;
            if !cycle_has_edge(&cyc, a, b) || !cycle_has_edge(&cyc, c, d) {
                return Err("an oriented edge is not on the cited cycle".into());
            }
            if (a.min(b), a.max(b)) == (c.min(d), c.max(d)) {
                return Err("the two edges coincide".into());
            }
            let check = check_orient2(st, &cyc, (a, b), (c, d));
            for (x, y) in [(a, b), (c, d)] {
                if st.state(x, y) == EdgeState::Backward {
                    return Err(format!("{}→{} is already oriented", g.label(y), g.label(x)));
                }
                st.orient(x, y).expect("edge is free or already so");
            }
            check
        }
    }
}

fn check_orient2(st: &PartialOrientation, cyc: &[usize], e1: (usize, usize), e2: (usize, usize)) -> Result<(), String> {
    let g = st.host();
    let m = cyc.len();
    if m < 4 {
        return Err("the cycle has fewer than 4 vertices".into());
    }
    if is_clique(g, cyc) {
        return Err("the cycle's vertex set is a clique".into());
    }
    let same = |x: (usize, usize), y: (usize, usize)| (x.0.min(x.1), x.0.max(x.1)) == (y.0.min(y.1), y.0.max(y.1));
    for rev in [false, true] {
        let edges = traversal(cyc, rev);
        let rest_along = edges.iter().filter(|&&e| !same(e, e1) && !same(e, e2)).all(|&(x, y)| st.has_arc(x, y));
        // the new arcs oppose the traversal
        let opposed = [e1, e2].iter().all(|&(x, y)| edges.contains(&(y, x)));
        if rest_along && opposed {
            return Ok(());
        }
    }
    Err("the cycle does not have its other edges directed one way with both new arcs opposed".into())
}

fn check_terminal(st: &PartialOrientation, term: &Terminal) -> Result<Option<String>, String> {
    let g = st.host();
    match term {
        Terminal::Shortcut(seq) => {
            let cyc = host_cycle(g, seq)?;
            let m = cyc.len();
            let (along, against) = count_along(st, &cyc, false);
            if along != m - 1 || against != 1 {
                return Err(format!(
                    "not a shortcut: {along} of {m} edges follow the written order, {against} oppose it"
                ));
            }
            if is_clique(g, &cyc) {
                return Err("not a shortcut: the vertices form a clique".into());
            }
            let edges = traversal(&cyc, false);
            let k = edges.iter().position(|&(x, y)| st.has_arc(y, x)).expect("one opposed edge");
            if k == m - 1 {
                Ok(None)
            } else {
                let start = g.label(cyc[(k + 1) % m]);
                Ok(Some(format!("shortcut written from a rotated start; the path begins at {start}")))
            }
        }
        Terminal::DirectedCycle(seq) => {
            let cyc = host_cycle(g, seq)?;
            let (along, _) = count_along(st, &cyc, false);
            if along == cyc.len() {
                Ok(None)
            } else {
                Err("not a directed cycle".into())
            }
        }
    }
}

/// Indices of a cyclic vertex sequence whose consecutive pairs (wrapping) are host edges.
fn host_cycle(g: &Graph, seq: &[u32]) -> Result<Vec<usize>, String> {
    let cyc = seq.iter().map(|&v| idx(g, v)).collect::<Result<Vec<_>, _>>()?;
    if cyc.len() < 3 {
        return Err("a cycle needs at least 3 vertices".into());
    }
    let mut seen = 0u64;
    for &v in &cyc {
        if seen & bit(v) != 0 {
            return Err(format!("vertex {} repeats", g.label(v)));
        }
        seen |= bit(v);
    }
    for (x, y) in traversal(&cyc, false) {
        if !g.has_edge(x, y) {
            return Err(format!("{}{} is not an edge", g.label(x), g.label(y)));
        }
    }
    Ok(cyc)
}

fn traversal(cyc: &[usize], reverse: bool) -> Vec<(usize, usize)> {
    let m = cyc.len();
    (0..m)
        .map(|k| {
            let (x, y) = (cyc[k], cyc[(k + 1) % m]);
            if reverse {
                (y, x)
            } else {
                (x, y)
            }
        })
        .collect()
}

fn cycle_has_edge(cyc: &[usize], i: usize, j: usize) -> bool {
    traversal(cyc, false).iter().any(|&(x, y)| (x, y) == (i, j) || (x, y) == (j, i))
}

/// Numbers of cycle edges directed along and against the traversal.
fn count_along(st: &PartialOrientation, cyc: &[usize], reverse: bool) -> (usize, usize) {
    let edges = traversal(cyc, reverse);
    let along = edges.iter().filter(|&&(x, y)| st.has_arc(x, y)).count();
    let against = edges.iter().filter(|&&(x, y)| st.has_arc(y, x)).count();
    (along, against)
}

fn is_clique(g: &Graph, cyc: &[usize]) -> bool {
    g.is_clique(cyc.iter().fold(0, |acc, &v| acc | bit(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::parse_transcript;

    /// W_5 with hub 6 as source; see the module tests in `emit` for a full proof.
    #[test]
    fn rejects_unknown_extremal() {
        let t = parse_transcript("source 9\n1. S:1234\n").unwrap();
        let v = verify_transcript(&Graph::wheel(5), &t);
        assert!(!v.accepted);
    }

    #[test]
    fn triangle_orientation_is_checked() {
        // K3 with source 1: 2-3 is free, so O2→3 (C123) is not forced
        let g = Graph::complete(3);
        let t = parse_transcript("source 1\n1. O2→3 (C123) S:1234\n").unwrap();
        let v = verify_transcript(&g, &t);
        assert!(!v.accepted);
        assert_eq!(v.failures[0].position, 0);
    }

    #[test]
    fn four_cycle_shortcut_with_rotation() {
        // path 1 -> 2 -> 3 -> 4 with chord 1 -> 4, 1-3 missing, 2-4 missing
        let g = Graph::cycle(4);
        let t = parse_transcript("source 1\n1. O2→3 O3→4 (C1234) S:2341\n").unwrap();
        let v = verify_transcript(&g, &t);
        assert!(!v.accepted, "4-cycle orientations with 1 a source are not all contradictory");
        let t = parse_transcript("source 1\n1. B2→3 (Copy 2) O3→4 (C1234) S:2341\n2. MC2 3→2 S:1234\n").unwrap();
        let v = verify_transcript(&g, &t);
        assert!(!v.accepted);
    }
}
