use crate::error::TranscriptError;
use crate::orientation::{Certificate, ConflictWitness, LogEnd, LogNode};

use super::{Extremal, Instruction, Line, Resume, Terminal, Transcript};

/// Render a refutation tree as a transcript. Lines follow a depth-first walk
/// taking the first branch at once; set-aside copies are resumed last-in
/// first-out.
pub fn emit_transcript(cert: &Certificate) -> Result<Transcript, TranscriptError> {
    let log = match cert {
        Certificate::Orientation(_) => return Err(TranscriptError::NothingToRefute),
        Certificate::Refutation(log) => log,
    };
    let g = &log.host;
    let label = |i: usize| g.label(i);
    let labels = |seq: &[usize]| seq.iter().map(|&i| g.label(i)).collect::<Vec<u32>>();
    let mut lines = Vec::new();
    let mut pending: Vec<(u32, (u32, u32), &LogNode)> = Vec::new();
    let mut next_copy = 2;
    let mut resume = None;
    let mut node = &log.root;
    let mut instructions = Vec::new();
    loop {
        for f in &node.forced {
            instructions.push(Instruction::Orient1 { arc: (label(f.from), label(f.to)), cycle: labels(&f.cycle) });
        }
        match &node.end {
            LogEnd::Branch { from, to, first, second } => {
                instructions.push(Instruction::Branch { arc: (label(*from), label(*to)), copy: next_copy });
                pending.push((next_copy, (label(*to), label(*from)), second));
                next_copy += 1;
                node = first;
            }
            LogEnd::Conflict(w) => {
                let terminal = match w {
                    ConflictWitness::Shortcut(s) => Terminal::Shortcut(labels(&s.path)),
                    ConflictWitness::Cycle(c) => Terminal::DirectedCycle(labels(c)),
                };
                lines.push(Line {
                    number: lines.len() as u32 + 1,
                    resume: resume.take(),
                    instructions: std::mem::take(&mut instructions),
                    terminal,
                });
                match pending.pop() {
                    Some((copy, arc, n)) => {
                        resume = Some(Resume { copy, arc: Some(arc) });
                        node = n;
                    }
                    None => break,
                }
            }
        }
    }
    Ok(Transcript { extremal: Extremal::Source(label(log.source)), lines })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::proof::{format_transcript, parse_transcript, verify_transcript};

    fn emit_for(g: &Graph) -> Result<Transcript, TranscriptError> {
        emit_transcript(&crate::orientation::search_semi_transitive(g, &Default::default()))
    }

    #[test]
    fn wheel_round_trip() {
        let w = Graph::wheel(5);
        let t = emit_for(&w).unwrap();
        let v = verify_transcript(&w, &t);
        assert!(v.accepted, "{:?}\n{}", v.failures, t);
        let text = format_transcript(&t);
        let back = parse_transcript(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(format_transcript(&back), text);
    }

    #[test]
    fn representable_graph_has_nothing_to_refute() {
        assert_eq!(emit_for(&Graph::complete(3)), Err(TranscriptError::NothingToRefute));
    }
}
