use crate::graph::Graph;

use super::{Arc, Instruction, Resume, Terminal, Transcript};

/// A transcript differing from the original in exactly one instruction.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub line: u32,
    pub description: String,
    pub transcript: Transcript,
}

fn flip((a, b): Arc) -> Arc {
    (b, a)
}

/// Replace the second vertex by the lowest-labelled host vertex not in `seq`.
fn substitute(g: &Graph, seq: &[u32]) -> Option<Vec<u32>> {
    let fresh = g.labels().iter().copied().filter(|v| !seq.contains(v)).min()?;
    let mut out = seq.to_vec();
    out[1] = fresh;
    Some(out)
}

fn instruction_variants(g: &Graph, ins: &Instruction) -> Vec<(String, Instruction)> {
    let mut v = Vec::new();
    match ins {
        Instruction::Branch { arc, copy } => {
            v.push(("reversed".into(), Instruction::Branch { arc: flip(*arc), copy: *copy }));
        }
        Instruction::Orient1 { arc, cycle } => {
            v.push(("reversed".into(), Instruction::Orient1 { arc: flip(*arc), cycle: cycle.clone() }));
            if let Some(c) = substitute(g, cycle) {
                v.push(("cycle vertex substituted".into(), Instruction::Orient1 { arc: *arc, cycle: c }));
            }
        }
        Instruction::Orient2 { first, second, cycle } => {
            v.push((
                "first arc reversed".into(),
                Instruction::Orient2 { first: flip(*first), second: *second, cycle: cycle.clone() },
            ));
            v.push((
                "second arc reversed".into(),
                Instruction::Orient2 { first: *first, second: flip(*second), cycle: cycle.clone() },
            ));
            if let Some(c) = substitute(g, cycle) {
                v.push((
                    "cycle vertex substituted".into(),
                    Instruction::Orient2 { first: *first, second: *second, cycle: c },
                ));
            }
        }
    }
    v
}

fn terminal_variants(g: &Graph, term: &Terminal) -> Vec<(String, Terminal)> {
    type Make = fn(Vec<u32>) -> Terminal;
    let (seq, make): (&Vec<u32>, Make) = match term {
        Terminal::Shortcut(s) => (s, Terminal::Shortcut),
        Terminal::DirectedCycle(s) => (s, Terminal::DirectedCycle),
    };
    let mut v = vec![("reversed".to_string(), make(seq.iter().rev().copied().collect()))];
    if let Some(c) = substitute(g, seq) {
        v.push(("vertex substituted".into(), make(c)));
    }
    v
}

/// Every single-instruction mutation: each arc reversed (branches,
/// orientations, resume reminders), each cited cycle with one vertex
/// substituted, and each terminal reversed or with one vertex substituted.
pub fn mutations(g: &Graph, t: &Transcript) -> Vec<Mutation> {
    let mut out = Vec::new();
    for (li, line) in t.lines.iter().enumerate() {
        let mut add = |description: String, m: Transcript| {
            if m != *t {
                out.push(Mutation { line: line.number, description, transcript: m });
            }
        };
        if let Some(Resume { copy, arc: Some(arc) }) = &line.resume {
            let mut m = t.clone();
            m.lines[li].resume = Some(Resume { copy: *copy, arc: Some(flip(*arc)) });
            add(format!("`MC{copy}` reminder reversed"), m);
        }
        for (k, ins) in line.instructions.iter().enumerate() {
            for (what, new) in instruction_variants(g, ins) {
                let mut m = t.clone();
                m.lines[li].instructions[k] = new;
                add(format!("`{ins}` {what}"), m);
            }
        }
        for (what, new) in terminal_variants(g, &line.terminal) {
            let mut m = t.clone();
            m.lines[li].terminal = new;
            add(format!("`{}` {what}", line.terminal), m);
        }
    }
    out
}
