//! Refutation transcripts: a line-by-line record of branching, forced
//! orientations, and the shortcut ending each branch.
//!
//! ```text
//! source 10
//! 1. B8→9 (Copy 2) O8→2 (C2(10)98) ... S:819(10)
//! 2. MC2 9→8 O2→8 (C2(10)98) ... S:918(10)
//! ```
//!
//! `B a→b (Copy k)` orients `a→b` and sets aside copy `k` with `b→a`.
//! `MCk b→a` resumes copy `k`. `O a→b (C…)` orients one edge, justified by
//! the cited cycle; `O a→b O c→d (C…)` orients two edges of one cycle.
//! `S:…` names a shortcut, `D:…` (extended form) a directed cycle.

mod emit;
mod mutate;
mod parse;
mod verify;

use std::fmt;

use crate::words::write_letter;

pub use emit::emit_transcript;
pub use mutate::{mutations, Mutation};
pub use parse::parse_transcript;
pub use verify::{verify_transcript, Failure, Verdict};

/// How the transcript fixes its first vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremal {
    Source(u32),
    Sink(u32),
}

impl Extremal {
    pub fn vertex(&self) -> u32 {
        match *self {
            Extremal::Source(v) | Extremal::Sink(v) => v,
        }
    }
}

/// A directed edge by labels, `(from, to)`.
pub type Arc = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instruction {
    Branch { arc: Arc, copy: u32 },
    Orient1 { arc: Arc, cycle: Vec<u32> },
    Orient2 { first: Arc, second: Arc, cycle: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Terminal {
    /// Vertices of a shortcut in cyclic order.
    Shortcut(Vec<u32>),
    /// Extended form: a directed cycle.
    DirectedCycle(Vec<u32>),
}

/// Resumption of a set-aside copy, with the reminder arc when written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resume {
    pub copy: u32,
    pub arc: Option<Arc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub number: u32,
    pub resume: Option<Resume>,
    pub instructions: Vec<Instruction>,
    pub terminal: Terminal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub extremal: Extremal,
    pub lines: Vec<Line>,
}

impl Transcript {
    pub fn uses_extended_form(&self) -> bool {
        self.lines.iter().any(|l| matches!(l.terminal, Terminal::DirectedCycle(_)))
    }

    pub fn instruction_count(&self) -> usize {
        self.lines.iter().map(|l| l.instructions.len() + 1).sum()
    }
}

fn letters(seq: &[u32]) -> String {
    let mut s = String::new();
    for &v in seq {
        write_letter(&mut s, v);
    }
    s
}

fn arc_text((a, b): Arc) -> String {
    let mut s = String::new();
    write_letter(&mut s, a);
    s.push('→');
    write_letter(&mut s, b);
    s
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Branch { arc, copy } => write!(f, "B{} (Copy {copy})", arc_text(*arc)),
            Instruction::Orient1 { arc, cycle } => write!(f, "O{} (C{})", arc_text(*arc), letters(cycle)),
            Instruction::Orient2 { first, second, cycle } => {
                write!(f, "O{} O{} (C{})", arc_text(*first), arc_text(*second), letters(cycle))
            }
        }
    }
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Terminal::Shortcut(seq) => write!(f, "S:{}", letters(seq)),
            Terminal::DirectedCycle(seq) => write!(f, "D:{}", letters(seq)),
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.", self.number)?;
        if let Some(r) = &self.resume {
            write!(f, " MC{}", r.copy)?;
            if let Some(arc) = r.arc {
                write!(f, " {}", arc_text(arc))?;
            }
        }
        for ins in &self.instructions {
            write!(f, " {ins}")?;
        }
        write!(f, " {}", self.terminal)
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.extremal {
            Extremal::Source(v) => writeln!(f, "source {v}")?,
            Extremal::Sink(v) => writeln!(f, "sink {v}")?,
        }
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn format_transcript(t: &Transcript) -> String {
    t.to_string()
}
