use std::collections::{BTreeMap, BTreeSet};

use crate::error::TranscriptError;

use super::{Arc, Extremal, Instruction, Line, Resume, Terminal, Transcript};

/// Parse a transcript file: a `source v` or `sink v` header, then numbered
/// lines. Blank lines and lines starting with `#` are ignored. `->` is
/// accepted for `→`, and a trailing period after the terminal is dropped.
pub fn parse_transcript(text: &str) -> Result<Transcript, TranscriptError> {
    let mut extremal = None;
    let mut lines = Vec::new();
    let mut file_lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        if extremal.is_none() {
            extremal = Some(parse_header(body, lineno)?);
            continue;
        }
        lines.push(Scan::new(body, lineno).line()?);
        file_lines.push(lineno);
    }
    let extremal =
        extremal.ok_or(TranscriptError::Syntax { line: 0, msg: "missing `source v` or `sink v` header".into() })?;
    if lines.is_empty() {
        return Err(TranscriptError::Syntax { line: 0, msg: "no proof lines".into() });
    }
    check_copies(&lines, &file_lines)?;
    Ok(Transcript { extremal, lines })
}

fn parse_header(body: &str, line: usize) -> Result<Extremal, TranscriptError> {
    let mut parts = body.split_whitespace();
    let kind = parts.next().unwrap_or("");
    let vertex = parts.next().and_then(|v| v.parse::<u32>().ok());
    match (kind, vertex, parts.next()) {
        ("source", Some(v), None) => Ok(Extremal::Source(v)),
        ("sink", Some(v), None) => Ok(Extremal::Sink(v)),
        _ => Err(TranscriptError::Syntax { line, msg: "expected `source v` or `sink v`".into() }),
    }
}

/// Line numbering is consecutive from 1; every copy is created once, resumed
/// once, and only after its creation.
fn check_copies(lines: &[Line], file_lines: &[usize]) -> Result<(), TranscriptError> {
    let mut created: BTreeMap<u32, usize> = BTreeMap::new();
    let mut consumed: BTreeSet<u32> = BTreeSet::new();
    for (idx, l) in lines.iter().enumerate() {
        let line = file_lines[idx];
        if l.number as usize != idx + 1 {
            return Err(TranscriptError::Syntax { line, msg: format!("expected line number {}", idx + 1) });
        }
        match (&l.resume, idx) {
            (Some(_), 0) => {
                return Err(TranscriptError::Syntax { line, msg: "the first line cannot resume a copy".into() })
            }
            (None, i) if i > 0 => {
                return Err(TranscriptError::Syntax { line, msg: "every line after the first resumes a copy".into() })
            }
            (Some(r), _) => {
                if !created.contains_key(&r.copy) {
                    return Err(TranscriptError::UnresolvedCopy { line, copy: r.copy });
                }
                if !consumed.insert(r.copy) {
                    return Err(TranscriptError::DuplicateConsumption { line, copy: r.copy });
                }
            }
            (None, _) => {}
        }
        for ins in &l.instructions {
            if let Instruction::Branch { copy, .. } = ins {
                if created.insert(*copy, line).is_some() {
                    return Err(TranscriptError::Syntax { line, msg: format!("copy {copy} is created twice") });
                }
            }
        }
    }
    match created.keys().find(|c| !consumed.contains(c)) {
        Some(&c) => Err(TranscriptError::UnvisitedCopy(c)),
        None => Ok(()),
    }
}

struct Scan<'a> {
    s: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Scan<'a> {
    fn new(s: &'a str, line: usize) -> Scan<'a> {
        Scan { s, pos: 0, line }
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.s.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> TranscriptError {
        TranscriptError::Syntax { line: self.line, msg: msg.into() }
    }

    fn next_token(&self) -> String {
        self.rest().split_whitespace().next().unwrap_or("").to_string()
    }

    fn number(&mut self) -> Result<u32, TranscriptError> {
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.syntax(format!("expected a number at `{}`", self.next_token())));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| self.syntax("number out of range"))
    }

    fn starts_vertex(&self) -> bool {
        matches!(self.rest().chars().next(), Some(c) if c.is_ascii_digit() || c == '(')
    }

    /// One vertex: a single digit, or digits in parentheses.
    fn vertex(&mut self) -> Result<u32, TranscriptError> {
        let bad = |scan: &Scan| TranscriptError::BadVertex { line: scan.line, token: scan.next_token() };
        match self.rest().chars().next() {
            Some(c) if c.is_ascii_digit() => {
                self.pos += 1;
                Ok(c.to_digit(10).expect("digit"))
            }
            Some('(') => {
                let inner: String = self.rest()[1..].chars().take_while(char::is_ascii_digit).collect();
                if inner.is_empty() || !self.rest()[1 + inner.len()..].starts_with(')') {
                    return Err(bad(self));
                }
                let v = inner.parse().map_err(|_| bad(self))?;
                self.pos += inner.len() + 2;
                Ok(v)
            }
            _ => Err(bad(self)),
        }
    }

    fn arc(&mut self) -> Result<Arc, TranscriptError> {
        let a = self.vertex()?;
        if !(self.eat("→") || self.eat("->")) {
            return Err(self.syntax(format!("expected an arrow at `{}`", self.next_token())));
        }
        Ok((a, self.vertex()?))
    }

    fn sequence(&mut self) -> Result<Vec<u32>, TranscriptError> {
        let mut seq = Vec::new();
        while self.starts_vertex() {
            seq.push(self.vertex()?);
        }
        Ok(seq)
    }

    /// `(C…)` after an orientation.
    fn cycle(&mut self) -> Result<Vec<u32>, TranscriptError> {
        self.skip_ws();
        if !self.eat("(C") {
            return Err(self.syntax("an orientation must cite a cycle `(C…)`"));
        }
        let seq = self.sequence()?;
        if !self.eat(")") {
            return Err(self.syntax(format!("unterminated cycle at `{}`", self.next_token())));
        }
        if seq.len() < 3 {
            return Err(self.syntax("a cycle needs at least 3 vertices"));
        }
        Ok(seq)
    }

    fn terminal_sequence(&mut self) -> Result<Vec<u32>, TranscriptError> {
        self.skip_ws();
        let seq = self.sequence()?;
        self.eat(".");
        self.skip_ws();
        if !self.rest().is_empty() {
            return Err(self.syntax(format!("unexpected text after the terminal: `{}`", self.rest())));
        }
        Ok(seq)
    }

    fn line(mut self) -> Result<Line, TranscriptError> {
        let number = self.number()?;
        if !self.eat(".") {
            return Err(self.syntax("expected `N.` at the start of a line"));
        }
        self.skip_ws();
        let resume = if self.eat("MC") {
            let copy = self.number()?;
            self.skip_ws();
            let arc = if self.starts_vertex() { Some(self.arc()?) } else { None };
            Some(Resume { copy, arc })
        } else {
            None
        };
        let mut instructions = Vec::new();
        loop {
            self.skip_ws();
            if self.eat("B") {
                let arc = self.arc()?;
                self.skip_ws();
                if !self.eat("(Copy") {
                    return Err(self.syntax("a branch must name its copy `(Copy k)`"));
                }
                self.skip_ws();
                let copy = self.number()?;
                self.skip_ws();
                if !self.eat(")") {
                    return Err(self.syntax("expected `)` after the copy number"));
                }
                instructions.push(Instruction::Branch { arc, copy });
            } else if self.eat("O") {
                let arc = self.arc()?;
                self.skip_ws();
                if self.eat("O") {
                    let second = self.arc()?;
                    let cycle = self.cycle()?;
                    instructions.push(Instruction::Orient2 { first: arc, second, cycle });
                } else {
                    let cycle = self.cycle()?;
                    instructions.push(Instruction::Orient1 { arc, cycle });
                }
            } else if self.eat("S:") {
                let seq = self.terminal_sequence()?;
                if seq.len() < 4 {
                    return Err(TranscriptError::ShortSequence { line: self.line });
                }
                return Ok(Line { number, resume, instructions, terminal: Terminal::Shortcut(seq) });
            } else if self.eat("D:") {
                let seq = self.terminal_sequence()?;
                if seq.len() < 3 {
                    return Err(self.syntax("a directed cycle needs at least 3 vertices"));
                }
                return Ok(Line { number, resume, instructions, terminal: Terminal::DirectedCycle(seq) });
            } else if self.rest().is_empty() {
                return Err(self.syntax("line ends without a terminal `S:`"));
            } else {
                return Err(TranscriptError::UnknownInstruction { line: self.line, token: self.next_token() });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A3: &str = "source 10
1. B8→9 (Copy 2) O8→2 (C2(10)98) O1→9 O8→1 (C1948) S:819(10)
2. MC2 9→8 O2→8 (C2(10)98) S:918(10)
";

    #[test]
    fn parses_structure() {
        let t = parse_transcript(A3).unwrap();
        assert_eq!(t.extremal, Extremal::Source(10));
        assert_eq!(t.lines.len(), 2);
        assert_eq!(t.lines[0].instructions[0], Instruction::Branch { arc: (8, 9), copy: 2 });
        assert_eq!(t.lines[0].instructions[1], Instruction::Orient1 { arc: (8, 2), cycle: vec![2, 10, 9, 8] });
        assert_eq!(
            t.lines[0].instructions[2],
            Instruction::Orient2 { first: (1, 9), second: (8, 1), cycle: vec![1, 9, 4, 8] }
        );
        assert_eq!(t.lines[0].terminal, Terminal::Shortcut(vec![8, 1, 9, 10]));
        assert_eq!(t.lines[1].resume, Some(Resume { copy: 2, arc: Some((9, 8)) }));
    }

    #[test]
    fn tolerant_spacing_and_ascii_arrows() {
        let t = parse_transcript("source 10\n1.  B8->9 (Copy  2)  S: 819(10).\n2. MC2 S:918(10)\n").unwrap();
        assert_eq!(t.lines[0].terminal, Terminal::Shortcut(vec![8, 1, 9, 10]));
        assert_eq!(t.lines[1].resume, Some(Resume { copy: 2, arc: None }));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_transcript("source 1\n1. S:12\n"), Err(TranscriptError::ShortSequence { line: 2 }));
        assert!(matches!(
            parse_transcript("source 1\n1. X12 S:1234\n"),
            Err(TranscriptError::UnknownInstruction { .. })
        ));
        assert!(matches!(
            parse_transcript("source 1\n1. O(x)→2 (C123) S:1234\n"),
            Err(TranscriptError::BadVertex { .. })
        ));
        assert_eq!(
            parse_transcript("source 1\n1. S:1234\n2. MC3 S:1234\n"),
            Err(TranscriptError::UnresolvedCopy { line: 3, copy: 3 })
        );
        assert_eq!(
            parse_transcript("source 1\n1. B1→2 (Copy 2) S:1234\n2. MC2 S:1234\n3. MC2 S:1234\n"),
            Err(TranscriptError::DuplicateConsumption { line: 4, copy: 2 })
        );
        assert_eq!(parse_transcript("source 1\n1. B1→2 (Copy 2) S:1234\n"), Err(TranscriptError::UnvisitedCopy(2)));
        assert!(parse_transcript("1. S:1234\n").is_err());
        assert!(parse_transcript("source 1\n1. O1→2 S:1234\n").is_err());
    }
}
