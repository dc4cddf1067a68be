//! Words over vertex labels and the alternation relation.
//!
//! Text form: letters are juxtaposed single digits, multi-digit letters are
//! parenthesised, e.g. `1(10)2(10)`.

use std::fmt;
use std::str::FromStr;

use crate::error::WordError;
use crate::graph::{bit, bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

/// Write one vertex label the way words and transcripts do.
pub fn write_letter(out: &mut String, label: u32) {
    if label < 10 {
        out.push(char::from_digit(label, 10).expect("single digit"));
    } else {
        out.push('(');
        out.push_str(&label.to_string());
        out.push(')');
    }
}

/// Split a juxtaposed letter string (`12(10)3`) into labels.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<u32>, usize> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'0'..=b'9' => {
                out.push((bytes[i] - b'0') as u32);
                i += 1;
            }
            b'(' => {
                let close = s[i..].find(')').ok_or(i)? + i;
                let inner = &s[i + 1..close];
                if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(i);
                }
                out.push(inner.parse().map_err(|_| i)?);
                i = close + 1;
            }
            _ => return Err(i),
        }
    }
    Ok(out)
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Word, WordError> {
        parse_letters(s).map(Word).map_err(WordError::Malformed)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for &l in &self.0 {
            write_letter(&mut s, l);
        }
        f.write_str(&s)
    }
}

/// Whether `x` and `y` alternate in `w`: the restriction of `w` to `{x, y}`
/// never repeats a letter twice in a row.
pub fn alternates(w: &Word, x: u32, y: u32) -> Result<bool, WordError> {
    if x == y {
        return Err(WordError::SameLetter(x));
    }
    let mut last = None;
    for &l in &w.0 {
        if l == x || l == y {
            if last == Some(l) {
                return Ok(false);
            }
            last = Some(l);
        }
    }
    Ok(true)
}

/// Outcome of checking a word against a graph, with the first offending item.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Represents,
    MissingVertex(u32),
    UnknownLetter(u32),
    /// `x` and `y` alternate but are non-adjacent, or vice versa.
    Mismatch {
        x: u32,
        y: u32,
        adjacent: bool,
    },
}

pub fn check_representation(w: &Word, g: &Graph) -> Representation {
    if let Some(&l) = w.0.iter().find(|&&l| g.index_of(l).is_none()) {
        return Representation::UnknownLetter(l);
    }
    if let Some(&l) = g.labels().iter().find(|l| !w.0.contains(l)) {
        return Representation::MissingVertex(l);
    }
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let (x, y) = (g.label(i), g.label(j));
            let alt = alternates(w, x, y).expect("distinct labels");
            if alt != g.has_edge(i, j) {
                return Representation::Mismatch { x, y, adjacent: g.has_edge(i, j) };
            }
        }
    }
    Representation::Represents
}

pub fn represents(w: &Word, g: &Graph) -> bool {
    check_representation(w, g) == Representation::Represents
}

/// Search for a `k`-uniform representing word, `k = 1..=k_max`. A `None`
/// answer says nothing about representability in general.
pub fn find_uniform_word(g: &Graph, k_max: usize) -> Result<Option<Word>, WordError> {
    if g.n() > 7 || k_max > 3 {
        return Err(WordError::BoundsExceeded);
    }
    for k in 1..=k_max {
        let mut st = UniformSearch {
            g,
            k,
            left: vec![k; g.n()],
            seen_since: vec![0; g.n()],
            broken: vec![0; g.n()],
            word: Vec::with_capacity(k * g.n()),
        };
        if st.go() {
            let w = Word(st.word.iter().map(|&i| g.label(i)).collect());
            debug_assert!(represents(&w, g));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

struct UniformSearch<'a> {
    g: &'a Graph,
    k: usize,
    left: Vec<usize>,
    // letters written since the last occurrence of each letter
    seen_since: Vec<u64>,
    // non-adjacent pairs whose restriction already repeats a letter
    broken: Vec<u64>,
    word: Vec<usize>,
}

impl UniformSearch<'_> {
    fn go(&mut self) -> bool {
        let n = self.g.n();
        if self.word.len() == n * self.k {
            return true;
        }
        let all = self.g.vertex_mask();
        for x in 0..n {
            if self.left[x] == 0 {
                continue;
            }
            let started = self.left[x] < self.k;
            // a neighbour must appear between consecutive copies of x
            if started && self.g.neighbours(x) & !self.seen_since[x] != 0 {
                continue;
            }
            let saved_seen = self.seen_since.clone();
            let saved_broken = self.broken.clone();
            if started {
                let newly = !self.seen_since[x] & all & !self.g.neighbours(x) & !bit(x);
                self.broken[x] |= newly;
                for y in bits(newly) {
                    self.broken[y] |= bit(x);
                }
            }
            self.left[x] -= 1;
            self.seen_since[x] = 0;
            for z in 0..n {
                if z != x {
                    self.seen_since[z] |= bit(x);
                }
            }
            self.word.push(x);
            if self.feasible(x) && self.go() {
                return true;
            }
            self.word.pop();
            self.left[x] += 1;
            self.seen_since = saved_seen;
            self.broken = saved_broken;
        }
        false
    }

    /// Once both letters of a non-adjacent pair are used up, the pair must be broken.
    fn feasible(&self, x: usize) -> bool {
        if self.left[x] > 0 {
            return true;
        }
        let non_nbrs = self.g.vertex_mask() & !self.g.neighbours(x) & !bit(x);
        bits(non_nbrs).all(|y| self.left[y] > 0 || self.broken[x] & bit(y) != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn alternation_examples() {
        assert!(alternates(&w("123123"), 1, 2).unwrap());
        assert!(!alternates(&w("112233"), 1, 2).unwrap());
        assert!(alternates(&w("1123"), 2, 3).unwrap());
        assert_eq!(alternates(&w("12"), 1, 1), Err(WordError::SameLetter(1)));
    }

    #[test]
    fn parses_parenthesised_letters() {
        assert_eq!(w("1(10)2").0, vec![1, 10, 2]);
        assert_eq!(w("1(10)2").to_string(), "1(10)2");
        assert!("1(x)".parse::<Word>().is_err());
        assert!("1(10".parse::<Word>().is_err());
        assert!("1 2".parse::<Word>().is_err());
    }

    #[test]
    fn represents_examples() {
        assert!(represents(&w("123123"), &Graph::complete(3)));
        let p = Graph::path(3);
        assert_eq!(check_representation(&w("123123"), &p), Representation::Mismatch { x: 1, y: 3, adjacent: false });
        assert_eq!(check_representation(&w("1212"), &Graph::complete(3)), Representation::MissingVertex(3));
        assert_eq!(check_representation(&w("1234"), &Graph::complete(3)), Representation::UnknownLetter(4));
    }

    #[test]
    fn isolated_vertex_plus_clique() {
        // K_1 - K_n: vertex 1 isolated, 2..=n+1 a clique, word 1123...(n+1)
        for n in 1..=12u32 {
            let edges: Vec<_> = (2..=n + 1).flat_map(|i| (i + 1..=n + 1).map(move |j| (i, j))).collect();
            let g = Graph::new(n as usize + 1, &edges).unwrap();
            let mut word = vec![1, 1];
            word.extend(2..=n + 1);
            assert!(represents(&Word(word), &g), "n = {n}");
        }
    }

    #[test]
    fn uniform_search() {
        let k3 = Graph::complete(3);
        let found = find_uniform_word(&k3, 1).unwrap().unwrap();
        assert_eq!(found.len(), 3);
        let g = Graph::new(3, &[(2, 3)]).unwrap();
        assert!(find_uniform_word(&g, 1).unwrap().is_none());
        let found = find_uniform_word(&g, 2).unwrap().unwrap();
        assert_eq!(found.len(), 6);
        assert!(represents(&found, &g));
        assert!(represents(&w("112323"), &g));
        assert_eq!(find_uniform_word(&Graph::wheel(5), 2).unwrap(), None);
        assert_eq!(find_uniform_word(&Graph::empty(8), 1), Err(WordError::BoundsExceeded));
        assert_eq!(find_uniform_word(&k3, 4), Err(WordError::BoundsExceeded));
    }

    /// Exhaustive oracle over all 2-uniform words on 3 letters.
    #[test]
    fn two_uniform_words_for_isolated_plus_edge() {
        let g = Graph::new(3, &[(2, 3)]).unwrap();
        let mut count = 0;
        fn perms(cur: &mut Vec<u32>, left: &mut [usize; 3], out: &mut Vec<Vec<u32>>) {
            if left.iter().all(|&c| c == 0) {
                out.push(cur.clone());
                return;
            }
            for l in 0..3 {
                if left[l] > 0 {
                    left[l] -= 1;
                    cur.push(l as u32 + 1);
                    perms(cur, left, out);
                    cur.pop();
                    left[l] += 1;
                }
            }
        }
        let mut all = Vec::new();
        perms(&mut Vec::new(), &mut [2, 2, 2], &mut all);
        assert_eq!(all.len(), 90);
        for word in all {
            if represents(&Word(word), &g) {
                count += 1;
            }
        }
        assert!(count > 0);
    }

    #[test]
    fn reversal_preserves_representation() {
        let g = Graph::new(3, &[(2, 3)]).unwrap();
        let word = w("112323");
        assert!(represents(&word.reversed(), &g));
    }
}
