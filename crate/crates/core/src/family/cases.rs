use serde::Serialize;

use crate::canon::canonical_form;
use crate::embed::contains_induced;
use crate::error::FamilyError;
use crate::graph::{Graph, VertexSet};
use crate::orientation::is_word_representable;

const FIRST_DELETABLE: u32 = 5;
const LAST_DELETABLE: u32 = 19;

/// One listed case: delete `deleted` from `C`, expect `pattern` on `witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionCase {
    /// 1-based line in the case file.
    pub line: usize,
    /// Heading in force (`case 2`, ...), if any.
    pub section: Option<String>,
    pub spec: String,
    pub deleted: Vec<u32>,
    pub pattern: String,
    pub witness: Vec<u32>,
}

/// Dot-separated labels and `a--b` runs, strictly increasing, within `5..=19`.
pub fn parse_deletion_spec(text: &str) -> Result<Vec<u32>, FamilyError> {
    let bad = |msg: String| FamilyError::DeletionSpec(msg);
    let label = |tok: &str| -> Result<u32, FamilyError> {
        let v: u32 = tok.trim().parse().map_err(|_| bad(format!("malformed label `{tok}`")))?;
        if !(FIRST_DELETABLE..=LAST_DELETABLE).contains(&v) {
            return Err(bad(format!("label {v} outside {FIRST_DELETABLE}..={LAST_DELETABLE}")));
        }
        Ok(v)
    };
    let mut out: Vec<u32> = Vec::new();
    for tok in text.trim().split('.') {
        let (lo, hi) = match tok.split_once("--") {
            Some((a, b)) => {
                let (a, b) = (label(a)?, label(b)?);
                if a >= b {
                    return Err(bad(format!("empty or degenerate range `{tok}`")));
                }
                (a, b)
            }
            None => {
                let a = label(tok)?;
                (a, a)
            }
        };
        if out.last().is_some_and(|&last| lo <= last) {
            return Err(bad(format!("`{tok}` does not increase")));
        }
        out.extend(lo..=hi);
    }
    Ok(out)
}

fn parse_labels(text: &str) -> Option<Vec<u32>> {
    text.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Lines `SPEC ; PATTERN ; v1,v2,...`; `#` starts a comment and
/// `# case N` opens a section.
pub fn parse_case_file(text: &str) -> Result<Vec<DeletionCase>, FamilyError> {
    let mut section = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if comment.starts_with("case ") {
                section = Some(comment.to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| FamilyError::Asset { name: "cases.txt".into(), msg: format!("line {}: {msg}", i + 1) };
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        let [spec, pattern, witness] = fields[..] else {
            return Err(err("expected `SPEC ; PATTERN ; WITNESS`"));
        };
        let deleted = parse_deletion_spec(spec).map_err(|e| err(&e.to_string()))?;
        let witness = parse_labels(witness).ok_or_else(|| err("malformed witness"))?;
        out.push(DeletionCase {
            line: i + 1,
            section: section.clone(),
            spec: spec.to_string(),
            deleted,
            pattern: pattern.to_string(),
            witness,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FoundPattern {
    pub pattern: String,
    /// Host labels in pattern-vertex order.
    pub labels: Vec<u32>,
}

/// Whether deleting one more surviving vertex above the last deleted label
/// always leaves a representable graph.
#[derive(Clone, Debug, Serialize)]
pub struct DefiningProperty {
    pub holds: bool,
    /// Labels whose removal still leaves a non-representable graph.
    pub violations: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: DeletionCase,
    pub residual_vertices: usize,
    pub contains_some_forbidden: bool,
    pub found: Option<FoundPattern>,
    /// Independent search verdict on the residual graph.
    pub residual_representable: bool,
    pub cited_witness_valid: bool,
    /// Pattern the cited witness actually induces, when it is a different one.
    pub witness_induces: Option<String>,
    pub notes: Vec<String>,
    pub defining_property: Option<DefiningProperty>,
}

impl CaseReport {
    /// `contains_some_forbidden` holds and agrees with the search verdict.
    pub fn passed(&self) -> bool {
        self.contains_some_forbidden && !self.residual_representable
    }
}

/// Check one case against `c`, scanning `patterns` in order.
pub fn verify_case(c: &Graph, case: &DeletionCase, patterns: &[(String, Graph)], check_defining: bool) -> CaseReport {
    let mut notes = Vec::new();
    let known: Vec<u32> = case.deleted.iter().copied().filter(|&l| c.index_of(l).is_some()).collect();
    if known.len() != case.deleted.len() {
        notes.push("deletion spec names labels absent from the host".into());
    }
    let residual = c.remove_labels(&known).expect("labels filtered to the host");

    let found = patterns.iter().find_map(|(name, p)| {
        contains_induced(&residual, p).map(|e| FoundPattern { pattern: name.clone(), labels: e.host_labels(&residual) })
    });
    let residual_representable = is_word_representable(&residual);
    if found.is_some() && residual_representable {
        notes.push("search finds an orientation although a forbidden pattern is present".into());
    }

    let mut cited_witness_valid = false;
    let mut witness_induces = None;
    let deleted_in_witness: Vec<u32> = case.witness.iter().copied().filter(|l| case.deleted.contains(l)).collect();
    let mut sorted = case.witness.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if !deleted_in_witness.is_empty() {
        notes.push(format!("witness uses deleted vertices {deleted_in_witness:?}"));
    }
    if sorted.len() != case.witness.len() {
        notes.push("witness repeats a vertex".into());
    }
    match VertexSet::from_labels(c, &sorted) {
        Err(_) => notes.push("witness names labels absent from the host".into()),
        Ok(set) => {
            let induced = c.induced_subgraph(&set).expect("set drawn from host");
            let code = canonical_form(&induced);
            let matched = patterns.iter().find(|(_, p)| p.n() == induced.n() && canonical_form(p) == code);
            let claimed = patterns.iter().find(|(name, _)| name == &case.pattern);
            match (claimed, matched) {
                (None, _) => notes.push(format!("unknown pattern `{}`", case.pattern)),
                (Some((name, _)), Some((m, _))) if m == name => {
                    cited_witness_valid = deleted_in_witness.is_empty();
                }
                (Some((_, p)), other) => {
                    if p.n() != induced.n() {
                        notes.push(format!("witness has {} vertices, {} has {}", induced.n(), case.pattern, p.n()));
                    }
                    match other {
                        Some((m, _)) => {
                            notes.push(format!("witness induces {m}, not {}", case.pattern));
                            witness_induces = Some(m.clone());
                        }
                        None => notes.push(format!("witness does not induce {}", case.pattern)),
                    }
                }
            }
        }
    }

    let defining_property = check_defining.then(|| {
        let last = case.deleted.last().copied().unwrap_or(0);
        let violations = residual
            .labels()
            .iter()
            .copied()
            .filter(|&l| l > last)
            .filter(|&l| !is_word_representable(&residual.remove_labels(&[l]).expect("label survives")))
            .collect::<Vec<_>>();
        DefiningProperty { holds: violations.is_empty(), violations }
    });

    CaseReport {
        case: case.clone(),
        residual_vertices: residual.n(),
        contains_some_forbidden: found.is_some(),
        found,
        residual_representable,
        cited_witness_valid,
        witness_induces,
        notes,
        defining_property,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deletion_spec_examples() {
        assert_eq!(parse_deletion_spec("5--8.10--14.16.17").unwrap(), vec![5, 6, 7, 8, 10, 11, 12, 13, 14, 16, 17]);
        assert_eq!(parse_deletion_spec("6--16").unwrap(), (6..=16).collect::<Vec<_>>());
        assert_eq!(parse_deletion_spec("19").unwrap(), vec![19]);
        for bad in ["5--4", "5--5", "4", "20", "7.6", "5--8.8", "5..6", "", "x", "5---6"] {
            assert!(parse_deletion_spec(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn case_file_lines() {
        let text = "# header\n# case 2\n5--10 ; B1 ; 1,2,3,4,11,12,15\n\n# case 3\n6--16 ; B1 ; 1,2,3,5,17,18,19\n";
        let cases = parse_case_file(text).unwrap();
        assert_eq!(cases.len(), 2);
        assert_eq!(cases[0].line, 3);
        assert_eq!(cases[0].section.as_deref(), Some("case 2"));
        assert_eq!(cases[1].deleted, (6..=16).collect::<Vec<_>>());
        assert_eq!(cases[1].witness, vec![1, 2, 3, 5, 17, 18, 19]);
        assert!(parse_case_file("5--10 ; B1").is_err());
        assert!(parse_case_file("5--4 ; B1 ; 1").is_err());
    }
}
