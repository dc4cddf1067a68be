//! Induced-subgraph sweeps in increasing size.
//!
//! A per-subset flag byte records whether the subset is non-representable
//! and whether it contains a forbidden pattern. Both properties are
//! hereditary upwards, so a subset inherits each flag from any subset one
//! vertex smaller; only subsets inheriting neither need work, and the
//! search runs once per isomorphism class.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::FamilyError;
use crate::graph::{bit, bits, Graph};
use crate::orientation::is_word_representable;

/// Largest host the flag table is sized for (`2^n` bytes).
pub const SWEEP_VERTEX_LIMIT: usize = 24;

const NONREP: u8 = 1;
const FORB: u8 = 2;

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub max_size: usize,
    /// Worker count; 0 uses every core.
    pub threads: usize,
    /// One worker.
    pub deterministic: bool,
}

impl Default for SweepOptions {
    fn default() -> SweepOptions {
        SweepOptions { max_size: 12, threads: 0, deterministic: false }
    }
}

/// An isomorphism class met during a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub code: CanonicalCode,
    pub size: usize,
    /// Host labels of the first subset (in enumeration order) in the class.
    pub representative: Vec<u32>,
    /// Number of subsets in the class.
    pub subsets: u64,
    /// Name of the forbidden pattern with this code, if any.
    pub name: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub class: ClassInfo,
    pub representable: bool,
    pub contains_forbidden: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SizeStats {
    pub size: usize,
    pub subsets: u64,
    pub classes: usize,
    pub searched: usize,
    pub non_representable_classes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub host_vertices: usize,
    pub max_size: usize,
    pub per_size: Vec<SizeStats>,
    /// Minimal non-representable classes, in order of first appearance.
    pub minimal: Vec<ClassInfo>,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepResult {
    pub fn subsets(&self) -> u64 {
        self.per_size.iter().map(|s| s.subsets).sum()
    }

    pub fn classes(&self) -> usize {
        self.per_size.iter().map(|s| s.classes).sum()
    }

    pub fn searched(&self) -> usize {
        self.per_size.iter().map(|s| s.searched).sum()
    }
}

/// All `k`-subsets of `n` bits, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = bit(n);
    let mut out = Vec::new();
    let mut s: u64 = bit(k) - 1;
    while s < limit {
        out.push(s);
        let low = s & s.wrapping_neg();
        let ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
    out
}

struct Level {
    mask: u64,
    inherited: u8,
    code: CanonicalCode,
}

fn run(g: &Graph, forbidden: &[(String, Graph)], opts: &SweepOptions) -> Result<SweepResult, FamilyError> {
    let n = g.n();
    if n > SWEEP_VERTEX_LIMIT {
        return Err(FamilyError::SweepTooLarge { vertices: n, limit: SWEEP_VERTEX_LIMIT });
    }
    let forb_codes: HashMap<CanonicalCode, &str> =
        forbidden.iter().map(|(name, p)| (canonical_form(p), name.as_str())).collect();
    let max_size = opts.max_size.min(n);
    let mut flags = vec![0u8; 1usize << n];
    let mut result = SweepResult {
        host_vertices: n,
        max_size,
        per_size: Vec::new(),
        minimal: Vec::new(),
        counterexamples: Vec::new(),
    };

    for k in 1..=max_size {
        let level: Vec<Level> = subsets_of_size(n, k)
            .into_par_iter()
            .map(|mask| {
                let inherited =
                    if k == 1 { 0 } else { bits(mask).fold(0, |acc, v| acc | flags[(mask ^ bit(v)) as usize]) };
                Level { mask, inherited, code: canonical_form(&g.induced_by_mask(mask)) }
            })
            .collect();

        // first member of each class, in mask order
        let mut index: HashMap<&CanonicalCode, usize> = HashMap::new();
        let mut classes: Vec<(usize, u64)> = Vec::new();
        for (i, l) in level.iter().enumerate() {
            match index.get(&l.code) {
                Some(&c) => classes[c].1 += 1,
                None => {
                    index.insert(&l.code, classes.len());
                    classes.push((i, 1));
                }
            }
        }

        let verdicts: Vec<u8> = classes
            .par_iter()
            .map(|&(i, _)| {
                let l = &level[i];
                let mut f = l.inherited;
                if f & NONREP == 0 && !is_word_representable(&g.induced_by_mask(l.mask)) {
                    f |= NONREP;
                }
                if forb_codes.contains_key(&l.code) {
                    f |= FORB;
                }
                f
            })
            .collect();

        let mut stats = SizeStats {
            size: k,
            subsets: level.len() as u64,
            classes: classes.len(),
            searched: 0,
            non_representable_classes: 0,
        };
        for (&(i, count), &f) in classes.iter().zip(&verdicts) {
            let l = &level[i];
            if l.inherited & NONREP == 0 {
                stats.searched += 1;
            }
            if f & NONREP != 0 {
                stats.non_representable_classes += 1;
            }
            let info = || ClassInfo {
                code: l.code.clone(),
                size: k,
                representative: bits(l.mask).map(|v| g.label(v)).collect(),
                subsets: count,
                name: forb_codes.get(&l.code).map(|s| s.to_string()),
            };
            if f & NONREP != 0 && l.inherited & NONREP == 0 {
                result.minimal.push(info());
            }
            if (f & NONREP != 0) != (f & FORB != 0) {
                result.counterexamples.push(Counterexample {
                    class: info(),
                    representable: f & NONREP == 0,
                    contains_forbidden: f & FORB != 0,
                });
            }
        }
        for l in &level {
            flags[l.mask as usize] = verdicts[index[&l.code]];
        }
        result.per_size.push(stats);
    }
    Ok(result)
}

/// Sweep every induced subgraph of `g` with at most `opts.max_size`
/// vertices, comparing representability against `forbidden`-freeness.
pub fn sweep(g: &Graph, forbidden: &[(String, Graph)], opts: &SweepOptions) -> Result<SweepResult, FamilyError> {
    let threads = if opts.deterministic { 1 } else { opts.threads };
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| FamilyError::Sweep(e.to_string()))?;
    pool.install(|| run(g, forbidden, opts))
}

/// Isomorphism classes of minimal non-representable induced subgraphs with at most `max_size` vertices.
pub fn enumerate_minimal_non_wr(g: &Graph, max_size: usize) -> Result<Vec<ClassInfo>, FamilyError> {
    let opts = SweepOptions { max_size, ..SweepOptions::default() };
    Ok(sweep(g, &[], &opts)?.minimal)
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterizationReport {
    pub holds: bool,
    pub subsets: u64,
    pub classes: usize,
    pub searched: usize,
    pub counterexamples: Vec<Counterexample>,
    pub minimal: Vec<ClassInfo>,
    /// Whether the minimal classes are exactly the forbidden patterns.
    pub minimal_match_forbidden: bool,
    pub per_size: Vec<SizeStats>,
}

/// Representable iff free of every pattern in `forbidden`, over all induced
/// subgraphs of `g` within the size bound.
pub fn check_characterization(
    g: &Graph,
    forbidden: &[(String, Graph)],
    opts: &SweepOptions,
) -> Result<CharacterizationReport, FamilyError> {
    let r = sweep(g, forbidden, opts)?;
    let mut found: Vec<&str> = r.minimal.iter().filter_map(|c| c.name.as_deref()).collect();
    found.sort_unstable();
    let mut wanted: Vec<&str> =
        forbidden.iter().filter(|(_, p)| p.n() <= r.max_size).map(|(n, _)| n.as_str()).collect();
    wanted.sort_unstable();
    let minimal_match_forbidden = found.len() == r.minimal.len() && found == wanted;
    Ok(CharacterizationReport {
        holds: r.counterexamples.is_empty(),
        subsets: r.subsets(),
        classes: r.classes(),
        searched: r.searched(),
        counterexamples: r.counterexamples,
        minimal: r.minimal,
        minimal_match_forbidden,
        per_size: r.per_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_h;

    #[test]
    fn gosper_counts() {
        assert_eq!(subsets_of_size(5, 2).len(), 10);
        assert_eq!(subsets_of_size(19, 9).len(), 92378);
        assert_eq!(subsets_of_size(3, 0), vec![0]);
        assert!(subsets_of_size(3, 4).is_empty());
        let s = subsets_of_size(6, 3);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn h2_has_no_minimal_pattern() {
        let h2 = build_h(2).unwrap();
        assert!(enumerate_minimal_non_wr(&h2.graph, 5).unwrap().is_empty());
    }

    #[test]
    fn wheel_is_its_own_minimal_pattern() {
        let w = Graph::wheel(5);
        let min = enumerate_minimal_non_wr(&w, 6).unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].code, canonical_form(&w));
        let opts = SweepOptions { max_size: 6, deterministic: true, ..SweepOptions::default() };
        let empty = check_characterization(&w, &[], &opts).unwrap();
        assert_eq!(empty.counterexamples.len(), 1);
        assert!(!empty.counterexamples[0].representable);
        let full = check_characterization(&w, &[("W5".into(), w.clone())], &opts).unwrap();
        assert!(full.holds && full.minimal_match_forbidden);
    }
}
