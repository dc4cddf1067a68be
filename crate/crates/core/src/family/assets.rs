//! Transcribed drawings, orientations, refutation transcripts and the
//! deletion-case list. Files are compiled in; `WORDREP_ASSETS` names a
//! directory with the same layout that takes precedence.
//!
//! Graph files use the edge-list format plus `#@ key: value` metadata:
//! `name`, `sides` (`a b | c d e`), `source`, and optionally `correction`
//! or `relabel`. Orientation files hold `u>v` arcs and may list edges the
//! drawing leaves out as `#@ undrawn: a-b c-d`.

use std::borrow::Cow;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::error::FamilyError;
use crate::graph::{Graph, VertexSet};
use crate::orientation::PartialOrientation;
use crate::proof::{parse_transcript, Transcript};

use super::cases::{parse_case_file, DeletionCase};
use super::FamilyGraph;

macro_rules! bundle {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../../assets/", $path)))),*]
    };
}

static BUNDLED: &[(&str, &str)] = bundle![
    "graphs/W5.txt",
    "graphs/H3.txt",
    "graphs/C.txt",
    "graphs/A1.txt",
    "graphs/A2.txt",
    "graphs/A3.txt",
    "graphs/A4.txt",
    "graphs/A5.txt",
    "graphs/B1.txt",
    "graphs/B2.txt",
    "graphs/B3.txt",
    "graphs/B4.txt",
    "graphs/B5.txt",
    "graphs/B6.txt",
    "graphs/B7.txt",
    "orientations/A1.orient",
    "orientations/A2.orient",
    "orientations/A4.orient",
    "orientations/A5.orient",
    "transcripts/A3.proof",
    "transcripts/A3.txt",
    "transcripts/B1.proof",
    "transcripts/B1.txt",
    "transcripts/B2.proof",
    "transcripts/B2.txt",
    "transcripts/B3.proof",
    "transcripts/B3.txt",
    "transcripts/B4.proof",
    "transcripts/B4.txt",
    "transcripts/B5.proof",
    "transcripts/B5.txt",
    "transcripts/B6.proof",
    "transcripts/B6.txt",
    "transcripts/B7.proof",
    "transcripts/B7.txt",
    "cases.txt",
];

static CHECKSUMS: &str = include_str!("../../assets/CHECKSUMS");

/// Names accepted by [`Assets::graph`], with their vertex counts.
pub const NAMED_GRAPHS: &[(&str, usize)] = &[
    ("W5", 6),
    ("H3", 10),
    ("C", 19),
    ("A1", 6),
    ("A2", 9),
    ("A3", 7),
    ("A4", 8),
    ("A5", 9),
    ("B1", 7),
    ("B2", 7),
    ("B3", 8),
    ("B4", 8),
    ("B5", 8),
    ("B6", 8),
    ("B7", 9),
];

/// Graphs with a bundled refutation transcript.
pub const PROOF_NAMES: &[&str] = &["A3", "B1", "B2", "B3", "B4", "B5", "B6", "B7"];

#[derive(Clone, Debug)]
pub struct Assets {
    dir: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub family: Option<FamilyGraph>,
    pub source: String,
    /// Deliberate departure from the drawing, when the file records one.
    pub correction: Option<String>,
    /// `old>new` label pairs when the graph is a relabelled copy.
    pub relabel: Option<String>,
}

#[derive(Clone, Debug)]
pub struct DrawnOrientation {
    pub orientation: PartialOrientation,
    /// Host edges the drawing leaves without an arrow.
    pub undrawn: Vec<(u32, u32)>,
}

#[derive(Clone, Debug)]
pub struct ProofAsset {
    pub name: String,
    /// The graph in the labelling the transcript uses.
    pub host: NamedGraph,
    pub text: String,
    pub transcript: Transcript,
}

fn meta<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| {
        let rest = l.trim_start().strip_prefix("#@")?.trim();
        rest.strip_prefix(key)?.trim_start().strip_prefix(':').map(str::trim)
    })
}

fn asset_err(name: &str, msg: impl Into<String>) -> FamilyError {
    FamilyError::Asset { name: name.to_string(), msg: msg.into() }
}

impl Default for Assets {
    fn default() -> Assets {
        Assets::from_env()
    }
}

impl Assets {
    pub fn bundled() -> Assets {
        Assets { dir: None }
    }

    pub fn from_dir(dir: impl Into<PathBuf>) -> Assets {
        Assets { dir: Some(dir.into()) }
    }

    /// The directory in `WORDREP_ASSETS` when set, else the bundled files.
    pub fn from_env() -> Assets {
        match std::env::var_os("WORDREP_ASSETS") {
            Some(d) if !d.is_empty() => Assets::from_dir(d),
            _ => Assets::bundled(),
        }
    }

    pub fn origin(&self) -> String {
        match &self.dir {
            Some(d) => d.display().to_string(),
            None => "bundled".into(),
        }
    }

    pub fn read(&self, path: &str) -> Result<Cow<'static, str>, FamilyError> {
        match &self.dir {
            Some(d) => {
                std::fs::read_to_string(d.join(path)).map(Cow::Owned).map_err(|e| asset_err(path, e.to_string()))
            }
            None => BUNDLED
                .iter()
                .find(|(p, _)| *p == path)
                .map(|(_, text)| Cow::Borrowed(*text))
                .ok_or_else(|| asset_err(path, "no such bundled file")),
        }
    }

    /// Paths of every data file, in manifest order.
    pub fn paths() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|(p, _)| *p)
    }

    fn load_graph(&self, path: &str, name: &str, expected_n: Option<usize>) -> Result<NamedGraph, FamilyError> {
        let text = self.read(path)?;
        let graph = Graph::parse_edge_list(&text).map_err(|e| asset_err(path, e.to_string()))?;
        if let Some(n) = expected_n {
            if graph.n() != n {
                return Err(asset_err(path, format!("expected {n} vertices, found {}", graph.n())));
            }
        }
        if let Some(declared) = meta(&text, "name") {
            if declared != name {
                return Err(asset_err(path, format!("file declares name `{declared}`")));
            }
        }
        let family = match meta(&text, "sides") {
            None => None,
            Some(spec) => {
                let (a, b) = spec.split_once('|').ok_or_else(|| asset_err(path, "sides need `|`"))?;
                let side = |s: &str| -> Result<VertexSet, FamilyError> {
                    let labels: Result<Vec<u32>, _> = s.split_whitespace().map(str::parse).collect();
                    let labels = labels.map_err(|_| asset_err(path, "bad label in sides"))?;
                    VertexSet::from_labels(&graph, &labels).map_err(|e| asset_err(path, e.to_string()))
                };
                let (m_side, n_side) = (side(a)?, side(b)?);
                if m_side.0 & n_side.0 != 0 || m_side.0 | n_side.0 != graph.vertex_mask() {
                    return Err(asset_err(path, "sides do not partition the vertices"));
                }
                if !graph.is_clique(m_side.0) || !graph.is_clique(n_side.0) {
                    return Err(asset_err(path, "a side is not a clique"));
                }
                Some(FamilyGraph { graph: graph.clone(), m_side, n_side })
            }
        };
        Ok(NamedGraph {
            name: name.to_string(),
            source: meta(&text, "source").unwrap_or_default().to_string(),
            correction: meta(&text, "correction").map(str::to_string),
            relabel: meta(&text, "relabel").map(str::to_string),
            graph,
            family,
        })
    }

    pub fn graph(&self, name: &str) -> Result<NamedGraph, FamilyError> {
        let &(canonical, n) = NAMED_GRAPHS
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(name))
            .ok_or_else(|| FamilyError::UnknownGraph(name.to_string()))?;
        self.load_graph(&format!("graphs/{canonical}.txt"), canonical, Some(n))
    }

    /// The orientation drawn for `A1`, `A2`, `A4` or `A5`.
    pub fn orientation(&self, name: &str) -> Result<DrawnOrientation, FamilyError> {
        let host = self.graph(name)?;
        let path = format!("orientations/{}.orient", host.name);
        let text = self.read(&path)?;
        let orientation =
            PartialOrientation::parse_arc_list(host.graph, &text).map_err(|e| asset_err(&path, e.to_string()))?;
        let mut undrawn = Vec::new();
        for pair in meta(&text, "undrawn").unwrap_or_default().split_whitespace() {
            let parsed = pair.split_once('-').and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            undrawn.push(parsed.ok_or_else(|| asset_err(&path, format!("bad edge `{pair}`")))?);
        }
        Ok(DrawnOrientation { orientation, undrawn })
    }

    pub fn proof(&self, name: &str) -> Result<ProofAsset, FamilyError> {
        let &name = PROOF_NAMES
            .iter()
            .find(|k| k.eq_ignore_ascii_case(name))
            .ok_or_else(|| FamilyError::UnknownGraph(name.to_string()))?;
        let host = self.load_graph(&format!("transcripts/{name}.txt"), name, None)?;
        let path = format!("transcripts/{name}.proof");
        let text = self.read(&path)?.into_owned();
        let transcript = parse_transcript(&text).map_err(|e| asset_err(&path, e.to_string()))?;
        Ok(ProofAsset { name: name.to_string(), host, text, transcript })
    }

    pub fn cases(&self) -> Result<Vec<DeletionCase>, FamilyError> {
        parse_case_file(&self.read("cases.txt")?)
    }

    /// Compare every file against the bundled SHA-256 manifest. Each entry
    /// is `(path, expected, actual)`; `actual` is `None` for unreadable files.
    pub fn checksums(&self) -> Vec<(String, String, Option<String>)> {
        CHECKSUMS
            .lines()
            .filter_map(|l| l.split_once("  "))
            .map(|(digest, path)| {
                let actual = self.read(path).ok().map(|t| hex::encode(Sha256::digest(t.as_bytes())));
                (path.to_string(), digest.to_string(), actual)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_file_loads() {
        let a = Assets::bundled();
        for (name, _) in NAMED_GRAPHS {
            a.graph(name).unwrap();
        }
        for name in ["A1", "A2", "A4", "A5"] {
            a.orientation(name).unwrap();
        }
        for name in PROOF_NAMES {
            a.proof(name).unwrap();
        }
        assert!(!a.cases().unwrap().is_empty());
        assert_eq!(a.graph("b7").unwrap().name, "B7");
        assert!(matches!(a.graph("B8"), Err(FamilyError::UnknownGraph(_))));
    }

    #[test]
    fn manifest_matches_bundle() {
        let sums = Assets::bundled().checksums();
        assert_eq!(sums.len(), BUNDLED.len());
        for (path, expected, actual) in sums {
            assert_eq!(actual.as_deref(), Some(expected.as_str()), "{path}");
        }
    }

    #[test]
    fn undrawn_edges_are_read() {
        let a2 = Assets::bundled().orientation("A2").unwrap();
        assert_eq!(a2.undrawn, vec![(2, 10), (3, 10)]);
    }
}
