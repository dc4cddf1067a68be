use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wordrep::canon::{canonical_form, canonical_graph};
use wordrep::claims::{self, analyse_orientation, ClaimOptions};
use wordrep::family::{build_h, check_characterization, sweep, verify_case, Assets, FamilySummary, SweepOptions};
use wordrep::orientation::{
    exists_semi_transitive_naive, find_shortcut, is_semi_transitive, search_semi_transitive, Certificate,
    PartialOrientation, SearchOptions,
};
use wordrep::proof::{emit_transcript, format_transcript, mutations, parse_transcript, verify_transcript, Verdict};
use wordrep::words::{check_representation, find_uniform_word, Representation};
use wordrep::{format_graph6, Graph, Word};

use crate::input::{load_graph, read_text};
use crate::{Global, InputError, Report};

type Outcome = Result<Report, InputError>;

fn graph_arg(spec: &str, g: &Global, assets: &Assets) -> Result<Graph, InputError> {
    Ok(load_graph(spec, g.format, assets)?)
}

fn search_options(graph: &Graph, source: Option<u32>, g: &Global) -> Result<SearchOptions, InputError> {
    let source = match source {
        Some(l) => Some(graph.index_of(l).ok_or_else(|| InputError(format!("vertex {l} is not in the graph")))?),
        None => None,
    };
    Ok(SearchOptions { source, deterministic: g.deterministic || g.threads == 1, threads: g.threads })
}

/// Orientation text as `u>v` lines or DOT arcs (`u -> v`); DOT edges marked
/// `dir=none` stay unoriented.
pub fn parse_orientation(host: Graph, text: &str) -> Result<PartialOrientation, InputError> {
    if !text.contains("digraph") {
        return Ok(PartialOrientation::parse_arc_list(host, text)?);
    }
    let mut p = PartialOrientation::new(host);
    for line in text.lines() {
        let line = line.trim().trim_end_matches(';');
        if line.contains("dir=none") {
            continue;
        }
        let Some((a, b)) = line.split_once("->") else { continue };
        let b = b.split('[').next().unwrap_or("");
        let parse = |s: &str| s.trim().trim_matches('"').parse::<u32>();
        let (a, b) = (
            parse(a).map_err(|_| InputError(format!("bad DOT arc `{line}`")))?,
            parse(b).map_err(|_| InputError(format!("bad DOT arc `{line}`")))?,
        );
        p.orient_labels(a, b)?;
    }
    Ok(p)
}

fn verdict_word(representable: bool) -> &'static str {
    if representable {
        "word-representable"
    } else {
        "non-word-representable"
    }
}

fn verdict_json(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn write_verdict(text: &mut String, v: &Verdict) {
    let _ = writeln!(text, "transcript {}", if v.accepted { "accepted" } else { "rejected" });
    for f in &v.failures {
        let _ = writeln!(text, "  line {} position {} `{}`: {}", f.line, f.position, f.instruction, f.reason);
    }
    for n in &v.notes {
        let _ = writeln!(text, "  note: {n}");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    Representable,
    NonRepresentable,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// File, `-`, bundled name, K<n>/P<n>/C<n>/W<n>, or graph6.
    pub graph: String,
    /// Vertex label fixed as the source of the search.
    #[arg(long)]
    pub source: Option<u32>,
    /// Check a certificate instead: an orientation (`u>v` lines or DOT) or a transcript.
    #[arg(long)]
    pub certificate: Option<String>,
    /// Also run the exhaustive oracle and compare.
    #[arg(long)]
    pub naive: bool,
    /// Exit 1 unless the verdict matches.
    #[arg(long, value_enum)]
    pub expect: Option<Expectation>,
}

pub fn check(a: &CheckArgs, g: &Global, assets: &Assets) -> Outcome {
    let graph = graph_arg(&a.graph, g, assets)?;
    let mut text = String::new();
    let mut json = json!({ "graph6": format_graph6(&graph), "n": graph.n(), "edges": graph.edge_count() });
    if let Some(path) = &a.certificate {
        let body = read_text(path)?;
        let ok = match parse_transcript(&body) {
            Ok(t) => {
                let v = verify_transcript(&graph, &t);
                write_verdict(&mut text, &v);
                json["certificate"] = json!({ "kind": "transcript", "verdict": verdict_json(&v) });
                v.accepted
            }
            Err(_) => {
                let d = parse_orientation(graph.clone(), &body)?;
                let complete = d.is_complete();
                let st = complete && is_semi_transitive(&d)?;
                let shortcut = if complete && !st && d.directed_cycle().is_none() {
                    find_shortcut(&d)?.map(|w| w.labels(&graph))
                } else {
                    None
                };
                let _ = writeln!(
                    text,
                    "orientation {}",
                    match (complete, st) {
                        (false, _) => "incomplete",
                        (true, true) => "semi-transitive",
                        (true, false) => "not semi-transitive",
                    }
                );
                if let Some(s) = &shortcut {
                    let _ = writeln!(text, "  shortcut {s:?}");
                }
                json["certificate"] =
                    json!({ "kind": "orientation", "complete": complete, "semi_transitive": st, "shortcut": shortcut });
                st
            }
        };
        return Ok(Report { text, json, ok });
    }
    let opts = search_options(&graph, a.source, g)?;
    let cert = search_semi_transitive(&graph, &opts);
    let representable = cert.is_orientation();
    let _ = writeln!(text, "{}", verdict_word(representable));
    json["verdict"] = json!(verdict_word(representable));
    match &cert {
        Certificate::Orientation(o) => {
            let _ = write!(text, "{}", o.to_arc_list());
            json["orientation"] = json!(o.to_arc_list().lines().collect::<Vec<_>>());
        }
        Certificate::Refutation(_) => {
            let t = emit_transcript(&cert)?;
            let _ = write!(text, "{}", format_transcript(&t));
            json["transcript"] = json!(format_transcript(&t));
        }
    }
    let mut ok = true;
    if a.naive {
        let naive = exists_semi_transitive_naive(&graph)?;
        let _ = writeln!(text, "exhaustive oracle: {}", verdict_word(naive));
        json["naive"] = json!(verdict_word(naive));
        ok &= naive == representable;
    }
    if let Some(e) = a.expect {
        ok &= (e == Expectation::Representable) == representable;
    }
    Ok(Report { text, json, ok })
}

#[derive(Args, Debug)]
pub struct WordArgs {
    pub graph: String,
    /// Word to check: digits with `(12)` for labels above 9, or space-separated labels.
    #[arg(long)]
    pub word: Option<String>,
    /// Largest uniformity tried when searching.
    #[arg(long, default_value_t = 2)]
    pub k_max: usize,
}

fn parse_word(s: &str) -> Result<Word, InputError> {
    if s.trim().contains(char::is_whitespace) {
        let letters: Result<Vec<u32>, _> = s.split_whitespace().map(str::parse).collect();
        return letters.map(Word).map_err(|_| InputError(format!("malformed word `{s}`")));
    }
    Ok(s.trim().parse()?)
}

pub fn word(a: &WordArgs, g: &Global, assets: &Assets) -> Outcome {
    let graph = graph_arg(&a.graph, g, assets)?;
    if let Some(w) = &a.word {
        let w = parse_word(w)?;
        let r = check_representation(&w, &graph);
        let text = match &r {
            Representation::Represents => format!("{w} represents the graph\n"),
            Representation::MissingVertex(v) => format!("vertex {v} does not occur in the word\n"),
            Representation::UnknownLetter(l) => format!("letter {l} is not a vertex\n"),
            Representation::Mismatch { x, y, adjacent: true } => {
                format!("{x} and {y} are adjacent but do not alternate\n")
            }
            Representation::Mismatch { x, y, adjacent: false } => {
                format!("{x} and {y} alternate but are not adjacent\n")
            }
        };
        let ok = r == Representation::Represents;
        let json = json!({ "word": w.to_string(), "represents": ok, "detail": text.trim_end() });
        return Ok(Report { text, json, ok });
    }
    let found = find_uniform_word(&graph, a.k_max)?;
    let text = match &found {
        Some(w) => format!("{w}\n"),
        None => format!("no uniform representing word with k <= {}\n", a.k_max),
    };
    let json = json!({ "k_max": a.k_max, "word": found.as_ref().map(Word::to_string) });
    Ok(Report { text, json, ok: found.is_some() })
}

#[derive(Args, Debug)]
pub struct OrientArgs {
    pub graph: String,
    /// `u>v` lines or DOT; defaults to the bundled drawing of A1, A2, A4 or A5.
    pub orientation: Option<String>,
}

pub fn orient(a: &OrientArgs, g: &Global, assets: &Assets) -> Outcome {
    let drawn = match &a.orientation {
        Some(path) => parse_orientation(graph_arg(&a.graph, g, assets)?, &read_text(path)?)?,
        None => assets.orientation(&a.graph)?.orientation,
    };
    let o = analyse_orientation(&a.graph, &drawn);
    let mut text = String::new();
    if o.semi_transitive {
        text.push_str("semi-transitive\n");
    } else if !o.complete {
        let _ = writeln!(text, "incomplete: {} unoriented edges {:?}", o.unoriented.len(), o.unoriented);
        match &o.completions {
            Some(c) => {
                let _ = writeln!(text, "semi-transitive completions: {}", c.len());
                for added in c {
                    let _ = writeln!(text, "  add {added:?}");
                }
            }
            None => {
                let _ = writeln!(text, "too many unoriented edges to enumerate completions");
            }
        }
    } else {
        text.push_str("not semi-transitive\n");
        if o.cyclic {
            text.push_str("  contains a directed cycle\n");
        }
        if let Some(s) = &o.shortcut {
            let _ = writeln!(text, "  shortcut {s:?}");
        }
        let _ = writeln!(text, "  single-arc reversals that repair it: {:?}", o.one_arc_repairs);
    }
    let ok = o.semi_transitive;
    Ok(Report { text, json: serde_json::to_value(&o).expect("serialisable"), ok })
}

#[derive(Subcommand, Debug)]
pub enum ProofCommand {
    /// Check a refutation transcript against a graph.
    Verify {
        graph: Option<String>,
        transcript: Option<String>,
        /// Use a bundled graph and its transcript (A3, B1..B7).
        #[arg(long, conflicts_with_all = ["graph", "transcript"])]
        bundled: Option<String>,
        /// Also check that every single-instruction mutation is rejected.
        #[arg(long)]
        mutations: bool,
    },
    /// Search the graph and print a transcript when none of its orientations is semi-transitive.
    Emit {
        graph: String,
        #[arg(long)]
        source: Option<u32>,
    },
    /// Parse a transcript and print it in normal form.
    Format { transcript: String },
}

pub fn proof(c: &ProofCommand, g: &Global, assets: &Assets) -> Outcome {
    match c {
        ProofCommand::Verify { graph, transcript, bundled, mutations: mutate } => {
            let (host, t) = match (bundled, graph, transcript) {
                (Some(name), _, _) => {
                    let p = assets.proof(name)?;
                    (p.host.graph, p.transcript)
                }
                (None, Some(gs), Some(ts)) => (graph_arg(gs, g, assets)?, parse_transcript(&read_text(ts)?)?),
                _ => return Err(InputError("give GRAPH and TRANSCRIPT, or --bundled NAME".into())),
            };
            let v = verify_transcript(&host, &t);
            let mut text = String::new();
            write_verdict(&mut text, &v);
            let mut json = json!({ "verdict": verdict_json(&v) });
            let mut ok = v.accepted;
            if *mutate {
                let ms = mutations(&host, &t);
                let survivors: Vec<String> = ms
                    .iter()
                    .filter(|m| verify_transcript(&host, &m.transcript).accepted)
                    .map(|m| format!("line {}: {}", m.line, m.description))
                    .collect();
                let _ = writeln!(text, "mutations rejected: {}/{}", ms.len() - survivors.len(), ms.len());
                for s in &survivors {
                    let _ = writeln!(text, "  accepted mutant {s}");
                }
                json["mutations"] = json!({ "total": ms.len(), "accepted": survivors });
                ok &= survivors.is_empty();
            }
            Ok(Report { text, json, ok })
        }
        ProofCommand::Emit { graph, source } => {
            let host = graph_arg(graph, g, assets)?;
            let cert = search_semi_transitive(&host, &search_options(&host, *source, g)?);
            match &cert {
                Certificate::Orientation(o) => {
                    let text = format!("word-representable; semi-transitive orientation:\n{}", o.to_arc_list());
                    let json = json!({ "verdict": verdict_word(true), "orientation": o.to_arc_list().lines().collect::<Vec<_>>() });
                    Ok(Report { text, json, ok: false })
                }
                Certificate::Refutation(_) => {
                    let t = format_transcript(&emit_transcript(&cert)?);
                    let json = json!({ "verdict": verdict_word(false), "transcript": t });
                    Ok(Report { text: t, json, ok: true })
                }
            }
        }
        ProofCommand::Format { transcript } => {
            let t = format_transcript(&parse_transcript(&read_text(transcript)?)?);
            let json = json!({ "transcript": t });
            Ok(Report { text: t, json, ok: true })
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// Build the two-clique family graph for `m` and summarise it.
    Build {
        #[arg(long, default_value_t = 4)]
        m: usize,
    },
    /// List the minimal non-representable induced subgraphs.
    Enumerate {
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Largest subset size swept; defaults to min(vertices, 12).
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Check representable iff free of the forbidden patterns (A3 for m=3, B1..B7 for m=4).
    Characterize {
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Re-check every deletion case against the m=4 graph.
    Cases {
        /// Also check the defining property on each residual graph.
        #[arg(long)]
        defining: bool,
        /// Print every case, not only the failures.
        #[arg(long)]
        all: bool,
    },
}

fn named_patterns(assets: &Assets, names: &[&str]) -> Result<Vec<(String, Graph)>, InputError> {
    names.iter().map(|n| Ok((n.to_string(), assets.graph(n)?.graph))).collect()
}

fn forbidden_for(m: usize, assets: &Assets) -> Result<Vec<(String, Graph)>, InputError> {
    match m {
        1 | 2 => Ok(Vec::new()),
        3 => named_patterns(assets, &["A3"]),
        4 => Ok(claims::b_patterns(assets)?),
        _ => Err(InputError(format!("m must be in 1..=4, got {m}"))),
    }
}

fn sweep_options(host: &Graph, max_size: Option<usize>, g: &Global) -> SweepOptions {
    SweepOptions { max_size: max_size.unwrap_or(host.n().min(12)), threads: g.threads, deterministic: g.deterministic }
}

pub fn family(c: &FamilyCommand, g: &Global, assets: &Assets) -> Outcome {
    match c {
        FamilyCommand::Build { m } => {
            let f = build_h(*m)?;
            let s = FamilySummary::of(&f);
            let mut text = format!(
                "m={} n={} vertices={} edges={} valid={}\ngraph6 {}\n",
                s.m,
                s.n,
                s.vertices,
                s.edges,
                s.valid,
                format_graph6(&f.graph)
            );
            text.push_str(&f.graph.to_edge_list());
            let mut json = serde_json::to_value(&s).expect("serialisable");
            json["graph6"] = json!(format_graph6(&f.graph));
            Ok(Report { text, json, ok: s.valid })
        }
        FamilyCommand::Enumerate { m, max_size } => {
            let host = build_h(*m)?.graph;
            let mut patterns = named_patterns(assets, &["W5"])?;
            patterns.extend(forbidden_for(*m, assets)?);
            let r = sweep(&host, &patterns, &sweep_options(&host, *max_size, g))?;
            let mut text = format!(
                "swept {} subsets up to size {}; {} classes, {} searched\nminimal non-representable classes: {}\n",
                r.subsets(),
                r.max_size,
                r.classes(),
                r.searched(),
                r.minimal.len()
            );
            for c in &r.minimal {
                let _ = writeln!(
                    text,
                    "  {} size {} on {:?} ({} subsets){}",
                    c.code,
                    c.size,
                    c.representative,
                    c.subsets,
                    c.name.as_ref().map(|n| format!(" = {n}")).unwrap_or_default()
                );
            }
            let json = json!({
                "m": m, "max_size": r.max_size, "subsets": r.subsets(), "classes": r.classes(),
                "minimal": r.minimal, "per_size": r.per_size,
            });
            Ok(Report { text, json, ok: true })
        }
        FamilyCommand::Characterize { m, max_size } => {
            let host = build_h(*m)?.graph;
            let forbidden = forbidden_for(*m, assets)?;
            let r = check_characterization(&host, &forbidden, &sweep_options(&host, *max_size, g))?;
            let names: Vec<&str> = forbidden.iter().map(|(n, _)| n.as_str()).collect();
            let mut text = format!(
                "forbidden {:?}: {} ({} subsets, {} classes, {} counterexamples)\nminimal classes are exactly the forbidden patterns: {}\n",
                names,
                if r.holds { "holds" } else { "fails" },
                r.subsets,
                r.classes,
                r.counterexamples.len(),
                r.minimal_match_forbidden
            );
            for ce in &r.counterexamples {
                let _ = writeln!(
                    text,
                    "  counterexample {} on {:?}: representable={} contains_forbidden={}",
                    ce.class.code, ce.class.representative, ce.representable, ce.contains_forbidden
                );
            }
            let ok = r.holds && r.minimal_match_forbidden;
            Ok(Report { text, json: serde_json::to_value(&r).expect("serialisable"), ok })
        }
        FamilyCommand::Cases { defining, all } => {
            let c = build_h(4)?.graph;
            let patterns = claims::b_patterns(assets)?;
            let reports: Vec<_> = assets.cases()?.iter().map(|k| verify_case(&c, k, &patterns, *defining)).collect();
            let passed = reports.iter().filter(|r| r.passed()).count();
            let mut text = format!("{passed}/{} cases contain a forbidden pattern\n", reports.len());
            for r in &reports {
                let defining_ok = r.defining_property.as_ref().is_none_or(|d| d.holds);
                if !*all && r.passed() && r.cited_witness_valid && defining_ok {
                    continue;
                }
                let _ = write!(
                    text,
                    "line {} `{}`: {}",
                    r.case.line,
                    r.case.spec,
                    if r.passed() { "forbidden pattern present" } else { "no forbidden pattern" }
                );
                if let Some(f) = &r.found {
                    let _ = write!(text, "; found {} on {:?}", f.pattern, f.labels);
                }
                if !r.cited_witness_valid {
                    let _ = write!(text, "; cited witness {:?} invalid", r.case.witness);
                }
                if let Some(d) = &r.defining_property {
                    if !d.holds {
                        let _ = write!(text, "; defining property fails at {:?}", d.violations);
                    }
                }
                text.push('\n');
                for n in &r.notes {
                    let _ = writeln!(text, "  {n}");
                }
            }
            let json = json!({ "passed": passed, "total": reports.len(), "cases": reports });
            Ok(Report { text, json, ok: passed == reports.len() })
        }
    }
}

#[derive(Args, Debug)]
pub struct PaperArgs {
    /// Sweep the m=4 graph only to 10 vertices.
    #[arg(long)]
    pub quick: bool,
    /// Comma-separated claim numbers (1..=10).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u32>,
}

pub fn paper(a: &PaperArgs, g: &Global, assets: &Assets) -> Outcome {
    if let Some(bad) = a.only.iter().find(|&&i| !(1..=10).contains(&i)) {
        return Err(InputError(format!("no claim {bad}; claims are numbered 1..=10")));
    }
    let ids: Vec<u32> = if a.only.is_empty() { (1..=10).collect() } else { a.only.clone() };
    let opts = ClaimOptions { quick: a.quick, threads: g.threads, deterministic: g.deterministic };
    let mut text = format!("assets: {}\n", assets.origin());
    let mismatched: Vec<String> = assets
        .checksums()
        .into_iter()
        .filter(|(_, want, got)| got.as_deref() != Some(want.as_str()))
        .map(|(path, _, got)| if got.is_some() { format!("{path} (modified)") } else { format!("{path} (missing)") })
        .collect();
    for m in &mismatched {
        let _ = writeln!(text, "checksum mismatch: {m}");
    }
    let mut rows = Vec::new();
    for id in ids {
        let start = Instant::now();
        let claim = claims::run_claim(id, assets, &opts);
        let elapsed = start.elapsed();
        let _ =
            write!(text, "[{id:>2}] {} {}: {}", if claim.passed { "PASS" } else { "FAIL" }, claim.title, claim.summary);
        if !g.deterministic {
            let _ = write!(text, " ({elapsed:.1?})");
        }
        text.push('\n');
        for d in &claim.details {
            let _ = writeln!(text, "       {d}");
        }
        let mut row = serde_json::to_value(&claim).expect("serialisable");
        if !g.deterministic {
            row["seconds"] = json!(elapsed.as_secs_f64());
        }
        rows.push((claim.passed, row));
    }
    let ok = rows.iter().all(|(p, _)| *p);
    let passed = rows.iter().filter(|(p, _)| *p).count();
    let _ = writeln!(text, "{passed}/{} claims hold as stated", rows.len());
    let json = json!({
        "assets": assets.origin(),
        "checksum_mismatches": mismatched,
        "claims": rows.into_iter().map(|(_, r)| r).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Graph6,
    Edges,
    Dot,
    /// graph6 of the canonical relabelling.
    Canonical,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    pub graph: String,
    #[arg(long, value_enum, default_value_t = Target::Graph6)]
    pub to: Target,
}

fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for &l in g.labels() {
        let _ = writeln!(s, "  {l};");
    }
    for (i, j) in g.edges() {
        let _ = writeln!(s, "  {} -- {};", g.label(i), g.label(j));
    }
    s.push_str("}\n");
    s
}

pub fn convert(a: &ConvertArgs, g: &Global, assets: &Assets) -> Outcome {
    let graph = graph_arg(&a.graph, g, assets)?;
    let text = match a.to {
        Target::Graph6 => format!("{}\n", format_graph6(&graph)),
        Target::Edges => graph.to_edge_list(),
        Target::Dot => to_dot(&graph),
        Target::Canonical => {
            debug_assert_eq!(canonical_form(&graph).0, format_graph6(&canonical_graph(&graph)));
            format!("{}\n", canonical_form(&graph))
        }
    };
    let json = json!({ "format": format!("{:?}", a.to).to_lowercase(), "output": text });
    Ok(Report { text, json, ok: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_arc_list_orientations_agree() {
        let host = Graph::cycle(4);
        let arcs = "1>2\n2>3\n1>4\n4>3\n";
        let a = parse_orientation(host.clone(), arcs).unwrap();
        let dot = parse_orientation(host, &a.to_dot()).unwrap();
        assert_eq!(a, dot);
    }

    #[test]
    fn words_with_spaces() {
        assert_eq!(parse_word("1 12 3").unwrap(), Word(vec![1, 12, 3]));
        assert_eq!(parse_word("1(12)3").unwrap(), Word(vec![1, 12, 3]));
        assert!(parse_word("1 x").is_err());
    }
}
