//! One check per stated claim about the family and the small-graph
//! census. Each returns a [`Claim`] whose `passed` flag is the claim read
//! literally; `details` explain any shortfall.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::enumerate::enumerate_graphs;
use crate::family::{build_h, check_characterization, verify_case, Assets, SweepOptions, PROOF_NAMES};
use crate::graph::{bit, bits, Graph};
use crate::graph6::{format_graph6, parse_graph6};
use crate::orientation::{
    exists_semi_transitive_naive, find_shortcut, for_each_semi_transitive_completion, is_semi_transitive,
    is_word_representable, propagate, search_semi_transitive, Certificate, PartialOrientation, Propagation,
    SearchOptions,
};
use crate::proof::{emit_transcript, format_transcript, mutations, parse_transcript, verify_transcript, Transcript};

/// Seed of every randomised suite.
pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
}

impl Claim {
    fn new(id: u32, title: &str, passed: bool, summary: String, details: Vec<String>) -> Claim {
        Claim { id, title: title.to_string(), passed, summary, details }
    }

    fn error(id: u32, title: &str, e: impl std::fmt::Display) -> Claim {
        Claim::new(id, title, false, format!("error: {e}"), Vec::new())
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClaimOptions {
    /// Restrict the `C` sweep to 10 vertices.
    pub quick: bool,
    pub threads: usize,
    pub deterministic: bool,
}

pub const TITLES: [&str; 10] = [
    "small-graph census",
    "oracle agreement",
    "refutation transcripts",
    "drawn orientations",
    "minimality",
    "H3 characterization",
    "C characterization",
    "deletion cases",
    "property suites",
    "format round-trips",
];

pub fn run_claim(id: u32, assets: &Assets, opts: &ClaimOptions) -> Claim {
    match id {
        1 => census(),
        2 => oracle_agreement(),
        3 => transcripts(assets),
        4 => drawn_orientations(assets),
        5 => minimality(assets),
        6 => h3_characterization(assets),
        7 => c_characterization(assets, opts),
        8 => deletion_cases(assets),
        9 => property_suites(),
        10 => round_trips(assets),
        _ => Claim::error(id, "unknown", "no such claim"),
    }
}

pub fn run_all(assets: &Assets, opts: &ClaimOptions) -> Vec<Claim> {
    (1..=10).map(|id| run_claim(id, assets, opts)).collect()
}

fn w5_plus_k1() -> Graph {
    let mut adj = Graph::wheel(5).rows().to_vec();
    adj.push(0);
    Graph::from_adjacency(adj).expect("7 vertices")
}

fn census_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_graphs(n).expect("within enumeration limit")).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub classes: usize,
    pub non_representable: Vec<Graph6>,
}

/// A graph6 string with its connectivity.
#[derive(Clone, Debug, Serialize)]
pub struct Graph6 {
    pub graph6: String,
    pub connected: bool,
}

pub fn census_row(n: usize) -> CensusRow {
    let graphs = enumerate_graphs(n).expect("within enumeration limit");
    let non_representable = graphs
        .par_iter()
        .filter(|g| !is_word_representable(g))
        .map(|g| Graph6 { graph6: format_graph6(g), connected: g.is_connected() })
        .collect();
    CensusRow { n, classes: graphs.len(), non_representable }
}

pub fn census() -> Claim {
    let t = TITLES[0];
    let (six, seven) = (census_row(6), census_row(7));
    let w5 = canonical_form(&Graph::wheel(5));
    let six_is_w5 = six.non_representable.len() == 1
        && parse_graph6(&six.non_representable[0].graph6).map(|g| canonical_form(&g) == w5).unwrap_or(false);
    let connected = seven.non_representable.iter().filter(|g| g.connected).count();
    let disconnected: Vec<&Graph6> = seven.non_representable.iter().filter(|g| !g.connected).collect();
    let extra_is_w5k1 = disconnected.len() == 1
        && parse_graph6(&disconnected[0].graph6)
            .map(|g| canonical_form(&g) == canonical_form(&w5_plus_k1()))
            .unwrap_or(false);
    let passed = six.classes == 156 && six_is_w5 && seven.classes == 1044 && seven.non_representable.len() == 25;
    let mut details = vec![
        format!("n=6: {} classes, {} non-representable, W5: {}", six.classes, six.non_representable.len(), six_is_w5),
        format!(
            "n=7: {} classes, {} non-representable ({} connected, {} disconnected)",
            seven.classes,
            seven.non_representable.len(),
            connected,
            disconnected.len()
        ),
    ];
    if extra_is_w5k1 {
        details.push("the disconnected class is W5 plus an isolated vertex".into());
    }
    if seven.non_representable.len() != 25 && connected == 25 {
        details.push("the count 25 holds for connected graphs only".into());
    }
    let summary = format!(
        "n=6 {}/{} non-rep; n=7 {}/{} non-rep (expected 25; {} connected)",
        six.non_representable.len(),
        six.classes,
        seven.non_representable.len(),
        seven.classes,
        connected
    );
    Claim::new(1, t, passed, summary, details)
}

/// Edge density drawn per graph from `density`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: std::ops::Range<f64>) -> Graph {
    let p: f64 = rng.gen_range(density);
    let mut edges = Vec::new();
    for a in 1..=n as u32 {
        for b in a + 1..=n as u32 {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).expect("simple graph")
}

pub fn random_sevens(count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count).map(|_| random_graph(&mut rng, 7, 0.5..0.9)).collect()
}

pub fn oracle_agreement() -> Claim {
    let small = census_graphs(6);
    let random = random_sevens(200);
    let mismatches = |gs: &[Graph]| -> Vec<String> {
        gs.par_iter()
            .filter(|g| exists_semi_transitive_naive(g).expect("at most 21 edges") != is_word_representable(g))
            .map(format_graph6)
            .collect()
    };
    let (a, b) = (mismatches(&small), mismatches(&random));
    let non_rep = random.par_iter().filter(|g| !is_word_representable(g)).count();
    let mut details = vec![
        format!("{} graphs on at most 6 vertices, {} mismatches", small.len(), a.len()),
        format!("200 random 7-vertex graphs ({non_rep} non-representable), {} mismatches", b.len()),
    ];
    details.extend(a.iter().chain(&b).map(|s| format!("mismatch: {s}")));
    let passed = a.is_empty() && b.is_empty();
    Claim::new(
        2,
        TITLES[1],
        passed,
        format!("{} mismatches over {} graphs", a.len() + b.len(), small.len() + 200),
        details,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct TranscriptOutcome {
    pub name: String,
    pub accepted: bool,
    /// `line:position reason` for each failure.
    pub failures: Vec<String>,
    pub mutations: usize,
    pub mutations_rejected: usize,
}

pub fn transcript_outcomes(assets: &Assets) -> Result<Vec<TranscriptOutcome>, crate::error::FamilyError> {
    PROOF_NAMES
        .iter()
        .map(|name| {
            let p = assets.proof(name)?;
            let g = &p.host.graph;
            let v = verify_transcript(g, &p.transcript);
            let muts = mutations(g, &p.transcript);
            let rejected = muts.par_iter().filter(|m| !verify_transcript(g, &m.transcript).accepted).count();
            Ok(TranscriptOutcome {
                name: name.to_string(),
                accepted: v.accepted,
                failures: v.failures.iter().map(|f| format!("{}:{} {}", f.line, f.position, f.reason)).collect(),
                mutations: muts.len(),
                mutations_rejected: rejected,
            })
        })
        .collect()
}

pub fn transcripts(assets: &Assets) -> Claim {
    let t = TITLES[2];
    let outcomes = match transcript_outcomes(assets) {
        Ok(o) => o,
        Err(e) => return Claim::error(3, t, e),
    };
    let accepted = outcomes.iter().filter(|o| o.accepted).count();
    let total: usize = outcomes.iter().map(|o| o.mutations).sum();
    let rejected: usize = outcomes.iter().map(|o| o.mutations_rejected).sum();
    let details = outcomes
        .iter()
        .map(|o| {
            let verdict =
                if o.accepted { "accepted".to_string() } else { format!("rejected [{}]", o.failures.join("; ")) };
            format!("{}: {verdict}; {}/{} mutations rejected", o.name, o.mutations_rejected, o.mutations)
        })
        .collect();
    let passed = accepted == outcomes.len() && rejected == total;
    Claim::new(
        3,
        t,
        passed,
        format!("{accepted}/{} accepted; {rejected}/{total} mutations rejected", outcomes.len()),
        details,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientationOutcome {
    pub name: String,
    pub complete: bool,
    pub semi_transitive: bool,
    /// Whether the arcs present close a directed cycle.
    pub cyclic: bool,
    /// Shortcut path by labels when the drawing has one.
    pub shortcut: Option<Vec<u32>>,
    /// Edges without an arc.
    pub unoriented: Vec<(u32, u32)>,
    /// Semi-transitive completions of an incomplete drawing, as the added
    /// arcs; `None` when more than [`COMPLETION_LIMIT`] edges are free.
    pub completions: Option<Vec<Vec<(u32, u32)>>>,
    /// Single arcs whose reversal makes a complete drawing semi-transitive.
    pub one_arc_repairs: Vec<(u32, u32)>,
}

fn label_arcs(d: &PartialOrientation) -> Vec<(u32, u32)> {
    let g = d.host();
    d.arcs().into_iter().map(|(i, j)| (g.label(i), g.label(j))).collect()
}

pub fn orientation_outcome(assets: &Assets, name: &str) -> Result<OrientationOutcome, crate::error::FamilyError> {
    Ok(analyse_orientation(name, &assets.orientation(name)?.orientation))
}

/// Most free edges for which completions are enumerated.
pub const COMPLETION_LIMIT: usize = 16;

pub fn analyse_orientation(name: &str, drawn: &PartialOrientation) -> OrientationOutcome {
    let g = drawn.host().clone();
    let unoriented: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .filter(|&(i, j)| !drawn.has_arc(i, j) && !drawn.has_arc(j, i))
        .map(|(i, j)| (g.label(i), g.label(j)))
        .collect();
    let mut out = OrientationOutcome {
        name: name.to_string(),
        complete: drawn.is_complete(),
        semi_transitive: false,
        cyclic: drawn.directed_cycle().is_some(),
        shortcut: None,
        unoriented,
        completions: None,
        one_arc_repairs: Vec::new(),
    };
    if !out.complete {
        if out.unoriented.len() > COMPLETION_LIMIT {
            return out;
        }
        let base = label_arcs(drawn);
        let free = &out.unoriented;
        let mut completions = Vec::new();
        for choice in 0..1u64 << free.len() {
            let added: Vec<(u32, u32)> = free
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if choice & bit(k) == 0 { (a, b) } else { (b, a) })
                .collect();
            let all: Vec<(u32, u32)> = base.iter().chain(&added).copied().collect();
            let d = PartialOrientation::from_arcs(g.clone(), &all).expect("distinct edges");
            if is_semi_transitive(&d).unwrap_or(false) {
                completions.push(added);
            }
        }
        out.completions = Some(completions);
        return out;
    }
    out.semi_transitive = is_semi_transitive(drawn).unwrap_or(false);
    if !out.semi_transitive && !out.cyclic {
        out.shortcut = find_shortcut(drawn).ok().flatten().map(|w| w.labels(drawn.host()));
    }
    if !out.semi_transitive {
        let arcs = label_arcs(drawn);
        for (k, &(a, b)) in arcs.iter().enumerate() {
            let mut flipped = arcs.clone();
            flipped[k] = (b, a);
            let d = PartialOrientation::from_arcs(drawn.host().clone(), &flipped).expect("same edges");
            if is_semi_transitive(&d).unwrap_or(false) {
                out.one_arc_repairs.push((a, b));
            }
        }
    }
    out
}

pub fn drawn_orientations(assets: &Assets) -> Claim {
    let t = TITLES[3];
    let mut details = Vec::new();
    let mut pass = 0;
    for name in ["A1", "A2", "A4", "A5"] {
        let o = match orientation_outcome(assets, name) {
            Ok(o) => o,
            Err(e) => return Claim::error(4, t, e),
        };
        let line = if o.semi_transitive {
            pass += 1;
            format!("{name}: semi-transitive")
        } else if !o.complete {
            format!("{name}: incomplete as drawn; semi-transitive completions: {:?}", o.completions.unwrap_or_default())
        } else {
            format!("{name}: shortcut {:?}; one-arc repairs (arc reversed): {:?}", o.shortcut, o.one_arc_repairs)
        };
        details.push(line);
    }
    Claim::new(4, t, pass == 4, format!("{pass}/4 semi-transitive as drawn"), details)
}

pub fn minimality(assets: &Assets) -> Claim {
    let t = TITLES[4];
    let w5 = canonical_form(&Graph::wheel(5));
    let mut details = Vec::new();
    let mut ok = 0;
    let names = ["A3", "B1", "B2", "B3", "B4", "B5", "B6", "B7"];
    for name in names {
        let g = match assets.graph(name) {
            Ok(n) => n.graph,
            Err(e) => return Claim::error(5, t, e),
        };
        let non_rep = !is_word_representable(&g);
        let naive_agrees = g.n() > 7 || exists_semi_transitive_naive(&g).map(|r| !r).unwrap_or(false) == non_rep;
        let full = g.vertex_mask();
        let deletions: Vec<bool> = (0..g.n())
            .into_par_iter()
            .map(|v| {
                let h = g.induced_by_mask(full & !bit(v));
                let rep = is_word_representable(&h);
                rep && (h.n() > 7 || exists_semi_transitive_naive(&h).unwrap_or(false))
            })
            .collect();
        let all_deletions = deletions.iter().all(|&r| r);
        let mut line = format!(
            "{name}: non-representable {non_rep}, {}/{} deletions representable",
            deletions.iter().filter(|&&r| r).count(),
            g.n()
        );
        let mut w5_free = true;
        if g.n() == 7 {
            w5_free = (0..7).all(|v| canonical_form(&g.induced_by_mask(full & !bit(v))) != w5);
            line.push_str(&format!(", no 6-vertex subgraph is W5: {w5_free}"));
        }
        if non_rep && naive_agrees && all_deletions && w5_free {
            ok += 1;
        }
        details.push(line);
    }
    Claim::new(5, t, ok == names.len(), format!("{ok}/{} minimal non-representable", names.len()), details)
}

pub fn h3_characterization(assets: &Assets) -> Claim {
    let t = TITLES[5];
    let run = || -> Result<Claim, crate::error::FamilyError> {
        let h3 = build_h(3)?;
        let drawn_matches = assets.graph("H3")?.graph == h3.graph;
        let a3 = assets.graph("A3")?.graph;
        let opts = SweepOptions { max_size: 10, threads: 1, deterministic: true };
        let r = check_characterization(&h3.graph, &[("A3".into(), a3)], &opts)?;
        let control = check_characterization(&h3.graph, &[], &opts)?;
        let h2_minimal = check_characterization(&build_h(2)?.graph, &[], &opts)?.minimal.len();
        let passed = drawn_matches && r.holds && r.minimal_match_forbidden && r.subsets == 1023;
        let details = vec![
            format!("transcribed H3 equals the construction: {drawn_matches}"),
            format!("{} subsets, {} classes, {} counterexamples", r.subsets, r.classes, r.counterexamples.len()),
            format!(
                "minimal classes: {:?}",
                r.minimal.iter().map(|c| c.name.clone().unwrap_or(c.code.0.clone())).collect::<Vec<_>>()
            ),
            format!("control with no forbidden pattern: {} counterexamples", control.counterexamples.len()),
            format!("H2 minimal non-representable classes: {h2_minimal}"),
        ];
        Ok(Claim::new(
            6,
            t,
            passed,
            format!("{} counterexamples over {} subsets", r.counterexamples.len(), r.subsets),
            details,
        ))
    };
    run().unwrap_or_else(|e| Claim::error(6, t, e))
}

pub fn c_characterization(assets: &Assets, opts: &ClaimOptions) -> Claim {
    let t = TITLES[6];
    let run = || -> Result<Claim, crate::error::FamilyError> {
        let c = build_h(4)?;
        let drawn_matches = assets.graph("C")?.graph == c.graph;
        let patterns = b_patterns(assets)?;
        let max_size = if opts.quick { 10 } else { 12 };
        let sweep = |max_size| SweepOptions { max_size, threads: opts.threads, deterministic: opts.deterministic };
        let r = check_characterization(&c.graph, &patterns, &sweep(max_size))?;
        let names: Vec<String> = r.minimal.iter().map(|c| c.name.clone().unwrap_or(c.code.0.clone())).collect();
        let mut passed = drawn_matches && r.holds && r.minimal_match_forbidden && r.minimal.len() == 7;
        let mut details = vec![
            format!("transcribed C equals the construction: {drawn_matches}"),
            format!(
                "max size {max_size}: {} subsets, {} classes, {} searched, {} counterexamples",
                r.subsets,
                r.classes,
                r.searched,
                r.counterexamples.len()
            ),
            format!("minimal classes: {names:?}"),
        ];
        if !opts.quick {
            let full = check_characterization(&c.graph, &patterns, &sweep(c.graph.n()))?;
            passed &= full.holds && full.minimal_match_forbidden;
            details.push(format!(
                "all {} induced subgraphs: {} classes, {} counterexamples",
                full.subsets,
                full.classes,
                full.counterexamples.len()
            ));
        }
        let scope = if opts.quick { " (quick)" } else { "" };
        Ok(Claim::new(
            7,
            t,
            passed,
            format!(
                "{} counterexamples up to {max_size} vertices{scope}; {} minimal classes",
                r.counterexamples.len(),
                r.minimal.len()
            ),
            details,
        ))
    };
    run().unwrap_or_else(|e| Claim::error(7, t, e))
}

pub fn b_patterns(assets: &Assets) -> Result<Vec<(String, Graph)>, crate::error::FamilyError> {
    (1..=7).map(|i| Ok((format!("B{i}"), assets.graph(&format!("B{i}"))?.graph))).collect()
}

pub fn deletion_cases(assets: &Assets) -> Claim {
    let t = TITLES[7];
    let run = || -> Result<Claim, crate::error::FamilyError> {
        let c = build_h(4)?.graph;
        let patterns = b_patterns(assets)?;
        let cases = assets.cases()?;
        let reports: Vec<_> = cases.par_iter().map(|case| verify_case(&c, case, &patterns, true)).collect();
        let passed_lines = reports.iter().filter(|r| r.passed()).count();
        let witness_ok = reports.iter().filter(|r| r.cited_witness_valid).count();
        let defining_ok = reports.iter().filter(|r| r.defining_property.as_ref().is_some_and(|d| d.holds)).count();
        let mut details = vec![
            format!("cited witness valid on {witness_ok}/{} lines", reports.len()),
            format!(
                "no further deletion above the last label stays non-representable on {defining_ok}/{} lines",
                reports.len()
            ),
        ];
        for r in &reports {
            if !r.passed() {
                details.push(format!(
                    "line {} `{}`: no forbidden pattern; residual representable {}",
                    r.case.line, r.case.spec, r.residual_representable
                ));
            }
            if !r.cited_witness_valid {
                details.push(format!(
                    "line {} `{}` {}: {}",
                    r.case.line,
                    r.case.spec,
                    r.case.pattern,
                    r.notes.join("; ")
                ));
            }
        }
        Ok(Claim::new(
            8,
            t,
            passed_lines == reports.len(),
            format!("{passed_lines}/{} lines contain a forbidden pattern", reports.len()),
            details,
        ))
    };
    run().unwrap_or_else(|e| Claim::error(8, t, e))
}

/// Violation counts of the randomised and exhaustive property suites.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyCounts {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
}

pub fn hereditarity_suite() -> PropertyCounts {
    let mut graphs = census_graphs(6);
    graphs.extend(random_sevens(200));
    let mut checked = 0;
    let mut violations = 0;
    for g in &graphs {
        if g.n() < 2 || !is_word_representable(g) {
            continue;
        }
        for v in 0..g.n() {
            checked += 1;
            violations += usize::from(!is_word_representable(&g.induced_by_mask(g.vertex_mask() & !bit(v))));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for _ in 0..500 {
        let n = rng.gen_range(6..=11);
        let g = random_graph(&mut rng, n, 0.3..0.9);
        let t = loop {
            let m = rng.gen_range(1..bit(n));
            if m.count_ones() >= 2 {
                break m;
            }
        };
        let s = t & rng.gen_range(1..bit(n));
        let s = if s == 0 { t & t.wrapping_neg() } else { s };
        checked += 1;
        if is_word_representable(&g.induced_by_mask(t)) && !is_word_representable(&g.induced_by_mask(s)) {
            violations += 1;
        }
    }
    PropertyCounts { name: "hereditarity", checked, violations }
}

pub fn three_colourable_suite() -> PropertyCounts {
    let graphs = census_graphs(7);
    let coloured: Vec<&Graph> = graphs.iter().filter(|g| g.is_three_colourable()).collect();
    let violations = coloured.par_iter().filter(|g| !is_word_representable(g)).count();
    PropertyCounts { name: "3-colourable implies representable", checked: coloured.len(), violations }
}

/// Random graphs on at most 7 vertices built by repeatedly cloning a vertex.
pub fn twin_rich_graphs(count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    (0..count)
        .map(|_| {
            let n0 = rng.gen_range(3..=6);
            let mut adj = random_graph(&mut rng, n0, 0.3..0.9).rows().to_vec();
            let target = rng.gen_range(n0..=7);
            while adj.len() < target {
                let k = adj.len();
                let v = rng.gen_range(0..k);
                let mut row = adj[v];
                for u in bits(row) {
                    adj[u] |= bit(k);
                }
                if rng.gen_bool(0.5) {
                    row |= bit(v);
                    adj[v] |= bit(k);
                }
                adj.push(row);
            }
            Graph::from_adjacency(adj).expect("simple graph")
        })
        .collect()
}

pub fn twin_reduction_suite() -> PropertyCounts {
    let graphs = twin_rich_graphs(500);
    let violations =
        graphs.par_iter().filter(|g| is_word_representable(g) != is_word_representable(&g.twin_reduce().0)).count();
    PropertyCounts { name: "twin reduction preserves the verdict", checked: graphs.len(), violations }
}

pub fn source_fixing_suite() -> PropertyCounts {
    let graphs = census_graphs(6);
    let results: Vec<(usize, usize)> = graphs
        .par_iter()
        .map(|g| {
            let expected = exists_semi_transitive_naive(g).expect("at most 15 edges");
            let mut bad = 0;
            for v in 0..g.n() {
                let opts = SearchOptions { source: Some(v), ..SearchOptions::default() };
                let ok = match search_semi_transitive(g, &opts) {
                    Certificate::Orientation(o) => {
                        expected && o.is_source(v) && is_semi_transitive(&o).unwrap_or(false)
                    }
                    Certificate::Refutation(_) => !expected,
                };
                bad += usize::from(!ok);
            }
            (g.n(), bad)
        })
        .collect();
    PropertyCounts {
        name: "any vertex may be fixed as source",
        checked: results.iter().map(|r| r.0).sum(),
        violations: results.iter().map(|r| r.1).sum(),
    }
}

/// From every "source plus one arc" state of every graph on at most 6
/// vertices, each forced arc appears in all semi-transitive completions and
/// a conflict admits none.
pub fn propagation_soundness_suite() -> PropertyCounts {
    let graphs = census_graphs(6);
    let results: Vec<(usize, usize)> = graphs
        .par_iter()
        .map(|g| {
            let (mut checked, mut bad) = (0, 0);
            for v in 0..g.n() {
                for (i, j) in g.edges() {
                    if i == v || j == v {
                        continue;
                    }
                    for (a, b) in [(i, j), (j, i)] {
                        let mut p = PartialOrientation::new(g.clone());
                        p.make_source(v).expect("fresh");
                        p.orient(a, b).expect("unoriented edge");
                        let mut completions: Vec<Vec<u64>> = Vec::new();
                        for_each_semi_transitive_completion(&p, |c| {
                            completions.push(c.out_rows().to_vec());
                            true
                        })
                        .expect("at most 15 edges");
                        checked += 1;
                        let sound = match propagate(&p) {
                            Propagation::Conflict { .. } => completions.is_empty(),
                            Propagation::Consistent { state, .. } => {
                                completions.iter().all(|c| state.out_rows().iter().zip(c).all(|(s, c)| s & !c == 0))
                            }
                        };
                        bad += usize::from(!sound);
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    PropertyCounts {
        name: "propagation soundness",
        checked: results.iter().map(|r| r.0).sum(),
        violations: results.iter().map(|r| r.1).sum(),
    }
}

pub fn property_suites() -> Claim {
    let suites = [
        hereditarity_suite(),
        three_colourable_suite(),
        twin_reduction_suite(),
        source_fixing_suite(),
        propagation_soundness_suite(),
    ];
    let violations: usize = suites.iter().map(|s| s.violations).sum();
    let details =
        suites.iter().map(|s| format!("{}: {} checks, {} violations", s.name, s.checked, s.violations)).collect();
    Claim::new(
        9,
        TITLES[8],
        violations == 0,
        format!("{violations} violations across {} suites", suites.len()),
        details,
    )
}

pub fn round_trips(assets: &Assets) -> Claim {
    let t = TITLES[9];
    let mut diffs: Vec<String> = Vec::new();
    let mut graphs: Vec<(String, Graph)> = census_graphs(7).into_iter().map(|g| (format_graph6(&g), g)).collect();
    for (name, _) in crate::family::NAMED_GRAPHS {
        match assets.graph(name) {
            Ok(n) => graphs.push((name.to_string(), n.graph)),
            Err(e) => return Claim::error(10, t, e),
        }
    }
    let graph_count = graphs.len();
    for (name, g) in &graphs {
        let s = format_graph6(g);
        match parse_graph6(&s) {
            Ok(h) if h == g.with_default_labels() && format_graph6(&h) == s => {}
            _ => diffs.push(format!("graph6 {name}")),
        }
        match Graph::parse_edge_list(&g.to_edge_list()) {
            Ok(h) if h == *g => {}
            _ => diffs.push(format!("edge list {name}")),
        }
    }
    let mut texts: Vec<(String, Transcript)> = Vec::new();
    for name in PROOF_NAMES {
        match assets.proof(name) {
            Ok(p) => texts.push((name.to_string(), p.transcript)),
            Err(e) => return Claim::error(10, t, e),
        }
    }
    for g in census_graphs(7).iter().filter(|g| !is_word_representable(g)) {
        let cert = search_semi_transitive(g, &SearchOptions::default());
        match emit_transcript(&cert) {
            Ok(tr) => texts.push((format_graph6(g), tr)),
            Err(e) => diffs.push(format!("emit {}: {e}", format_graph6(g))),
        }
    }
    for (name, tr) in &texts {
        let text = format_transcript(tr);
        match parse_transcript(&text) {
            Ok(back) if back == *tr && format_transcript(&back) == text => {}
            _ => diffs.push(format!("transcript {name}")),
        }
    }
    let details = vec![
        format!("{graph_count} graphs through graph6 and the edge-list format"),
        format!(
            "{} transcripts ({} bundled, {} emitted)",
            texts.len(),
            PROOF_NAMES.len(),
            texts.len() - PROOF_NAMES.len()
        ),
    ]
    .into_iter()
    .chain(diffs.iter().map(|d| format!("diff: {d}")))
    .collect();
    Claim::new(10, t, diffs.is_empty(), format!("{} diffs", diffs.len()), details)
}
