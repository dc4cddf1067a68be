//! Graphs made of two cliques, `K_m` and `K_n`, with `K_m` maximal: no
//! vertex of the `K_n` side is adjacent to the whole `K_m` side.
//!
//! `H_m` is the largest such graph up to twins: `K_m` on labels `1..=m`
//! plus one vertex for every subset of `1..=m` of size at most `m - 1`,
//! those vertices forming the `K_n`. Subset vertices are labelled from
//! `m + 1` upwards in order of (size, lexicographic), which reproduces the
//! usual drawings of `H_3` (10 vertices) and `C = H_4` (19 vertices). For
//! `m = 2` the 5-vertex graph has `N(3) = {}`, `N(4) = {1}`, `N(5) = {2}`;
//! it is 3-colourable and hence representable.

mod assets;
mod cases;
mod sweep;

use serde::Serialize;

use crate::error::FamilyError;
use crate::graph::{bit, Graph, VertexSet};

pub use assets::{Assets, DrawnOrientation, NamedGraph, ProofAsset, NAMED_GRAPHS, PROOF_NAMES};
pub use cases::{parse_case_file, parse_deletion_spec, verify_case, CaseReport, DeletionCase};
pub use sweep::{
    check_characterization, enumerate_minimal_non_wr, sweep, CharacterizationReport, ClassInfo, Counterexample,
    SweepOptions, SweepResult, SWEEP_VERTEX_LIMIT,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub m_side: VertexSet,
    pub n_side: VertexSet,
}

impl FamilyGraph {
    pub fn m(&self) -> usize {
        self.m_side.len()
    }

    /// Sides restricted to the surviving vertices of an induced subgraph.
    pub fn induced(&self, keep: VertexSet) -> Result<FamilyGraph, FamilyError> {
        let graph = self.graph.induced_subgraph(&keep)?;
        let side = |s: VertexSet| {
            let labels: Vec<u32> = s.labels(&self.graph).into_iter().filter(|&l| graph.index_of(l).is_some()).collect();
            VertexSet::from_labels(&graph, &labels)
        };
        Ok(FamilyGraph { m_side: side(self.m_side)?, n_side: side(self.n_side)?, graph })
    }
}

/// Both sides are cliques partitioning the vertices, and no `n_side`
/// vertex sees all of `m_side`.
pub fn validate_km_kn(f: &FamilyGraph) -> bool {
    let g = &f.graph;
    let (m, n) = (f.m_side.0, f.n_side.0);
    m & n == 0
        && m | n == g.vertex_mask()
        && m != 0
        && g.is_clique(m)
        && g.is_clique(n)
        && f.n_side.indices().all(|v| g.neighbours(v) & m != m)
}

/// Subsets of `1..=m` of size below `m`, ordered by (size, lexicographic).
fn proper_subsets(m: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for size in 0..m {
        let mut combo: Vec<u32> = (1..=size as u32).collect();
        loop {
            out.push(combo.clone());
            // advance to the next combination in lexicographic order
            let mut i = size;
            while i > 0 && combo[i - 1] == (m - size + i) as u32 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    out
}

pub fn build_h(m: usize) -> Result<FamilyGraph, FamilyError> {
    if !(1..=4).contains(&m) {
        return Err(FamilyError::BadM(m));
    }
    let subsets = proper_subsets(m);
    let total = m + subsets.len();
    let mut edges = Vec::new();
    for a in 1..=m as u32 {
        for b in a + 1..=m as u32 {
            edges.push((a, b));
        }
    }
    for (i, s) in subsets.iter().enumerate() {
        let v = (m + 1 + i) as u32;
        edges.extend(s.iter().map(|&u| (u, v)));
        for w in v + 1..=total as u32 {
            edges.push((v, w));
        }
    }
    let graph = Graph::new(total, &edges)?;
    let m_side = VertexSet((0..m).map(bit).sum());
    let n_side = VertexSet(graph.vertex_mask() & !m_side.0);
    Ok(FamilyGraph { graph, m_side, n_side })
}

/// Shape summary of a family graph, used by reports.
#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub m: usize,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub valid: bool,
    pub neighbourhoods: Vec<(u32, Vec<u32>)>,
}

impl FamilySummary {
    pub fn of(f: &FamilyGraph) -> FamilySummary {
        let g = &f.graph;
        let neighbourhoods =
            f.n_side.indices().map(|v| (g.label(v), VertexSet(g.neighbours(v) & f.m_side.0).labels(g))).collect();
        FamilySummary {
            m: f.m_side.len(),
            n: f.n_side.len(),
            vertices: g.n(),
            edges: g.edge_count(),
            valid: validate_km_kn(f),
            neighbourhoods,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_validity() {
        for m in 1..=4 {
            let f = build_h(m).unwrap();
            assert_eq!(f.graph.n(), m + (1 << m) - 1);
            assert_eq!(f.n_side.len(), (1 << m) - 1);
            assert!(validate_km_kn(&f));
        }
        assert_eq!(build_h(0), Err(FamilyError::BadM(0)));
        assert_eq!(build_h(5), Err(FamilyError::BadM(5)));
    }

    #[test]
    fn h2_neighbourhoods() {
        let s = FamilySummary::of(&build_h(2).unwrap());
        assert_eq!(s.neighbourhoods, vec![(3, vec![]), (4, vec![1]), (5, vec![2])]);
    }

    #[test]
    fn c_labelling() {
        let s = FamilySummary::of(&build_h(4).unwrap());
        let nb: std::collections::BTreeMap<u32, Vec<u32>> = s.neighbourhoods.into_iter().collect();
        assert_eq!(nb[&5], Vec::<u32>::new());
        assert_eq!(nb[&9], vec![4]);
        assert_eq!(nb[&10], vec![1, 2]);
        assert_eq!(nb[&15], vec![3, 4]);
        assert_eq!(nb[&16], vec![1, 2, 3]);
        assert_eq!(nb[&19], vec![2, 3, 4]);
    }

    #[test]
    fn maximality_is_checked() {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                edges.push((a, b));
            }
        }
        let graph = Graph::new(5, &edges).unwrap();
        let apex = FamilyGraph { graph, m_side: VertexSet(0b01111), n_side: VertexSet(0b10000) };
        assert!(!validate_km_kn(&apex));
        let two = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        let f = FamilyGraph { graph: two, m_side: VertexSet(0b000111), n_side: VertexSet(0b111000) };
        assert!(validate_km_kn(&f));
    }
}
