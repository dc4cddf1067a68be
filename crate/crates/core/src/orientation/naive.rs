//! Exhaustive reference decision procedure. Shares no code with the closure
//! based shortcut detection: cycles are found by depth-first reachability and
//! shortcuts by enumerating every directed path explicitly.

use crate::error::OrientationError;
use crate::graph::{bit, bits, Graph};

use super::PartialOrientation;

pub const NAIVE_EDGE_LIMIT: usize = 24;

/// Whether some orientation of `g` is semi-transitive, by trying all of them.
/// Branches that already close a directed cycle are cut, which skips only
/// orientations that fail anyway.
pub fn exists_semi_transitive_naive(g: &Graph) -> Result<bool, OrientationError> {
    let mut found = false;
    for_each_semi_transitive_completion(&PartialOrientation::new(g.clone()), |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// Call `visit` on every semi-transitive orientation extending `p`, stopping
/// early when `visit` returns `false`.
pub fn for_each_semi_transitive_completion<F>(p: &PartialOrientation, mut visit: F) -> Result<(), OrientationError>
where
    F: FnMut(&PartialOrientation) -> bool,
{
    let g = p.host();
    if g.edge_count() > NAIVE_EDGE_LIMIT {
        return Err(OrientationError::TooManyEdges(g.edge_count()));
    }
    let free: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(i, j)| !p.has_arc(i, j) && !p.has_arc(j, i)).collect();
    let out = p.out_rows().to_vec();
    if has_cycle(&out) {
        return Ok(());
    }
    let mut st = Enumerator { g, free, out, visit: &mut visit, stopped: false };
    st.go(0);
    Ok(())
}

struct Enumerator<'a, F> {
    g: &'a Graph,
    free: Vec<(usize, usize)>,
    out: Vec<u64>,
    visit: &'a mut F,
    stopped: bool,
}

impl<F: FnMut(&PartialOrientation) -> bool> Enumerator<'_, F> {
    fn go(&mut self, k: usize) {
        if self.stopped {
            return;
        }
        if k == self.free.len() {
            if !path_shortcut(self.g, &self.out) {
                let d = PartialOrientation::from_rows(self.g.clone(), self.out.clone());
                if !(self.visit)(&d) {
                    self.stopped = true;
                }
            }
            return;
        }
        let (i, j) = self.free[k];
        for (a, b) in [(i, j), (j, i)] {
            if reaches(&self.out, b, a) {
                continue;
            }
            self.out[a] |= bit(b);
            self.go(k + 1);
            self.out[a] &= !bit(b);
        }
    }
}

/// Depth-first search for a directed path `from => to`.
fn reaches(out: &[u64], from: usize, to: usize) -> bool {
    let mut seen = bit(from);
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        for y in bits(out[x] & !seen) {
            seen |= bit(y);
            stack.push(y);
        }
    }
    false
}

fn has_cycle(out: &[u64]) -> bool {
    (0..out.len()).any(|a| bits(out[a]).any(|b| reaches(out, b, a)))
}

/// Whether a complete acyclic orientation has a shortcut, by listing every
/// directed path `v0 -> ... -> vk` with `k >= 3` and an arc `v0 -> vk`.
pub fn has_shortcut_by_paths(d: &PartialOrientation) -> bool {
    path_shortcut(d.host(), d.out_rows())
}

fn path_shortcut(g: &Graph, out: &[u64]) -> bool {
    fn extend(g: &Graph, out: &[u64], path: &mut Vec<usize>) -> bool {
        let last = *path.last().expect("non-empty path");
        let start = path[0];
        if path.len() >= 4 && out[start] & bit(last) != 0 {
            for a in 0..path.len() {
                for b in a + 1..path.len() {
                    if !g.has_edge(path[a], path[b]) {
                        return true;
                    }
                }
            }
        }
        for y in bits(out[last]) {
            if path.contains(&y) {
                continue;
            }
            path.push(y);
            let hit = extend(g, out, path);
            path.pop();
            if hit {
                return true;
            }
        }
        false
    }
    (0..g.n()).any(|v| extend(g, out, &mut vec![v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(exists_semi_transitive_naive(&Graph::cycle(5)).unwrap());
        assert!(!exists_semi_transitive_naive(&Graph::wheel(5)).unwrap());
        assert!(exists_semi_transitive_naive(&Graph::wheel(4)).unwrap());
        assert!(exists_semi_transitive_naive(&Graph::complete(6)).unwrap());
        assert_eq!(exists_semi_transitive_naive(&Graph::complete(8)), Err(OrientationError::TooManyEdges(28)));
    }

    #[test]
    fn completions_of_k3_are_the_six_transitive_tournaments() {
        let mut count = 0;
        for_each_semi_transitive_completion(&PartialOrientation::new(Graph::complete(3)), |_| {
            count += 1;
            true
        })
        .unwrap();
        assert_eq!(count, 6);
    }

    #[test]
    fn cyclic_start_has_no_completion() {
        let p = PartialOrientation::from_arcs(Graph::complete(3), &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let mut count = 0;
        for_each_semi_transitive_completion(&p, |_| {
            count += 1;
            true
        })
        .unwrap();
        assert_eq!(count, 0);
    }
}
