//! Exhaustive enumeration of all minimum dominating sets.
//!
//! Candidate sizes are tried in increasing order starting at the
//! `⌈n / (1 + Δ)⌉` lower bound. At each size every combination is visited in
//! lexicographic order, with two cuts that only discard partial sets that
//! cannot be completed into a dominating set of that size:
//!
//! * the undominated vertices outnumber what the remaining picks could cover,
//!   given the largest closed neighborhood still available;
//! * the smallest undominated vertex has no closed neighbor left to pick.
//!
//! Neither cut ever removes a tie, so the count at the optimal size is exact.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::report::{to_count, Count, DominationReport};

/// Largest set size searched unless the caller raises it.
pub const DEFAULT_SIZE_CAP: usize = 12;

/// All γ-sets of `g` in lexicographic order of their sorted members.
///
/// `size_cap` bounds the candidate size (default [`DEFAULT_SIZE_CAP`]); when
/// no dominating set of at most that size exists the call fails with
/// [`Error::BudgetExceeded`].
pub fn enumerate_gamma_sets(g: &Graph, size_cap: Option<usize>) -> Result<Vec<VertexSet>> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = size_cap.unwrap_or(DEFAULT_SIZE_CAP);
    let lower = n.div_ceil(1 + g.max_degree()).max(1);
    let mut search = Search::new(g);
    for k in lower..=n {
        if k > cap {
            return Err(Error::BudgetExceeded { cap });
        }
        search.run(k);
        if !search.found.is_empty() {
            return Ok(std::mem::take(&mut search.found));
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// γ, τ and DV of `g`; the sets themselves are kept only if `keep_sets`.
pub fn domination_report(
    g: &Graph,
    keep_sets: bool,
    size_cap: Option<usize>,
) -> Result<DominationReport> {
    let sets = enumerate_gamma_sets(g, size_cap)?;
    let mut report = tally(g.num_vertices(), &sets)?;
    if keep_sets {
        report.sets = Some(sets);
    }
    Ok(report)
}

/// Builds a report from a complete family of γ-sets.
pub(crate) fn tally(num_vertices: usize, sets: &[VertexSet]) -> Result<DominationReport> {
    let mut dv: Vec<Count> = vec![0; num_vertices];
    for set in sets {
        for v in set.iter() {
            dv[v - 1] += 1;
        }
    }
    let gamma = sets.first().map_or(0, VertexSet::len);
    Ok(DominationReport::new(
        to_count(gamma, "gamma")?,
        to_count(sets.len(), "tau")?,
        dv,
    ))
}

struct Search<'g> {
    g: &'g Graph,
    // suffix_reach[i] = max reach over ids > i
    suffix_reach: Vec<usize>,
    // largest closed neighbor of each vertex
    last_closed: Vec<usize>,
    // how many chosen vertices dominate each vertex
    cover: Vec<u32>,
    undominated: usize,
    chosen: Vec<usize>,
    target: usize,
    found: Vec<VertexSet>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.num_vertices();
        let reach: Vec<usize> = g.vertices().map(|v| g.degree(v) + 1).collect();
        let mut suffix_reach = vec![0; n + 1];
        for i in (0..n).rev() {
            suffix_reach[i] = suffix_reach[i + 1].max(reach[i]);
        }
        let last_closed = g
            .vertices()
            .map(|v| g.neighbors(v).last().copied().unwrap_or(v).max(v))
            .collect();
        Search {
            g,
            suffix_reach,
            last_closed,
            cover: vec![0; n],
            undominated: n,
            chosen: Vec::new(),
            target: 0,
            found: Vec::new(),
        }
    }

    fn run(&mut self, k: usize) {
        self.target = k;
        self.found.clear();
        self.extend(1);
        debug_assert!(self.chosen.is_empty() && self.undominated == self.g.num_vertices());
    }

    fn toggle(&mut self, v: usize, add: bool) {
        let g = self.g;
        for w in g.neighbors(v).iter().copied().chain([v]) {
            let c = &mut self.cover[w - 1];
            if add {
                if *c == 0 {
                    self.undominated -= 1;
                }
                *c += 1;
            } else {
                *c -= 1;
                if *c == 0 {
                    self.undominated += 1;
                }
            }
        }
    }

    /// Extends the current partial set with vertices `>= next`.
    fn extend(&mut self, next: usize) {
        let n = self.g.num_vertices();
        let remaining = self.target - self.chosen.len();
        if remaining == 0 {
            if self.undominated == 0 {
                self.found.push(VertexSet::from_sorted(self.chosen.clone()));
            }
            return;
        }
        if self.undominated > 0 {
            if self.undominated > remaining * self.suffix_reach[next - 1] {
                return;
            }
            let first_open = self
                .cover
                .iter()
                .position(|&c| c == 0)
                .expect("undominated vertex")
                + 1;
            if self.last_closed[first_open - 1] < next {
                return;
            }
        }
        for v in next..=(n + 1 - remaining) {
            self.chosen.push(v);
            self.toggle(v, true);
            self.extend(v + 1);
            self.toggle(v, false);
            self.chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexRef;

    #[test]
    fn small_graphs() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            enumerate_gamma_sets(&p3, None).unwrap(),
            vec![VertexSet::new([2])]
        );

        let l3 = Graph::ladder(3).unwrap();
        let id = |r: VertexRef| l3.vertex_id(r).unwrap();
        let expected = vec![
            VertexSet::new([id(VertexRef::x(1)), id(VertexRef::y(3))]),
            VertexSet::new([id(VertexRef::x(2)), id(VertexRef::y(2))]),
            VertexSet::new([id(VertexRef::x(3)), id(VertexRef::y(1))]),
        ];
        assert_eq!(enumerate_gamma_sets(&l3, None).unwrap(), expected);

        assert_eq!(
            enumerate_gamma_sets(&Graph::cycle(5).unwrap(), None)
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn reports() {
        let r = domination_report(&Graph::ladder(2).unwrap(), false, None).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv.clone()), (2, 6, vec![3; 4]));
        assert!(r.sets.is_none());

        let r = domination_report(&Graph::path(2).unwrap(), true, None).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv.clone()), (1, 2, vec![1, 1]));
        assert_eq!(r.sets.unwrap().len(), 2);

        let r = domination_report(&Graph::prism(3).unwrap(), false, None).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (2, 9, vec![3; 6]));

        let r = domination_report(&Graph::path(1).unwrap(), false, None).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (1, 1, vec![1]));
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::path(9).unwrap();
        assert_eq!(
            enumerate_gamma_sets(&g, Some(2)),
            Err(Error::BudgetExceeded { cap: 2 })
        );
        assert_eq!(enumerate_gamma_sets(&g, Some(3)).unwrap().len(), 1);
        let edgeless = Graph::from_edges(13, []).unwrap();
        assert_eq!(
            enumerate_gamma_sets(&edgeless, None),
            Err(Error::BudgetExceeded { cap: 12 })
        );
        assert_eq!(enumerate_gamma_sets(&edgeless, Some(13)).unwrap().len(), 1);
    }

    #[test]
    fn deterministic_and_sorted() {
        let g = Graph::ladder(6).unwrap();
        let a = enumerate_gamma_sets(&g, None).unwrap();
        let b = enumerate_gamma_sets(&g, None).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        for s in &a {
            assert!(g.is_dominating(s).unwrap());
        }
    }
}
