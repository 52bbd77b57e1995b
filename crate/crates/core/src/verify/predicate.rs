use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{strip_id, Graph, Row, VertexSet};
use crate::oracle;
use crate::report::Count;

/// Named set predicates for filtered domination counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    /// `{x1, y1} ∩ D = ∅`
    CornerFree,
    HasX1,
    HasY1,
    /// `x1 ∈ D` or `y1 ∈ D`
    HasX1OrY1,
    /// `{x2, y2} ⊆ D`
    ContainsX2Y2,
    /// `{x_i, y_i} ⊆ D` for some column `i`
    ContainsRungPair,
    /// `D` is an independent set.
    NoAdjacentPair,
    /// None of `x1, y1, xn, yn` is in `D`.
    NoDegreeTwo,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::CornerFree,
        Predicate::HasX1,
        Predicate::HasY1,
        Predicate::HasX1OrY1,
        Predicate::ContainsX2Y2,
        Predicate::ContainsRungPair,
        Predicate::NoAdjacentPair,
        Predicate::NoDegreeTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::CornerFree => "corner-free",
            Predicate::HasX1 => "has-x1",
            Predicate::HasY1 => "has-y1",
            Predicate::HasX1OrY1 => "has-x1-or-y1",
            Predicate::ContainsX2Y2 => "contains-x2y2",
            Predicate::ContainsRungPair => "contains-rung-pair",
            Predicate::NoAdjacentPair => "no-adjacent-pair",
            Predicate::NoDegreeTwo => "no-degree-two",
        }
    }

    pub fn holds(self, g: &Graph, d: &VertexSet) -> Result<bool> {
        if self == Predicate::NoAdjacentPair {
            return Ok(d
                .iter()
                .all(|v| g.neighbors(v).iter().all(|&w| !d.contains(w))));
        }
        let n = g.layout().strip_order().ok_or(Error::NotStrip)?;
        let has = |row, column| d.contains(strip_id(n, row, column));
        Ok(match self {
            Predicate::CornerFree => !has(Row::X, 1) && !has(Row::Y, 1),
            Predicate::HasX1 => has(Row::X, 1),
            Predicate::HasY1 => has(Row::Y, 1),
            Predicate::HasX1OrY1 => has(Row::X, 1) || has(Row::Y, 1),
            Predicate::ContainsX2Y2 => n >= 2 && has(Row::X, 2) && has(Row::Y, 2),
            Predicate::ContainsRungPair => (1..=n).any(|i| has(Row::X, i) && has(Row::Y, i)),
            Predicate::NoDegreeTwo => ![(Row::X, 1), (Row::Y, 1), (Row::X, n), (Row::Y, n)]
                .into_iter()
                .any(|(r, c)| has(r, c)),
            Predicate::NoAdjacentPair => unreachable!(),
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "contains-{x2,y2}" {
            return Ok(Predicate::ContainsX2Y2);
        }
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// Number of γ-sets of `g` that contain `v` and satisfy `predicate`.
pub fn filtered_dv(g: &Graph, predicate: Predicate, v: usize) -> Result<Count> {
    let sets = oracle::enumerate_gamma_sets(g, None)?;
    filtered_counts(g, &sets, predicate)?
        .get(v.wrapping_sub(1))
        .copied()
        .ok_or_else(|| Error::out_of_range(v, g.num_vertices()))
}

/// Filtered domination value of every vertex (id order) over a given γ-set family.
pub fn filtered_counts(g: &Graph, sets: &[VertexSet], predicate: Predicate) -> Result<Vec<Count>> {
    let mut counts = vec![0; g.num_vertices()];
    for d in sets {
        if predicate.holds(g, d)? {
            for v in d.iter() {
                counts[v - 1] += 1;
            }
        }
    }
    Ok(counts)
}

/// Number of sets in the family satisfying `predicate`.
pub fn filtered_tau(g: &Graph, sets: &[VertexSet], predicate: Predicate) -> Result<Count> {
    let mut count = 0;
    for d in sets {
        if predicate.holds(g, d)? {
            count += 1;
        }
    }
    Ok(count)
}
