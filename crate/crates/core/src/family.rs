use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Layout, VertexRef};

/// The four graph families with closed-form results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Path,
    Cycle,
    /// `P2 □ Pn`
    Ladder,
    /// `P2 □ Cn`
    Prism,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Path, Family::Cycle, Family::Ladder, Family::Prism];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Ladder => "ladder",
            Family::Prism => "prism",
        }
    }

    /// Smallest order for which a graph of this family can be built.
    pub fn min_order(self) -> usize {
        match self {
            Family::Path | Family::Ladder => 1,
            Family::Cycle | Family::Prism => 3,
        }
    }

    /// Smallest order covered by the closed-form τ and DV formulas.
    pub fn min_formula_order(self) -> usize {
        match self {
            Family::Path | Family::Ladder => 2,
            Family::Cycle | Family::Prism => 3,
        }
    }

    pub fn is_strip(self) -> bool {
        matches!(self, Family::Ladder | Family::Prism)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "ladder" => Ok(Family::Ladder),
            "prism" => Ok(Family::Prism),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// A single family instance, e.g. the ladder of order 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    pub family: Family,
    pub n: usize,
}

impl FamilyId {
    pub fn new(family: Family, n: usize) -> Self {
        FamilyId { family, n }
    }

    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(Family::Cycle, n)
    }

    pub fn ladder(n: usize) -> Self {
        Self::new(Family::Ladder, n)
    }

    pub fn prism(n: usize) -> Self {
        Self::new(Family::Prism, n)
    }

    /// `n` for paths and cycles, `2n` for strips.
    pub fn num_vertices(&self) -> Result<usize> {
        if self.family.is_strip() {
            self.n.checked_mul(2).ok_or(Error::Overflow("vertex count"))
        } else {
            Ok(self.n)
        }
    }

    pub fn layout(&self) -> Layout {
        match self.family {
            Family::Path | Family::Cycle => Layout::Plain,
            Family::Ladder => Layout::Ladder(self.n),
            Family::Prism => Layout::Prism(self.n),
        }
    }

    /// Resolves `x3`/`y7`/`5` style addresses without building the graph.
    pub fn vertex_id(&self, vertex: VertexRef) -> Result<usize> {
        self.layout().vertex_id(self.num_vertices()?, vertex)
    }

    pub fn in_formula_domain(&self) -> bool {
        self.n >= self.family.min_formula_order()
    }

    pub(crate) fn require_formula_domain(&self) -> Result<()> {
        if self.in_formula_domain() {
            Ok(())
        } else {
            Err(Error::InvalidOrder {
                family: self.family,
                n: self.n,
                min: self.family.min_formula_order(),
            })
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        match self.family {
            Family::Path => Graph::path(self.n),
            Family::Cycle => Graph::cycle(self.n),
            Family::Ladder => Graph::ladder(self.n),
            Family::Prism => Graph::prism(self.n),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}
