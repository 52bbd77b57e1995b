//! Column-by-column frontier dynamic program for ladders and prisms.
//!
//! The strip is swept one column at a time. After a column is placed, each of
//! its two rows is [`Status::Selected`], [`Status::Covered`] or
//! [`Status::Open`]; an open row can only be dominated by selecting the same
//! row in the next column. Each reachable frontier state carries the minimum
//! number of selected vertices so far together with the number of partial
//! selections achieving it ([`CostCount`]).
//!
//! Per-vertex domination values come from a forward table `f_i(state)` and a
//! backward table `b_i(state)` combined at every column. Since the state at
//! column `i` records which rows of column `i` are selected, the minimum sets
//! containing `x_i` are exactly the optimal `f ⊗ b` products over states whose
//! `x` row is selected.
//!
//! Prisms are closed by conditioning on the selection pattern of column 1 and
//! on which rows column `n` selects ("credits"). Column 1 starts with the
//! credited rows already covered, and a final state is accepted only if its
//! selections are exactly the credits and its open rows are dominated by
//! column 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{strip_id, Row};
use crate::report::{checked_add, checked_mul, Count, DominationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Selected = 0,
    Covered = 1,
    Open = 2,
}

/// Status of both rows of the most recently placed column.
///
/// States are totally ordered by `3 · x + y` with `Selected < Covered < Open`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrontierState {
    pub x: Status,
    pub y: Status,
}

impl FrontierState {
    pub const COUNT: usize = 9;

    const STATUSES: [Status; 3] = [Status::Selected, Status::Covered, Status::Open];

    pub fn index(self) -> usize {
        3 * self.x as usize + self.y as usize
    }

    pub fn from_index(i: usize) -> Self {
        FrontierState {
            x: Self::STATUSES[i / 3],
            y: Self::STATUSES[i % 3],
        }
    }

    pub fn all() -> impl Iterator<Item = FrontierState> {
        (0..Self::COUNT).map(Self::from_index)
    }

    pub fn row(self, row: Row) -> Status {
        match row {
            Row::X => self.x,
            Row::Y => self.y,
        }
    }

    /// Rows selected in this column, as a pattern.
    pub fn selection(self) -> Pattern {
        Pattern::new(self.x == Status::Selected, self.y == Status::Selected)
    }

    /// Rows still waiting to be dominated, as a pattern.
    pub fn open_rows(self) -> Pattern {
        Pattern::new(self.x == Status::Open, self.y == Status::Open)
    }
}

impl fmt::Display for FrontierState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |s: Status| match s {
            Status::Selected => 'S',
            Status::Covered => 'C',
            Status::Open => 'O',
        };
        write!(f, "{}{}", c(self.x), c(self.y))
    }
}

/// Which rows of one column are selected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(u8);

impl Pattern {
    pub const EMPTY: Pattern = Pattern(0);
    pub const ALL: [Pattern; 4] = [Pattern(0), Pattern(1), Pattern(2), Pattern(3)];

    pub fn new(x: bool, y: bool) -> Self {
        Pattern(u8::from(x) | (u8::from(y) << 1))
    }

    pub fn has(self, row: Row) -> bool {
        match row {
            Row::X => self.0 & 1 != 0,
            Row::Y => self.0 & 2 != 0,
        }
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains_all(self, other: Pattern) -> bool {
        self.0 & other.0 == other.0
    }
}

/// Places the next column with selection `pattern` after a column in state
/// `prev`. Returns `None` when an open row of `prev` would stay undominated.
pub fn transition(prev: FrontierState, pattern: Pattern) -> Option<FrontierState> {
    if !pattern.contains_all(prev.open_rows()) {
        return None;
    }
    Some(place(pattern, prev.selection()))
}

// Status of a freshly placed column given what the column before it selected
// (or, for column 1 of a prism, the credited rows).
fn place(pattern: Pattern, covered_from_left: Pattern) -> FrontierState {
    let status = |row: Row| {
        if pattern.has(row) {
            Status::Selected
        } else if pattern.has(row.other()) || covered_from_left.has(row) {
            Status::Covered
        } else {
            Status::Open
        }
    };
    FrontierState {
        x: status(Row::X),
        y: status(Row::Y),
    }
}

/// Minimum partial selection size and the number of partial selections achieving it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostCount {
    pub best: usize,
    pub ways: Count,
}

impl CostCount {
    pub const UNIT: CostCount = CostCount { best: 0, ways: 1 };

    /// Cost adds, counts multiply.
    pub fn then(self, other: CostCount) -> Result<CostCount> {
        Ok(CostCount {
            best: self.best + other.best,
            ways: checked_mul(self.ways, other.ways, "strip dp ways")?,
        })
    }

    fn plus_cost(self, cost: usize) -> CostCount {
        CostCount {
            best: self.best + cost,
            ..self
        }
    }
}

/// Folds `candidate` into `cell`: smaller cost replaces, equal cost adds
/// counts, larger cost is discarded. `None` is the unreachable bottom.
pub fn merge(cell: &mut Option<CostCount>, candidate: CostCount) -> Result<()> {
    match cell {
        None => *cell = Some(candidate),
        Some(cur) if candidate.best < cur.best => *cur = candidate,
        Some(cur) if candidate.best == cur.best => {
            cur.ways = checked_add(cur.ways, candidate.ways, "strip dp ways")?;
        }
        Some(_) => {}
    }
    Ok(())
}

type Column = [Option<CostCount>; FrontierState::COUNT];

const BOTTOM: Column = [None; FrontierState::COUNT];

/// One linear sweep: a column-1 state table, the transfer over columns
/// `2..=n`, and a predicate on the state of column `n`.
#[derive(Debug, Clone)]
struct Chain {
    start: Column,
    accept: [bool; FrontierState::COUNT],
}

impl Chain {
    fn ladder() -> Self {
        let virtual_column = FrontierState {
            x: Status::Covered,
            y: Status::Covered,
        };
        let mut start = BOTTOM;
        for p in Pattern::ALL {
            if let Some(s) = transition(virtual_column, p) {
                start[s.index()] = Some(CostCount {
                    best: p.size(),
                    ways: 1,
                });
            }
        }
        let accept =
            std::array::from_fn(|i| FrontierState::from_index(i).open_rows() == Pattern::EMPTY);
        Chain { start, accept }
    }

    fn prism(first: Pattern, credits: Pattern) -> Self {
        let mut start = BOTTOM;
        start[place(first, credits).index()] = Some(CostCount {
            best: first.size(),
            ways: 1,
        });
        let accept = std::array::from_fn(|i| {
            let s = FrontierState::from_index(i);
            s.selection() == credits && first.contains_all(s.open_rows())
        });
        Chain { start, accept }
    }

    fn boundaries() -> impl Iterator<Item = Chain> {
        Pattern::ALL.into_iter().flat_map(|first| {
            Pattern::ALL
                .into_iter()
                .map(move |credits| Chain::prism(first, credits))
        })
    }

    /// `forward[i - 1]` is the table after column `i`. If `forced` is set,
    /// that column's row must be selected.
    fn forward(&self, n: usize, forced: Option<(usize, Row)>) -> Result<Vec<Column>> {
        let restrict = |col: usize, table: &mut Column| {
            if let Some((fc, row)) = forced {
                if fc == col {
                    for (i, cell) in table.iter_mut().enumerate() {
                        if FrontierState::from_index(i).row(row) != Status::Selected {
                            *cell = None;
                        }
                    }
                }
            }
        };
        let mut tables = Vec::with_capacity(n);
        let mut cur = self.start;
        restrict(1, &mut cur);
        tables.push(cur);
        for col in 2..=n {
            let mut next = BOTTOM;
            for (i, cell) in cur.iter().enumerate() {
                let Some(cc) = *cell else { continue };
                let state = FrontierState::from_index(i);
                for p in Pattern::ALL {
                    if let Some(t) = transition(state, p) {
                        merge(&mut next[t.index()], cc.plus_cost(p.size()))?;
                    }
                }
            }
            restrict(col, &mut next);
            tables.push(next);
            cur = next;
        }
        Ok(tables)
    }

    /// `backward[i - 1][s]`: cheapest accepted completion of columns
    /// `i+1..=n` from state `s` at column `i`.
    fn backward(&self, n: usize) -> Result<Vec<Column>> {
        let mut tables = vec![BOTTOM; n];
        tables[n - 1] = std::array::from_fn(|i| self.accept[i].then_some(CostCount::UNIT));
        for col in (1..n).rev() {
            let after = tables[col];
            let mut here = BOTTOM;
            for (i, cell) in here.iter_mut().enumerate() {
                let state = FrontierState::from_index(i);
                for p in Pattern::ALL {
                    if let Some(t) = transition(state, p) {
                        if let Some(cc) = after[t.index()] {
                            merge(cell, cc.plus_cost(p.size()))?;
                        }
                    }
                }
            }
            tables[col - 1] = here;
        }
        Ok(tables)
    }

    fn accepted(&self, last: &Column) -> Result<Option<CostCount>> {
        let mut total = None;
        for (i, cell) in last.iter().enumerate() {
            if let (true, Some(cc)) = (self.accept[i], cell) {
                merge(&mut total, *cc)?;
            }
        }
        Ok(total)
    }
}

fn chains(family: Family) -> Vec<Chain> {
    match family {
        Family::Ladder => vec![Chain::ladder()],
        Family::Prism => Chain::boundaries().collect(),
        _ => unreachable!("strip families only"),
    }
}

fn check_order(family: Family, n: usize) -> Result<()> {
    let min = match family {
        Family::Ladder => 1,
        Family::Prism => 3,
        other => {
            return Err(Error::Unsupported {
                engine: "dp",
                family: other,
                n,
            })
        }
    };
    if n < min {
        return Err(Error::InvalidOrder { family, n, min });
    }
    Ok(())
}

/// Full result of a forward–backward sweep over a strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripSolution {
    pub family: Family,
    pub n: usize,
    pub gamma: Count,
    /// τ from the forward pass alone.
    pub tau: Count,
    /// τ recomputed by combining forward and backward tables at each column.
    pub column_tau: Vec<Count>,
    /// DV in graph id order (`x_1..x_n`, then `y_1..y_n`).
    pub dv: Vec<Count>,
}

impl StripSolution {
    pub fn report(&self) -> DominationReport {
        DominationReport::new(self.gamma, self.tau, self.dv.clone())
    }
}

/// Exact γ, τ and per-vertex DV of the ladder or prism of order `n`.
pub fn solve(family: Family, n: usize) -> Result<StripSolution> {
    check_order(family, n)?;
    let chains = chains(family);

    let mut forward_total = None;
    let mut per_column: Vec<Option<CostCount>> = vec![None; n];
    // per_vertex[id - 1]: optimal combined cost/count over states selecting that vertex
    let mut per_vertex: Vec<Option<CostCount>> = vec![None; 2 * n];

    for chain in &chains {
        let fwd = chain.forward(n, None)?;
        if let Some(cc) = chain.accepted(&fwd[n - 1])? {
            merge(&mut forward_total, cc)?;
        }
        let bwd = chain.backward(n)?;
        for col in 1..=n {
            for i in 0..FrontierState::COUNT {
                let (Some(f), Some(b)) = (fwd[col - 1][i], bwd[col - 1][i]) else {
                    continue;
                };
                let both = f.then(b)?;
                merge(&mut per_column[col - 1], both)?;
                let state = FrontierState::from_index(i);
                for row in [Row::X, Row::Y] {
                    if state.row(row) == Status::Selected {
                        merge(&mut per_vertex[strip_id(n, row, col) - 1], both)?;
                    }
                }
            }
        }
    }

    let total = forward_total.expect("every strip has a dominating set");
    let gamma = total.best as Count;
    let at_gamma = |cell: &Option<CostCount>| match cell {
        Some(cc) if cc.best == total.best => cc.ways,
        _ => 0,
    };
    Ok(StripSolution {
        family,
        n,
        gamma,
        tau: total.ways,
        column_tau: per_column.iter().map(at_gamma).collect(),
        dv: per_vertex.iter().map(at_gamma).collect(),
    })
}

pub fn dp_ladder(n: usize) -> Result<DominationReport> {
    solve(Family::Ladder, n).map(|s| s.report())
}

pub fn dp_prism(n: usize) -> Result<DominationReport> {
    solve(Family::Prism, n).map(|s| s.report())
}

/// Minimum cost and count over all dominating sets of the strip that select
/// `row` in `column`, from the forward pass alone.
pub fn forced_inclusion(
    family: Family,
    n: usize,
    row: Row,
    column: usize,
) -> Result<Option<CostCount>> {
    check_order(family, n)?;
    if column == 0 || column > n {
        return Err(Error::out_of_range(format!("column {column}"), 2 * n));
    }
    let mut total = None;
    for chain in chains(family) {
        let fwd = chain.forward(n, Some((column, row)))?;
        if let Some(cc) = chain.accepted(&fwd[n - 1])? {
            merge(&mut total, cc)?;
        }
    }
    Ok(total)
}

/// Number of minimum dominating sets containing the vertex, via
/// [`forced_inclusion`]. `gamma` must be the strip's domination number.
pub fn forced_inclusion_dv(
    family: Family,
    n: usize,
    row: Row,
    column: usize,
    gamma: Count,
) -> Result<Count> {
    Ok(match forced_inclusion(family, n, row, column)? {
        Some(cc) if cc.best as Count == gamma => cc.ways,
        _ => 0,
    })
}

/// The full 9 × 4 transfer table, `None` where the pattern is inadmissible.
pub fn transition_table() -> [[Option<FrontierState>; 4]; FrontierState::COUNT] {
    std::array::from_fn(|i| {
        std::array::from_fn(|p| transition(FrontierState::from_index(i), Pattern::ALL[p]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> FrontierState {
        let c = |ch| match ch {
            'S' => Status::Selected,
            'C' => Status::Covered,
            'O' => Status::Open,
            _ => panic!("bad status"),
        };
        let b: Vec<char> = s.chars().collect();
        FrontierState {
            x: c(b[0]),
            y: c(b[1]),
        }
    }

    #[test]
    fn state_encoding_is_a_bijection() {
        for i in 0..FrontierState::COUNT {
            assert_eq!(FrontierState::from_index(i).index(), i);
        }
        let order: Vec<String> = FrontierState::all().map(|s| s.to_string()).collect();
        assert_eq!(
            order,
            ["SS", "SC", "SO", "CS", "CC", "CO", "OS", "OC", "OO"]
        );
    }

    #[test]
    fn transfer_table() {
        let none = Pattern::new(false, false);
        let x = Pattern::new(true, false);
        let y = Pattern::new(false, true);
        let xy = Pattern::new(true, true);

        // nothing owed, nothing selected before
        assert_eq!(transition(st("CC"), none), Some(st("OO")));
        assert_eq!(transition(st("CC"), x), Some(st("SC")));
        assert_eq!(transition(st("CC"), y), Some(st("CS")));
        assert_eq!(transition(st("CC"), xy), Some(st("SS")));
        // previous selection covers the same row
        assert_eq!(transition(st("SC"), none), Some(st("CO")));
        assert_eq!(transition(st("SS"), none), Some(st("CC")));
        assert_eq!(transition(st("CS"), x), Some(st("SC")));
        // open rows must be picked up
        assert_eq!(transition(st("OC"), none), None);
        assert_eq!(transition(st("OC"), y), None);
        assert_eq!(transition(st("OC"), x), Some(st("SC")));
        assert_eq!(transition(st("OO"), x), None);
        assert_eq!(transition(st("OO"), xy), Some(st("SS")));

        let table = transition_table();
        let admissible: usize = table.iter().map(|row| row.iter().flatten().count()).sum();
        // 4 patterns from 4 states with no open row, 2 from 4 with one, 1 from OO
        assert_eq!(admissible, 4 * 4 + 2 * 4 + 1);
        // a selected row never leaves its own column open
        for row in table.iter() {
            for t in row.iter().flatten() {
                assert_ne!((t.x, t.y), (Status::Selected, Status::Open));
                assert_ne!((t.x, t.y), (Status::Open, Status::Selected));
            }
        }
    }

    #[test]
    fn merge_rules() {
        let mut cell = None;
        merge(&mut cell, CostCount { best: 3, ways: 2 }).unwrap();
        merge(&mut cell, CostCount { best: 3, ways: 5 }).unwrap();
        assert_eq!(cell, Some(CostCount { best: 3, ways: 7 }));
        merge(&mut cell, CostCount { best: 4, ways: 100 }).unwrap();
        assert_eq!(cell, Some(CostCount { best: 3, ways: 7 }));
        merge(&mut cell, CostCount { best: 2, ways: 1 }).unwrap();
        assert_eq!(cell, Some(CostCount { best: 2, ways: 1 }));
        let mut full = Some(CostCount {
            best: 0,
            ways: Count::MAX,
        });
        assert_eq!(
            merge(&mut full, CostCount::UNIT),
            Err(Error::Overflow("strip dp ways"))
        );
    }

    #[test]
    fn ladder_examples() {
        let r = dp_ladder(4).unwrap();
        assert_eq!((r.gamma, r.tau), (3, 12));
        assert_eq!(r.dv, vec![5, 4, 4, 5, 5, 4, 4, 5]);

        let r = dp_ladder(3).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (2, 3, vec![1; 6]));

        let r = dp_ladder(101).unwrap();
        assert_eq!((r.gamma, r.tau), (51, 2));
        for i in 1..=101 {
            let expected = Count::from(i % 2 == 1);
            assert_eq!(r.dv[i - 1], expected);
            assert_eq!(r.dv[101 + i - 1], expected);
        }

        let r = dp_ladder(1).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (1, 2, vec![1, 1]));
    }

    #[test]
    fn prism_examples() {
        let r = dp_prism(12).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (6, 4, vec![1; 24]));
        let r = dp_prism(5).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (3, 10, vec![3; 10]));
        let r = dp_prism(6).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (4, 51, vec![17; 12]));
        let r = dp_prism(3).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (2, 9, vec![3; 6]));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(dp_ladder(0), Err(Error::InvalidOrder { .. })));
        assert!(matches!(
            dp_prism(2),
            Err(Error::InvalidOrder { min: 3, .. })
        ));
        assert!(matches!(
            solve(Family::Path, 4),
            Err(Error::Unsupported { .. })
        ));
        assert!(forced_inclusion(Family::Ladder, 4, Row::X, 5).is_err());
    }

    #[test]
    fn forward_backward_agree_at_every_column() {
        for n in 1..=20 {
            let s = solve(Family::Ladder, n).unwrap();
            assert!(s.column_tau.iter().all(|&t| t == s.tau), "ladder {n}");
        }
        for n in 3..=20 {
            let s = solve(Family::Prism, n).unwrap();
            assert!(s.column_tau.iter().all(|&t| t == s.tau), "prism {n}");
        }
    }

    #[test]
    fn forced_inclusion_matches_dv() {
        for (family, lo) in [(Family::Ladder, 1), (Family::Prism, 3)] {
            for n in lo..=12 {
                let s = solve(family, n).unwrap();
                for col in 1..=n {
                    for row in [Row::X, Row::Y] {
                        let forced = forced_inclusion_dv(family, n, row, col, s.gamma).unwrap();
                        assert_eq!(
                            forced,
                            s.dv[strip_id(n, row, col) - 1],
                            "{family} {n} {row:?}{col}"
                        );
                    }
                }
            }
        }
    }
}
