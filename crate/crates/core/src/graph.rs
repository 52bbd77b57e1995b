//! Undirected simple graphs with 1-based vertex ids.
//!
//! Ladders (`P2 □ Pn`) and prisms (`P2 □ Cn`) use a fixed flattening of
//! their two rows: `x_i ↦ i` and `y_i ↦ n + i`. Every engine reports
//! per-vertex values in this id order, so reports are directly comparable.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the two copies of the path/cycle in a strip graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    X,
    Y,
}

impl Row {
    pub fn other(self) -> Row {
        match self {
            Row::X => Row::Y,
            Row::Y => Row::X,
        }
    }
}

/// Family-aware vertex address: `x3`, `y7` on strips, a plain index otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexRef {
    Plain(usize),
    Strip { row: Row, column: usize },
}

impl VertexRef {
    pub fn x(column: usize) -> Self {
        VertexRef::Strip {
            row: Row::X,
            column,
        }
    }

    pub fn y(column: usize) -> Self {
        VertexRef::Strip {
            row: Row::Y,
            column,
        }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRef::Plain(v) => write!(f, "{v}"),
            VertexRef::Strip {
                row: Row::X,
                column,
            } => write!(f, "x{column}"),
            VertexRef::Strip {
                row: Row::Y,
                column,
            } => write!(f, "y{column}"),
        }
    }
}

impl FromStr for VertexRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidVertexSpec(s.to_string());
        let (row, digits) = match s.as_bytes().first() {
            Some(b'x') | Some(b'X') => (Some(Row::X), &s[1..]),
            Some(b'y') | Some(b'Y') => (Some(Row::Y), &s[1..]),
            _ => (None, s),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(match row {
            Some(row) => VertexRef::Strip { row, column: index },
            None => VertexRef::Plain(index),
        })
    }
}

/// How vertex ids map onto family structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    Plain,
    Ladder(usize),
    Prism(usize),
}

impl Layout {
    /// Column count for strip layouts.
    pub fn strip_order(self) -> Option<usize> {
        match self {
            Layout::Plain => None,
            Layout::Ladder(n) | Layout::Prism(n) => Some(n),
        }
    }

    /// Resolves a family-aware address on a graph with `num_vertices` vertices.
    pub fn vertex_id(self, num_vertices: usize, vertex: VertexRef) -> Result<usize> {
        match (vertex, self.strip_order()) {
            (VertexRef::Plain(v), None) if v >= 1 && v <= num_vertices => Ok(v),
            (VertexRef::Strip { row, column }, Some(order)) if column >= 1 && column <= order => {
                Ok(strip_id(order, row, column))
            }
            (VertexRef::Plain(_), None) | (VertexRef::Strip { .. }, Some(_)) => {
                Err(Error::out_of_range(vertex, num_vertices))
            }
            (VertexRef::Plain(_), Some(_)) | (VertexRef::Strip { .. }, None) => {
                Err(Error::InvalidVertexSpec(vertex.to_string()))
            }
        }
    }

    /// Inverse of [`Layout::vertex_id`] for an in-range id.
    pub fn vertex_ref(self, id: usize) -> VertexRef {
        match self.strip_order() {
            None => VertexRef::Plain(id),
            Some(n) if id <= n => VertexRef::x(id),
            Some(n) => VertexRef::y(id - n),
        }
    }
}

/// Flattened id of `row`/`column` in a strip of order `n`.
pub fn strip_id(n: usize, row: Row, column: usize) -> usize {
    match row {
        Row::X => column,
        Row::Y => n + column,
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Immutable undirected simple graph on vertices `1..=num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    // adjacency[v - 1] holds the sorted neighbors of v
    adjacency: Vec<Vec<usize>>,
    layout: Layout,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut sets = vec![BTreeSet::new(); num_vertices];
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            if u == 0 || v == 0 || u > num_vertices || v > num_vertices {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "endpoint out of range",
                });
            }
            if !sets[u - 1].insert(v) {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge",
                });
            }
            sets[v - 1].insert(u);
        }
        Ok(Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            layout: Layout::Plain,
        })
    }

    fn with_layout(mut self, layout: Layout) -> Self {
        self.layout = layout;
        self
    }

    /// `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(invalid_order(crate::Family::Path, n));
        }
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    /// `C_n`: the path plus the closing edge `{n, 1}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid_order(crate::Family::Cycle, n));
        }
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
    }

    /// `P2 □ Pn` under the `x_i ↦ i`, `y_i ↦ n+i` flattening.
    pub fn ladder(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(invalid_order(crate::Family::Ladder, n));
        }
        let size = n.checked_mul(2).ok_or(Error::Overflow("vertex count"))?;
        let g = Graph::from_edges(size, strip_edges(n, false))?;
        Ok(g.with_layout(Layout::Ladder(n)))
    }

    /// `P2 □ Cn` under the same flattening as [`Graph::ladder`].
    pub fn prism(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid_order(crate::Family::Prism, n));
        }
        let size = n.checked_mul(2).ok_or(Error::Overflow("vertex count"))?;
        let g = Graph::from_edges(size, strip_edges(n, true))?;
        Ok(g.with_layout(Layout::Prism(n)))
    }

    /// Cartesian product `g □ h`; the pair `(u, v)` gets id `(u-1)·|h| + v`.
    pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
        let b = h.num_vertices();
        let id = |u: usize, v: usize| (u - 1) * b + v;
        let mut edges = Vec::new();
        for u in 1..=g.num_vertices() {
            for v in 1..=h.num_vertices() {
                for &w in h.neighbors(v).iter().filter(|&&w| w > v) {
                    edges.push((id(u, v), id(u, w)));
                }
                for &w in g.neighbors(u).iter().filter(|&&w| w > u) {
                    edges.push((id(u, v), id(w, v)));
                }
            }
        }
        Graph::from_edges(g.num_vertices() * b, edges).expect("product of simple graphs is simple")
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v` with `1 <= u < v <= n`. Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            if u == v {
                return Err(parse_error(line, format!("self-loop at vertex {u}")));
            }
            if u == 0 || u > v || v > n {
                return Err(parse_error(
                    line,
                    format!("edge `{u} {v}` must satisfy 1 <= u < v <= {n}"),
                ));
            }
            edges.push((line, u, v));
        }
        if edges.len() != m {
            return Err(parse_error(
                header_line,
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        let mut seen = BTreeSet::new();
        for &(line, u, v) in &edges {
            if !seen.insert((u, v)) {
                return Err(parse_error(line, format!("duplicate edge `{u} {v}`")));
            }
        }
        Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.num_vertices()
    }

    /// Sorted neighbor ids of `v`. Panics on an invalid id.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.check(u).is_ok() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.num_vertices() {
            Err(Error::out_of_range(v, self.num_vertices()))
        } else {
            Ok(())
        }
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet::from_sorted(self.neighbors(v).to_vec()))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet::new(self.neighbors(v).iter().copied().chain([v])))
    }

    /// True iff every vertex is in `s` or adjacent to a member of `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> Result<bool> {
        let mut covered = vec![false; self.num_vertices()];
        for v in s.iter() {
            self.check(v)?;
            covered[v - 1] = true;
            for &w in self.neighbors(v) {
                covered[w - 1] = true;
            }
        }
        Ok(covered.into_iter().all(|c| c))
    }

    /// Resolves a family-aware address against this graph's layout.
    pub fn vertex_id(&self, vertex: VertexRef) -> Result<usize> {
        self.layout.vertex_id(self.num_vertices(), vertex)
    }

    /// Inverse of [`Graph::vertex_id`]. Panics on an invalid id.
    pub fn vertex_ref(&self, id: usize) -> VertexRef {
        assert!(
            id >= 1 && id <= self.num_vertices(),
            "vertex id {id} out of range"
        );
        self.layout.vertex_ref(id)
    }
}

fn strip_edges(n: usize, closed: bool) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(3 * n);
    for row in [Row::X, Row::Y] {
        for i in 1..n {
            edges.push((strip_id(n, row, i), strip_id(n, row, i + 1)));
        }
        if closed {
            edges.push((strip_id(n, row, n), strip_id(n, row, 1)));
        }
    }
    for i in 1..=n {
        edges.push((i, n + i));
    }
    edges
}

fn invalid_order(family: crate::Family, n: usize) -> Error {
    Error::InvalidOrder {
        family,
        n,
        min: family.min_order(),
    }
}

fn parse_error(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| parse_error(line, format!("expected two integers, got `{text}`")))?;
        field
            .parse()
            .map_err(|_| parse_error(line, format!("`{field}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(parse_error(
            line,
            format!("expected two integers, got `{text}`"),
        ));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_symmetric(g: &Graph) {
        for u in g.vertices() {
            assert!(!g.neighbors(u).contains(&u), "self-loop at {u}");
            for &v in g.neighbors(u) {
                assert!(g.neighbors(v).contains(&u), "{u}~{v} not symmetric");
            }
        }
    }

    #[test]
    fn path_constructor() {
        let p1 = Graph::path(1).unwrap();
        assert_eq!((p1.num_vertices(), p1.num_edges()), (1, 0));
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.num_edges(), 4);
        assert_eq!(p5.degree_sequence(), vec![1, 2, 2, 2, 1]);
        assert!(matches!(Graph::path(0), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn cycle_constructor() {
        assert_eq!(Graph::cycle(3).unwrap().num_edges(), 3);
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.degree_sequence().iter().all(|&d| d == 2));
        let c10 = Graph::cycle(10).unwrap();
        assert_eq!((c10.num_vertices(), c10.num_edges()), (10, 10));
        assert!(matches!(
            Graph::cycle(2),
            Err(Error::InvalidOrder { min: 3, .. })
        ));
    }

    #[test]
    fn strip_constructors() {
        let l2 = Graph::ladder(2).unwrap();
        // P2 □ P2 is the 4-cycle 1-2-4-3-1
        assert_eq!(l2.num_edges(), 4);
        assert!(l2.degree_sequence().iter().all(|&d| d == 2));
        assert!(l2.has_edge(1, 2) && l2.has_edge(2, 4) && l2.has_edge(4, 3) && l2.has_edge(3, 1));

        let l3 = Graph::ladder(3).unwrap();
        assert_eq!((l3.num_vertices(), l3.num_edges()), (6, 7));
        let p3 = Graph::prism(3).unwrap();
        assert_eq!((p3.num_vertices(), p3.num_edges()), (6, 9));
        assert!(Graph::prism(2).is_err());
        assert!(Graph::ladder(0).is_err());

        for n in 1..30 {
            let l = Graph::ladder(n).unwrap();
            assert_eq!(l.num_edges(), 3 * n - 2);
            assert_symmetric(&l);
            if n >= 3 {
                let p = Graph::prism(n).unwrap();
                assert_eq!(p.num_edges(), 3 * n);
                assert!(p.degree_sequence().iter().all(|&d| d == 3));
                assert_symmetric(&p);
            }
        }
    }

    #[test]
    fn product_matches_ladder_flattening() {
        let p2 = Graph::path(2).unwrap();
        for n in 1..15 {
            let prod = Graph::cartesian_product(&p2, &Graph::path(n).unwrap());
            let ladder = Graph::ladder(n).unwrap();
            assert_eq!(
                prod.edges().collect::<Vec<_>>(),
                ladder.edges().collect::<Vec<_>>()
            );
        }
        for n in 3..15 {
            let prod = Graph::cartesian_product(&p2, &Graph::cycle(n).unwrap());
            let prism = Graph::prism(n).unwrap();
            assert_eq!(
                prod.edges().collect::<Vec<_>>(),
                prism.edges().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn product_small_cases() {
        let p2 = Graph::path(2).unwrap();
        let c4 = Graph::cartesian_product(&p2, &p2);
        assert_eq!((c4.num_vertices(), c4.num_edges()), (4, 4));
        assert!(c4.degree_sequence().iter().all(|&d| d == 2));
        // connected 2-regular graph on 4 vertices is C4
        assert!(c4.has_edge(1, 2) && c4.has_edge(1, 3) && c4.has_edge(2, 4) && c4.has_edge(3, 4));

        let h = Graph::cycle(7).unwrap();
        let p1 = Graph::path(1).unwrap();
        let prod = Graph::cartesian_product(&p1, &h);
        assert_eq!(
            prod.edges().collect::<Vec<_>>(),
            h.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn neighborhoods() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.closed_neighborhood(3).unwrap().members(), &[2, 3, 4]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.closed_neighborhood(1).unwrap().members(), &[1, 2, 4]);
        let l4 = Graph::ladder(4).unwrap();
        let x1 = l4.vertex_id(VertexRef::x(1)).unwrap();
        let expected = VertexSet::new(
            [VertexRef::x(1), VertexRef::x(2), VertexRef::y(1)].map(|r| l4.vertex_id(r).unwrap()),
        );
        assert_eq!(l4.closed_neighborhood(x1).unwrap(), expected);
        assert_eq!(l4.open_neighborhood(x1).unwrap().members(), &[2, 5]);
        assert!(matches!(
            p5.closed_neighborhood(6),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(p5.closed_neighborhood(0).is_err());
    }

    #[test]
    fn domination_predicate() {
        let p3 = Graph::path(3).unwrap();
        assert!(p3.is_dominating(&VertexSet::new([2])).unwrap());
        assert!(!p3.is_dominating(&VertexSet::new([1])).unwrap());

        let l3 = Graph::ladder(3).unwrap();
        let s = VertexSet::new([
            l3.vertex_id(VertexRef::x(2)).unwrap(),
            l3.vertex_id(VertexRef::y(2)).unwrap(),
        ]);
        assert!(l3.is_dominating(&s).unwrap());
        let l4 = Graph::ladder(4).unwrap();
        let s = VertexSet::new([
            l4.vertex_id(VertexRef::x(2)).unwrap(),
            l4.vertex_id(VertexRef::y(2)).unwrap(),
        ]);
        assert!(!l4.is_dominating(&s).unwrap());

        assert!(matches!(
            p3.is_dominating(&VertexSet::new([4])),
            Err(Error::VertexOutOfRange { .. })
        ));
        for g in [p3, l3, l4, Graph::prism(5).unwrap()] {
            assert!(g.is_dominating(&g.vertices().collect()).unwrap());
        }
    }

    #[test]
    fn vertex_refs() {
        let l5 = Graph::ladder(5).unwrap();
        assert_eq!(l5.vertex_id("x3".parse().unwrap()).unwrap(), 3);
        assert_eq!(l5.vertex_id("y3".parse().unwrap()).unwrap(), 8);
        assert_eq!(l5.vertex_ref(8), VertexRef::y(3));
        assert!(l5.vertex_id(VertexRef::x(6)).is_err());
        assert!(l5.vertex_id(VertexRef::Plain(2)).is_err());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.vertex_id("4".parse().unwrap()).unwrap(), 4);
        assert!(c5.vertex_id(VertexRef::x(1)).is_err());
        for bad in ["", "x", "z3", "x0", "0", "x-1", "3a"] {
            assert!(bad.parse::<VertexRef>().is_err(), "{bad}");
        }
        for id in l5.vertices() {
            assert_eq!(l5.vertex_id(l5.vertex_ref(id)).unwrap(), id);
            assert_eq!(
                l5.vertex_ref(id).to_string().parse::<VertexRef>().unwrap(),
                l5.vertex_ref(id)
            );
        }
    }

    #[test]
    fn edge_list_format() {
        let g = Graph::parse_edge_list("4 3\n1 2\n2 3\n\n3 4\n").unwrap();
        assert_eq!(g, Graph::path(4).unwrap());

        let errs = [
            "",
            "0 0\n",
            "3 1\n2 2\n",
            "3 2\n1 2\n1 2\n",
            "3 1\n2 1\n",
            "3 1\n1 4\n",
            "3 2\n1 2\n",
            "3 1\n1 2 3\n",
            "3 1\n1 b\n",
        ];
        for text in errs {
            assert!(Graph::parse_edge_list(text).is_err(), "{text:?}");
        }
        assert!(matches!(
            Graph::parse_edge_list("0 0"),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 4)]).is_err());
        assert!(matches!(Graph::from_edges(0, []), Err(Error::EmptyGraph)));
    }
}
