use crate::error::{Error, Result};
use crate::graph::{strip_id, Graph, Row, VertexSet};

/// Component sizes of the subgraph induced by `D` on each row of a strip,
/// each side sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentProfile {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl ComponentProfile {
    /// Largest component over both sides (0 for an empty set).
    pub fn alpha(&self) -> usize {
        self.x.iter().chain(&self.y).copied().max().unwrap_or(0)
    }

    /// How many components, over both sides, have exactly `size` vertices.
    pub fn count_of(&self, size: usize) -> usize {
        self.x.iter().chain(&self.y).filter(|&&s| s == size).count()
    }

    pub fn total(&self) -> usize {
        self.x.iter().chain(&self.y).sum()
    }
}

pub fn component_profile(g: &Graph, d: &VertexSet) -> Result<ComponentProfile> {
    let n = g.layout().strip_order().ok_or(Error::NotStrip)?;
    if let Some(v) = d.iter().find(|&v| v == 0 || v > g.num_vertices()) {
        return Err(Error::out_of_range(v, g.num_vertices()));
    }
    let side = |row: Row| {
        let members: Vec<usize> = (1..=n)
            .map(|c| strip_id(n, row, c))
            .filter(|&v| d.contains(v))
            .collect();
        let mut seen = vec![false; g.num_vertices() + 1];
        let mut sizes = Vec::new();
        for &start in &members {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut size = 0;
            while let Some(v) = stack.pop() {
                size += 1;
                for &w in g.neighbors(v) {
                    if !seen[w] && d.contains(w) && same_row(n, v, w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    };
    Ok(ComponentProfile {
        x: side(Row::X),
        y: side(Row::Y),
    })
}

fn same_row(n: usize, u: usize, v: usize) -> bool {
    (u <= n) == (v <= n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexRef;

    fn set(g: &Graph, refs: impl IntoIterator<Item = VertexRef>) -> VertexSet {
        refs.into_iter().map(|r| g.vertex_id(r).unwrap()).collect()
    }

    #[test]
    fn rung_pair_is_two_singletons() {
        let g = Graph::ladder(3).unwrap();
        let p = component_profile(&g, &set(&g, [VertexRef::x(2), VertexRef::y(2)])).unwrap();
        assert_eq!(
            p,
            ComponentProfile {
                x: vec![1],
                y: vec![1]
            }
        );
        assert_eq!(p.alpha(), 1);
    }

    #[test]
    fn spaced_selection_is_all_singletons() {
        let g = Graph::prism(8).unwrap();
        let d = set(
            &g,
            (1..=8)
                .filter(|i| i % 4 == 1)
                .map(VertexRef::x)
                .chain((1..=8).filter(|j| j % 4 == 3).map(VertexRef::y)),
        );
        assert!(g.is_dominating(&d).unwrap());
        let p = component_profile(&g, &d).unwrap();
        assert_eq!(p.alpha(), 1);
        assert_eq!(p.total(), d.len());
    }

    #[test]
    fn wraparound_joins_components_on_prisms_only() {
        let prism = Graph::prism(10).unwrap();
        let ladder = Graph::ladder(10).unwrap();
        let refs = [VertexRef::x(10), VertexRef::x(1), VertexRef::x(5)];
        let p = component_profile(&prism, &set(&prism, refs)).unwrap();
        assert_eq!(
            p,
            ComponentProfile {
                x: vec![1, 2],
                y: vec![]
            }
        );
        let p = component_profile(&ladder, &set(&ladder, refs)).unwrap();
        assert_eq!(
            p,
            ComponentProfile {
                x: vec![1, 1, 1],
                y: vec![]
            }
        );
    }

    #[test]
    fn two_adjacent_pairs_on_one_side() {
        // a γ-set of P2 □ C10 whose induced subgraph has two 2-vertex components
        let g = Graph::prism(10).unwrap();
        let d = set(
            &g,
            [
                VertexRef::x(1),
                VertexRef::x(2),
                VertexRef::y(4),
                VertexRef::x(6),
                VertexRef::x(7),
                VertexRef::y(9),
            ],
        );
        assert!(g.is_dominating(&d).unwrap());
        assert_eq!(d.len(), 6);
        let p = component_profile(&g, &d).unwrap();
        assert_eq!(p.count_of(2), 2);
        assert_eq!(p.x, vec![2, 2]);
        assert_eq!(p.total(), 6);
    }

    #[test]
    fn errors() {
        let g = Graph::cycle(6).unwrap();
        assert!(matches!(
            component_profile(&g, &VertexSet::new([1])),
            Err(Error::NotStrip)
        ));
        let g = Graph::ladder(3).unwrap();
        assert!(component_profile(&g, &VertexSet::new([7])).is_err());
    }
}
