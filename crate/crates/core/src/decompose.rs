//! Core / semi-core decomposition.
//!
//! With `X` the set of maximum-degree vertices, the core is `G[X]` and the
//! semi-core is `H = G[X ∪ N(X)]`. Every remaining vertex has no neighbour in
//! `X`; those vertices are listed in ascending id order and later re-inserted
//! one at a time by the extension engine.

use crate::graph::{Graph, InducedSubgraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiCoreDecomposition {
    pub max_degree: usize,
    /// `X`, ascending.
    pub core_vertices: Vec<Vertex>,
    pub semi_core: InducedSubgraph,
    /// `V ∖ (X ∪ N(X))`, ascending.
    pub excluded_order: Vec<Vertex>,
}

impl SemiCoreDecomposition {
    /// Decomposes `g`. An edgeless graph has `Δ = 0`, so every vertex is in
    /// `X`, the semi-core is `g` itself and nothing is excluded.
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let max_degree = g.max_degree();
        let core_vertices: Vec<Vertex> = (0..n).filter(|&u| g.degree(u) == max_degree).collect();

        let mut in_semi_core = vec![false; n];
        for &x in &core_vertices {
            in_semi_core[x] = true;
            for v in g.neighbours(x) {
                in_semi_core[v] = true;
            }
        }
        let (kept, excluded_order): (Vec<Vertex>, Vec<Vertex>) =
            (0..n).partition(|&u| in_semi_core[u]);
        let semi_core = g
            .induced_subgraph(&kept)
            .expect("semi-core vertices come from the graph");

        SemiCoreDecomposition {
            max_degree,
            core_vertices,
            semi_core,
            excluded_order,
        }
    }

    /// A decomposition with an empty semi-core that queues every vertex for
    /// extension. Valid input to the extension engine whenever every vertex
    /// has degree at most `k - 1`, which turns extension into a from-scratch
    /// `k`-edge colouring.
    pub fn all_excluded(g: &Graph) -> Self {
        SemiCoreDecomposition {
            max_degree: g.max_degree(),
            core_vertices: Vec::new(),
            semi_core: g.induced_subgraph(&[]).expect("empty set"),
            excluded_order: (0..g.vertex_count()).collect(),
        }
    }

    /// `p = |X|`.
    pub fn core_size(&self) -> usize {
        self.core_vertices.len()
    }

    /// `q = |X ∪ N(X)|`.
    pub fn semi_core_size(&self) -> usize {
        self.semi_core.graph.vertex_count()
    }

    pub fn semi_core_edges(&self) -> usize {
        self.semi_core.graph.edge_count()
    }
}

/// Upper bound `⌊k²p/2⌋` on the semi-core edge count when `Δ = k`: the `p`
/// core vertices contribute at most `kp` edge endpoints and the at most `kp`
/// vertices of `N(X) ∖ X` contribute at most `k - 1` each.
pub fn semi_core_edge_bound(k: usize, p: usize) -> usize {
    k * k * p / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_tail() -> Graph {
        Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn path_is_its_own_semi_core() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = SemiCoreDecomposition::new(&g);
        assert_eq!(d.max_degree, 2);
        assert_eq!(d.core_vertices, vec![1, 2]);
        assert_eq!(d.semi_core.graph, g);
        assert!(d.excluded_order.is_empty());
    }

    #[test]
    fn star_with_tail() {
        let d = SemiCoreDecomposition::new(&star_tail());
        assert_eq!(d.max_degree, 3);
        assert_eq!(d.core_vertices, vec![0]);
        assert_eq!(d.semi_core.to_parent, vec![0, 1, 2, 3]);
        assert_eq!(d.semi_core.graph.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(d.excluded_order, vec![4, 5]);
        assert_eq!(
            (d.core_size(), d.semi_core_size(), d.semi_core_edges()),
            (1, 4, 3)
        );
    }

    #[test]
    fn complete_graph_is_all_core() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = SemiCoreDecomposition::new(&g);
        assert_eq!(d.core_vertices, vec![0, 1, 2, 3]);
        assert_eq!(d.semi_core.graph, g);
        assert!(d.excluded_order.is_empty());
    }

    #[test]
    fn edgeless_is_degenerate() {
        let g = Graph::empty(3);
        let d = SemiCoreDecomposition::new(&g);
        assert_eq!(d.max_degree, 0);
        assert_eq!(d.core_vertices, vec![0, 1, 2]);
        assert_eq!(d.semi_core.graph, g);
        assert!(d.excluded_order.is_empty());
    }

    #[test]
    fn all_excluded_queues_every_vertex() {
        let d = SemiCoreDecomposition::all_excluded(&star_tail());
        assert_eq!(d.semi_core_size(), 0);
        assert_eq!(d.core_size(), 0);
        assert_eq!(d.excluded_order, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn edge_bound_values() {
        assert_eq!(semi_core_edge_bound(3, 1), 4);
        assert_eq!(semi_core_edge_bound(3, 2), 9);
        assert_eq!(semi_core_edge_bound(1, 3), 1);
    }
}
