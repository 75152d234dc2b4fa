//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Edges are stored once, canonically as `(min, max)`, in lexicographic
//! order. An edge's position in that order is its [`EdgeId`]; colourings are
//! indexed by it.

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} is not in a graph on {n} vertices")]
    UnknownVertex { vertex: Vertex, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(Vertex, Vertex)>,
    /// Per-vertex `(neighbour, edge id)` pairs sorted by neighbour.
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and repeated edges (in either orientation).
    pub fn new(vertex_count: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    u,
                    v,
                    n: vertex_count,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(vertex_count, edges))
    }

    /// `edges` must already be canonical, sorted and duplicate free.
    fn from_sorted_edges(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        // Pushing in lexicographic edge order leaves every list sorted: for
        // vertex x, edges (y, x) with y < x come before edges (x, z).
        debug_assert!(adjacency
            .iter()
            .all(|list| list.windows(2).all(|w| w[0].0 < w[1].0)));
        Graph { edges, adjacency }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted_edges(vertex_count, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adjacency[u].len()
    }

    /// Maximum degree; 0 for edgeless and empty graphs.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges in canonical order, each as `(min, max)`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs of `u`, ascending by neighbour.
    pub fn incident(&self, u: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[u]
    }

    pub fn neighbours(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[u].iter().map(|&(v, _)| v)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// The subgraph induced by `vertices` (duplicates ignored), relabelled
    /// to `0..|S|` in ascending order of the original ids.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        let n = self.vertex_count();
        let mut to_parent = vertices.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        if let Some(&bad) = to_parent.iter().find(|&&v| v >= n) {
            return Err(GraphError::UnknownVertex { vertex: bad, n });
        }
        // Walking kept vertices in ascending order and their larger kept
        // neighbours in ascending order yields the child's canonical edge
        // order directly, touching only edges incident to the subset.
        let mut edges = Vec::new();
        let mut edge_to_parent = Vec::new();
        for (lu, &u) in to_parent.iter().enumerate() {
            for &(v, id) in &self.adjacency[u] {
                if v > u {
                    if let Ok(lv) = to_parent.binary_search(&v) {
                        edges.push((lu, lv));
                        edge_to_parent.push(id);
                    }
                }
            }
        }
        Ok(InducedSubgraph {
            graph: Graph::from_sorted_edges(to_parent.len(), edges),
            to_parent,
            edge_to_parent,
        })
    }
}

/// An induced subgraph together with the maps back to its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_parent[i]` is the parent id of local vertex `i`; strictly ascending.
    pub to_parent: Vec<Vertex>,
    /// `edge_to_parent[e]` is the parent edge id of local edge `e`.
    pub edge_to_parent: Vec<EdgeId>,
}

impl InducedSubgraph {
    pub fn local_id(&self, parent: Vertex) -> Option<Vertex> {
        self.to_parent.binary_search(&parent).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle() {
        let g = k3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(1, 0)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.edge_between(1, 0), Some(0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 3, n: 3 })
        ));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn max_degree_cases() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.max_degree(), 4);
        assert_eq!(Graph::empty(5).max_degree(), 0);
        assert_eq!(Graph::empty(0).max_degree(), 0);
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(5, &[(3, 1), (0, 4), (2, 0), (1, 0), (4, 3)]).unwrap();
        for u in 0..g.vertex_count() {
            let ns: Vec<_> = g.neighbours(u).collect();
            assert!(ns.windows(2).all(|w| w[0] < w[1]));
            for &(v, e) in g.incident(u) {
                assert!(g.neighbours(v).any(|x| x == u));
                let (a, b) = g.endpoints(e);
                assert_eq!((a, b), (u.min(v), u.max(v)));
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        let g = k3();
        let sub = g.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub.graph.edges(), &[(0, 1)]);
        assert_eq!(sub.edge_to_parent, vec![0]);

        let whole = g.induced_subgraph(&[2, 1, 0]).unwrap();
        assert_eq!(whole.graph, g);

        let star_tail = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        let sub = star_tail.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.graph.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(sub.graph.max_degree(), 3);

        let sub = star_tail.induced_subgraph(&[5, 3, 4]).unwrap();
        assert_eq!(sub.to_parent, vec![3, 4, 5]);
        assert_eq!(sub.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(sub.edge_to_parent, vec![3, 4]);
        assert_eq!(sub.local_id(4), Some(1));
        assert_eq!(sub.local_id(0), None);

        assert_eq!(
            g.induced_subgraph(&[0, 7]),
            Err(GraphError::UnknownVertex { vertex: 7, n: 3 })
        );
    }
}
