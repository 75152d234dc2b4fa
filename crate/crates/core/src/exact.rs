//! Exhaustive search for a `k`-edge colouring of a small graph.
//!
//! Edges are coloured in canonical order, trying the free colours of each
//! edge smallest first. After every assignment the uncoloured edges at both
//! endpoints are checked for an empty `F(u) ∩ F(v)`, which cuts the branch.
//! The first edge only tries colour 1, since colour classes are
//! interchangeable. The search is complete, so `None` proves that no
//! `k`-edge colouring exists.

use crate::colouring::{Colour, PartialEdgeColouring};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial assignments visited, including the empty root.
    pub nodes: u64,
}

pub fn solve_exact(h: &Graph, k: usize) -> Option<PartialEdgeColouring> {
    solve_exact_with_stats(h, k).0
}

pub fn count_search_nodes(h: &Graph, k: usize) -> u64 {
    solve_exact_with_stats(h, k).1.nodes
}

pub fn solve_exact_with_stats(h: &Graph, k: usize) -> (Option<PartialEdgeColouring>, SearchStats) {
    let mut search = Search {
        graph: h,
        colouring: PartialEdgeColouring::new(h, k),
        stats: SearchStats { nodes: 1 },
    };
    // A vertex of degree above k can never be satisfied; the forward check
    // below would also find this, only later.
    let found = h.max_degree() <= k && search.extend(0);
    let stats = search.stats;
    (found.then_some(search.colouring), stats)
}

struct Search<'g> {
    graph: &'g Graph,
    colouring: PartialEdgeColouring,
    stats: SearchStats,
}

impl Search<'_> {
    fn extend(&mut self, e: EdgeId) -> bool {
        let g = self.graph;
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.endpoints(e);
        let candidates = self.colouring.common_missing(u, v);
        let first_only = e == 0;
        for colour in candidates.iter() {
            if first_only && colour != Colour::new(1).unwrap() {
                break;
            }
            self.colouring
                .assign(g, e, colour)
                .expect("candidate is free at both endpoints");
            self.stats.nodes += 1;
            if self.neighbourhood_feasible(u, v) && self.extend(e + 1) {
                return true;
            }
            self.colouring.uncolour(g, e);
        }
        false
    }

    fn neighbourhood_feasible(&self, u: usize, v: usize) -> bool {
        let g = self.graph;
        [u, v].into_iter().all(|x| {
            g.incident(x).iter().all(|&(y, f)| {
                self.colouring.colour(f).is_some()
                    || !self.colouring.common_missing(x, y).is_empty()
            })
        })
    }
}
