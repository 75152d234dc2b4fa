//! The full decision pipeline and the chromatic-index wrapper.
//!
//! `solve(g, k)` first compares `Δ` with `k`:
//!
//! * `Δ > k`: no colouring, a vertex needs more than `k` colours.
//! * `Δ < k`: always colourable; the witness is built by the extension engine
//!   from an empty semi-core, which works because every vertex then has
//!   degree at most `k - 1`.
//! * `Δ = k`: the graph is colourable iff its semi-core is, so the semi-core
//!   is solved exactly and the result extended to the whole graph.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::colouring::{Colour, PartialEdgeColouring};
use crate::decompose::{semi_core_edge_bound, SemiCoreDecomposition};
use crate::exact;
use crate::extension::{extend_traced, ExtensionStats, TraceEvent};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shortcut {
    None,
    DeltaBelowK,
    DeltaAboveK,
}

impl fmt::Display for Shortcut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shortcut::None => "none",
            Shortcut::DeltaBelowK => "delta_le_k_minus_1",
            Shortcut::DeltaAboveK => "delta_ge_k_plus_1",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub decompose: Duration,
    pub semicore: Duration,
    pub extend: Duration,
    pub total: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub k: usize,
    pub colourable: bool,
    pub witness: Option<PartialEdgeColouring>,
    pub delta: usize,
    /// Number of maximum-degree vertices.
    pub core_size: usize,
    /// Semi-core vertex and edge counts; only set when the semi-core was built.
    pub semi_core_size: Option<usize>,
    pub semi_core_edges: Option<usize>,
    pub shortcut: Shortcut,
    pub search_nodes: Option<u64>,
    pub extension: Option<ExtensionStats>,
    pub timings: PhaseTimings,
}

impl SolveReport {
    /// Everything except timings, on one line; stable across runs.
    pub fn summary(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        format!(
            "k={} decision={} delta={} p={} q={} semi_core_edges={} shortcut={} nodes={}",
            self.k,
            if self.colourable { "YES" } else { "NO" },
            self.delta,
            self.core_size,
            opt(self.semi_core_size),
            opt(self.semi_core_edges),
            self.shortcut,
            self.search_nodes
                .map_or_else(|| "-".to_string(), |v| v.to_string()),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("the chromatic index of an edgeless graph is not defined here")]
    Edgeless,
}

pub fn solve(g: &Graph, k: usize) -> SolveReport {
    solve_traced(g, k, &mut |_| {})
}

/// [`solve`] with a callback receiving every extension step.
pub fn solve_traced(g: &Graph, k: usize, trace: &mut dyn FnMut(&TraceEvent)) -> SolveReport {
    let start = Instant::now();
    let delta = g.max_degree();
    let core_size = (0..g.vertex_count())
        .filter(|&u| g.degree(u) == delta)
        .count();
    let mut report = SolveReport {
        k,
        colourable: false,
        witness: None,
        delta,
        core_size,
        semi_core_size: None,
        semi_core_edges: None,
        shortcut: Shortcut::None,
        search_nodes: None,
        extension: None,
        timings: PhaseTimings::default(),
    };

    if delta > k {
        report.shortcut = Shortcut::DeltaAboveK;
    } else if delta < k {
        report.shortcut = Shortcut::DeltaBelowK;
        let t = Instant::now();
        let dec = SemiCoreDecomposition::all_excluded(g);
        report.timings.decompose = t.elapsed();

        let t = Instant::now();
        let empty = PartialEdgeColouring::new(&dec.semi_core.graph, k);
        let (witness, stats) = extend_traced(g, &dec, &empty, k, trace)
            .unwrap_or_else(|e| panic!("extension failed: {e}"));
        report.timings.extend = t.elapsed();
        report.colourable = true;
        report.witness = Some(witness);
        report.extension = Some(stats);
    } else {
        let t = Instant::now();
        let dec = SemiCoreDecomposition::new(g);
        report.timings.decompose = t.elapsed();
        let h = &dec.semi_core.graph;
        report.semi_core_size = Some(dec.semi_core_size());
        report.semi_core_edges = Some(h.edge_count());
        assert!(
            h.edge_count() <= semi_core_edge_bound(k, dec.core_size()),
            "semi-core has {} edges, above k²p/2 = {}",
            h.edge_count(),
            semi_core_edge_bound(k, dec.core_size())
        );

        let t = Instant::now();
        let (found, search) = exact::solve_exact_with_stats(h, k);
        report.timings.semicore = t.elapsed();
        report.search_nodes = Some(search.nodes);

        if let Some(semi) = found {
            let t = Instant::now();
            let (witness, stats) = extend_traced(g, &dec, &semi, k, trace)
                .unwrap_or_else(|e| panic!("extension failed: {e}"));
            report.timings.extend = t.elapsed();
            report.colourable = true;
            report.witness = Some(witness);
            report.extension = Some(stats);
        }
    }
    report.timings.total = start.elapsed();
    report
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChromaticIndex {
    pub value: usize,
    pub delta: usize,
    pub witness: PartialEdgeColouring,
}

impl ChromaticIndex {
    /// Class 1 when the index equals `Δ`, class 2 when it is `Δ + 1`.
    pub fn class(&self) -> u8 {
        if self.value == self.delta {
            1
        } else {
            2
        }
    }
}

/// Tries `Δ` colours and falls back to `Δ + 1`, which always succeeds.
pub fn chromatic_index(g: &Graph) -> Result<ChromaticIndex, SolveError> {
    if g.edge_count() == 0 {
        return Err(SolveError::Edgeless);
    }
    let delta = g.max_degree();
    let first = solve(g, delta);
    let (value, report) = if first.colourable {
        (delta, first)
    } else {
        (delta + 1, solve(g, delta + 1))
    };
    let witness = report.witness.expect("Δ + 1 colours always suffice");
    Ok(ChromaticIndex {
        value,
        delta,
        witness,
    })
}

/// Plain exhaustive backtracking over all edges of `g`, for cross-checking
/// the pipeline on small graphs. Shares nothing with the solver beyond the
/// graph type: conflicts are tracked in a per-vertex colour table, and each
/// edge tries at most one colour above the largest used so far (colour
/// classes are interchangeable).
pub fn oracle_solve(g: &Graph, k: usize) -> Option<PartialEdgeColouring> {
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut used = vec![vec![false; k + 1]; n];
    let mut colour = vec![0usize; m];

    fn go(
        e: usize,
        opened: usize,
        g: &Graph,
        k: usize,
        used: &mut [Vec<bool>],
        colour: &mut [usize],
    ) -> bool {
        if e == colour.len() {
            return true;
        }
        let (u, v) = g.endpoints(e);
        for c in 1..=k.min(opened + 1) {
            if used[u][c] || used[v][c] {
                continue;
            }
            used[u][c] = true;
            used[v][c] = true;
            colour[e] = c;
            if go(e + 1, opened.max(c), g, k, used, colour) {
                return true;
            }
            used[u][c] = false;
            used[v][c] = false;
        }
        false
    }

    if !go(0, 0, g, k, &mut used, &mut colour) {
        return None;
    }
    let assignment = colour.iter().map(|&c| Colour::new(c as u32)).collect();
    Some(PartialEdgeColouring::from_assignment(g, k, assignment).expect("colours within 1..=k"))
}
