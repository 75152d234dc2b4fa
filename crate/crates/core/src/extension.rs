//! Extending a `k`-edge colouring of the semi-core to the whole graph.
//!
//! The excluded vertices `u_1, u_2, ...` are added one at a time. When `u_i`
//! is added, its edges back into the current vertex set are uncoloured; call
//! their far ends the working set `W`. They are coloured one per step while
//! two properties hold, where `F(u_i v) = F(u_i) ∩ F(v)`:
//!
//! 1. `F(u_i v)` is nonempty for every `v ∈ W`;
//! 2. at most one `v ∈ W` has `|F(u_i v)| = 1`.
//!
//! Each step is either a direct assignment (case 1) or a Kempe swap from the
//! vertex `w ∈ W` with the smallest `F(u_i w)` followed by colouring `u_i w`
//! (case 2). Both properties, the starting guarantee `|F(v)| ≥ 2`, and the
//! counting bounds that make case 2 possible are checked at every step and
//! reported as [`ExtensionError::InvariantBreach`] if they ever fail.
//!
//! All choices break ties toward the smallest colour or vertex id.

use std::fmt;

use thiserror::Error;

use crate::colouring::{Colour, ColourSet, PartialEdgeColouring, Violation};
use crate::decompose::SemiCoreDecomposition;
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("semi-core colouring uses {got} colours, expected palette of {expected}")]
    PaletteMismatch { expected: usize, got: usize },
    #[error("semi-core colouring is not a complete proper colouring: {0:?}")]
    SemiCoreNotProper(Violation),
    #[error("vertex {vertex} outside the core has degree {degree}, needs at most {}", .k.saturating_sub(1))]
    DegreeTooHigh {
        vertex: Vertex,
        degree: usize,
        k: usize,
    },
    #[error("extension invariant broken at vertex {vertex}: {detail}")]
    InvariantBreach { vertex: Vertex, detail: String },
}

/// One line of step trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Begin {
        vertex: Vertex,
        working: Vec<Vertex>,
    },
    Case1 {
        vertex: Vertex,
        neighbour: Vertex,
        colour: Colour,
    },
    Case2 {
        vertex: Vertex,
        w: Vertex,
        a: Colour,
        b: Colour,
        path_end: Vertex,
        path_len: usize,
    },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Begin { vertex, working } => {
                write!(f, "extend {vertex}: W={working:?}")
            }
            TraceEvent::Case1 {
                vertex,
                neighbour,
                colour,
            } => write!(f, "  case1 ({vertex},{neighbour}) <- {colour}"),
            TraceEvent::Case2 {
                vertex,
                w,
                a,
                b,
                path_end,
                path_len,
            } => write!(
                f,
                "  case2 swap {a}/{b} from {w} (len {path_len}, ends at {path_end}); ({vertex},{w}) <- {b}"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtensionStats {
    pub vertices: usize,
    pub case1_steps: usize,
    pub case2_steps: usize,
    pub swapped_edges: usize,
    /// Number of times the invariants were evaluated (and held).
    pub checkpoints: usize,
}

/// The vertex being added and its uncoloured back-edges, ascending by
/// neighbour id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionState {
    pub active: Vertex,
    pub working: Vec<(Vertex, EdgeId)>,
}

/// `F(u_i v)` for one member of `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub vertex: Vertex,
    pub free: ColourSet,
}

/// Case 1 selection. Returns the smallest colour `ℓ` occurring in some
/// `F(u_i v)` such that at most one set of size ≤ 2 contains it, paired with
/// the smallest set containing `ℓ` (ties to the smaller vertex id).
/// `candidates` must be ascending by vertex.
pub fn select_case1(candidates: &[Candidate]) -> Option<(Colour, Vertex)> {
    let mut union = ColourSet::empty();
    for c in candidates {
        union.union_with(&c.free);
    }
    let choice = union.iter().find_map(|colour| {
        let small_holders = candidates
            .iter()
            .filter(|c| c.free.len() <= 2 && c.free.contains(colour))
            .count();
        if small_holders > 1 {
            return None;
        }
        candidates
            .iter()
            .filter(|c| c.free.contains(colour))
            .min_by_key(|c| c.free.len())
            .map(|c| (colour, c.vertex))
    });
    choice
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Case2Choice {
    pub w: Vertex,
    pub a: Colour,
    pub b: Colour,
}

/// Case 2 selection: `w` minimises `|F(u_i w)|`, `a = min F(u_i w)` and
/// `b = min (F(u_i) ∖ ∪ F(u_i v))`. Fails with a diagnostic when the counting
/// bounds `|∪ F(u_i v)| ≤ |W| < |F(u_i)|` do not hold.
pub fn select_case2(
    active_missing: &ColourSet,
    candidates: &[Candidate],
) -> Result<Case2Choice, String> {
    let mut union = ColourSet::empty();
    for c in candidates {
        union.union_with(&c.free);
    }
    let w_size = candidates.len();
    if union.len() > w_size {
        return Err(format!(
            "case 2 with |∪F(u_i v)| = {} > |W| = {w_size}",
            union.len()
        ));
    }
    if active_missing.len() < w_size + 1 {
        return Err(format!(
            "case 2 with |F(u_i)| = {} < |W| + 1 = {}",
            active_missing.len(),
            w_size + 1
        ));
    }
    let b = active_missing
        .difference(&union)
        .min()
        .ok_or_else(|| "no colour in F(u_i) outside ∪F(u_i v)".to_string())?;
    let best = candidates
        .iter()
        .min_by_key(|c| c.free.len())
        .ok_or_else(|| "case 2 with empty W".to_string())?;
    let a = best
        .free
        .min()
        .ok_or_else(|| format!("F(u_i {}) is empty", best.vertex))?;
    Ok(Case2Choice {
        w: best.vertex,
        a,
        b,
    })
}

/// Both extension properties over the current candidates.
fn check_properties(candidates: &[Candidate]) -> Result<(), String> {
    if let Some(c) = candidates.iter().find(|c| c.free.is_empty()) {
        return Err(format!("F(u_i {}) is empty", c.vertex));
    }
    let singletons: Vec<Vertex> = candidates
        .iter()
        .filter(|c| c.free.len() == 1)
        .map(|c| c.vertex)
        .collect();
    if singletons.len() > 1 {
        return Err(format!(
            "|F(u_i v)| = 1 for more than one v: {singletons:?}"
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Case1,
    Case2,
}

/// Mutable extension context: the colouring of `G[V_i]` plus membership of
/// the current vertex set `V_i`.
pub struct Extender<'g> {
    graph: &'g Graph,
    colouring: PartialEdgeColouring,
    in_prefix: Vec<bool>,
    stats: ExtensionStats,
}

impl<'g> Extender<'g> {
    /// `colouring` is over `graph`'s edges; only edges between admitted
    /// vertices may be coloured.
    pub fn new(graph: &'g Graph, colouring: PartialEdgeColouring) -> Self {
        Extender {
            graph,
            colouring,
            in_prefix: vec![false; graph.vertex_count()],
            stats: ExtensionStats::default(),
        }
    }

    pub fn admit(&mut self, v: Vertex) {
        self.in_prefix[v] = true;
    }

    pub fn colouring(&self) -> &PartialEdgeColouring {
        &self.colouring
    }

    pub fn stats(&self) -> ExtensionStats {
        self.stats
    }

    pub fn into_parts(self) -> (PartialEdgeColouring, ExtensionStats) {
        (self.colouring, self.stats)
    }

    fn breach(&self, vertex: Vertex, detail: impl Into<String>) -> ExtensionError {
        ExtensionError::InvariantBreach {
            vertex,
            detail: detail.into(),
        }
    }

    /// Admits `u` and collects its working set.
    pub fn begin_vertex(&mut self, u: Vertex) -> Result<ExtensionState, ExtensionError> {
        let k = self.colouring.palette_size();
        let degree = self.graph.degree(u);
        if degree + 1 > k {
            return Err(ExtensionError::DegreeTooHigh {
                vertex: u,
                degree,
                k,
            });
        }
        if self.in_prefix[u] {
            return Err(self.breach(u, "vertex added twice"));
        }
        self.admit(u);
        let working: Vec<(Vertex, EdgeId)> = self
            .graph
            .incident(u)
            .iter()
            .copied()
            .filter(|&(v, _)| self.in_prefix[v])
            .collect();
        if let Some(&(_, e)) = working
            .iter()
            .find(|&&(_, e)| self.colouring.colour(e).is_some())
        {
            return Err(self.breach(u, format!("back-edge {e} already coloured")));
        }
        // Every neighbour lies outside the core, so has degree ≤ k - 1 with
        // one edge (to u) still uncoloured.
        if let Some(&(v, _)) = working
            .iter()
            .find(|&&(v, _)| self.colouring.missing_colours(v).len() < 2)
        {
            return Err(self.breach(u, format!("neighbour {v} starts with |F(v)| < 2")));
        }
        Ok(ExtensionState { active: u, working })
    }

    /// `F(u_i v)` for each `v ∈ W`, ascending by `v`.
    pub fn candidates(&self, state: &ExtensionState) -> Vec<Candidate> {
        state
            .working
            .iter()
            .map(|&(v, _)| Candidate {
                vertex: v,
                free: self.colouring.common_missing(state.active, v),
            })
            .collect()
    }

    pub fn try_case1(&self, state: &ExtensionState) -> Option<(Colour, Vertex)> {
        select_case1(&self.candidates(state))
    }

    fn checkpoint(&mut self, state: &ExtensionState) -> Result<Vec<Candidate>, ExtensionError> {
        let candidates = self.candidates(state);
        check_properties(&candidates).map_err(|d| self.breach(state.active, d))?;
        self.debug_check_local(state);
        self.stats.checkpoints += 1;
        Ok(candidates)
    }

    /// Cache and local properness checks around the active vertex; too costly
    /// to run in release builds on large graphs.
    fn debug_check_local(&self, state: &ExtensionState) {
        if cfg!(debug_assertions) {
            let g = self.graph;
            let around = std::iter::once(state.active).chain(state.working.iter().map(|&(v, _)| v));
            for x in around {
                debug_assert_eq!(
                    self.colouring.missing_colours(x),
                    &self.colouring.recompute_missing(g, x),
                    "stale F({x})"
                );
                let mut seen = ColourSet::empty();
                for &(_, e) in g.incident(x) {
                    if let Some(c) = self.colouring.colour(e) {
                        debug_assert!(!seen.contains(c), "colour {c} repeated at {x}");
                        seen.insert(c);
                    }
                }
            }
        }
    }

    fn colour_back_edge(
        &mut self,
        state: &mut ExtensionState,
        v: Vertex,
        colour: Colour,
    ) -> Result<(), ExtensionError> {
        let idx = state
            .working
            .iter()
            .position(|&(x, _)| x == v)
            .ok_or_else(|| self.breach(state.active, format!("{v} not in W")))?;
        let (_, e) = state.working.remove(idx);
        self.colouring
            .assign(self.graph, e, colour)
            .map_err(|err| self.breach(state.active, err.to_string()))
    }

    /// Performs one case 2 step. Requires that case 1 does not apply.
    pub fn do_case2(
        &mut self,
        state: &mut ExtensionState,
        trace: &mut dyn FnMut(&TraceEvent),
    ) -> Result<(), ExtensionError> {
        let u = state.active;
        let candidates = self.candidates(state);
        let choice = select_case2(self.colouring.missing_colours(u), &candidates)
            .map_err(|d| self.breach(u, d))?;
        let before = self.colouring.missing_colours(u).clone();
        let swap = self
            .colouring
            .kempe_swap(self.graph, choice.w, choice.a, choice.b)
            .map_err(|err| self.breach(u, err.to_string()))?;
        if swap.end == u || self.colouring.missing_colours(u) != &before {
            return Err(self.breach(u, "alternating path reached the active vertex"));
        }
        self.colour_back_edge(state, choice.w, choice.b)?;
        self.stats.case2_steps += 1;
        self.stats.swapped_edges += swap.path_len;
        trace(&TraceEvent::Case2 {
            vertex: u,
            w: choice.w,
            a: choice.a,
            b: choice.b,
            path_end: swap.end,
            path_len: swap.path_len,
        });
        Ok(())
    }

    /// Checks the invariants, then colours one back-edge of the active vertex
    /// by case 1 if it applies and by case 2 otherwise.
    pub fn step(
        &mut self,
        state: &mut ExtensionState,
        trace: &mut dyn FnMut(&TraceEvent),
    ) -> Result<Step, ExtensionError> {
        let u = state.active;
        let candidates = self.checkpoint(state)?;
        match select_case1(&candidates) {
            Some((colour, v)) => {
                self.colour_back_edge(state, v, colour)?;
                self.stats.case1_steps += 1;
                trace(&TraceEvent::Case1 {
                    vertex: u,
                    neighbour: v,
                    colour,
                });
                Ok(Step::Case1)
            }
            None => {
                self.do_case2(state, trace)?;
                Ok(Step::Case2)
            }
        }
    }

    /// Adds `u` to the current vertex set and colours all of its back-edges.
    pub fn colour_one_vertex(
        &mut self,
        u: Vertex,
        trace: &mut dyn FnMut(&TraceEvent),
    ) -> Result<(), ExtensionError> {
        let mut state = self.begin_vertex(u)?;
        trace(&TraceEvent::Begin {
            vertex: u,
            working: state.working.iter().map(|&(v, _)| v).collect(),
        });
        let budget = state.working.len();
        let mut case2_here = 0;
        while !state.working.is_empty() {
            if self.step(&mut state, trace)? == Step::Case2 {
                case2_here += 1;
            }
        }
        self.checkpoint(&state)?;
        if case2_here > budget {
            return Err(self.breach(u, format!("{case2_here} swaps for {budget} edges")));
        }
        self.stats.vertices += 1;
        Ok(())
    }
}

/// Extends a complete proper `k`-edge colouring of `dec.semi_core` to `g`.
///
/// Edges of the semi-core may be recoloured along the way; only properness of
/// the result is guaranteed, not agreement with `semi_core_colouring`.
pub fn extend(
    g: &Graph,
    dec: &SemiCoreDecomposition,
    semi_core_colouring: &PartialEdgeColouring,
    k: usize,
) -> Result<PartialEdgeColouring, ExtensionError> {
    extend_traced(g, dec, semi_core_colouring, k, &mut |_| {}).map(|(c, _)| c)
}

pub fn extend_traced(
    g: &Graph,
    dec: &SemiCoreDecomposition,
    semi_core_colouring: &PartialEdgeColouring,
    k: usize,
    trace: &mut dyn FnMut(&TraceEvent),
) -> Result<(PartialEdgeColouring, ExtensionStats), ExtensionError> {
    if semi_core_colouring.palette_size() != k {
        return Err(ExtensionError::PaletteMismatch {
            expected: k,
            got: semi_core_colouring.palette_size(),
        });
    }
    semi_core_colouring
        .verify_proper(&dec.semi_core.graph, true)
        .map_err(ExtensionError::SemiCoreNotProper)?;

    let mut is_core = vec![false; g.vertex_count()];
    for &x in &dec.core_vertices {
        is_core[x] = true;
    }
    let mut extender = Extender::new(g, semi_core_colouring.lift(&dec.semi_core, g));
    for &v in &dec.semi_core.to_parent {
        if !is_core[v] && g.degree(v) + 1 > k {
            return Err(ExtensionError::DegreeTooHigh {
                vertex: v,
                degree: g.degree(v),
                k,
            });
        }
        extender.admit(v);
    }
    for &u in &dec.excluded_order {
        extender.colour_one_vertex(u, trace)?;
    }

    let (colouring, stats) = extender.into_parts();
    if let Err(v) = colouring.verify_proper(g, true) {
        return Err(ExtensionError::InvariantBreach {
            vertex: match v {
                Violation::Conflict { vertex, .. } => vertex,
                Violation::Uncoloured { edge } => g.endpoints(edge).0,
            },
            detail: format!("final colouring is not proper: {}", v.describe(g)),
        });
    }
    Ok((colouring, stats))
}
