//! Searches small graphs for extension states where case 1 does not apply,
//! then checks that one alternating-path swap plus an assignment restores
//! both extension properties.

mod common;

use kedge_core::exact::solve_exact;
use kedge_core::extension::{Candidate, Extender, Step};
use kedge_core::{ColourSet, Graph, SemiCoreDecomposition};

use common::all_graphs;

/// Every `F(u_i v)` is nonempty and at most one is a singleton; computed
/// independently of the library.
fn properties_hold(cands: &[Candidate]) -> bool {
    cands.iter().all(|c| !c.free.is_empty())
        && cands.iter().filter(|c| c.free.len() == 1).count() <= 1
}

/// Every colour in the union of the `F(u_i v)` lies in at least two sets of
/// size at most 2.
fn case2_precondition(cands: &[Candidate]) -> bool {
    let mut union = ColourSet::empty();
    for c in cands {
        union.union_with(&c.free);
    }
    !union.is_empty()
        && union.iter().all(|colour| {
            cands
                .iter()
                .filter(|c| c.free.len() <= 2 && c.free.contains(colour))
                .count()
                >= 2
        })
}

struct Hit {
    graph: Graph,
    k: usize,
    active: usize,
}

/// Replays the extension of `g` step by step and checks every case 2 step.
/// Returns the first active vertex at which case 2 fired.
fn replay(g: &Graph, k: usize) -> Option<usize> {
    let dec = SemiCoreDecomposition::new(g);
    let semi = solve_exact(&dec.semi_core.graph, k)?;
    let mut ext = Extender::new(g, semi.lift(&dec.semi_core, g));
    for &v in &dec.semi_core.to_parent {
        ext.admit(v);
    }
    let mut first = None;
    for &u in &dec.excluded_order {
        let mut state = ext.begin_vertex(u).expect("excluded vertex admissible");
        while !state.working.is_empty() {
            let before = ext.candidates(&state);
            assert!(
                properties_hold(&before),
                "{:?} k={k} u={u}: {before:?}",
                g.edges()
            );
            let remaining = state.working.len();
            let step = ext.step(&mut state, &mut |_| {}).expect("extension step");
            assert_eq!(state.working.len(), remaining - 1);
            if step == Step::Case2 {
                assert!(case2_precondition(&before), "{:?} k={k} u={u}", g.edges());
                let after = ext.candidates(&state);
                assert!(
                    properties_hold(&after),
                    "{:?} k={k} u={u}: {after:?}",
                    g.edges()
                );
                let c = ext.colouring();
                for &(v, e) in g.incident(u) {
                    if let Some(col) = c.colour(e) {
                        assert!(!c.missing_colours(v).contains(col));
                    }
                }
                first.get_or_insert(u);
            }
        }
    }
    let (colouring, _) = ext.into_parts();
    colouring
        .verify_proper(g, true)
        .expect("extension result proper");
    first
}

#[test]
fn case2_found_and_sound_on_six_vertices() {
    let mut hits: Vec<Hit> = Vec::new();
    for g in all_graphs(6) {
        let delta = g.max_degree();
        if delta == 0 {
            continue;
        }
        for k in [delta, delta + 1] {
            if let Some(active) = replay(&g, k) {
                hits.push(Hit {
                    graph: g.clone(),
                    k,
                    active,
                });
            }
        }
    }
    assert!(!hits.is_empty(), "no case 2 state on six vertices");

    // The first hit in enumeration order is a fixed regression instance,
    // checked by hand: H is the star at 0 coloured 1, 2, 3; vertex 2 then
    // sees F(2,1) = F(2,3) = {2, 3}, so case 2 swaps 2/1 along 1-4-0-3.
    let first = &hits[0];
    assert_eq!(
        first.graph.edges(),
        &[(0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (2, 3)]
    );
    assert_eq!((first.k, first.active), (3, 2));
    let mut events = Vec::new();
    let report = kedge_core::solver::solve_traced(&first.graph, first.k, &mut |ev| {
        events.push(ev.to_string())
    });
    assert!(report.colourable);
    assert_eq!(
        events,
        [
            "extend 1: W=[4]",
            "  case1 (1,4) <- 1",
            "extend 2: W=[1, 3]",
            "  case2 swap 2/1 from 1 (len 3, ends at 3); (2,1) <- 1",
            "  case1 (2,3) <- 3",
        ]
    );
}
