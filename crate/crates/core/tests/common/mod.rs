#![allow(dead_code)]

use kedge_core::instances::{gen_few_max_degree, gen_gnp, InstanceRng};
use kedge_core::Graph;

/// Every labelled simple graph on exactly `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// Every labelled graph on at most `n_max` vertices.
pub fn all_graphs_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (0..=n_max).flat_map(all_graphs)
}

/// Sparse `G(n, p)` graph with `2 <= n <= max_n` and expected degree in
/// `[1, 6)`, derived from `seed`.
pub fn random_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = InstanceRng::new(seed ^ 0x5eed_0000);
    let n = 2 + rng.below(max_n - 1);
    let degree = 1.0 + 5.0 * rng.unit();
    let prob = (degree / (n - 1) as f64).min(1.0);
    gen_gnp(n, prob, rng.next_u64()).unwrap()
}

/// Graphs with at most two maximum-degree vertices: the first `count` hits
/// of a seeded stream alternating `G(n, p)` and few-max-degree instances.
pub fn few_max_degree_corpus(count: usize) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let g = if seed.is_multiple_of(2) {
            random_graph(seed, 30)
        } else {
            let mut rng = InstanceRng::new(seed);
            let p = 1 + rng.below(2);
            let k = 2 + rng.below(4);
            let n = p * (k + 1) + rng.below(30);
            gen_few_max_degree(p, k, n, seed).unwrap()
        };
        let delta = g.max_degree();
        let x = (0..g.vertex_count())
            .filter(|&u| g.degree(u) == delta)
            .count();
        if g.edge_count() > 0 && x <= 2 {
            out.push(g);
        }
    }
    out
}
