//! Deterministic instance generators.
//!
//! Randomised generators draw from SplitMix64 (Steele, Lea and Flood; the
//! generator with increment `0x9e3779b97f4a7c15` and the two published
//! multipliers). Derived draws are fixed so that other implementations can
//! regenerate the same instances:
//!
//! * `below(n) = (next_u64() * n) >> 64`, computed in 128 bits;
//! * `unit() = (next_u64() >> 11) * 2^-53`.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

fn invalid(msg: impl Into<String>) -> InstanceError {
    InstanceError::InvalidParameters(msg.into())
}

pub struct InstanceRng(SplitMix64);

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Float in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

pub fn gen_complete(n: usize) -> Result<Graph, InstanceError> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, InstanceError> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// `K_{1,leaves}` with centre 0.
pub fn gen_star(leaves: usize) -> Result<Graph, InstanceError> {
    if leaves < 1 {
        return Err(invalid("star needs at least one leaf"));
    }
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Ok(Graph::new(leaves + 1, &edges).expect("valid by construction"))
}

/// Outer 5-cycle on 0..5, spokes `i - (i+5)`, inner pentagram on 5..10.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("valid by construction")
}

/// Erdős–Rényi `G(n, prob)`: each pair `u < v`, in lexicographic order, is an
/// edge when `unit() < prob`.
pub fn gen_gnp(n: usize, prob: f64, seed: u64) -> Result<Graph, InstanceError> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(invalid(format!("edge probability {prob} outside [0, 1]")));
    }
    let mut rng = InstanceRng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < prob {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// A graph on `n` vertices in which exactly the vertices `0..p` have the
/// maximum degree `k`; every other vertex has degree at most `k - 1`.
///
/// Construction, with all draws from one [`InstanceRng`]:
///
/// 1. Core. For `k = 1` the core is the perfect matching `(0,1), (2,3), ...`
///    (so `p` must be even). Otherwise each path edge `(i, i+1)`, `i < p-1`,
///    is added when `below(2) == 0`.
/// 2. Core neighbours. For each core vertex `c` in order, while `deg(c) < k`:
///    let `R` be the previously created core neighbours with degree `<= k-2`
///    and not adjacent to `c`, in creation order. If `R` is nonempty and
///    `below(2) == 0`, join `c` to `R[below(|R|)]`; otherwise join `c` to a
///    fresh vertex.
/// 3. Padding. Each remaining vertex `x` joins `A[below(|A|)]`, where `A` is
///    the list of non-core vertices below `x` with degree `<= k-2`; if `A` is
///    empty, `x` stays isolated. `A` starts as the step-2 vertices with degree
///    `<= k-2` in creation order; a vertex is appended when created with
///    degree `<= k-2` and removed by swap-remove when its degree reaches
///    `k-1`.
/// 4. Chords. `(n - p) / 8` times, draw `u = p + below(n-p)` then
///    `v = p + below(n-p)`; add `(u, v)` when `u != v`, they are not
///    adjacent and both have degree `<= k-2`.
///
/// Requires `p >= 1`, `k >= 1`, and `n >= p(k+1)` when `k >= 2`
/// (`n >= p` when `k = 1`).
pub fn gen_few_max_degree(p: usize, k: usize, n: usize, seed: u64) -> Result<Graph, InstanceError> {
    if p == 0 {
        return Err(invalid(
            "p must be at least 1: a graph with edges has a maximum-degree vertex",
        ));
    }
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    if k == 1 {
        if p % 2 == 1 {
            return Err(invalid(
                "with k = 1 the core is a matching, so p must be even",
            ));
        }
        if n < p {
            return Err(invalid(format!("n = {n} is smaller than p = {p}")));
        }
    } else if n < p * (k + 1) {
        return Err(invalid(format!(
            "n = {n} is too small; need at least p(k+1) = {}",
            p * (k + 1)
        )));
    }

    let mut rng = InstanceRng::new(seed);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    let mut add = |adj: &mut Vec<Vec<Vertex>>, u: Vertex, v: Vertex| {
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
    };

    if k == 1 {
        for i in (0..p).step_by(2) {
            add(&mut adj, i, i + 1);
        }
    } else {
        for i in 0..p.saturating_sub(1) {
            if rng.below(2) == 0 {
                add(&mut adj, i, i + 1);
            }
        }
        let mut next = p;
        let mut created: Vec<Vertex> = Vec::new();
        for c in 0..p {
            while adj[c].len() < k {
                let reusable: Vec<Vertex> = created
                    .iter()
                    .copied()
                    .filter(|&v| adj[v].len() + 2 <= k && !adj[c].contains(&v))
                    .collect();
                if !reusable.is_empty() && rng.below(2) == 0 {
                    let v = reusable[rng.below(reusable.len())];
                    add(&mut adj, c, v);
                } else {
                    add(&mut adj, c, next);
                    created.push(next);
                    next += 1;
                }
            }
        }

        let mut attach: Vec<Vertex> = created
            .iter()
            .copied()
            .filter(|&v| adj[v].len() + 2 <= k)
            .collect();
        for x in next..n {
            if !attach.is_empty() {
                let i = rng.below(attach.len());
                let v = attach[i];
                add(&mut adj, x, v);
                if adj[v].len() + 1 >= k {
                    attach.swap_remove(i);
                }
            }
            if adj[x].len() + 2 <= k {
                attach.push(x);
            }
        }

        let span = n - p;
        for _ in 0..span / 8 {
            let u = p + rng.below(span);
            let v = p + rng.below(span);
            if u != v && adj[u].len() + 2 <= k && adj[v].len() + 2 <= k && !adj[u].contains(&v) {
                add(&mut adj, u, v);
            }
        }
    }

    let g = Graph::new(n, &edges).expect("generator emits a simple graph");
    debug_assert!((0..n).all(|u| (g.degree(u) == k) == (u < p) && g.degree(u) <= k));
    Ok(g)
}
