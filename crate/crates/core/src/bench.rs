//! Phase timing over growing instances with a fixed core.
//!
//! For fixed `(k, p)` and seed the core gadget of [`gen_few_max_degree`] is
//! the same for every `n`, so the semi-core solve time should stay flat while
//! decomposition and extension grow linearly.

use std::fmt::Write as _;
use std::time::Duration;

use thiserror::Error;

use crate::instances::{gen_few_max_degree, InstanceError};
use crate::solver::solve;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub k: usize,
    pub p: usize,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub repeats: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub t_decompose: Duration,
    pub t_semicore: Duration,
    pub t_extend: Duration,
    pub t_total: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("repeats must be at least 1")]
    NoRepeats,
    #[error("no instance sizes given")]
    NoSizes,
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, BenchError> {
    if cfg.repeats == 0 {
        return Err(BenchError::NoRepeats);
    }
    if cfg.sizes.is_empty() {
        return Err(BenchError::NoSizes);
    }
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let g = gen_few_max_degree(cfg.p, cfg.k, n, cfg.seed)?;
        let mut phases: [Vec<Duration>; 4] = Default::default();
        let mut q = 0;
        // One untimed run to warm caches and the allocator.
        solve(&g, cfg.k);
        for _ in 0..cfg.repeats {
            let r = solve(&g, cfg.k);
            q = r.semi_core_size.unwrap_or(0);
            let t = r.timings;
            for (acc, d) in phases
                .iter_mut()
                .zip([t.decompose, t.semicore, t.extend, t.total])
            {
                acc.push(d);
            }
        }
        let [d, s, e, t] = phases.map(median);
        rows.push(BenchRow {
            n,
            m: g.edge_count(),
            q,
            t_decompose: d,
            t_semicore: s,
            t_extend: e,
            t_total: t,
        });
    }
    Ok(rows)
}

fn micros(d: Duration) -> f64 {
    d.as_secs_f64() * 1e6
}

pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>9} {:>9} {:>5} {:>14} {:>14} {:>14} {:>14}",
        "n", "m", "q", "decompose_us", "semicore_us", "extend_us", "total_us"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>9} {:>9} {:>5} {:>14.1} {:>14.1} {:>14.1} {:>14.1}",
            r.n,
            r.m,
            r.q,
            micros(r.t_decompose),
            micros(r.t_semicore),
            micros(r.t_extend),
            micros(r.t_total)
        );
    }
    out
}

pub fn format_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,m,q,t_decompose_us,t_semicore_us,t_extend_us,t_total_us\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{:.3},{:.3},{:.3},{:.3}",
            r.n,
            r.m,
            r.q,
            micros(r.t_decompose),
            micros(r.t_semicore),
            micros(r.t_extend),
            micros(r.t_total)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(sizes: Vec<usize>, repeats: usize) -> BenchConfig {
        BenchConfig {
            k: 3,
            p: 2,
            sizes,
            seed: 1,
            repeats,
        }
    }

    #[test]
    fn zero_repeats_rejected() {
        assert_eq!(run_bench(&cfg(vec![100], 0)), Err(BenchError::NoRepeats));
    }

    #[test]
    fn one_row_per_size() {
        let rows = run_bench(&cfg(vec![50], 2)).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].n, 50);
        assert!(rows[0].q <= 2 + 3 * 2);
        assert_eq!(format_csv(&rows).lines().count(), 2);
        assert_eq!(format_table(&rows).lines().count(), 2);
    }

    #[test]
    fn infeasible_generation() {
        assert!(matches!(
            run_bench(&cfg(vec![3], 1)),
            Err(BenchError::Instance(_))
        ));
    }
}
