// SPDX-License-Identifier: Apache-2.0

//! Wide diameter: the least `l` such that every pair is joined by `omega`
//! internally disjoint paths of length at most `l`.

use rayon::prelude::*;
use serde::Serialize;

use super::{check_omega, fault_diameter_exact, DenseGraph, FaultKind, OracleConfig};
use crate::error::{Error, Result};
use crate::pathgen::disjoint_paths;
use crate::topology::{EnhancedHypercube, Vertex};

/// Exact search runs only on graphs with at most this many vertices.
pub const EXACT_SEARCH_MAX_VERTICES: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum WideMethod {
    /// Per-pair minimum found by enumerating paths and packing them.
    ExactSearch,
    /// Vertex-fault diameter below, router's longest selected path above.
    Sandwich { lower: u32, upper: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideDiameterReport {
    pub omega: usize,
    /// Exact value, or the upper bound when a sandwich does not close.
    pub value: u32,
    pub method: WideMethod,
    /// First pair attaining the value (exact search only).
    pub witness_pair: Option<(Vertex, Vertex)>,
}

impl WideDiameterReport {
    pub fn is_exact(&self) -> bool {
        match self.method {
            WideMethod::ExactSearch => true,
            WideMethod::Sandwich { lower, upper } => lower == upper,
        }
    }
}

/// Exact search on small graphs, sandwich bounds otherwise.
pub fn wide_diameter(
    g: &EnhancedHypercube,
    omega: usize,
    config: &OracleConfig,
) -> Result<WideDiameterReport> {
    if g.vertex_count() <= EXACT_SEARCH_MAX_VERTICES {
        wide_diameter_exact_search(g, omega, config)
    } else {
        let lower = fault_diameter_exact(g, omega, FaultKind::Vertex, config)?.worst_value;
        wide_diameter_sandwich(g, omega, lower, config)
    }
}

/// Internal vertex masks of the simple `u -> v` paths of length at most
/// `limit`.
fn simple_paths(adj: &[u64], u: usize, v: usize, limit: u32) -> Vec<u64> {
    #[allow(clippy::too_many_arguments)]
    fn extend(
        adj: &[u64],
        source: usize,
        at: usize,
        target: usize,
        visited: u64,
        depth: u32,
        limit: u32,
        out: &mut Vec<u64>,
    ) {
        if adj[at] >> target & 1 == 1 {
            out.push(visited);
        }
        if depth + 1 >= limit {
            return;
        }
        let mut next = adj[at] & !visited & !(1 << target) & !(1 << source);
        while next != 0 {
            let y = next.trailing_zeros() as usize;
            next &= next - 1;
            extend(
                adj,
                source,
                y,
                target,
                visited | 1 << y,
                depth + 1,
                limit,
                out,
            );
        }
    }
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    if adj[u] >> v & 1 == 1 {
        out.push(0);
    }
    if limit == 1 {
        return out;
    }
    let mut first = adj[u] & !(1 << v);
    while first != 0 {
        let y = first.trailing_zeros() as usize;
        first &= first - 1;
        extend(adj, u, y, v, 1 << y, 1, limit, &mut out);
    }
    out
}

/// Whether `count` of `paths` have pairwise disjoint internal sets.
fn pack(paths: &[u64], count: usize) -> bool {
    fn go(paths: &[u64], start: usize, used: u64, missing: usize) -> bool {
        if missing == 0 {
            return true;
        }
        if paths.len() - start < missing {
            return false;
        }
        (start..paths.len())
            .any(|t| paths[t] & used == 0 && go(paths, t + 1, used | paths[t], missing - 1))
    }
    go(paths, 0, 0, count)
}

/// Least `l` admitting `omega` disjoint `u -> v` paths of length `<= l`.
fn pair_width(adj: &[u64], u: usize, v: usize, omega: usize, start: u32) -> u32 {
    let mut limit = start.max(1);
    loop {
        let mut paths = simple_paths(adj, u, v, limit);
        // fewer internal vertices first tends to close the packing quickly
        paths.sort_by_key(|m| (m.count_ones(), *m));
        if pack(&paths, omega) {
            return limit;
        }
        limit += 1;
    }
}

pub fn wide_diameter_exact_search(
    g: &EnhancedHypercube,
    omega: usize,
    config: &OracleConfig,
) -> Result<WideDiameterReport> {
    check_omega(g, omega)?;
    if g.vertex_count() > EXACT_SEARCH_MAX_VERTICES {
        return Err(Error::OracleCapExceeded {
            n: g.n(),
            cap: EXACT_SEARCH_MAX_VERTICES.trailing_zeros(),
        });
    }
    let dense = DenseGraph::new(g);
    let count = dense.len();
    let pairs: Vec<(usize, usize)> = (0..count)
        .flat_map(|u| (u + 1..count).map(move |v| (u, v)))
        .collect();
    let best = config.install(|| {
        pairs
            .par_iter()
            .map(|&(u, v)| (pair_width(&dense.adj, u, v, omega, 1), (u, v)))
            .reduce(
                || (0, (usize::MAX, usize::MAX)),
                |a, b| {
                    if a.0 > b.0 || (a.0 == b.0 && a.1 < b.1) {
                        a
                    } else {
                        b
                    }
                },
            )
    });
    Ok(WideDiameterReport {
        omega,
        value: best.0,
        method: WideMethod::ExactSearch,
        witness_pair: Some((Vertex(best.1 .0 as u64), Vertex(best.1 .1 as u64))),
    })
}

/// Closes `lower <= d_omega <= upper` with `upper` the longest of the
/// `omega` shortest router paths over all ordered pairs.
pub fn wide_diameter_sandwich(
    g: &EnhancedHypercube,
    omega: usize,
    lower: u32,
    config: &OracleConfig,
) -> Result<WideDiameterReport> {
    config.check(g)?;
    check_omega(g, omega)?;
    let count = g.vertex_count();
    let upper = config.install(|| {
        (0..count)
            .into_par_iter()
            .map(|u| -> Result<u32> {
                let mut worst = 0;
                for v in (0..count).filter(|&v| v != u) {
                    let set = disjoint_paths(g, Vertex(u), Vertex(v), omega)?;
                    let longest = set.lengths().into_iter().max().unwrap_or(0);
                    worst = worst.max(longest as u32);
                }
                Ok(worst)
            })
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))
    })?;
    Ok(WideDiameterReport {
        omega,
        value: upper,
        method: WideMethod::Sandwich { lower, upper },
        witness_pair: None,
    })
}
