// SPDX-License-Identifier: Apache-2.0

//! Exhaustive fault diameters.
//!
//! Every fault set of size exactly `omega - 1` is enumerated in
//! lexicographic order. Deleting more elements never shortens a surviving
//! distance, so the maximum over smaller sets is attained at the largest
//! size as long as the graph stays connected.

use std::cmp::Ordering;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{check_omega, DenseGraph, OracleConfig};
use crate::error::{Error, Result};
use crate::topology::{EnhancedHypercube, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaultKind {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaultSet {
    Vertices(Vec<Vertex>),
    Edges(Vec<(Vertex, Vertex)>),
}

impl FaultSet {
    pub fn len(&self) -> usize {
        match self {
            FaultSet::Vertices(v) => v.len(),
            FaultSet::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Worst diameter over all fault sets of size `omega - 1`, with the
/// lexicographically first fault set and pair attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultDiameterReport {
    pub omega: usize,
    pub kind: FaultKind,
    pub worst_value: u32,
    pub witness_faults: FaultSet,
    pub witness_pair: (Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Candidate {
    value: u32,
    faults: Vec<usize>,
    pair: (usize, usize),
}

impl Candidate {
    /// Larger value first, then the smaller fault set.
    fn better(self, other: Self) -> Self {
        match self.value.cmp(&other.value) {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal if self.faults <= other.faults => self,
            Ordering::Equal => other,
        }
    }
}

/// Diameter of the graph on `alive` with adjacency `adj`, plus the least
/// pair attaining it.
fn faulted_diameter(
    dense: &DenseGraph,
    adj: &[u64],
    alive: u64,
) -> std::result::Result<(u32, (usize, usize)), (usize, usize)> {
    let mut best = (0, (0, 0));
    let mut sources = alive;
    let mut first = true;
    while sources != 0 {
        let s = sources.trailing_zeros() as usize;
        sources &= sources - 1;
        let (seen, ecc, far) = dense.bfs(adj, s, alive);
        if seen != alive {
            let missing = (alive & !seen).trailing_zeros() as usize;
            return Err((s, missing));
        }
        if first || ecc > best.0 {
            best = (ecc, (s, far));
            first = false;
        }
    }
    Ok(best)
}

pub fn fault_diameter_exact(
    g: &EnhancedHypercube,
    omega: usize,
    kind: FaultKind,
    config: &OracleConfig,
) -> Result<FaultDiameterReport> {
    config.check(g)?;
    check_omega(g, omega)?;
    let dense = DenseGraph::new(g);
    let size = omega - 1;

    let edges: Vec<(usize, usize)> = (0..dense.len())
        .flat_map(|a| {
            let row = dense.adj[a];
            (a + 1..dense.len())
                .filter(move |&b| row >> b & 1 == 1)
                .map(move |b| (a, b))
        })
        .collect();
    let universe = match kind {
        FaultKind::Vertex => dense.len(),
        FaultKind::Edge => edges.len(),
    };

    let evaluate = |faults: &[usize]| -> std::result::Result<Candidate, (usize, usize)> {
        let (value, pair) = match kind {
            FaultKind::Vertex => {
                let dead = faults.iter().fold(0u64, |acc, &x| acc | 1 << x);
                faulted_diameter(&dense, &dense.adj, dense.all() & !dead)?
            }
            FaultKind::Edge => {
                let mut adj = dense.adj.clone();
                for &e in faults {
                    let (a, b) = edges[e];
                    adj[a] &= !(1 << b);
                    adj[b] &= !(1 << a);
                }
                faulted_diameter(&dense, &adj, dense.all())?
            }
        };
        Ok(Candidate {
            value,
            faults: faults.to_vec(),
            pair,
        })
    };

    let scan_from = |head: usize| -> std::result::Result<Option<Candidate>, (usize, usize)> {
        let mut best: Option<Candidate> = None;
        let mut faults = Vec::with_capacity(size);
        for tail in (head + 1..universe).combinations(size - 1) {
            faults.clear();
            faults.push(head);
            faults.extend(tail);
            let candidate = evaluate(&faults)?;
            best = Some(match best {
                None => candidate,
                Some(b) => b.better(candidate),
            });
        }
        Ok(best)
    };

    let outcome = if size == 0 {
        evaluate(&[]).map(Some)
    } else {
        config.install(|| {
            (0..universe).into_par_iter().map(scan_from).try_reduce(
                || None,
                |a, b| {
                    Ok(match (a, b) {
                        (None, x) | (x, None) => x,
                        (Some(a), Some(b)) => Some(a.better(b)),
                    })
                },
            )
        })
    };

    let best = match outcome {
        Ok(Some(best)) => best,
        Ok(None) => unreachable!("fault set size is at most n < vertex count"),
        Err((u, v)) => {
            return Err(Error::Disconnected {
                u: u as u64,
                v: v as u64,
            })
        }
    };
    let witness_faults = match kind {
        FaultKind::Vertex => {
            FaultSet::Vertices(best.faults.iter().map(|&x| Vertex(x as u64)).collect())
        }
        FaultKind::Edge => FaultSet::Edges(
            best.faults
                .iter()
                .map(|&e| (Vertex(edges[e].0 as u64), Vertex(edges[e].1 as u64)))
                .collect(),
        ),
    };
    Ok(FaultDiameterReport {
        omega,
        kind,
        worst_value: best.value,
        witness_faults,
        witness_pair: (Vertex(best.pair.0 as u64), Vertex(best.pair.1 as u64)),
    })
}

/// A pair and a set of deleted neighbours of the source that pushes the
/// pair's distance above the diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundWitness {
    pub source: Vertex,
    pub target: Vertex,
    pub faults: Vec<Vertex>,
}

/// Source `0^n`, target with ones at `1..i` and `k+1..n` where
/// `i = ceil(k/2) - 1`, and the neighbours of the source whose single one
/// sits under a one of the target. The set has `n - floor(k/2) - 1`
/// elements.
///
/// When the diameter is 2 the target itself is one of those neighbours,
/// so the witness deletes its own endpoint.
pub fn lemma2_witness(g: &EnhancedHypercube) -> LowerBoundWitness {
    let (n, k) = (g.n(), g.k());
    let i = k.div_ceil(2) - 1;
    let target = Vertex(((1u64 << i) - 1) | g.high_mask());
    let faults = (1..=n)
        .filter(|&p| target.has(p))
        .map(Vertex::unit)
        .collect();
    debug_assert!(target.bits() < 1 << n);
    LowerBoundWitness {
        source: Vertex::ZERO,
        target,
        faults,
    }
}
