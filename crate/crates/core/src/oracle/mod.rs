// SPDX-License-Identifier: Apache-2.0

//! Brute-force ground truth for `Q_{n,k}`.
//!
//! Everything here works on the explicit graph and never consults the
//! closed-form metric or the router, except where a routine is explicitly
//! a sandwich between an exhaustive lower bound and the router's upper
//! bound.

mod bfs;
mod checker;
mod fault;
mod flow;
mod wide;

pub use bfs::{bfs_distance, Faults};
pub use checker::{verify_path_set, Certificate, Violation};
pub use fault::{
    fault_diameter_exact, lemma2_witness, FaultDiameterReport, FaultKind, FaultSet,
    LowerBoundWitness,
};
pub use flow::{connectivity_exact, max_internally_disjoint_paths};
pub use wide::{
    wide_diameter, wide_diameter_exact_search, wide_diameter_sandwich, WideDiameterReport,
    WideMethod, EXACT_SEARCH_MAX_VERTICES,
};

use crate::error::{Error, Result};
use crate::topology::EnhancedHypercube;

/// Default largest `n` accepted by the exhaustive routines.
pub const DEFAULT_ORACLE_CAP: u32 = 5;

/// The cap can be raised up to this value and no further.
pub const ORACLE_HARD_WALL: u32 = 6;

/// Environment variable overriding [`DEFAULT_ORACLE_CAP`].
pub const ORACLE_CAP_ENV: &str = "EHC_ORACLE_CAP";

/// Resource limits and parallelism for the exhaustive routines. Worker
/// count affects speed only; every result is identical for any count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: u32,
    pub workers: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ORACLE_CAP,
            workers: None,
        }
    }
}

impl OracleConfig {
    /// Default configuration with the cap taken from `EHC_ORACLE_CAP` when
    /// it is set to a number.
    pub fn from_env() -> Self {
        let cap = std::env::var(ORACLE_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_ORACLE_CAP);
        Self { cap, workers: None }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }

    pub fn effective_cap(&self) -> u32 {
        self.cap.min(ORACLE_HARD_WALL)
    }

    pub fn check(&self, g: &EnhancedHypercube) -> Result<()> {
        let cap = self.effective_cap();
        if g.n() > cap {
            Err(Error::OracleCapExceeded { n: g.n(), cap })
        } else {
            Ok(())
        }
    }

    /// Runs `op` on a pool with the configured worker count.
    pub(crate) fn install<T: Send>(&self, op: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(workers) => rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("failed to build worker pool")
                .install(op),
            None => op(),
        }
    }
}

/// Smallest `omega` at which fault and wide diameters exceed the diameter.
pub fn breakpoint(g: &EnhancedHypercube) -> usize {
    (g.n() - g.k() / 2) as usize
}

/// Piecewise value predicted for both the `(omega - 1)`-fault diameter and
/// the `omega`-wide diameter: the diameter below [`breakpoint`], one more
/// from there up to `n + 1`.
pub fn predicted_value(g: &EnhancedHypercube, omega: usize) -> u32 {
    if omega < breakpoint(g) {
        g.diameter()
    } else {
        g.diameter() + 1
    }
}

pub(crate) fn check_omega(g: &EnhancedHypercube, omega: usize) -> Result<()> {
    if omega == 0 || omega > g.degree() {
        Err(Error::OmegaOutOfRange {
            omega,
            max: g.degree(),
        })
    } else {
        Ok(())
    }
}

/// Explicit adjacency for `n <= 6`: one `u64` neighbour bitset per vertex.
#[derive(Debug, Clone)]
pub(crate) struct DenseGraph {
    pub adj: Vec<u64>,
}

impl DenseGraph {
    pub fn new(g: &EnhancedHypercube) -> Self {
        assert!(
            g.n() <= ORACLE_HARD_WALL,
            "dense graph limited to 64 vertices"
        );
        let adj = g
            .vertices()
            .map(|u| g.neighbors(u).fold(0u64, |acc, (_, v)| acc | 1 << v.bits()))
            .collect();
        Self { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn all(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1 << self.len()) - 1
        }
    }

    /// Breadth-first search from `source` inside `alive`. Returns the set
    /// reached, the eccentricity and the lowest vertex at that distance.
    #[inline]
    pub fn bfs(&self, adj: &[u64], source: usize, alive: u64) -> (u64, u32, usize) {
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                next |= adj[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            next &= alive & !seen;
            if next == 0 {
                return (seen, depth, frontier.trailing_zeros() as usize);
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicted_values() {
        let g = EnhancedHypercube::new(4, 3).unwrap();
        let row: Vec<_> = (1..=5).map(|w| predicted_value(&g, w)).collect();
        assert_eq!(row, [3, 3, 4, 4, 4]);
        assert_eq!(breakpoint(&g), 3);
        let g = EnhancedHypercube::new(3, 3).unwrap();
        let row: Vec<_> = (1..=4).map(|w| predicted_value(&g, w)).collect();
        assert_eq!(row, [2, 3, 3, 3]);
    }

    #[test]
    fn cap_is_clamped_to_hard_wall() {
        let cfg = OracleConfig {
            cap: 9,
            workers: None,
        };
        assert_eq!(cfg.effective_cap(), ORACLE_HARD_WALL);
        let g = EnhancedHypercube::new(7, 3).unwrap();
        assert_eq!(
            cfg.check(&g),
            Err(Error::OracleCapExceeded { n: 7, cap: 6 })
        );
        let g = EnhancedHypercube::new(6, 4).unwrap();
        assert!(OracleConfig::default().check(&g).is_err());
        assert!(cfg.check(&g).is_ok());
    }

    #[test]
    fn dense_bfs_eccentricity() {
        let g = EnhancedHypercube::new(4, 3).unwrap();
        let dense = DenseGraph::new(&g);
        let (seen, ecc, far) = dense.bfs(&dense.adj, 0, dense.all());
        assert_eq!(seen, dense.all());
        assert_eq!(ecc, 3);
        assert_eq!(g.format_vertex(crate::Vertex(far as u64)), "1011");
    }
}
