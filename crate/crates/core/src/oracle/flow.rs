// SPDX-License-Identifier: Apache-2.0

//! Vertex connectivity by unit-capacity maximum flow on the vertex-split
//! graph.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::OracleConfig;
use crate::error::Result;
use crate::topology::{EnhancedHypercube, Vertex};

struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Augments along shortest residual paths until none is left.
    fn max_flow(&mut self, source: usize, sink: usize) -> u32 {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut queue = VecDeque::from([source]);
            via[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &arc in &self.out[x] {
                    let y = self.head[arc];
                    if self.cap[arc] > 0 && via[y] == usize::MAX {
                        via[y] = arc;
                        queue.push_back(y);
                    }
                }
            }
            if via[sink] == usize::MAX {
                return total;
            }
            let mut at = sink;
            while at != source {
                let arc = via[at];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                at = self.head[arc ^ 1];
            }
            total += 1;
        }
    }
}

/// Maximum number of internally disjoint `u -> v` paths. A direct edge
/// counts as one path.
pub fn max_internally_disjoint_paths(g: &EnhancedHypercube, u: Vertex, v: Vertex) -> u32 {
    let count = g.vertex_count() as usize;
    // x splits into x_in = 2x and x_out = 2x + 1
    let mut net = FlowNetwork::new(2 * count);
    for x in g.vertices() {
        let xi = x.bits() as usize;
        let through = if x == u || x == v { count as u32 } else { 1 };
        net.add_arc(2 * xi, 2 * xi + 1, through);
        for (_, y) in g.neighbors(x) {
            net.add_arc(2 * xi + 1, 2 * y.bits() as usize, 1);
        }
    }
    net.max_flow(2 * u.bits() as usize + 1, 2 * v.bits() as usize)
}

/// Minimum over non-adjacent pairs of the maximum number of internally
/// disjoint paths.
pub fn connectivity_exact(g: &EnhancedHypercube, config: &OracleConfig) -> Result<u32> {
    config.check(g)?;
    let count = g.vertex_count();
    let fallback = count as u32 - 1;
    Ok(config.install(|| {
        (0..count)
            .into_par_iter()
            .map(|a| {
                (a + 1..count)
                    .map(|b| (Vertex(a), Vertex(b)))
                    .filter(|&(x, y)| !g.is_adjacent(x, y))
                    .map(|(x, y)| max_internally_disjoint_paths(g, x, y))
                    .min()
                    .unwrap_or(fallback)
            })
            .min()
            .unwrap_or(fallback)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32, k: u32) -> EnhancedHypercube {
        EnhancedHypercube::new(n, k).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(connectivity_exact(&q(3, 3), &cfg), Ok(4));
        assert_eq!(connectivity_exact(&q(3, 2), &cfg), Ok(4));
        assert_eq!(connectivity_exact(&q(4, 3), &cfg), Ok(5));
    }

    #[test]
    fn adjacent_pair_counts_the_edge() {
        let g = q(4, 2);
        assert_eq!(max_internally_disjoint_paths(&g, Vertex(0), Vertex(1)), 5);
        assert_eq!(
            max_internally_disjoint_paths(&g, Vertex(0), Vertex(0b1111)),
            5
        );
    }

    #[test]
    fn respects_cap() {
        let g = q(6, 2);
        assert!(connectivity_exact(&g, &OracleConfig::default()).is_err());
    }
}
