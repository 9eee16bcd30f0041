// SPDX-License-Identifier: Apache-2.0

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::topology::{EnhancedHypercube, Vertex};

/// Largest `n` for which [`bfs_distance`] will allocate a distance table.
const BFS_LIMIT: u32 = 24;

/// Deleted vertices or deleted edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Faults {
    #[default]
    None,
    Vertices(Vec<Vertex>),
    Edges(Vec<(Vertex, Vertex)>),
}

/// Exact hop count from `u` to `v` after deleting `faults`, or `None` when
/// `v` is unreachable.
pub fn bfs_distance(
    g: &EnhancedHypercube,
    u: Vertex,
    v: Vertex,
    faults: &Faults,
) -> Result<Option<u32>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.n() > BFS_LIMIT {
        return Err(Error::OracleCapExceeded {
            n: g.n(),
            cap: BFS_LIMIT,
        });
    }
    let mut dead = vec![false; g.vertex_count() as usize];
    let mut cut = HashSet::new();
    match faults {
        Faults::None => {}
        Faults::Vertices(list) => {
            for &x in list {
                g.check_vertex(x)?;
                if x == u || x == v {
                    return Err(Error::EndpointDeleted(x.bits()));
                }
                dead[x.bits() as usize] = true;
            }
        }
        Faults::Edges(list) => {
            for &(a, b) in list {
                g.check_vertex(a)?;
                g.check_vertex(b)?;
                cut.insert((a.min(b), a.max(b)));
            }
        }
    }

    let mut dist = vec![u32::MAX; dead.len()];
    dist[u.bits() as usize] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x.bits() as usize];
        if x == v {
            return Ok(Some(dx));
        }
        for (_, y) in g.neighbors(x) {
            let slot = y.bits() as usize;
            if dead[slot] || dist[slot] != u32::MAX || cut.contains(&(x.min(y), x.max(y))) {
                continue;
            }
            dist[slot] = dx + 1;
            queue.push_back(y);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::distance;

    fn q(n: u32, k: u32) -> EnhancedHypercube {
        EnhancedHypercube::new(n, k).unwrap()
    }

    #[test]
    fn fault_free_examples() {
        let g = q(4, 3);
        let d = bfs_distance(
            &g,
            Vertex(0),
            g.parse_vertex("0111").unwrap(),
            &Faults::None,
        );
        assert_eq!(d, Ok(Some(1)));
        assert_eq!(
            bfs_distance(&g, Vertex(5), Vertex(5), &Faults::None),
            Ok(Some(0))
        );
    }

    #[test]
    fn lower_bound_witness_distance() {
        let g = q(4, 3);
        let p = |s| g.parse_vertex(s).unwrap();
        let faults = Faults::Vertices(vec![p("0001"), p("1000")]);
        assert_eq!(bfs_distance(&g, p("0000"), p("1001"), &faults), Ok(Some(4)));
    }

    #[test]
    fn deleted_endpoint_is_an_error() {
        let g = q(4, 3);
        let faults = Faults::Vertices(vec![Vertex(3)]);
        assert_eq!(
            bfs_distance(&g, Vertex(0), Vertex(3), &faults),
            Err(Error::EndpointDeleted(3))
        );
    }

    #[test]
    fn edge_faults_and_unreachable() {
        let g = q(3, 3);
        // K_{4,4}: cutting the direct edge forces a detour of length 3
        let faults = Faults::Edges(vec![(Vertex(1), Vertex(0))]);
        assert_eq!(bfs_distance(&g, Vertex(0), Vertex(1), &faults), Ok(Some(3)));

        let isolate = Faults::Edges(
            g.neighbors(Vertex(0))
                .map(|(_, v)| (Vertex(0), v))
                .collect(),
        );
        assert_eq!(bfs_distance(&g, Vertex(0), Vertex(7), &isolate), Ok(None));
    }

    #[test]
    fn matches_closed_form_on_all_pairs() {
        for n in 3..=5 {
            for k in 2..=n {
                let g = q(n, k);
                for u in g.vertices() {
                    for v in g.vertices() {
                        assert_eq!(
                            bfs_distance(&g, u, v, &Faults::None).unwrap(),
                            Some(distance(&g, u, v))
                        );
                    }
                }
            }
        }
    }
}
