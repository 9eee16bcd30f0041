// SPDX-License-Identifier: Apache-2.0

//! Independent checker for routed path sets.

use std::collections::HashMap;

use thiserror::Error;

use crate::pathgen::PathSet;
use crate::topology::{EnhancedHypercube, Vertex};

/// First problem found in a [`PathSet`]. Path indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("path set is empty")]
    Empty,
    #[error("path {path} does not run from source to target")]
    WrongEndpoints { path: usize },
    #[error("path {path}: step {step} is not an edge")]
    NotAdjacent { path: usize, step: usize },
    #[error("path {path}: edge classes do not match its vertices")]
    DimsMismatch { path: usize },
    #[error("path {path} visits vertex {vertex:#x} twice")]
    RepeatedVertex { path: usize, vertex: u64 },
    #[error("path {path} has length {length}, above the bound {bound}")]
    TooLong {
        path: usize,
        length: usize,
        bound: usize,
    },
    #[error("paths {first} and {second} share internal vertex {vertex:#x}")]
    SharedVertex {
        first: usize,
        second: usize,
        vertex: u64,
    },
    #[error("paths {first} and {second} share an edge")]
    SharedEdge { first: usize, second: usize },
    #[error("{found} paths of length at most {bound}, promised {required}")]
    TooFewShort {
        found: usize,
        required: usize,
        bound: usize,
    },
}

/// Summary of a path set that passed every check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub paths: usize,
    pub shortest: usize,
    pub longest: usize,
    pub short_paths: usize,
}

pub fn verify_path_set(g: &EnhancedHypercube, ps: &PathSet) -> Result<Certificate, Violation> {
    if ps.paths.is_empty() {
        return Err(Violation::Empty);
    }
    let bound = ps.guarantee.bound_all;
    for (idx, path) in ps.paths.iter().enumerate() {
        let vs = &path.vertices;
        if vs.len() < 2 || vs[0] != ps.source || vs[vs.len() - 1] != ps.target {
            return Err(Violation::WrongEndpoints { path: idx });
        }
        let mut classes = Vec::with_capacity(vs.len() - 1);
        for (step, e) in vs.windows(2).enumerate() {
            match g.edge_class(e[0], e[1]) {
                Some(c) if g.contains(e[0]) && g.contains(e[1]) => classes.push(c),
                _ => return Err(Violation::NotAdjacent { path: idx, step }),
            }
        }
        if classes != path.dims.entries() {
            return Err(Violation::DimsMismatch { path: idx });
        }
        let mut seen = HashMap::with_capacity(vs.len());
        for &x in vs {
            if seen.insert(x, ()).is_some() {
                return Err(Violation::RepeatedVertex {
                    path: idx,
                    vertex: x.bits(),
                });
            }
        }
        if path.length() > bound {
            return Err(Violation::TooLong {
                path: idx,
                length: path.length(),
                bound,
            });
        }
    }

    let mut owner: HashMap<Vertex, usize> = HashMap::new();
    for (idx, path) in ps.paths.iter().enumerate() {
        for &x in path.internal() {
            if let Some(first) = owner.insert(x, idx) {
                return Err(Violation::SharedVertex {
                    first,
                    second: idx,
                    vertex: x.bits(),
                });
            }
        }
    }
    let mut edge_owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (idx, path) in ps.paths.iter().enumerate() {
        for e in path.vertices.windows(2) {
            let key = (e[0].min(e[1]), e[0].max(e[1]));
            if let Some(first) = edge_owner.insert(key, idx) {
                return Err(Violation::SharedEdge { first, second: idx });
            }
        }
    }

    let lengths = ps.lengths();
    let short_paths = lengths
        .iter()
        .filter(|&&l| l <= ps.guarantee.bound_short)
        .count();
    if short_paths < ps.guarantee.count_short {
        return Err(Violation::TooFewShort {
            found: short_paths,
            required: ps.guarantee.count_short,
            bound: ps.guarantee.bound_short,
        });
    }
    Ok(Certificate {
        paths: lengths.len(),
        shortest: *lengths.iter().min().unwrap(),
        longest: *lengths.iter().max().unwrap(),
        short_paths,
    })
}
