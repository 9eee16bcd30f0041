// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by topology construction, routing and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Q_{{2,2}} is the complete graph K_4 and is excluded; use n >= 3")]
    CompleteGraphExcluded,

    #[error("invalid parameters n={n}, k={k}: {reason}")]
    InvalidParameters {
        n: u32,
        k: u32,
        reason: &'static str,
    },

    #[error("edge class {class} out of range 0..={n}")]
    ClassOutOfRange { class: usize, n: u32 },

    #[error("vertex {bits:#x} has bits above position {n}")]
    VertexOutOfRange { bits: u64, n: u32 },

    #[error("cannot parse vertex {text:?}: {reason}")]
    ParseVertex { text: String, reason: String },

    #[error("degenerate pair: source and target are the same vertex")]
    DegeneratePair,

    #[error("malformed path: vertices {index} and {} are not adjacent", index + 1)]
    MalformedPath { index: usize },

    #[error("dimension list has duplicate entry {0}")]
    DuplicateEntries(usize),

    #[error("dimension list is empty")]
    EmptyList,

    #[error("class set contains every class 0..={k}")]
    CoversComplementBlock { k: u32 },

    #[error("pair (i={i}, j={j}) does not belong to this construction case")]
    WrongCase { i: u32, j: u32 },

    #[error("requested {requested} paths, expected 1..={max}")]
    PathCountOutOfRange { requested: usize, max: usize },

    #[error("omega {omega} out of range 1..={max}")]
    OmegaOutOfRange { omega: usize, max: usize },

    #[error("n={n} exceeds the oracle cap of {cap}")]
    OracleCapExceeded { n: u32, cap: u32 },

    #[error("endpoint {0:#x} is in the fault set")]
    EndpointDeleted(u64),

    #[error("faulted graph is disconnected between {u:#x} and {v:#x}")]
    Disconnected { u: u64, v: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
