// SPDX-License-Identifier: Apache-2.0

//! Closed-form distances in `Q_{n,k}`.

use crate::error::{Error, Result};
use crate::pathgen::DimensionList;
use crate::topology::{EnhancedHypercube, Vertex};

/// Number of differing positions inside (`low`) and outside (`high`) the
/// complement block `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HammingSplit {
    pub low: u32,
    pub high: u32,
}

impl HammingSplit {
    pub fn hamming(&self) -> u32 {
        self.low + self.high
    }
}

pub fn hamming_split(g: &EnhancedHypercube, u: Vertex, v: Vertex) -> HammingSplit {
    let diff = (u ^ v).bits();
    HammingSplit {
        low: (diff & g.low_mask()).count_ones(),
        high: (diff & g.high_mask()).count_ones(),
    }
}

/// Hop count between `u` and `v`: the high differences plus the cheaper of
/// flipping the low differences one by one or complementing and fixing the
/// agreeing low positions.
pub fn distance(g: &EnhancedHypercube, u: Vertex, v: Vertex) -> u32 {
    let split = hamming_split(g, u, v);
    split.high + split.low.min(g.k() - split.low + 1)
}

pub fn diameter(g: &EnhancedHypercube) -> u32 {
    g.diameter()
}

/// A deterministic shortest route from `u` to `v`.
///
/// Low positions come first, ascending; the complementary edge is used only
/// when it is strictly shorter, in which case it leads and is followed by
/// the agreeing low positions. High positions follow in ascending order.
pub fn shortest_path(g: &EnhancedHypercube, u: Vertex, v: Vertex) -> Result<DimensionList> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::DegeneratePair);
    }
    let k = g.k();
    let diff = u ^ v;
    let split = hamming_split(g, u, v);
    let mut dims = Vec::with_capacity(distance(g, u, v) as usize);
    if split.low <= k - split.low + 1 {
        dims.extend((1..=k).filter(|&p| diff.has(p)).map(|p| p as usize));
    } else {
        dims.push(0);
        dims.extend((1..=k).filter(|&p| !diff.has(p)).map(|p| p as usize));
    }
    dims.extend((k + 1..=g.n()).filter(|&p| diff.has(p)).map(|p| p as usize));
    Ok(DimensionList::new(dims))
}
