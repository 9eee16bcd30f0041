// SPDX-License-Identifier: Apache-2.0

//! Translations combined with position permutations that keep the blocks
//! `1..=k` and `k+1..=n` in place. These are automorphisms of `Q_{n,k}` and
//! suffice to move any pair onto the canonical form used by the router.

use crate::error::{Error, Result};
use crate::metric::hamming_split;
use crate::topology::{EnhancedHypercube, Vertex};

/// `x -> P(x xor mask)`, where `P` relabels positions without mixing the two
/// blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    mask: Vertex,
    /// `image[p - 1]` is the position that position `p` moves to.
    image: Vec<u32>,
    preimage: Vec<u32>,
    k: u32,
}

impl Automorphism {
    pub fn identity(g: &EnhancedHypercube) -> Self {
        Self::translation(g, Vertex::ZERO)
    }

    pub fn translation(g: &EnhancedHypercube, mask: Vertex) -> Self {
        let image: Vec<u32> = (1..=g.n()).collect();
        Self {
            mask,
            preimage: image.clone(),
            image,
            k: g.k(),
        }
    }

    /// Builds `x -> P(x xor mask)`. `perm_low[p - 1]` is the image of low
    /// position `p`; `perm_high[t]` the image of position `k + 1 + t`.
    pub fn new(
        g: &EnhancedHypercube,
        mask: Vertex,
        perm_low: &[u32],
        perm_high: &[u32],
    ) -> Result<Self> {
        g.check_vertex(mask)?;
        let (n, k) = (g.n(), g.k());
        let invalid = |reason| Error::InvalidParameters { n, k, reason };
        if perm_low.len() != k as usize || perm_high.len() != (n - k) as usize {
            return Err(invalid("permutation length does not match block size"));
        }
        let image: Vec<u32> = perm_low.iter().chain(perm_high).copied().collect();
        let mut preimage = vec![0; n as usize];
        for (idx, &to) in image.iter().enumerate() {
            let from = idx as u32 + 1;
            let same_block = (from <= k) == (1..=k).contains(&to);
            if to == 0 || to > n || !same_block || preimage[to as usize - 1] != 0 {
                return Err(invalid("not a block-preserving permutation"));
            }
            preimage[to as usize - 1] = from;
        }
        Ok(Self {
            mask,
            image,
            preimage,
            k,
        })
    }

    pub fn mask(&self) -> Vertex {
        self.mask
    }

    pub fn perm_low(&self) -> &[u32] {
        &self.image[..self.k as usize]
    }

    pub fn perm_high(&self) -> &[u32] {
        &self.image[self.k as usize..]
    }

    fn relabel(x: Vertex, table: &[u32]) -> Vertex {
        let mut out = 0u64;
        let mut rest = x.bits();
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << (table[p] - 1);
        }
        Vertex(out)
    }

    pub fn apply(&self, x: Vertex) -> Vertex {
        Self::relabel(x ^ self.mask, &self.image)
    }

    pub fn apply_inverse(&self, x: Vertex) -> Vertex {
        Self::relabel(x, &self.preimage) ^ self.mask
    }

    /// Class of the image of an edge of class `class`.
    pub fn map_class(&self, class: usize) -> usize {
        if class == 0 {
            0
        } else {
            self.image[class - 1] as usize
        }
    }

    pub fn inverse(&self) -> Self {
        // x = P^-1(y) xor mask = P^-1(y xor P(mask))
        Self {
            mask: Self::relabel(self.mask, &self.image),
            image: self.preimage.clone(),
            preimage: self.image.clone(),
            k: self.k,
        }
    }
}

/// Result of [`normalize_pair`]: `sigma(u) = 0` and
/// `sigma(v) = 0^{n-k-j} 1^j 0^{k-i} 1^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedPair {
    pub sigma: Automorphism,
    pub i: u32,
    pub j: u32,
}

/// Canonical target with `i` low ones and `j` high ones.
pub fn canonical_target(g: &EnhancedHypercube, i: u32, j: u32) -> Vertex {
    let low = (1u64 << i) - 1;
    let high = ((1u64 << j) - 1) << g.k();
    Vertex(low | high)
}

pub fn normalize_pair(g: &EnhancedHypercube, u: Vertex, v: Vertex) -> Result<NormalizedPair> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::DegeneratePair);
    }
    let diff = u ^ v;
    let (n, k) = (g.n(), g.k());
    // differing positions take the lowest slots of their block, ascending
    let block_order = |range: std::ops::RangeInclusive<u32>| -> Vec<u32> {
        let start = *range.start();
        let (differ, agree): (Vec<u32>, Vec<u32>) = range.partition(|&p| diff.has(p));
        let mut image = vec![0; differ.len() + agree.len()];
        for (slot, p) in differ.into_iter().chain(agree).enumerate() {
            image[(p - start) as usize] = start + slot as u32;
        }
        image
    };
    let perm_low = block_order(1..=k);
    let perm_high = block_order(k + 1..=n);
    let sigma = Automorphism::new(g, u, &perm_low, &perm_high)?;
    let split = hamming_split(g, u, v);
    Ok(NormalizedPair {
        sigma,
        i: split.low,
        j: split.high,
    })
}

/// Pulls a path from the canonical frame back through `sigma`.
pub fn map_path_back(
    g: &EnhancedHypercube,
    sigma: &Automorphism,
    path: &[Vertex],
) -> Result<Vec<Vertex>> {
    for (index, pair) in path.windows(2).enumerate() {
        if !g.is_adjacent(pair[0], pair[1]) {
            return Err(Error::MalformedPath { index });
        }
    }
    Ok(path.iter().map(|&x| sigma.apply_inverse(x)).collect())
}
