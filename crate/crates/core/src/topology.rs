// SPDX-License-Identifier: Apache-2.0

//! The enhanced hypercube `Q_{n,k}` as an implicit graph over `n`-bit labels.
//!
//! Position 1 is the least significant bit. Edge class `d >= 1` flips
//! position `d`; class 0 is the k-complementary edge that flips positions
//! `1..=k` together. Every vertex has exactly one edge of each class.
//!
//! Text form prints `x_n ... x_1` left to right, so `"00010"` in `Q_{5,3}`
//! has position 2 set.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`EnhancedHypercube::new`].
pub const MAX_DIMENSION: u32 = 62;

/// An `n`-bit vertex label. Bit `p - 1` holds position `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vertex(pub u64);

impl Vertex {
    pub const ZERO: Vertex = Vertex(0);

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Unit vector with only `position` set (1-based).
    #[inline]
    pub fn unit(position: u32) -> Vertex {
        Vertex(1 << (position - 1))
    }

    #[inline]
    pub fn has(self, position: u32) -> bool {
        self.0 >> (position - 1) & 1 == 1
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Renders the label as `width` characters, position `width` first.
    pub fn to_bit_string(self, width: u32) -> String {
        (1..=width)
            .rev()
            .map(|p| if self.has(p) { '1' } else { '0' })
            .collect()
    }
}

impl std::ops::BitXor for Vertex {
    type Output = Vertex;

    #[inline]
    fn bitxor(self, rhs: Vertex) -> Vertex {
        Vertex(self.0 ^ rhs.0)
    }
}

/// Topology parameters of `Q_{n,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnhancedHypercube {
    n: u32,
    k: u32,
}

impl EnhancedHypercube {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 2 && k == 2 {
            return Err(Error::CompleteGraphExcluded);
        }
        if n < 3 {
            return Err(Error::InvalidParameters {
                n,
                k,
                reason: "n must be at least 3",
            });
        }
        if n > MAX_DIMENSION {
            return Err(Error::InvalidParameters {
                n,
                k,
                reason: "n must be at most 62",
            });
        }
        if k < 2 || k > n {
            return Err(Error::InvalidParameters {
                n,
                k,
                reason: "k must satisfy 2 <= k <= n",
            });
        }
        Ok(Self { n, k })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> u64 {
        1 << self.n
    }

    /// Every vertex has one edge per class `0..=n`.
    pub fn degree(&self) -> usize {
        self.n as usize + 1
    }

    /// Mask of positions `1..=k`.
    #[inline]
    pub fn low_mask(&self) -> u64 {
        (1 << self.k) - 1
    }

    /// Mask of positions `k+1..=n`.
    #[inline]
    pub fn high_mask(&self) -> u64 {
        self.full_mask() & !self.low_mask()
    }

    #[inline]
    pub fn full_mask(&self) -> u64 {
        (1 << self.n) - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.0 & !self.full_mask() == 0
    }

    pub fn vertex(&self, bits: u64) -> Result<Vertex> {
        let v = Vertex(bits);
        self.check_vertex(v)?;
        Ok(v)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                bits: v.0,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_class(&self, class: usize) -> Result<()> {
        if class <= self.n as usize {
            Ok(())
        } else {
            Err(Error::ClassOutOfRange { class, n: self.n })
        }
    }

    /// Follows the unique edge of class `class` out of `u`.
    ///
    /// Callers must pass a valid vertex and `class <= n`.
    #[inline]
    pub fn step(&self, u: Vertex, class: usize) -> Vertex {
        debug_assert!(class <= self.n as usize);
        if class == 0 {
            Vertex(u.0 ^ self.low_mask())
        } else {
            Vertex(u.0 ^ (1 << (class - 1)))
        }
    }

    /// Checked form of [`step`](Self::step).
    pub fn apply_dimension(&self, u: Vertex, class: usize) -> Result<Vertex> {
        self.check_vertex(u)?;
        self.check_class(class)?;
        Ok(self.step(u, class))
    }

    /// The `n + 1` neighbours of `u`, tagged by edge class, class 1 first
    /// and class 0 last.
    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        (1..=self.n as usize)
            .chain(std::iter::once(0))
            .map(move |d| (d, self.step(u, d)))
    }

    /// The class of edge `uv`, or `None` when the vertices are not adjacent.
    pub fn edge_class(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let diff = (u ^ v).0;
        if diff == 0 || diff & !self.full_mask() != 0 {
            None
        } else if diff == self.low_mask() {
            Some(0)
        } else if diff.is_power_of_two() {
            Some(diff.trailing_zeros() as usize + 1)
        } else {
            None
        }
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_class(u, v).is_some()
    }

    /// All `2^n` vertices in increasing label order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.vertex_count()).map(Vertex)
    }

    /// Parses the `x_n ... x_1` text form.
    pub fn parse_vertex(&self, text: &str) -> Result<Vertex> {
        let fail = |reason: String| Error::ParseVertex {
            text: text.to_string(),
            reason,
        };
        if text.len() != self.n as usize {
            return Err(fail(format!(
                "expected {} characters, got {}",
                self.n,
                text.chars().count()
            )));
        }
        let mut bits = 0u64;
        for c in text.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                other => return Err(fail(format!("unexpected character {other:?}"))),
            }
        }
        Ok(Vertex(bits))
    }

    pub fn format_vertex(&self, v: Vertex) -> String {
        v.to_bit_string(self.n)
    }

    /// Diameter of the graph, `n - floor(k/2)`.
    pub fn diameter(&self) -> u32 {
        self.n - self.k / 2
    }
}

impl fmt::Display for EnhancedHypercube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{{{},{}}}", self.n, self.k)
    }
}
