// SPDX-License-Identifier: Apache-2.0

//! Construction of `n + 1` internally disjoint, length-bounded paths between
//! any two vertices of `Q_{n,k}`.
//!
//! A path from a known start vertex is encoded by the sequence of edge
//! classes it follows (a [`DimensionList`]). The router works on the
//! canonical pair `0^n -> 0^{n-k-j} 1^j 0^{k-i} 1^i`, builds one list per
//! path there, and maps the realized paths back to the requested pair.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symmetry::{map_path_back, normalize_pair};
use crate::topology::{EnhancedHypercube, Vertex};

/// Ordered edge classes describing a walk from some start vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct DimensionList(Vec<usize>);

impl DimensionList {
    pub fn new(entries: Vec<usize>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    fn first_duplicate(&self) -> Option<usize> {
        let mut seen = HashSet::with_capacity(self.0.len());
        self.0.iter().copied().find(|&d| !seen.insert(d))
    }
}

impl From<Vec<usize>> for DimensionList {
    fn from(entries: Vec<usize>) -> Self {
        Self(entries)
    }
}

impl fmt::Display for DimensionList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, d) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// All rotations of a list of distinct classes, starting with the list
/// itself. No two of them share a proper initial segment.
pub fn cyclic_permutations(list: &DimensionList) -> Result<Vec<DimensionList>> {
    if list.is_empty() {
        return Err(Error::EmptyList);
    }
    if let Some(d) = list.first_duplicate() {
        return Err(Error::DuplicateEntries(d));
    }
    Ok((0..list.len())
        .map(|shift| {
            let mut rotated = list.0.clone();
            rotated.rotate_left(shift);
            DimensionList(rotated)
        })
        .collect())
}

/// The vertex reached from `u` by following the classes of `set` in any
/// order.
///
/// Without class 0 the walk flips exactly the positions of `set`. With
/// class 0 it flips the low positions missing from `set` together with the
/// high positions in `set`. Sets containing every class `0..=k` are
/// rejected.
pub fn list_endpoint(g: &EnhancedHypercube, u: Vertex, set: &[usize]) -> Result<Vertex> {
    g.check_vertex(u)?;
    let k = g.k() as usize;
    let mut present = HashSet::with_capacity(set.len());
    for &d in set {
        g.check_class(d)?;
        if !present.insert(d) {
            return Err(Error::DuplicateEntries(d));
        }
    }
    if (0..=k).all(|d| present.contains(&d)) {
        return Err(Error::CoversComplementBlock { k: g.k() });
    }
    let flipped: Vec<usize> = if present.contains(&0) {
        (1..=k)
            .filter(|d| !present.contains(d))
            .chain(present.iter().copied().filter(|&d| d > k))
            .collect()
    } else {
        present.into_iter().collect()
    };
    Ok(flipped
        .into_iter()
        .fold(u, |acc, p| acc ^ Vertex::unit(p as u32)))
}

/// Walks `list` from `u`, returning all `len + 1` visited vertices. Classes
/// may repeat.
pub fn realize(g: &EnhancedHypercube, u: Vertex, list: &DimensionList) -> Result<Vec<Vertex>> {
    g.check_vertex(u)?;
    let mut path = Vec::with_capacity(list.len() + 1);
    path.push(u);
    let mut at = u;
    for &d in list.entries() {
        g.check_class(d)?;
        at = g.step(at, d);
        path.push(at);
    }
    Ok(path)
}

/// Which list family the router uses for a canonical pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// Target closer than the diameter, reached without a complement edge.
    ShortPlain,
    /// Target closer than the diameter, reached through a complement edge.
    ShortComplement,
    /// Target at the diameter, base list without a complement edge.
    FarPlain,
    /// Target at the diameter, base list with a complement edge (even `k`).
    FarComplement,
}

/// Length of a shortest path to the canonical target `(i, j)`.
fn canonical_distance(g: &EnhancedHypercube, i: u32, j: u32) -> u32 {
    (i + j).min(g.k() - i + j + 1)
}

fn check_canonical(g: &EnhancedHypercube, i: u32, j: u32) -> Result<()> {
    if i > g.k() || j > g.n() - g.k() || (i == 0 && j == 0) {
        return Err(Error::WrongCase { i, j });
    }
    Ok(())
}

pub fn classify(g: &EnhancedHypercube, i: u32, j: u32) -> Result<Construction> {
    check_canonical(g, i, j)?;
    let k = g.k();
    let near = canonical_distance(g, i, j) < g.diameter();
    Ok(match (near, 2 * i <= k) {
        (true, true) => Construction::ShortPlain,
        (true, false) => Construction::ShortComplement,
        (false, _) if i == k.div_ceil(2) => Construction::FarPlain,
        (false, _) => Construction::FarComplement,
    })
}

fn range(from: u32, to: u32) -> impl Iterator<Item = usize> {
    (from..=to).map(|d| d as usize)
}

/// Lists for a canonical target strictly closer than the diameter.
///
/// The base list `I` is `(1..i, k+1..k+j)` when `2i <= k` and
/// `(0, i+1..k, k+1..k+j)` otherwise. Its rotations give `|I|` shortest
/// paths; every class `h` outside `I` gives the detour `(h, I, h)`.
///
/// For `k = 2` and for `k = 3, i = 2` two of those detours meet in a
/// common internal vertex. Those two classes `a, b` are instead routed as
/// `(a, J, b)` and `(b, J, a)` with `J = (k+1..k+j)`, which reach the same
/// target within the same length bound.
pub fn construct_case1(g: &EnhancedHypercube, i: u32, j: u32) -> Result<Vec<DimensionList>> {
    let (n, k) = (g.n(), g.k());
    let complement = match classify(g, i, j)? {
        Construction::ShortPlain => false,
        Construction::ShortComplement => true,
        _ => return Err(Error::WrongCase { i, j }),
    };
    let high: Vec<usize> = range(k + 1, k + j).collect();
    let base: Vec<usize> = if complement {
        std::iter::once(0)
            .chain(range(i + 1, k))
            .chain(high.iter().copied())
            .collect()
    } else {
        range(1, i).chain(high.iter().copied()).collect()
    };

    let crossed = match (complement, k, i) {
        (false, 2, 1) => Some((0, 2)),
        (true, 2 | 3, 2) => Some((1, 2)),
        _ => None,
    };

    let base = DimensionList(base);
    let mut lists = cyclic_permutations(&base)?;
    for h in 0..=n as usize {
        if base.0.contains(&h) || crossed.is_some_and(|(a, b)| h == a || h == b) {
            continue;
        }
        let mut detour = Vec::with_capacity(base.len() + 2);
        detour.push(h);
        detour.extend_from_slice(&base.0);
        detour.push(h);
        lists.push(DimensionList(detour));
    }
    if let Some((a, b)) = crossed {
        for (first, last) in [(a, b), (b, a)] {
            let mut list = Vec::with_capacity(high.len() + 2);
            list.push(first);
            list.extend_from_slice(&high);
            list.push(last);
            lists.push(DimensionList(list));
        }
    }
    Ok(lists)
}

/// Lists for a canonical target at the diameter (`j = n - k` and
/// `ceil(k/2) <= i <= floor(k/2) + 1`).
///
/// With `J = (k+1..n)`, the base list is `(1..i, J)` paired with the side
/// list `(0, i+1..k)` when `i = ceil(k/2)`, and `(0, i+1..k, J)` paired with
/// `(1..i)` otherwise. Odd `k` always takes the first form. The rotations of
/// the base list give the diameter-length paths; the remaining paths insert
/// `J` after the first entry of each rotation of the side list.
pub fn construct_case2(g: &EnhancedHypercube, i: u32, j: u32) -> Result<Vec<DimensionList>> {
    let (n, k) = (g.n(), g.k());
    let (base, side) = match classify(g, i, j)? {
        Construction::FarPlain => (
            range(1, i).chain(range(k + 1, n)).collect::<Vec<_>>(),
            std::iter::once(0)
                .chain(range(i + 1, k))
                .collect::<Vec<_>>(),
        ),
        Construction::FarComplement => (
            std::iter::once(0).chain(range(i + 1, n)).collect(),
            range(1, i).collect(),
        ),
        _ => return Err(Error::WrongCase { i, j }),
    };
    let high: Vec<usize> = range(k + 1, n).collect();
    let mut lists = cyclic_permutations(&DimensionList(base))?;
    for rotation in cyclic_permutations(&DimensionList(side))? {
        let (head, tail) = rotation.0.split_at(1);
        lists.push(DimensionList([head, &high, tail].concat()));
    }
    Ok(lists)
}

/// The `n + 1` lists for the canonical pair `(i, j)`.
pub fn canonical_lists(g: &EnhancedHypercube, i: u32, j: u32) -> Result<Vec<DimensionList>> {
    match classify(g, i, j)? {
        Construction::ShortPlain | Construction::ShortComplement => construct_case1(g, i, j),
        Construction::FarPlain | Construction::FarComplement => construct_case2(g, i, j),
    }
}

/// One routed path: visited vertices and the edge classes between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutedPath {
    pub vertices: Vec<Vertex>,
    pub dims: DimensionList,
}

impl RoutedPath {
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn internal(&self) -> &[Vertex] {
        let len = self.vertices.len();
        if len <= 2 {
            &[]
        } else {
            &self.vertices[1..len - 1]
        }
    }
}

/// Length promises attached to a [`PathSet`]: every path is at most
/// `bound_all` long, and at least `count_short` of them are at most
/// `bound_short` long.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Guarantee {
    pub count_short: usize,
    pub bound_short: usize,
    pub bound_all: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    pub source: Vertex,
    pub target: Vertex,
    pub paths: Vec<RoutedPath>,
    pub guarantee: Guarantee,
}

impl PathSet {
    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(RoutedPath::length).collect()
    }
}

/// Builds `omega` internally disjoint paths from `u` to `v`, shortest
/// first. All paths have length at most `diameter + 1`; taking
/// `omega = n + 1` yields at least `n - floor(k/2) - 1` paths of length at
/// most the diameter.
pub fn disjoint_paths(
    g: &EnhancedHypercube,
    u: Vertex,
    v: Vertex,
    omega: usize,
) -> Result<PathSet> {
    let max = g.degree();
    if omega == 0 || omega > max {
        return Err(Error::PathCountOutOfRange {
            requested: omega,
            max,
        });
    }
    let normalized = normalize_pair(g, u, v)?;
    let lists = canonical_lists(g, normalized.i, normalized.j)?;
    debug_assert_eq!(lists.len(), max);

    let mut paths = lists
        .iter()
        .map(|list| {
            let canonical = realize(g, Vertex::ZERO, list)?;
            let vertices = map_path_back(g, &normalized.sigma, &canonical)?;
            let dims = vertices
                .windows(2)
                .map(|e| {
                    g.edge_class(e[0], e[1])
                        .expect("automorphism preserves edges")
                })
                .collect();
            Ok(RoutedPath {
                vertices,
                dims: DimensionList(dims),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    paths.sort_by(|a, b| {
        a.length()
            .cmp(&b.length())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    paths.truncate(omega);

    let diameter = g.diameter() as usize;
    let count_short = paths.iter().filter(|p| p.length() <= diameter).count();
    Ok(PathSet {
        source: u,
        target: v,
        paths,
        guarantee: Guarantee {
            count_short,
            bound_short: diameter,
            bound_all: diameter + 1,
        },
    })
}

/// Fewest paths of length at most the diameter that a full set must hold.
pub fn required_short_paths(g: &EnhancedHypercube) -> usize {
    (g.n() - g.k() / 2 - 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::canonical_target;
    use proptest::prelude::*;

    fn q(n: u32, k: u32) -> EnhancedHypercube {
        EnhancedHypercube::new(n, k).unwrap()
    }

    fn dl(v: &[usize]) -> DimensionList {
        DimensionList(v.to_vec())
    }

    /// Same elements in some proper prefix of equal length.
    fn is_proper_prefix_shared(a: &[usize], b: &[usize]) -> bool {
        let set = |s: &[usize]| {
            let mut v = s.to_vec();
            v.sort_unstable();
            v
        };
        let proper = a.len().min(b.len()).min(a.len().max(b.len()) - 1);
        (1..=proper).any(|len| set(&a[..len]) == set(&b[..len]))
    }

    fn assert_disjoint_lists(g: &EnhancedHypercube, lists: &[DimensionList], target: Vertex) {
        let mut owner = std::collections::HashMap::new();
        for (idx, list) in lists.iter().enumerate() {
            let path = realize(g, Vertex::ZERO, list).unwrap();
            assert_eq!(*path.last().unwrap(), target, "list {list}");
            for &x in &path[1..path.len() - 1] {
                assert_ne!(x, target);
                if let Some(prev) = owner.insert(x, idx) {
                    panic!("lists {} and {list} share {x:?}", lists[prev]);
                }
            }
        }
    }

    #[test]
    fn rotations_of_short_lists() {
        let r = cyclic_permutations(&dl(&[1, 2, 3])).unwrap();
        assert_eq!(r, vec![dl(&[1, 2, 3]), dl(&[2, 3, 1]), dl(&[3, 1, 2])]);
        assert_eq!(cyclic_permutations(&dl(&[5])).unwrap(), vec![dl(&[5])]);
        let r = cyclic_permutations(&dl(&[2, 0, 5])).unwrap();
        for a in &r {
            for b in &r {
                if a != b {
                    assert!(!is_proper_prefix_shared(a.entries(), b.entries()));
                }
            }
        }
    }

    #[test]
    fn rotations_reject_bad_lists() {
        assert_eq!(cyclic_permutations(&dl(&[])), Err(Error::EmptyList));
        assert_eq!(
            cyclic_permutations(&dl(&[1, 4, 1])),
            Err(Error::DuplicateEntries(1))
        );
    }

    #[test]
    fn endpoint_examples() {
        let g = q(5, 3);
        assert_eq!(
            g.format_vertex(list_endpoint(&g, Vertex::ZERO, &[2, 0, 5]).unwrap()),
            "10101"
        );
        assert_eq!(
            g.format_vertex(list_endpoint(&g, Vertex::ZERO, &[1]).unwrap()),
            "00001"
        );
        let g = q(4, 3);
        assert_eq!(
            g.format_vertex(list_endpoint(&g, Vertex::ZERO, &[0]).unwrap()),
            "0111"
        );
        assert_eq!(
            list_endpoint(&g, Vertex::ZERO, &[3, 0, 1, 2]),
            Err(Error::CoversComplementBlock { k: 3 })
        );
        assert_eq!(
            list_endpoint(&g, Vertex::ZERO, &[2, 2]),
            Err(Error::DuplicateEntries(2))
        );
    }

    #[test]
    fn realize_example() {
        let g = q(5, 3);
        let p = realize(&g, Vertex::ZERO, &dl(&[2, 0, 5])).unwrap();
        let text: Vec<_> = p.iter().map(|&x| g.format_vertex(x)).collect();
        assert_eq!(text, ["00000", "00010", "00101", "10101"]);
        assert_eq!(realize(&g, Vertex(7), &dl(&[])).unwrap(), vec![Vertex(7)]);
        assert!(realize(&g, Vertex::ZERO, &dl(&[6])).is_err());

        // a class repeated at both ends cancels out
        let p = realize(&g, Vertex::ZERO, &dl(&[4, 2, 0, 5, 4])).unwrap();
        assert_eq!(
            *p.last().unwrap(),
            list_endpoint(&g, Vertex::ZERO, &[2, 0, 5]).unwrap()
        );
    }

    #[test]
    fn case1_small_folded_cube() {
        let g = q(3, 3);
        let lists = construct_case1(&g, 1, 0).unwrap();
        assert_eq!(
            lists,
            vec![dl(&[1]), dl(&[0, 1, 0]), dl(&[2, 1, 2]), dl(&[3, 1, 3])]
        );
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 1, 0));
    }

    #[test]
    fn case1_plain_with_high_part() {
        let g = q(5, 3);
        let lists = construct_case1(&g, 1, 1).unwrap();
        let mut lengths: Vec<_> = lists.iter().map(DimensionList::len).collect();
        lengths.sort();
        assert_eq!(lengths, [2, 2, 4, 4, 4, 4]);
        assert_eq!(&lists[..2], &[dl(&[1, 4]), dl(&[4, 1])]);
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 1, 1));
        assert_eq!(g.format_vertex(canonical_target(&g, 1, 1)), "01001");
    }

    #[test]
    fn case1_rejects_far_targets() {
        let g = q(4, 3);
        assert_eq!(classify(&g, 2, 1).unwrap(), Construction::FarPlain);
        assert_eq!(
            construct_case1(&g, 2, 1),
            Err(Error::WrongCase { i: 2, j: 1 })
        );
        assert_eq!(
            construct_case1(&g, 0, 0),
            Err(Error::WrongCase { i: 0, j: 0 })
        );
    }

    #[test]
    fn case1_crossed_detours() {
        // k = 2, i = 1: classes 0 and 2 are crossed
        let g = q(4, 2);
        let lists = construct_case1(&g, 1, 1).unwrap();
        assert!(lists.contains(&dl(&[0, 3, 2])));
        assert!(lists.contains(&dl(&[2, 3, 0])));
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 1, 1));

        // k = 3, i = 2: classes 1 and 2 are crossed
        let g = q(4, 3);
        let lists = construct_case1(&g, 2, 0).unwrap();
        assert_eq!(
            lists,
            vec![
                dl(&[0, 3]),
                dl(&[3, 0]),
                dl(&[4, 0, 3, 4]),
                dl(&[1, 2]),
                dl(&[2, 1])
            ]
        );
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 2, 0));
    }

    #[test]
    fn case2_examples() {
        let g = q(3, 3);
        let lists = construct_case2(&g, 2, 0).unwrap();
        assert_eq!(
            lists,
            vec![dl(&[1, 2]), dl(&[2, 1]), dl(&[0, 3]), dl(&[3, 0])]
        );
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 2, 0));

        let g = q(4, 3);
        let lists = construct_case2(&g, 2, 1).unwrap();
        assert_eq!(
            lists,
            vec![
                dl(&[1, 2, 4]),
                dl(&[2, 4, 1]),
                dl(&[4, 1, 2]),
                dl(&[0, 4, 3]),
                dl(&[3, 4, 0]),
            ]
        );
        assert!(lists.iter().all(|l| l.len() == 3));
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 2, 1));

        // even k, upper i uses the complement base list
        let g = q(6, 4);
        assert_eq!(classify(&g, 3, 2).unwrap(), Construction::FarComplement);
        let lists = construct_case2(&g, 3, 2).unwrap();
        assert_eq!(lists[0], dl(&[0, 4, 5, 6]));
        assert_eq!(lists[4], dl(&[1, 5, 6, 2, 3]));
        assert_disjoint_lists(&g, &lists, canonical_target(&g, 3, 2));
    }

    #[test]
    fn case2_rejects_near_targets() {
        let g = q(5, 3);
        assert_eq!(
            construct_case2(&g, 1, 1),
            Err(Error::WrongCase { i: 1, j: 1 })
        );
        // j < n - k never reaches the far case
        for n in 3..=9 {
            for k in 2..=n {
                let g = q(n, k);
                for i in 0..=k {
                    for j in 0..n - k {
                        if i + j > 0 {
                            let c = classify(&g, i, j).unwrap();
                            assert!(matches!(
                                c,
                                Construction::ShortPlain | Construction::ShortComplement
                            ));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn every_canonical_pair_gives_disjoint_lists() {
        for n in 3..=12 {
            for k in 2..=n {
                let g = q(n, k);
                for i in 0..=k {
                    for j in 0..=n - k {
                        if i + j == 0 {
                            continue;
                        }
                        let lists = canonical_lists(&g, i, j).unwrap();
                        assert_eq!(lists.len(), g.degree());
                        assert_disjoint_lists(&g, &lists, canonical_target(&g, i, j));
                        let d = g.diameter() as usize;
                        assert!(lists.iter().all(|l| l.len() <= d + 1));
                        let short = lists.iter().filter(|l| l.len() <= d).count();
                        assert!(short >= required_short_paths(&g));
                    }
                }
            }
        }
    }

    #[test]
    fn disjoint_paths_examples() {
        let g = q(3, 3);
        let ps = disjoint_paths(&g, Vertex(0), Vertex(1), 4).unwrap();
        assert_eq!(ps.lengths(), [1, 3, 3, 3]);
        assert_eq!(
            ps.guarantee,
            Guarantee {
                count_short: 1,
                bound_short: 2,
                bound_all: 3
            }
        );

        let g = q(4, 3);
        let (u, v) = (Vertex(0), g.parse_vertex("1011").unwrap());
        let ps = disjoint_paths(&g, u, v, 5).unwrap();
        assert_eq!(ps.paths.len(), 5);
        assert!(ps.lengths().iter().all(|&l| l <= 4));
        assert!(ps.guarantee.count_short >= 2);
        assert_eq!(disjoint_paths(&g, u, v, 1).unwrap().lengths(), [3]);
    }

    #[test]
    fn single_path_for_adjacent_pair_is_the_edge() {
        let g = q(6, 4);
        let u = Vertex(0b101101);
        for (_, v) in g.neighbors(u) {
            let ps = disjoint_paths(&g, u, v, 1).unwrap();
            assert_eq!(ps.paths[0].vertices, vec![u, v]);
        }
    }

    #[test]
    fn disjoint_paths_argument_errors() {
        let g = q(4, 2);
        assert_eq!(
            disjoint_paths(&g, Vertex(3), Vertex(3), 2),
            Err(Error::DegeneratePair)
        );
        assert_eq!(
            disjoint_paths(&g, Vertex(3), Vertex(1), 6),
            Err(Error::PathCountOutOfRange {
                requested: 6,
                max: 5
            })
        );
        assert!(disjoint_paths(&g, Vertex(3), Vertex(1), 0).is_err());
    }

    #[test]
    fn mapped_dims_match_vertices() {
        let g = q(7, 4);
        let (u, v) = (Vertex(0b1011001), Vertex(0b0110110));
        let ps = disjoint_paths(&g, u, v, 8).unwrap();
        for p in &ps.paths {
            assert_eq!(realize(&g, u, &p.dims).unwrap(), p.vertices);
        }
    }

    proptest! {
        #[test]
        fn rotations_never_share_proper_prefix(set in proptest::sample::subsequence((0usize..=12).collect::<Vec<_>>(), 1..=12).prop_shuffle()) {
            let rotations = cyclic_permutations(&DimensionList(set)).unwrap();
            for (a, ra) in rotations.iter().enumerate() {
                for rb in &rotations[a + 1..] {
                    prop_assert!(!is_proper_prefix_shared(ra.entries(), rb.entries()));
                }
            }
        }

        #[test]
        fn length_profile_is_invariant_under_automorphisms(
            seed in any::<(u64, u64, u64)>(),
            n in 3u32..=9,
        ) {
            let g = q(n, 2 + (seed.2 as u32 % (n - 1)));
            let u = Vertex(seed.0 & g.full_mask());
            let v = Vertex(seed.1 & g.full_mask());
            prop_assume!(u != v);
            let shift = Vertex(seed.2 & g.full_mask());
            let base = disjoint_paths(&g, u, v, g.degree()).unwrap();
            let moved = disjoint_paths(&g, u ^ shift, v ^ shift, g.degree()).unwrap();
            prop_assert_eq!(base.lengths(), moved.lengths());
        }
    }
}
