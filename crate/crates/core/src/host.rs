//! Complete multipartite hosts `K_{j×t}` and the edge sets that live on them.
//!
//! Vertices are numbered parts-ascending, then slots-ascending. Host edges are
//! the cross-part pairs `(u, v)` with `u < v`, indexed in lexicographic order.
//! Every serialized artifact in this crate uses that ordering.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::Graph64;
use crate::{Error, Result};

/// Largest host the crate accepts, in vertices.
pub const MAX_VERTICES: usize = 64;

/// The shape of a host `K_{s_1, …, s_j}`: one entry per part.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeDescriptor", into = "ShapeDescriptor")]
pub struct PartiteShape {
    parts: Vec<usize>,
    #[serde(skip)]
    part_of: Vec<u8>,
    #[serde(skip)]
    offsets: Vec<usize>,
    // Index of the first host edge (u, ·) for each u.
    #[serde(skip)]
    row_start: Vec<usize>,
}

/// JSON form of a shape: `{"parts":[t, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeDescriptor {
    pub parts: Vec<usize>,
}

impl TryFrom<ShapeDescriptor> for PartiteShape {
    type Error = Error;

    fn try_from(d: ShapeDescriptor) -> Result<Self> {
        PartiteShape::new(d.parts)
    }
}

impl From<PartiteShape> for ShapeDescriptor {
    fn from(s: PartiteShape) -> Self {
        ShapeDescriptor { parts: s.parts }
    }
}

impl fmt::Debug for PartiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartiteShape({:?})", self.parts)
    }
}

impl fmt::Display for PartiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let uniform = self.parts.windows(2).all(|w| w[0] == w[1]);
        if uniform {
            write!(f, "K_{{{}x{}}}", self.parts.len(), self.parts[0])
        } else {
            let sizes: Vec<String> = self.parts.iter().map(|s| s.to_string()).collect();
            write!(f, "K_{{{}}}", sizes.join(","))
        }
    }
}

impl PartiteShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape("a host needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape("part sizes must be positive".into()));
        }
        let total: usize = parts.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::HostTooLarge { vertices: total, cap: MAX_VERTICES });
        }
        let mut part_of = Vec::with_capacity(total);
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        for (i, &s) in parts.iter().enumerate() {
            offsets.push(acc);
            acc += s;
            part_of.extend(std::iter::repeat_n(i as u8, s));
        }
        offsets.push(acc);
        let mut row_start = Vec::with_capacity(total + 1);
        let mut count = 0;
        for u in 0..total {
            row_start.push(count);
            // vertices after u outside its part
            let end_of_part = offsets[part_of[u] as usize + 1];
            count += total - end_of_part;
        }
        row_start.push(count);
        Ok(PartiteShape { parts, part_of, offsets, row_start })
    }

    /// `K_{j×t}`.
    pub fn uniform(j: usize, t: usize) -> Result<Self> {
        Self::new(vec![t; j])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn total_vertices(&self) -> usize {
        self.part_of.len()
    }

    pub fn host_edge_count(&self) -> usize {
        self.row_start[self.total_vertices()]
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v] as usize
    }

    /// Linear index range of the vertices of `part`.
    pub fn part_range(&self, part: usize) -> std::ops::Range<usize> {
        self.offsets[part]..self.offsets[part + 1]
    }

    pub fn is_host_pair(&self, u: usize, v: usize) -> bool {
        let n = self.total_vertices();
        u < n && v < n && u != v && self.part_of[u] != self.part_of[v]
    }

    /// Index of host edge `{u, v}` in the canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if !self.is_host_pair(u, v) {
            return None;
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let end_of_part = self.offsets[self.part_of(u) + 1];
        Some(self.row_start[u] + (v - end_of_part))
    }

    /// Inverse of [`edge_index`](Self::edge_index).
    pub fn edge_at(&self, index: usize) -> (usize, usize) {
        let u = self.row_start.partition_point(|&s| s <= index) - 1;
        let end_of_part = self.offsets[self.part_of(u) + 1];
        (u, end_of_part + index - self.row_start[u])
    }

    pub fn vertex(&self, v: usize) -> VertexRef {
        let part = self.part_of(v);
        VertexRef { part, slot: v - self.offsets[part] }
    }

    pub fn linear(&self, v: VertexRef) -> Result<usize> {
        if v.part >= self.parts.len() || v.slot >= self.parts[v.part] {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.offsets[v.part] + v.slot)
    }

    /// Adjacency masks of the full host.
    pub fn host_graph(&self) -> Graph64 {
        let n = self.total_vertices();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut g = Graph64::empty(n);
        for p in 0..self.num_parts() {
            let r = self.part_range(p);
            let own = mask_range(r.start, r.end);
            for v in r {
                g.adj[v] = all & !own;
            }
        }
        g
    }
}

fn mask_range(start: usize, end: usize) -> u64 {
    let hi = if end == 64 { u64::MAX } else { (1u64 << end) - 1 };
    let lo = (1u64 << start) - 1;
    hi & !lo
}

/// A vertex `x^{part}_{slot}`, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub part: usize,
    pub slot: usize,
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}^{}", self.slot + 1, self.part + 1)
    }
}

/// All host edges of `shape` in canonical order.
pub fn host_edges(shape: &PartiteShape) -> Vec<(usize, usize)> {
    (0..shape.host_edge_count()).map(|i| shape.edge_at(i)).collect()
}

/// A subgraph of a fixed host, stored as a bitset over host edge indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    shape: PartiteShape,
    words: Vec<u64>,
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeSet")
            .field("shape", &self.shape)
            .field("edges", &self.pairs())
            .finish()
    }
}

impl EdgeSet {
    pub fn empty(shape: &PartiteShape) -> Self {
        let words = vec![0; shape.host_edge_count().div_ceil(64)];
        EdgeSet { shape: shape.clone(), words }
    }

    pub fn full(shape: &PartiteShape) -> Self {
        let mut set = Self::empty(shape);
        let m = shape.host_edge_count();
        for (i, w) in set.words.iter_mut().enumerate() {
            let remaining = m - i * 64;
            *w = if remaining >= 64 { u64::MAX } else { (1u64 << remaining) - 1 };
        }
        set
    }

    pub fn from_pairs<I>(shape: &PartiteShape, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = Self::empty(shape);
        for (u, v) in pairs {
            set.insert(u, v)?;
        }
        Ok(set)
    }

    /// Builds the edge set from adjacency masks; every pair must be a host edge.
    pub fn from_graph(shape: &PartiteShape, g: &Graph64) -> Result<Self> {
        if g.n != shape.total_vertices() {
            return Err(Error::ShapeMismatch(format!(
                "graph has {} vertices, shape {} has {}",
                g.n,
                shape,
                shape.total_vertices()
            )));
        }
        Self::from_pairs(shape, g.edges())
    }

    pub fn shape(&self) -> &PartiteShape {
        &self.shape
    }

    pub fn insert(&mut self, u: usize, v: usize) -> Result<()> {
        let i = self.index_of(u, v)?;
        self.words[i / 64] |= 1 << (i % 64);
        Ok(())
    }

    pub fn remove(&mut self, u: usize, v: usize) -> Result<()> {
        let i = self.index_of(u, v)?;
        self.words[i / 64] &= !(1 << (i % 64));
        Ok(())
    }

    fn index_of(&self, u: usize, v: usize) -> Result<usize> {
        self.shape.edge_index(u, v).ok_or_else(|| {
            if u < self.shape.total_vertices()
                && v < self.shape.total_vertices()
                && u != v
            {
                Error::WithinPartEdge(u, v)
            } else {
                Error::NotAHostEdge(u, v)
            }
        })
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.shape
            .edge_index(u, v)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set_index(&mut self, i: usize, on: bool) {
        if on {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.indices().map(|i| self.shape.edge_at(i)).collect()
    }

    pub fn graph(&self) -> Graph64 {
        let mut g = Graph64::empty(self.shape.total_vertices());
        for (u, v) in self.indices().map(|i| self.shape.edge_at(i)) {
            g.add_edge(u, v);
        }
        g
    }

    /// Host-relative complement: host edges not in `self`.
    pub fn complement(&self) -> EdgeSet {
        let full = EdgeSet::full(&self.shape);
        let words = self
            .words
            .iter()
            .zip(&full.words)
            .map(|(a, f)| !a & f)
            .collect();
        EdgeSet { shape: self.shape.clone(), words }
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> Result<bool> {
        self.same_host(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0))
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_host(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Ok(EdgeSet { shape: self.shape.clone(), words })
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_host(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(EdgeSet { shape: self.shape.clone(), words })
    }

    fn same_host(&self, other: &EdgeSet) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.shape, other.shape)));
        }
        Ok(())
    }
}

/// Free-function form of [`EdgeSet::complement`], checked against `shape`.
pub fn complement_in_host(shape: &PartiteShape, edges: &EdgeSet) -> Result<EdgeSet> {
    if edges.shape() != shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", edges.shape(), shape)));
    }
    Ok(edges.complement())
}

/// A red/blue split of a host. Blue is everything the red set leaves out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    red: EdgeSet,
}

impl Coloring {
    pub fn new(red: EdgeSet) -> Self {
        Coloring { red }
    }

    pub fn all_blue(shape: &PartiteShape) -> Self {
        Coloring { red: EdgeSet::empty(shape) }
    }

    pub fn all_red(shape: &PartiteShape) -> Self {
        Coloring { red: EdgeSet::full(shape) }
    }

    pub fn shape(&self) -> &PartiteShape {
        self.red.shape()
    }

    pub fn red(&self) -> &EdgeSet {
        &self.red
    }

    pub fn blue(&self) -> EdgeSet {
        self.red.complement()
    }

    /// Removes the vertex `v` from the host. A part left empty disappears,
    /// which is only allowed when `allow_empty_part` is set.
    pub fn delete_slot(&self, v: VertexRef, allow_empty_part: bool) -> Result<Coloring> {
        let shape = self.shape();
        let removed = shape.linear(v)?;
        let mut parts = shape.parts().to_vec();
        if parts[v.part] == 1 {
            if !allow_empty_part || parts.len() == 1 {
                return Err(Error::SlotDeletion(format!(
                    "part {} of {} has a single vertex",
                    v.part + 1,
                    shape
                )));
            }
            parts.remove(v.part);
        } else {
            parts[v.part] -= 1;
        }
        let reduced = PartiteShape::new(parts)?;
        let relabel = |x: usize| if x > removed { x - 1 } else { x };
        let pairs = self
            .red
            .pairs()
            .into_iter()
            .filter(|&(a, b)| a != removed && b != removed)
            .map(|(a, b)| (relabel(a), relabel(b)));
        Ok(Coloring::new(EdgeSet::from_pairs(&reduced, pairs)?))
    }

    /// Applies a host automorphism: vertex `(p, s)` goes to
    /// `(part_perm[p], slot_perms[p][s])`.
    pub fn permute(&self, part_perm: &[usize], slot_perms: &[Vec<usize>]) -> Result<Coloring> {
        let map = automorphism_map(self.shape(), part_perm, slot_perms)?;
        let pairs = self.red.pairs().into_iter().map(|(a, b)| (map[a], map[b]));
        Ok(Coloring::new(EdgeSet::from_pairs(self.shape(), pairs)?))
    }
}

/// Validates a (part, slot) permutation pair and returns it as a vertex map.
pub fn automorphism_map(
    shape: &PartiteShape,
    part_perm: &[usize],
    slot_perms: &[Vec<usize>],
) -> Result<Vec<usize>> {
    let j = shape.num_parts();
    if part_perm.len() != j || slot_perms.len() != j {
        return Err(Error::BadPermutation(format!("expected {j} part entries")));
    }
    if !is_permutation(part_perm) {
        return Err(Error::BadPermutation(format!("{part_perm:?} is not a permutation")));
    }
    for (p, &q) in part_perm.iter().enumerate() {
        if shape.parts()[p] != shape.parts()[q] {
            return Err(Error::BadPermutation(format!(
                "part {} (size {}) cannot map to part {} (size {})",
                p + 1,
                shape.parts()[p],
                q + 1,
                shape.parts()[q]
            )));
        }
        if slot_perms[p].len() != shape.parts()[p] || !is_permutation(&slot_perms[p]) {
            return Err(Error::BadPermutation(format!(
                "slot permutation for part {} is invalid",
                p + 1
            )));
        }
    }
    let mut map = vec![0; shape.total_vertices()];
    for (v, image) in map.iter_mut().enumerate() {
        let r = shape.vertex(v);
        let q = part_perm[r.part];
        *image = shape.part_range(q).start + slot_perms[r.part][r.slot];
    }
    Ok(map)
}

/// Free-function form of [`Coloring::permute`].
pub fn part_slot_permute(
    coloring: &Coloring,
    part_perm: &[usize],
    slot_perms: &[Vec<usize>],
) -> Result<Coloring> {
    coloring.permute(part_perm, slot_perms)
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_edge_count(parts: &[usize]) -> usize {
        let shape = PartiteShape::new(parts.to_vec()).unwrap();
        let n = shape.total_vertices();
        let mut c = 0;
        for u in 0..n {
            for v in u + 1..n {
                if shape.part_of(u) != shape.part_of(v) {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn host_edges_small_shapes() {
        let s = PartiteShape::new(vec![1, 1]).unwrap();
        assert_eq!(host_edges(&s), vec![(0, 1)]);
        let s = PartiteShape::uniform(5, 2).unwrap();
        assert_eq!(host_edges(&s).len(), 40);
        assert_eq!(brute_edge_count(&[2, 2, 2, 2, 2]), 40);
        let s = PartiteShape::uniform(7, 1).unwrap();
        assert_eq!(host_edges(&s).len(), 21);
    }

    #[test]
    fn edge_index_round_trips() {
        for parts in [vec![3, 1, 2], vec![2, 2, 2, 2], vec![1; 9], vec![4, 4]] {
            let s = PartiteShape::new(parts.clone()).unwrap();
            assert_eq!(s.host_edge_count(), brute_edge_count(&parts));
            let edges = host_edges(&s);
            assert!(edges.windows(2).all(|w| w[0] < w[1]));
            for (i, &(u, v)) in edges.iter().enumerate() {
                assert_eq!(s.edge_index(u, v), Some(i));
                assert_eq!(s.edge_index(v, u), Some(i));
            }
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(PartiteShape::new(vec![]).is_err());
        assert!(PartiteShape::new(vec![2, 0]).is_err());
        assert!(matches!(
            PartiteShape::uniform(13, 5),
            Err(Error::HostTooLarge { .. })
        ));
        assert!(PartiteShape::uniform(16, 4).is_ok());
    }

    #[test]
    fn within_part_pairs_are_rejected() {
        let s = PartiteShape::uniform(3, 2).unwrap();
        let mut e = EdgeSet::empty(&s);
        assert!(matches!(e.insert(0, 1), Err(Error::WithinPartEdge(0, 1))));
        assert!(e.insert(0, 2).is_ok());
        assert!(e.contains(2, 0));
    }

    #[test]
    fn complement_of_empty_and_full() {
        let s = PartiteShape::uniform(4, 3).unwrap();
        assert_eq!(EdgeSet::empty(&s).complement(), EdgeSet::full(&s));
        assert_eq!(EdgeSet::full(&s).complement(), EdgeSet::empty(&s));
        assert_eq!(EdgeSet::full(&s).len(), s.host_edge_count());
    }

    #[test]
    fn clique_complement_is_triangle_join() {
        // j = 7, t = 1: red is a clique on the last four vertices
        let s = PartiteShape::uniform(7, 1).unwrap();
        let red = EdgeSet::from_pairs(
            &s,
            (3..7).flat_map(|u| (u + 1..7).map(move |v| (u, v))),
        )
        .unwrap();
        let blue = complement_in_host(&s, &red).unwrap();
        assert_eq!(blue.len(), 21 - 6);
        for (u, v) in blue.pairs() {
            assert!(u < 3, "blue edge {u}-{v} misses the triangle");
        }
    }

    #[test]
    fn cross_shape_operations_fail() {
        let a = EdgeSet::empty(&PartiteShape::uniform(3, 1).unwrap());
        let b = EdgeSet::empty(&PartiteShape::uniform(4, 1).unwrap());
        assert!(a.union(&b).is_err());
        assert!(complement_in_host(b.shape(), &a).is_err());
    }

    #[test]
    fn delete_slot_reindexes() {
        let s = PartiteShape::uniform(2, 2).unwrap();
        let c = Coloring::all_red(&s);
        let d = c.delete_slot(VertexRef { part: 0, slot: 1 }, false).unwrap();
        assert_eq!(d.shape().parts(), &[1, 2]);
        assert_eq!(d, Coloring::all_red(d.shape()));

        let single = PartiteShape::new(vec![1]).unwrap();
        assert!(Coloring::all_red(&single)
            .delete_slot(VertexRef { part: 0, slot: 0 }, false)
            .is_err());

        let s = PartiteShape::new(vec![1, 2]).unwrap();
        let c = Coloring::all_red(&s);
        assert!(c.delete_slot(VertexRef { part: 0, slot: 0 }, false).is_err());
        let d = c.delete_slot(VertexRef { part: 0, slot: 0 }, true).unwrap();
        assert_eq!(d.shape().parts(), &[2]);
        assert!(d.red().is_empty());
    }

    #[test]
    fn permutation_checks() {
        let s = PartiteShape::new(vec![2, 2, 1]).unwrap();
        let c = Coloring::new(EdgeSet::from_pairs(&s, [(0, 2), (1, 4)]).unwrap());
        let id = c
            .permute(&[0, 1, 2], &[vec![0, 1], vec![0, 1], vec![0]])
            .unwrap();
        assert_eq!(id, c);
        assert!(c.permute(&[2, 1, 0], &[vec![0, 1], vec![0, 1], vec![0]]).is_err());
        let swapped = c
            .permute(&[1, 0, 2], &[vec![1, 0], vec![0, 1], vec![0]])
            .unwrap();
        assert_eq!(swapped.red().pairs(), vec![(0, 3), (2, 4)]);
    }
}
