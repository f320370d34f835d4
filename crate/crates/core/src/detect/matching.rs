//! Maximum matching in general graphs (Edmonds' blossom search).

use serde::{Deserialize, Serialize};

use crate::bits::{ones, Graph64};

pub(crate) const UNMATCHED: u8 = u8::MAX;

/// Pairwise vertex-disjoint edges, each given as `(u, v)` with `u < v`,
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingWitness {
    pub edges: Vec<(usize, usize)>,
}

impl MatchingWitness {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks disjointness and membership in `g`.
    pub fn is_valid_for(&self, g: &Graph64) -> bool {
        let mut used = 0u64;
        for &(u, v) in &self.edges {
            if u >= g.n || v >= g.n || !g.has_edge(u, v) {
                return false;
            }
            let m = 1u64 << u | 1u64 << v;
            if used & m != 0 {
                return false;
            }
            used |= m;
        }
        true
    }
}

/// Mate array plus matching size; the state kept by the search between
/// single-edge augmentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Matching {
    pub mate: [u8; 64],
    pub size: usize,
}

impl Default for Matching {
    fn default() -> Self {
        Matching { mate: [UNMATCHED; 64], size: 0 }
    }
}

impl Matching {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..64)
            .filter(|&v| self.mate[v] != UNMATCHED && (self.mate[v] as usize) > v)
            .map(|v| (v, self.mate[v] as usize))
            .collect()
    }

    pub fn is_free(&self, v: usize) -> bool {
        self.mate[v] == UNMATCHED
    }

    /// Maximum matching of `g`, greedy start then augmentation from every
    /// free vertex.
    pub fn maximum(g: &Graph64) -> Matching {
        let mut m = Matching::default();
        for u in 0..g.n {
            if m.is_free(u) {
                if let Some(v) = ones(g.adj[u]).find(|&v| m.is_free(v)) {
                    m.mate[u] = v as u8;
                    m.mate[v] = u as u8;
                    m.size += 1;
                }
            }
        }
        for r in 0..g.n {
            if m.is_free(r) && g.adj[r] != 0 {
                m.augment_from(g, r);
            }
        }
        m
    }

    /// Updates a maximum matching of `g - uv` into one of `g`, where `uv`
    /// has just been added to `g`. Returns whether the size grew.
    pub fn after_edge_added(&mut self, g: &Graph64, u: usize, v: usize) -> bool {
        if self.is_free(u) && self.is_free(v) {
            self.mate[u] = v as u8;
            self.mate[v] = u as u8;
            self.size += 1;
            return true;
        }
        // Any augmenting path now runs through uv and ends at two free
        // vertices with red neighbours.
        let candidates = g.support() & !self.matched_mask();
        if candidates.count_ones() < 2 {
            return false;
        }
        if self.is_free(u) {
            return self.augment_from(g, u);
        }
        if self.is_free(v) {
            return self.augment_from(g, v);
        }
        for r in ones(candidates) {
            if self.augment_from(g, r) {
                return true;
            }
        }
        false
    }

    fn matched_mask(&self) -> u64 {
        self.mate
            .iter()
            .enumerate()
            .fold(0, |acc, (v, &m)| if m != UNMATCHED { acc | 1 << v } else { acc })
    }

    /// One alternating-forest search rooted at the free vertex `root`;
    /// flips the path and returns true if it reaches another free vertex.
    pub fn augment_from(&mut self, g: &Graph64, root: usize) -> bool {
        let n = g.n;
        let mut parent = [UNMATCHED; 64];
        let mut base: [u8; 64] = std::array::from_fn(|i| i as u8);
        let mut in_tree = 1u64 << root;
        let mut queue = [0u8; 64];
        let (mut head, mut tail) = (0, 0);
        queue[tail] = root as u8;
        tail += 1;

        while head < tail {
            let v = queue[head] as usize;
            head += 1;
            for to in ones(g.adj[v]) {
                if base[v] == base[to] || self.mate[v] as usize == to {
                    continue;
                }
                let to_is_outer = to == root
                    || (self.mate[to] != UNMATCHED
                        && parent[self.mate[to] as usize] != UNMATCHED);
                if to_is_outer {
                    let cur = self.lca(&base, &parent, root, v, to);
                    let mut blossom = 0u64;
                    self.mark_path(&base, &mut parent, &mut blossom, v, cur, to);
                    self.mark_path(&base, &mut parent, &mut blossom, to, cur, v);
                    for i in 0..n {
                        if blossom >> base[i] & 1 == 1 {
                            base[i] = cur as u8;
                            if in_tree >> i & 1 == 0 {
                                in_tree |= 1 << i;
                                queue[tail] = i as u8;
                                tail += 1;
                            }
                        }
                    }
                } else if parent[to] == UNMATCHED {
                    parent[to] = v as u8;
                    if self.mate[to] == UNMATCHED {
                        self.flip(&parent, to);
                        return true;
                    }
                    let next = self.mate[to] as usize;
                    in_tree |= 1 << next;
                    queue[tail] = next as u8;
                    tail += 1;
                }
            }
        }
        false
    }

    fn lca(&self, base: &[u8; 64], parent: &[u8; 64], root: usize, a: usize, b: usize) -> usize {
        let mut seen = 0u64;
        let mut a = a;
        loop {
            a = base[a] as usize;
            seen |= 1 << a;
            if a == root || self.mate[a] == UNMATCHED {
                break;
            }
            a = parent[self.mate[a] as usize] as usize;
        }
        let mut b = b;
        loop {
            b = base[b] as usize;
            if seen >> b & 1 == 1 {
                return b;
            }
            b = parent[self.mate[b] as usize] as usize;
        }
    }

    fn mark_path(
        &self,
        base: &[u8; 64],
        parent: &mut [u8; 64],
        blossom: &mut u64,
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] as usize != b {
            let m = self.mate[v] as usize;
            *blossom |= 1 << base[v] | 1 << base[m];
            parent[v] = child as u8;
            child = m;
            v = parent[m] as usize;
        }
    }

    fn flip(&mut self, parent: &[u8; 64], mut v: usize) {
        while v != UNMATCHED as usize {
            let pv = parent[v] as usize;
            let ppv = self.mate[pv];
            self.mate[v] = pv as u8;
            self.mate[pv] = v as u8;
            v = ppv as usize;
        }
        self.size += 1;
    }
}

/// Size of a maximum matching of `g`.
pub fn matching_number_of(g: &Graph64) -> usize {
    Matching::maximum(g).size
}

/// The lexicographically least maximum matching (as a sorted edge list).
pub fn canonical_maximum_matching(g: &Graph64) -> MatchingWitness {
    let target = matching_number_of(g);
    let mut rest = *g;
    let mut chosen = Vec::with_capacity(target);
    let mut remaining = target;
    for (u, v) in g.edges() {
        if remaining == 0 {
            break;
        }
        if !rest.has_edge(u, v) {
            continue;
        }
        let mut trial = rest;
        isolate(&mut trial, u);
        isolate(&mut trial, v);
        if matching_number_of(&trial) + 1 == remaining {
            chosen.push((u, v));
            rest = trial;
            remaining -= 1;
        }
    }
    debug_assert_eq!(chosen.len(), target);
    MatchingWitness { edges: chosen }
}

fn isolate(g: &mut Graph64, v: usize) {
    for u in ones(g.adj[v]) {
        g.adj[u] &= !(1 << v);
    }
    g.adj[v] = 0;
}
