//! Exact-length simple paths and cycles.

use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, ones, Graph64};

/// The vertices of a cycle in traversal order; the first vertex is the
/// smallest, and the second is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertices, consecutive pairs (cyclically) all edges of `g`.
    pub fn is_valid_for(&self, g: &Graph64, length: usize) -> bool {
        let vs = &self.vertices;
        if vs.len() != length || length < 3 {
            return false;
        }
        let mut seen = 0u64;
        for &v in vs {
            if v >= g.n || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        (0..length).all(|i| g.has_edge(vs[i], vs[(i + 1) % length]))
    }
}

/// Breadth-first distances to `target`; unreachable vertices get `u8::MAX`.
fn distances_to(g: &Graph64, target: usize) -> [u8; 64] {
    let mut dist = [u8::MAX; 64];
    dist[target] = 0;
    let mut frontier = 1u64 << target;
    let mut seen = frontier;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0u64;
        for v in ones(frontier) {
            next |= g.adj[v];
        }
        next &= !seen;
        for v in ones(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

struct PathSearch<'a> {
    g: &'a Graph64,
    target: usize,
    dist: [u8; 64],
    path: Vec<usize>,
}

impl PathSearch<'_> {
    /// Extends the current path from `cur` to `target` using exactly `k`
    /// more edges, avoiding `visited`. Neighbours are tried in ascending
    /// order, so the first success is the lexicographically least path.
    fn extend(&mut self, cur: usize, k: usize, visited: u64) -> bool {
        let g = self.g;
        if k == 1 {
            return g.has_edge(cur, self.target);
        }
        let cand = g.adj[cur] & !visited & !(1u64 << self.target);
        if k == 2 {
            let m = cand & g.adj[self.target];
            if m != 0 {
                self.path.push(m.trailing_zeros() as usize);
                return true;
            }
            return false;
        }
        for c in ones(cand) {
            if self.dist[c] as usize > k - 1 {
                continue;
            }
            self.path.push(c);
            if self.extend(c, k - 1, visited | 1 << c) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// A simple `u`-`v` path with exactly `interior_len` vertices between the
/// endpoints (so `interior_len + 1` edges), or `None`.
pub fn find_path_between(
    g: &Graph64,
    u: usize,
    v: usize,
    interior_len: usize,
) -> Option<Vec<usize>> {
    assert_ne!(u, v, "path endpoints must differ");
    if u >= g.n || v >= g.n || interior_len + 2 > g.n {
        return None;
    }
    let mut s = PathSearch { g, target: v, dist: distances_to(g, v), path: vec![u] };
    if s.extend(u, interior_len + 1, 1 << u) {
        s.path.push(v);
        Some(s.path)
    } else {
        None
    }
}

/// Boolean form of [`find_path_between`] used by the search's incremental
/// cycle check.
pub fn path_exists(g: &Graph64, u: usize, v: usize, interior_len: usize) -> bool {
    if interior_len + 2 > g.n {
        return false;
    }
    // 2-3 edge paths need no search state
    match interior_len {
        0 => return g.has_edge(u, v),
        1 => return g.adj[u] & g.adj[v] != 0,
        _ => {}
    }
    let mut s = PathSearch { g, target: v, dist: distances_to(g, v), path: Vec::new() };
    s.extend(u, interior_len + 1, 1 << u)
}

/// The lexicographically least cycle on exactly `length` vertices, if any.
pub fn find_cycle_in(g: &Graph64, length: usize) -> Option<CycleWitness> {
    if length < 3 || length > g.n {
        return None;
    }
    for s in 0..g.n {
        let below = low_mask(s);
        // restrict to vertices >= s so s is the cycle minimum
        let mut sub = *g;
        for v in s..g.n {
            sub.adj[v] &= !below;
        }
        if (s..g.n).filter(|&v| sub.adj[v] != 0).count() < length {
            break;
        }
        let dist = distances_to(&sub, s);
        for a in ones(sub.adj[s]) {
            let mut search = PathSearch { g: &sub, target: s, dist, path: vec![s, a] };
            if search.extend(a, length - 1, below | 1 << s | 1 << a) {
                return Some(CycleWitness { vertices: search.path });
            }
        }
    }
    None
}
