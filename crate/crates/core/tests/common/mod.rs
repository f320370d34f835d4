//! Brute-force oracles shared by the integration tests. None of this calls
//! the library's detectors.

#![allow(dead_code)]

use mrn_core::PartiteShape;
use rand::Rng;

/// Adjacency as plain vectors of booleans.
#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Plain {
    pub fn new(n: usize) -> Self {
        Plain { n, adj: vec![vec![false; n]; n] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut g = Plain::new(n);
        for &(u, v) in pairs {
            g.adj[u][v] = true;
            g.adj[v][u] = true;
        }
        g
    }

    pub fn random(n: usize, p: f64, rng: &mut impl Rng) -> Self {
        let mut g = Plain::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.adj[u][v] = true;
                    g.adj[v][u] = true;
                }
            }
        }
        g
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Maximum matching size by branching on the least non-isolated vertex.
pub fn brute_matching_number(g: &Plain) -> usize {
    fn go(g: &Plain, alive: &mut Vec<bool>) -> usize {
        let Some(u) = (0..g.n).find(|&u| alive[u] && (0..g.n).any(|v| alive[v] && g.adj[u][v]))
        else {
            return 0;
        };
        alive[u] = false;
        let mut best = go(g, alive);
        for v in 0..g.n {
            if alive[v] && g.adj[u][v] {
                alive[v] = false;
                best = best.max(1 + go(g, alive));
                alive[v] = true;
            }
        }
        alive[u] = true;
        best
    }
    go(g, &mut vec![true; g.n])
}

/// Every injective vertex tuple of length `len` with consecutive (and
/// closing) adjacency, in lexicographic order; returns the first.
pub fn brute_cycle(g: &Plain, len: usize) -> Option<Vec<usize>> {
    fn go(g: &Plain, len: usize, path: &mut Vec<usize>) -> bool {
        if path.len() == len {
            return g.adj[*path.last().unwrap()][path[0]];
        }
        for v in 0..g.n {
            if path.contains(&v) || !g.adj[*path.last().unwrap()][v] {
                continue;
            }
            path.push(v);
            if go(g, len, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    if len < 3 || len > g.n {
        return None;
    }
    for s in 0..g.n {
        let mut path = vec![s];
        if go(g, len, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Brute-force goodness of a red edge list on a host.
pub fn brute_good(shape: &PartiteShape, red: &[(usize, usize)], n: usize, len: usize) -> bool {
    let total = shape.total_vertices();
    let red_g = Plain::from_pairs(total, red);
    if brute_matching_number(&red_g) >= n {
        return false;
    }
    let mut blue = Plain::new(total);
    for u in 0..total {
        for v in u + 1..total {
            if shape.part_of(u) != shape.part_of(v) && !red_g.adj[u][v] {
                blue.adj[u][v] = true;
                blue.adj[v][u] = true;
            }
        }
    }
    brute_cycle(&blue, len).is_none()
}

/// Cross-part pairs in lexicographic order, computed from part sizes alone.
pub fn brute_host_pairs(parts: &[usize]) -> Vec<(usize, usize)> {
    let part_of: Vec<usize> =
        parts.iter().enumerate().flat_map(|(p, &s)| std::iter::repeat_n(p, s)).collect();
    let mut out = Vec::new();
    for u in 0..part_of.len() {
        for v in u + 1..part_of.len() {
            if part_of[u] != part_of[v] {
                out.push((u, v));
            }
        }
    }
    out
}

/// Whether some 2-coloring of the host is good, by trying all `2^E`.
pub fn brute_exists_good(parts: &[usize], n: usize, len: usize) -> bool {
    let shape = PartiteShape::new(parts.to_vec()).unwrap();
    let pairs = brute_host_pairs(parts);
    assert!(pairs.len() <= 20);
    (0u32..1 << pairs.len()).any(|mask| {
        let red: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        brute_good(&shape, &red, n, len)
    })
}

/// Non-increasing part lists with at least two parts and at most
/// `max_edges` cross-part pairs.
pub fn small_shapes(max_edges: usize) -> Vec<Vec<usize>> {
    fn go(max_edges: usize, largest: usize, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let edges = |p: &[usize]| {
            let t: usize = p.iter().sum();
            (t * t - p.iter().map(|s| s * s).sum::<usize>()) / 2
        };
        if parts.len() >= 2 {
            out.push(parts.clone());
        }
        for s in 1..=largest {
            parts.push(s);
            if edges(parts) <= max_edges {
                go(max_edges, s, parts, out);
            }
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(max_edges, max_edges, &mut Vec::new(), &mut out);
    out
}
