//! Dense adjacency masks for graphs on at most 64 vertices.

/// Simple undirected graph on `n ≤ 64` vertices; `adj[v]` has bit `u` set
/// iff `uv` is an edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph64 {
    pub n: usize,
    pub adj: [u64; 64],
}

impl std::fmt::Debug for Graph64 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph64")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph64 {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "Graph64 holds at most 64 vertices");
        Graph64 { n, adj: [0; 64] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let all = vertex_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in ones(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices with at least one neighbour.
    pub fn support(&self) -> u64 {
        self.adj[..self.n]
            .iter()
            .enumerate()
            .fold(0, |acc, (v, &a)| if a != 0 { acc | 1 << v } else { acc })
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = [u8::MAX; 64];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in ones(self.adj[v]) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Mask with the low `n` bits set.
#[inline]
pub fn vertex_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    vertex_mask(n)
}

/// Iterates the set bits of `m`, lowest first.
#[inline]
pub fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
