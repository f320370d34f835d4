//! Edge-order and value-phase strategies, selected by name.

use crate::host::{host_edges, PartiteShape};
use crate::{Error, Result};

/// Decides the order in which the search fixes host edges.
pub trait EdgeOrder: Send + Sync {
    fn name(&self) -> &'static str;

    /// A permutation of the host edges of `shape`.
    fn order(&self, shape: &PartiteShape) -> Vec<(usize, usize)>;
}

/// Canonical host edge order.
pub struct Natural;

impl EdgeOrder for Natural {
    fn name(&self) -> &'static str {
        "natural"
    }

    fn order(&self, shape: &PartiteShape) -> Vec<(usize, usize)> {
        host_edges(shape)
    }
}

/// Grows a vertex set one vertex at a time, always adding the vertex with
/// the most host neighbours already inside, and emits its edges into the
/// set. Decisions concentrate on few vertices so both prunes fire early.
pub struct DegreeGuided;

impl EdgeOrder for DegreeGuided {
    fn name(&self) -> &'static str {
        "degree-guided"
    }

    fn order(&self, shape: &PartiteShape) -> Vec<(usize, usize)> {
        let total = shape.total_vertices();
        let host = shape.host_graph();
        let mut chosen: u64 = 0;
        let mut sequence: Vec<usize> = Vec::with_capacity(total);
        let mut out = Vec::with_capacity(shape.host_edge_count());
        for _ in 0..total {
            let next = (0..total)
                .filter(|&v| chosen >> v & 1 == 0)
                .max_by_key(|&v| ((host.adj[v] & chosen).count_ones(), std::cmp::Reverse(v)))
                .expect("vertices remain");
            for &u in &sequence {
                if host.has_edge(u, next) {
                    out.push((u.min(next), u.max(next)));
                }
            }
            sequence.push(next);
            chosen |= 1 << next;
        }
        out
    }
}

/// Which color the search tries first on each edge.
pub trait ValuePhase: Send + Sync {
    fn name(&self) -> String;

    fn prefers_red(&self, shape: &PartiteShape, u: usize, v: usize) -> bool;
}

pub struct RedFirst;

impl ValuePhase for RedFirst {
    fn name(&self) -> String {
        "red-first".into()
    }

    fn prefers_red(&self, _: &PartiteShape, _: usize, _: usize) -> bool {
        true
    }
}

pub struct BlueFirst;

impl ValuePhase for BlueFirst {
    fn name(&self) -> String {
        "blue-first".into()
    }

    fn prefers_red(&self, _: &PartiteShape, _: usize, _: usize) -> bool {
        false
    }
}

/// Red first exactly on the edges inside the last `size` vertices, so the
/// first leaf reached has red equal to the host induced on that suffix.
pub struct InducedSuffix {
    pub size: usize,
}

impl ValuePhase for InducedSuffix {
    fn name(&self) -> String {
        format!("induced-suffix:{}", self.size)
    }

    fn prefers_red(&self, shape: &PartiteShape, u: usize, v: usize) -> bool {
        let first = shape.total_vertices().saturating_sub(self.size);
        u >= first && v >= first
    }
}

pub fn edge_order_names() -> Vec<&'static str> {
    vec!["natural", "degree-guided"]
}

pub fn edge_order_by_name(name: &str) -> Result<Box<dyn EdgeOrder>> {
    match name {
        "natural" => Ok(Box::new(Natural)),
        "degree-guided" | "degree_guided" => Ok(Box::new(DegreeGuided)),
        _ => Err(Error::UnknownStrategy {
            kind: "edge order",
            name: name.into(),
            known: edge_order_names().join(", "),
        }),
    }
}

pub fn phase_names() -> Vec<&'static str> {
    vec!["red-first", "blue-first", "induced-suffix:<size>"]
}

pub fn phase_by_name(name: &str) -> Result<Box<dyn ValuePhase>> {
    match name {
        "red-first" => return Ok(Box::new(RedFirst)),
        "blue-first" => return Ok(Box::new(BlueFirst)),
        _ => {}
    }
    if let Some(size) = name.strip_prefix("induced-suffix:") {
        if let Ok(size) = size.parse() {
            return Ok(Box::new(InducedSuffix { size }));
        }
    }
    Err(Error::UnknownStrategy {
        kind: "value phase",
        name: name.into(),
        known: phase_names().join(", "),
    })
}
