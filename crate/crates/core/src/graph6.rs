//! graph6 encoding of edge sets, using the host's linear vertex order.

use crate::bits::Graph64;
use crate::host::{EdgeSet, PartiteShape};
use crate::{Error, Result};

pub fn encode_graph(g: &Graph64) -> String {
    let n = g.n;
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode_graph(text: &str) -> Result<Graph64> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |why: &str| Error::Graph6(why.to_string());
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside the printable graph6 range"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty input")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(bad("graphs beyond 258047 vertices are not supported"));
            }
            if bytes.len() < 4 {
                return Err(bad("truncated vertex count"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > 64 {
        return Err(Error::HostTooLarge { vertices: n, cap: 64 });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph64::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(bad("non-zero padding bits"));
        }
    }
    Ok(g)
}

pub fn encode_graph6(edges: &EdgeSet) -> String {
    encode_graph(&edges.graph())
}

/// Decodes `text` onto `shape`; fails on a vertex-count mismatch or on any
/// edge inside a part.
pub fn decode_graph6(text: &str, shape: &PartiteShape) -> Result<EdgeSet> {
    let g = decode_graph(text)?;
    if g.n != shape.total_vertices() {
        return Err(Error::Graph6(format!(
            "graph has {} vertices but {} has {}",
            g.n,
            shape,
            shape.total_vertices()
        )));
    }
    EdgeSet::from_graph(shape, &g)
}
