//! Lex-leader pruning against a set of host automorphisms.
//!
//! Assignments are compared position by position in search order, red
//! before blue. A partial assignment is pruned when some listed automorphism
//! maps it to something strictly smaller on the already-decided prefix. The
//! generator list need not be a group; a smaller list prunes less but is
//! never unsound.

use crate::host::PartiteShape;

/// Default cap on the number of automorphisms checked.
pub const DEFAULT_GENERATOR_CAP: usize = 4096;

/// Vertex maps of part transpositions (equal sizes only), slot
/// transpositions, and their pairwise products, truncated to `cap`.
pub fn generator_maps(shape: &PartiteShape, cap: usize) -> Vec<Vec<usize>> {
    let n = shape.total_vertices();
    let identity: Vec<usize> = (0..n).collect();
    let mut part_swaps = Vec::new();
    for p in 0..shape.num_parts() {
        for q in p + 1..shape.num_parts() {
            if shape.parts()[p] != shape.parts()[q] {
                continue;
            }
            let mut map = identity.clone();
            for (a, b) in shape.part_range(p).zip(shape.part_range(q)) {
                map[a] = b;
                map[b] = a;
            }
            part_swaps.push(map);
        }
    }
    let mut slot_swaps = Vec::new();
    for p in 0..shape.num_parts() {
        let r = shape.part_range(p);
        for a in r.clone() {
            for b in a + 1..r.end {
                let mut map = identity.clone();
                map[a] = b;
                map[b] = a;
                slot_swaps.push(map);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    out.extend(part_swaps.iter().cloned());
    out.extend(slot_swaps.iter().cloned());
    'products: for p in &part_swaps {
        for s in &slot_swaps {
            if out.len() >= cap {
                break 'products;
            }
            out.push((0..n).map(|v| p[s[v]]).collect());
        }
    }
    out.truncate(cap);
    out
}

fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (v, &img) in map.iter().enumerate() {
        inv[img] = v;
    }
    inv
}

/// Position tables for the lex-leader test over a fixed edge order.
#[derive(Clone, Debug)]
pub struct LexLeader {
    // sources[g][i]: the position whose value the image assignment shows at i
    sources: Vec<Vec<u32>>,
}

impl LexLeader {
    /// `order[i]` is the host edge decided at depth `i`; `position` maps a
    /// vertex pair back to its depth.
    pub fn new(
        shape: &PartiteShape,
        order: &[(usize, usize)],
        position: impl Fn(usize, usize) -> usize,
        cap: usize,
    ) -> Self {
        let sources = generator_maps(shape, cap)
            .into_iter()
            .map(|map| {
                let inv = invert(&map);
                order
                    .iter()
                    .map(|&(a, b)| position(inv[a], inv[b]) as u32)
                    .collect()
            })
            .collect();
        LexLeader { sources }
    }

    pub fn generator_count(&self) -> usize {
        self.sources.len()
    }

    /// True when some automorphism image of the decided prefix
    /// `assignment` is lexicographically smaller (values: 0 red, 1 blue).
    pub fn prunes(&self, assignment: &[u8]) -> bool {
        let depth = assignment.len();
        'gens: for src in &self.sources {
            for (i, &a) in assignment.iter().enumerate() {
                let j = src[i] as usize;
                if j >= depth {
                    continue 'gens;
                }
                let b = assignment[j];
                if b < a {
                    return true;
                }
                if b > a {
                    continue 'gens;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::host_edges;

    fn leader(shape: &PartiteShape) -> (Vec<(usize, usize)>, LexLeader) {
        let order = host_edges(shape);
        let s2 = shape.clone();
        let lex = LexLeader::new(shape, &order, |a, b| s2.edge_index(a, b).unwrap(), 4096);
        (order, lex)
    }

    #[test]
    fn generator_counts() {
        let k9 = PartiteShape::uniform(9, 1).unwrap();
        assert_eq!(generator_maps(&k9, 4096).len(), 36);
        let k52 = PartiteShape::uniform(5, 2).unwrap();
        assert_eq!(generator_maps(&k52, 4096).len(), 10 + 5 + 50);
        assert_eq!(generator_maps(&k52, 12).len(), 12);
        let ragged = PartiteShape::new(vec![2, 1, 1]).unwrap();
        assert_eq!(generator_maps(&ragged, 4096).len(), 1 + 1 + 1);
    }

    #[test]
    fn empty_prefix_never_pruned() {
        let (_, lex) = leader(&PartiteShape::uniform(4, 2).unwrap());
        assert!(!lex.prunes(&[]));
    }

    #[test]
    fn triangle_first_edge() {
        // K_3, order (0,1), (0,2), (1,2); red = 0 is smaller
        let (_, lex) = leader(&PartiteShape::uniform(3, 1).unwrap());
        assert!(!lex.prunes(&[0]));
        assert!(!lex.prunes(&[1]));
        // first red, second blue: swapping 1 and 2 maps to (red at (0,2))...
        // image of [0,1] under (1 2) is [1,0] which is larger, so kept
        assert!(!lex.prunes(&[0, 1]));
        // [1,0]: swapping 1,2 gives [0,1] < [1,0]
        assert!(lex.prunes(&[1, 0]));
    }

    #[test]
    fn single_red_edge_orbit_on_k22() {
        // K_{2x2}: 4 host edges, all in one orbit. Among the four
        // assignments with exactly one red edge only one survives.
        let shape = PartiteShape::uniform(2, 2).unwrap();
        let (order, lex) = leader(&shape);
        assert_eq!(order.len(), 4);
        let survivors = (0..4)
            .filter(|&r| {
                let full: Vec<u8> = (0..4).map(|i| if i == r { 0 } else { 1 }).collect();
                (1..=4).all(|d| !lex.prunes(&full[..d]))
            })
            .count();
        assert_eq!(survivors, 1);
    }
}
