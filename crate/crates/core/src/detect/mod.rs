//! Exact decision procedures for stripes (`nK_2`) and cycles `C_L`.

mod cycle;
mod matching;

pub use cycle::{find_cycle_in, find_path_between, path_exists, CycleWitness};
pub use matching::{canonical_maximum_matching, matching_number_of, Matching, MatchingWitness};

use crate::host::EdgeSet;

/// Matching number of `edges`, with the least maximum matching as witness.
pub fn matching_number(edges: &EdgeSet) -> (usize, MatchingWitness) {
    let w = canonical_maximum_matching(&edges.graph());
    (w.len(), w)
}

/// Whether `edges` contains `n` pairwise disjoint edges.
pub fn contains_stripe(edges: &EdgeSet, n: usize) -> bool {
    assert!(n >= 1, "stripes have at least one edge");
    matching_number_of(&edges.graph()) >= n
}

/// A cycle on exactly `length` distinct vertices, if `edges` has one.
pub fn find_cycle(edges: &EdgeSet, length: usize) -> Option<CycleWitness> {
    find_cycle_in(&edges.graph(), length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::PartiteShape;

    #[test]
    fn star_has_no_two_stripe() {
        let shape = PartiteShape::uniform(7, 1).unwrap();
        let star = EdgeSet::from_pairs(&shape, (1..7).map(|v| (0, v))).unwrap();
        assert!(!contains_stripe(&star, 2));
        assert!(contains_stripe(&star, 1));
    }

    #[test]
    fn triangle_stripes() {
        let tri = EdgeSet::full(&PartiteShape::uniform(3, 1).unwrap());
        assert!(contains_stripe(&tri, 1));
        assert!(!contains_stripe(&tri, 2));
        assert_eq!(matching_number(&EdgeSet::empty(tri.shape())).0, 0);
    }

    #[test]
    fn complete_multipartite_red() {
        // K_{4x3}: 12 vertices, perfect matching
        let red = EdgeSet::full(&PartiteShape::uniform(4, 3).unwrap());
        let (nu, w) = matching_number(&red);
        assert_eq!(nu, 6);
        assert!(w.is_valid_for(&red.graph()));
    }

    #[test]
    fn full_k7_has_hamilton_cycle() {
        let full = EdgeSet::full(&PartiteShape::uniform(7, 1).unwrap());
        let w = find_cycle(&full, 7).unwrap();
        assert!(w.is_valid_for(&full.graph(), 7));
    }
}
