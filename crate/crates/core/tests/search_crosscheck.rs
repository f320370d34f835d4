use mrn_core::search::{find_good_coloring, SearchOptions, Symmetry, Verdict};
use mrn_core::{verify_good, PartiteShape};

fn verdict(parts: &[usize], n: usize, opts: &SearchOptions) -> Option<bool> {
    let shape = PartiteShape::new(parts.to_vec()).unwrap();
    match find_good_coloring(&shape, n, 7, opts).unwrap() {
        Verdict::Good { coloring, .. } => {
            assert!(verify_good(&coloring, n, 7).is_good);
            Some(true)
        }
        Verdict::Exhausted(_) => Some(false),
        Verdict::BudgetExceeded(_) => None,
    }
}

fn all_option_sets() -> Vec<SearchOptions> {
    let mut out = Vec::new();
    for symmetry in [Symmetry::None, Symmetry::LexLeader] {
        for dominance in [false, true] {
            for edge_order in ["natural", "degree-guided"] {
                for portfolio in [false, true] {
                    for threads in [1, 3] {
                        out.push(SearchOptions {
                            symmetry,
                            dominance,
                            edge_order: edge_order.into(),
                            portfolio,
                            threads,
                            ..SearchOptions::default()
                        });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn certified_hosts_agree_across_options() {
    for (parts, n) in [
        (vec![1; 8], 2),
        (vec![1; 9], 3),
        (vec![2; 5], 2),
        (vec![2; 6], 2),
        (vec![2; 7], 2),
        (vec![2; 5], 3),
    ] {
        for opts in all_option_sets() {
            assert_eq!(verdict(&parts, n, &opts), Some(false), "{parts:?} n={n} {opts:?}");
        }
    }
}

#[test]
fn witness_hosts_agree_across_options() {
    for (parts, n) in [(vec![1; 7], 2), (vec![1; 8], 3), (vec![1; 7], 4), (vec![3; 3], 4), (vec![2; 4], 3)] {
        for opts in all_option_sets() {
            assert_eq!(verdict(&parts, n, &opts), Some(true), "{parts:?} n={n} {opts:?}");
        }
    }
}

#[test]
fn dominance_matches_plain_on_small_hosts() {
    for parts in [vec![2, 2, 1, 1], vec![3, 2, 2], vec![2, 2, 2, 1], vec![1; 6], vec![4, 3]] {
        for n in 1..=4 {
            let plain = verdict(&parts, n, &SearchOptions { portfolio: false, ..SearchOptions::default() });
            let pruned = verdict(&parts, n, &SearchOptions { portfolio: false, ..SearchOptions::pruned() });
            assert_eq!(plain, pruned, "{parts:?} n={n}");
        }
    }
}
