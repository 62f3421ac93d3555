use std::collections::BTreeSet;

use semigroup_weights::gamma;
use semigroup_weights::tree::{self, EnumerationOptions, GapSetCollector, NullVisitor};
use semigroup_weights::{GapList, Semigroup};

const KNOWN_COUNTS: [u64; 23] = [
    1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857, 4806, 8045, 13467, 22464, 37396,
    62194, 103246,
];

fn opts(threads: usize, serial_depth: u32) -> EnumerationOptions {
    EnumerationOptions {
        threads,
        serial_depth,
        gammas: vec![1, 2, 3],
    }
}

#[test]
fn gap_sets_match_brute_force() {
    let (sets, _) = tree::enumerate(8, &EnumerationOptions::default(), GapSetCollector::default).unwrap();
    for g in 0..=8u32 {
        let from_tree: BTreeSet<GapList> = sets.0.iter().filter(|l| l.len() as u32 == g).cloned().collect();
        let brute: BTreeSet<GapList> = tree::brute_force_enumerate(g).unwrap().iter().map(Semigroup::gaps).collect();
        assert_eq!(from_tree, brute, "genus {g}");
        assert_eq!(from_tree.len() as u64, KNOWN_COUNTS[g as usize]);
    }
    let distinct: BTreeSet<&GapList> = sets.0.iter().collect();
    assert_eq!(distinct.len(), sets.0.len(), "tree visited a semigroup twice");
}

#[test]
fn counts_match_known_sequence() {
    let (_, stats) = tree::enumerate(22, &EnumerationOptions::with_threads(2), || NullVisitor).unwrap();
    assert_eq!(stats.counts, KNOWN_COUNTS);
}

#[test]
fn worker_count_does_not_change_results() {
    let runs: Vec<_> = [(1, 2), (2, 2), (8, 2), (8, 0), (1, 8)]
        .into_iter()
        .map(|(t, d)| tree::enumerate(12, &opts(t, d), GapSetCollector::default).unwrap())
        .collect();
    let (first, first_stats) = &runs[0];
    for (sets, stats) in &runs[1..] {
        assert_eq!(sets.0, first.0);
        assert_eq!(stats.counts, first_stats.counts);
        assert_eq!(stats.gamma_counts, first_stats.gamma_counts);
    }
}

#[test]
fn pruned_gamma_walk_equals_filtering() {
    let (all, _) = tree::enumerate(10, &EnumerationOptions::default(), GapSetCollector::default).unwrap();
    for gm in 0..=3 {
        let expected: Vec<GapList> = all
            .0
            .iter()
            .filter(|l| gamma::certify(&Semigroup::from_gap_list(l), gm).is_affirmative())
            .cloned()
            .collect();
        let (pruned, stats) = tree::enumerate_gamma_hyperelliptic_up_to(gm, 10, &opts(2, 1), GapSetCollector::default).unwrap();
        let mut got = pruned.0.clone();
        let mut want = expected.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want, "gamma {gm}");
        if gm > 0 {
            assert!(stats.nodes < all.0.len() as u64, "gamma {gm} walk was not pruned");
        }
    }
}

#[test]
fn gamma_forces_genus_at_least_three_gamma_plus_one() {
    for gm in 1..=4u32 {
        let (found, _) =
            tree::enumerate_gamma_hyperelliptic_up_to(gm, 3 * gm, &EnumerationOptions::default(), GapSetCollector::default)
                .unwrap();
        assert!(found.0.is_empty(), "gamma {gm}");
        let (found, _) = tree::enumerate_gamma_hyperelliptic(
            gm,
            3 * gm + 1,
            &EnumerationOptions::default(),
            GapSetCollector::default,
        )
        .unwrap();
        assert!(!found.0.is_empty(), "gamma {gm}");
    }
}

#[test]
fn genus_limit_is_enforced() {
    assert!(tree::enumerate(tree::MAX_TREE_GENUS + 1, &EnumerationOptions::default(), || NullVisitor).is_err());
}
