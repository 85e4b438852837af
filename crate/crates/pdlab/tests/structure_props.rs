//! Structural facts about `corona(complete:n, wheel:m)`: same-level classes,
//! strong pairs, and the closed-form distance histograms.

mod common;

use std::collections::BTreeMap;

use pdlab::dist::all_pairs_distances;
use pdlab::graph::Graph;
use pdlab::structure::{
    are_same_level, corona_family_notes, level_profile, strong_equivalence_groups,
};

fn corona(n: usize, m: usize) -> Graph {
    common::family(&format!("corona:complete:{n},wheel:{m}"))
}

fn vid(g: &Graph, l: &str) -> usize {
    g.vertex_by_label(l).unwrap()
}

fn hist(entries: &[(u32, usize)]) -> BTreeMap<u32, usize> {
    entries.iter().copied().collect()
}

#[test]
fn same_level_classes_across_copies() {
    // Centers pairwise, hubs pairwise, rim vertices pairwise, for all three
    // m offsets.
    for n in 3..=6 {
        for m in [n, n + 1, n + 2] {
            let g = corona(n, m);
            let dist = all_pairs_distances(&g);
            for i in 1..=n {
                for k in 1..=n {
                    assert!(are_same_level(
                        &dist,
                        vid(&g, &format!("u{i}")),
                        vid(&g, &format!("u{k}"))
                    ));
                    assert!(are_same_level(
                        &dist,
                        vid(&g, &format!("v{i}.0")),
                        vid(&g, &format!("v{k}.0"))
                    ));
                    for j in 1..=m {
                        for l in 1..=m {
                            assert!(
                                are_same_level(
                                    &dist,
                                    vid(&g, &format!("v{i}.{j}")),
                                    vid(&g, &format!("v{k}.{l}"))
                                ),
                                "rim pair not same-level in n={n} m={m}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn strong_pairs_in_wheel4_copies_exactly() {
    let g = corona(3, 4);
    let dist = all_pairs_distances(&g);
    let groups = strong_equivalence_groups(&dist);
    let mut found: Vec<Vec<String>> = groups
        .groups
        .iter()
        .map(|grp| grp.iter().map(|&v| g.label(v).to_string()).collect())
        .collect();
    found.sort();
    let mut expected: Vec<Vec<String>> = Vec::new();
    for i in 1..=3 {
        expected.push(vec![format!("v{i}.1"), format!("v{i}.3")]);
        expected.push(vec![format!("v{i}.2"), format!("v{i}.4")]);
    }
    expected.sort();
    assert_eq!(found, expected);

    // Larger rims have no twins at all.
    for n in 4..=6 {
        let g = corona(n, n + 1);
        let dist = all_pairs_distances(&g);
        assert!(
            strong_equivalence_groups(&dist).groups.is_empty(),
            "unexpected twins at n={n}"
        );
    }
}

#[test]
fn closed_form_histograms() {
    // center {1: n+m, 2: (n-1)(m+1)}, hub {1: m+1, 2: n-1, 3: (n-1)(m+1)},
    // rim {1: 4, 2: m+n-4, 3: (n-1)(m+1)}, checked against BFS.
    for n in 2..=5 {
        for m in 5..=8 {
            let g = corona(n, m);
            let dist = all_pairs_distances(&g);
            let center = level_profile(&dist, vid(&g, "u1")).histogram;
            assert_eq!(
                center,
                hist(&[(1, n + m), (2, (n - 1) * (m + 1))]),
                "center histogram n={n} m={m}"
            );
            let hub = level_profile(&dist, vid(&g, "v1.0")).histogram;
            assert_eq!(
                hub,
                hist(&[(1, m + 1), (2, n - 1), (3, (n - 1) * (m + 1))]),
                "hub histogram n={n} m={m}"
            );
            let rim = level_profile(&dist, vid(&g, "v1.1")).histogram;
            assert_eq!(
                rim,
                hist(&[(1, 4), (2, m + n - 4), (3, (n - 1) * (m + 1))]),
                "rim histogram n={n} m={m}"
            );
        }
    }
}

#[test]
fn published_rim_counts_match_at_m_eq_n_plus_1() {
    // The published rim counts {1: 4, 2: 2n-3, 3: (n-1)(n+2)} agree with the
    // derived formulas; the published center and hub counts do not, and the
    // family notes carry both values.
    for n in 3..=6 {
        let m = n + 1;
        let g = corona(n, m);
        let dist = all_pairs_distances(&g);
        let rim = level_profile(&dist, vid(&g, "v2.3")).histogram;
        assert_eq!(rim, hist(&[(1, 4), (2, 2 * n - 3), (3, (n - 1) * (n + 2))]));

        let notes = corona_family_notes(n, m);
        assert_eq!(notes.len(), 2);
        assert!(notes[0].contains(&format!("computed count is n+m = {}", n + m)));
        assert!(notes[1].contains(&format!(
            "computed count is (n-1)(m+1) = {}",
            (n - 1) * (m + 1)
        )));
        // And the computed values really are what BFS measures.
        let center = level_profile(&dist, vid(&g, "u1")).histogram;
        assert_eq!(center.get(&1), Some(&(n + m)));
        let hub = level_profile(&dist, vid(&g, "v1.0")).histogram;
        assert_eq!(hub.get(&3), Some(&((n - 1) * (m + 1))));
    }
}

#[test]
fn histogram_totals_are_order_minus_one() {
    for text in [
        "corona:complete:3,wheel:4",
        "corona:complete:4,wheel:5",
        "wheel:7",
        "path:9",
    ] {
        let g = common::family(text);
        let dist = all_pairs_distances(&g);
        for v in 0..g.order() {
            let total: usize = level_profile(&dist, v).histogram.values().sum();
            assert_eq!(total, g.order() - 1, "{text}");
        }
    }
}
