//! Mechanized separation lemma: over every graph of order <= 8 in the
//! corpus and every canonical partition of its vertices, a partition that
//! places a strong-equivalent pair in one class never resolves.

mod common;

use pdlab::dist::all_pairs_distances;
use pdlab::graph::{build, FamilySpec};
use pdlab::partition::{is_resolving, Partition};
use pdlab::structure::separation_constraints;
use rand::rngs::SmallRng;
use rand::SeedableRng;

fn corpus() -> Vec<(String, pdlab::graph::Graph)> {
    let mut graphs = common::family_corpus(8);
    for text in [
        "corona:complete:1,complete:1",
        "corona:complete:1,wheel:3",
        "corona:complete:2,complete:1",
        "corona:complete:2,complete:2",
        "corona:complete:2,path:3",
        "corona:complete:2,cycle:3",
        "corona:complete:3,complete:1",
        "corona:complete:1,path:5",
    ] {
        graphs.push((
            text.to_string(),
            build(&FamilySpec::parse(text).unwrap()).unwrap(),
        ));
    }
    let mut rng = SmallRng::seed_from_u64(0x7717);
    for i in 0..30 {
        let order = 4 + (i % 5);
        graphs.push((
            format!("random#{i}"),
            common::random_connected(&mut rng, order, 0.4),
        ));
    }
    graphs
}

#[test]
fn twins_in_one_class_never_resolve() {
    let mut graphs_checked = 0;
    let mut partitions_checked = 0u64;
    for (name, g) in corpus() {
        let dist = all_pairs_distances(&g);
        if !dist.is_connected() {
            continue;
        }
        let twins = separation_constraints(&dist);
        if twins.is_empty() {
            continue;
        }
        graphs_checked += 1;
        for assign in common::all_canonical_partitions(g.order()) {
            let k = assign.iter().max().unwrap() + 1;
            let p = Partition::from_assignment(assign, k).unwrap();
            let has_joined_twins = twins.iter().any(|&(u, v)| p.class_of(u) == p.class_of(v));
            if !has_joined_twins {
                continue;
            }
            partitions_checked += 1;
            assert!(
                !is_resolving(&g, &dist, &p).unwrap().is_resolving(),
                "twins share a class yet the partition resolves {name}"
            );
        }
    }
    assert!(graphs_checked >= 10, "corpus must exercise twin graphs");
    assert!(partitions_checked > 10_000);
}

#[test]
fn resolving_partitions_always_separate_twins() {
    // Contrapositive sweep on the same corpus: collect every resolving
    // partition and confirm the twins are split.
    for (name, g) in corpus() {
        if g.order() > 7 {
            continue;
        }
        let dist = all_pairs_distances(&g);
        if !dist.is_connected() {
            continue;
        }
        let twins = separation_constraints(&dist);
        for assign in common::all_canonical_partitions(g.order()) {
            let k = assign.iter().max().unwrap() + 1;
            let p = Partition::from_assignment(assign, k).unwrap();
            if is_resolving(&g, &dist, &p).unwrap().is_resolving() {
                for &(u, v) in &twins {
                    assert_ne!(
                        p.class_of(u),
                        p.class_of(v),
                        "resolving partition of {name} joins a twin pair"
                    );
                }
            }
        }
    }
}
