//! The pruned solver must agree with the brute-force oracle everywhere the
//! oracle can reach: 200 fixed random connected graphs of order <= 10 plus
//! every complete/path/cycle/wheel graph of order <= 10.

mod common;

use pdlab::dist::all_pairs_distances;
use pdlab::naive::naive_partition_dimension;
use pdlab::partition::is_resolving;
use pdlab::solver::{partition_dimension, PdOutcome, SolveOpts};
use pdlab::structure::separation_constraints;

#[test]
fn solver_equals_oracle_on_random_corpus() {
    for (i, g) in common::oracle_corpus().iter().enumerate() {
        let naive = naive_partition_dimension(g, 12).unwrap();
        let result = partition_dimension(g, &SolveOpts::default(), None).unwrap();
        let PdOutcome::Decided { pd, witness } = &result.outcome else {
            panic!("undecided on random graph #{i}");
        };
        assert_eq!(naive, *pd, "disagreement on random graph #{i}");

        let dist = all_pairs_distances(g);
        // Witness soundness, twin separation, and monotone feasibility on
        // every solved instance.
        assert!(is_resolving(g, &dist, witness).unwrap().is_resolving());
        for (u, v) in separation_constraints(&dist) {
            assert_ne!(witness.class_of(u), witness.class_of(v));
        }
        if *pd < g.order() {
            let finer = witness.refine_once().unwrap();
            assert_eq!(finer.k(), pd + 1);
            assert!(is_resolving(g, &dist, &finer).unwrap().is_resolving());
        }
    }
}

#[test]
fn solver_equals_oracle_on_families() {
    for (name, g) in common::family_corpus(10) {
        let naive = naive_partition_dimension(&g, 12).unwrap();
        let solved = partition_dimension(&g, &SolveOpts::default(), None)
            .unwrap()
            .pd()
            .unwrap();
        assert_eq!(naive, solved, "disagreement on {name}");
    }
}

#[test]
fn classically_known_family_values() {
    // pd = 2 exactly for paths (order >= 2), pd = n for complete graphs,
    // pd = 3 for the small cycles and wheels in range.
    for n in 2..=10 {
        let g = common::family(&format!("path:{n}"));
        assert_eq!(
            naive_partition_dimension(&g, 12).unwrap(),
            2,
            "path:{n} should need exactly 2 classes"
        );
    }
    for n in 1..=10 {
        let g = common::family(&format!("complete:{n}"));
        assert_eq!(naive_partition_dimension(&g, 12).unwrap(), n.max(1));
    }
    for n in 3..=9 {
        let g = common::family(&format!("cycle:{n}"));
        assert_eq!(naive_partition_dimension(&g, 12).unwrap(), 3, "cycle:{n}");
    }
}
