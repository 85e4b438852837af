//! Brute-force partition dimension, used as ground truth for the pruned
//! solver. Enumerates every canonical k-class partition for k = 1, 2, ...
//! and recomputes the full representation table from scratch at each one.
//! No pruning, no incremental state, no symmetry; it shares nothing with
//! the solver beyond the distance matrix.

use crate::dist::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NAIVE_CAP: usize = 12;

/// Exhaustive partition dimension for graphs up to `cap` vertices.
pub fn naive_partition_dimension(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.order();
    if n > cap {
        return Err(Error::NaiveCapExceeded { order: n, cap });
    }
    let dm = all_pairs_distances(g);
    if !dm.is_connected() {
        return Err(Error::Partition(
            "naive oracle requires a connected graph".to_string(),
        ));
    }
    let mut dist = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            dist[u * n + v] = dm.get(u, v).expect("connected");
        }
    }

    for k in 1..=n {
        let mut assign = vec![0usize; n];
        let mut reps = vec![0u32; n * k];
        if enumerate(&dist, n, k, 1, 1, &mut assign, &mut reps) {
            return Ok(k);
        }
    }
    unreachable!("the discrete partition resolves every connected graph")
}

/// Walks restricted-growth strings with exactly `k` classes; position 0 is
/// always class 0. Returns true as soon as one assignment resolves.
fn enumerate(
    dist: &[u32],
    n: usize,
    k: usize,
    t: usize,
    classes_used: usize,
    assign: &mut Vec<usize>,
    reps: &mut Vec<u32>,
) -> bool {
    if t == n {
        return classes_used == k && resolves(dist, n, k, assign, reps);
    }
    let highest = if classes_used < k {
        classes_used
    } else {
        k - 1
    };
    for c in 0..=highest {
        let used = classes_used + usize::from(c == classes_used);
        // Exactly-k surjectivity: later vertices must be able to open the
        // remaining classes.
        if used + (n - t - 1) < k {
            continue;
        }
        assign[t] = c;
        if enumerate(dist, n, k, t + 1, used, assign, reps) {
            return true;
        }
    }
    false
}

fn resolves(dist: &[u32], n: usize, k: usize, assign: &[usize], reps: &mut [u32]) -> bool {
    reps.fill(u32::MAX);
    for v in 0..n {
        for u in 0..n {
            let slot = v * k + assign[u];
            let d = dist[v * n + u];
            if d < reps[slot] {
                reps[slot] = d;
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if reps[u * k..(u + 1) * k] == reps[v * k..(v + 1) * k] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, FamilySpec};

    fn built(text: &str) -> Graph {
        build(&FamilySpec::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn naive_examples() {
        assert_eq!(
            naive_partition_dimension(&built("cycle:5"), DEFAULT_NAIVE_CAP).unwrap(),
            3
        );
        assert_eq!(
            naive_partition_dimension(&built("complete:2"), DEFAULT_NAIVE_CAP).unwrap(),
            2
        );
        // Star with three leaves: the leaves are pairwise twins.
        let star = crate::io::parse_edge_list("c a\nc b\nc d").unwrap();
        assert_eq!(
            naive_partition_dimension(&star, DEFAULT_NAIVE_CAP).unwrap(),
            3
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = built("path:13");
        assert!(matches!(
            naive_partition_dimension(&g, DEFAULT_NAIVE_CAP),
            Err(Error::NaiveCapExceeded { order: 13, cap: 12 })
        ));
        assert_eq!(naive_partition_dimension(&g, 13).unwrap(), 2);
    }

    #[test]
    fn disconnected_rejected() {
        let g = crate::io::parse_edge_list("a b\nc d").unwrap();
        assert!(naive_partition_dimension(&g, DEFAULT_NAIVE_CAP).is_err());
    }
}
