//! Shared corpus builders for the integration suites. Each suite uses its
//! own subset.
#![allow(dead_code)]

use pdlab::graph::{build, FamilySpec, Graph};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

pub fn family(text: &str) -> Graph {
    build(&FamilySpec::parse(text).unwrap()).unwrap()
}

/// Random connected graph on `order` vertices: a random spanning tree plus
/// each remaining pair independently with probability `extra_p`.
pub fn random_connected(rng: &mut SmallRng, order: usize, extra_p: f64) -> Graph {
    let labels: Vec<String> = (0..order).map(|i| format!("r{i}")).collect();
    let mut edges = Vec::new();
    for v in 1..order {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
    }
    for u in 0..order {
        for v in u + 1..order {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(labels, &edges).unwrap()
}

/// The fixed random corpus used by the oracle-equivalence suite: 200
/// connected graphs of order <= 10.
pub fn oracle_corpus() -> Vec<Graph> {
    let mut rng = SmallRng::seed_from_u64(0x5eed_cafe);
    (0..200)
        .map(|i| {
            let order = 2 + (i % 9); // 2..=10
            let p = match i % 3 {
                0 => 0.15,
                1 => 0.35,
                _ => 0.6,
            };
            random_connected(&mut rng, order, p)
        })
        .collect()
}

/// All family graphs of order <= `max_order`.
pub fn family_corpus(max_order: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push((format!("complete:{n}"), family(&format!("complete:{n}"))));
        out.push((format!("path:{n}"), family(&format!("path:{n}"))));
    }
    for n in 3..=max_order {
        out.push((format!("cycle:{n}"), family(&format!("cycle:{n}"))));
    }
    for m in 3..max_order {
        // wheel:m has m+1 vertices
        out.push((format!("wheel:{m}"), family(&format!("wheel:{m}"))));
    }
    out
}

/// Enumerates every canonical set partition of `0..n` (all class counts)
/// as assignment vectors. Independent of the library's enumeration.
pub fn all_canonical_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, t: usize, used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if t == n {
            out.push(current.clone());
            return;
        }
        for c in 0..=used.min(n - 1) {
            current.push(c);
            rec(n, t + 1, used.max(c + 1), current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out
}
