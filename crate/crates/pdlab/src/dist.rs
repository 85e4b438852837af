//! All-pairs shortest-path distances by breadth-first search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const UNREACHABLE: u32 = u32::MAX;

/// Symmetric matrix of exact unweighted distances. Unreachable pairs are a
/// distinct sentinel surfaced as `None`, never a number that could leak into
/// arithmetic.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance between `u` and `v`, `None` if no path exists.
    pub fn get(&self, u: VertexId, v: VertexId) -> Option<u32> {
        let d = self.dist[u * self.order + v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite pairwise distance. Errors on disconnected graphs.
    pub fn diameter(&self, g: &Graph) -> Result<u32> {
        let mut max = 0;
        for u in 0..self.order {
            for v in u + 1..self.order {
                match self.get(u, v) {
                    Some(d) => max = max.max(d),
                    None => {
                        return Err(Error::Disconnected(
                            g.label(u).to_string(),
                            g.label(v).to_string(),
                        ))
                    }
                }
            }
        }
        Ok(max)
    }

    /// Row of distances from `u`, with the raw sentinel for unreachable.
    /// Callers that need finite values should go through `get`.
    pub(crate) fn row(&self, u: VertexId) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub(crate) fn raw_is_finite(d: u32) -> bool {
        d != UNREACHABLE
    }
}

/// Exact distances for every vertex pair, BFS from each vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        row[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { order: n, dist }
}

/// Convenience wrapper: distances plus connectivity-checked diameter.
pub fn diameter(g: &Graph) -> Result<u32> {
    all_pairs_distances(g).diameter(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, FamilySpec};

    fn built(text: &str) -> Graph {
        build(&FamilySpec::parse(text).unwrap()).unwrap()
    }

    fn d(g: &Graph, m: &DistanceMatrix, a: &str, b: &str) -> u32 {
        m.get(g.vertex_by_label(a).unwrap(), g.vertex_by_label(b).unwrap())
            .unwrap()
    }

    #[test]
    fn corona_distance_examples() {
        let g = built("corona:complete:3,wheel:4");
        let m = all_pairs_distances(&g);
        assert_eq!(d(&g, &m, "v1.1", "v2.2"), 3);
        assert_eq!(d(&g, &m, "u1", "u2"), 1);
        assert_eq!(d(&g, &m, "v1.0", "u2"), 2);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&built("complete:5")).unwrap(), 1);
        assert_eq!(diameter(&built("path:4")).unwrap(), 3);
        assert_eq!(diameter(&built("corona:complete:3,wheel:4")).unwrap(), 3);
    }

    #[test]
    fn disconnected_pairs_are_sentinel() {
        let g = crate::io::parse_edge_list("a b\nc d").unwrap();
        let m = all_pairs_distances(&g);
        assert!(!m.is_connected());
        let a = g.vertex_by_label("a").unwrap();
        let c = g.vertex_by_label("c").unwrap();
        assert_eq!(m.get(a, c), None);
        assert!(m.diameter(&g).is_err());
    }

    #[test]
    fn distance_one_iff_adjacent_and_triangle_inequality() {
        for text in [
            "complete:5",
            "path:7",
            "cycle:8",
            "wheel:6",
            "corona:complete:3,wheel:4",
            "corona:complete:4,wheel:6",
        ] {
            let g = built(text);
            let m = all_pairs_distances(&g);
            let n = g.order();
            assert!(n <= 50);
            for u in 0..n {
                assert_eq!(m.get(u, u), Some(0));
                for v in 0..n {
                    assert_eq!(m.get(u, v), m.get(v, u));
                    assert_eq!(m.get(u, v) == Some(1), g.are_adjacent(u, v));
                }
            }
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if let (Some(ab), Some(bc), Some(ac)) =
                            (m.get(a, b), m.get(b, c), m.get(a, c))
                        {
                            assert!(ac <= ab + bc, "triangle violated in {text}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corona_block_distance_pattern() {
        // In corona(K_n, W_m): centers at 1, center to own copy 1, center to
        // other copy 2, copy to other copy 3.
        for n in 2..=4 {
            for m in 4..=6 {
                let g = built(&format!("corona:complete:{n},wheel:{m}"));
                let dm = all_pairs_distances(&g);
                for i in 1..=n {
                    for k in 1..=n {
                        if i != k {
                            assert_eq!(d(&g, &dm, &format!("u{i}"), &format!("u{k}")), 1);
                        }
                        for j in 0..=m {
                            let expect = if i == k { 1 } else { 2 };
                            assert_eq!(d(&g, &dm, &format!("u{i}"), &format!("v{k}.{j}")), expect);
                        }
                    }
                }
                for i in 1..=n {
                    for k in 1..=n {
                        if i == k {
                            continue;
                        }
                        for j in 0..=m {
                            for l in 0..=m {
                                assert_eq!(
                                    d(&g, &dm, &format!("v{i}.{j}"), &format!("v{k}.{l}")),
                                    3
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
