//! Vertex partitions, representation vectors, and the resolving check.
//!
//! A partition assigns every vertex to one of `k` nonempty classes. The
//! canonical form is the restricted-growth labelling: the first occurrence
//! of class `c` (in vertex index order) precedes the first occurrence of
//! class `c+1`. Solver output is canonical; the checker accepts any
//! labelling.

use serde::{Deserialize, Serialize};

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    k: usize,
    assign: Vec<usize>,
}

impl Partition {
    /// Builds a partition from per-vertex class indices. Every class in
    /// `0..k` must be nonempty.
    pub fn from_assignment(assign: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 || assign.is_empty() {
            return Err(Error::Partition("partition must be nonempty".into()));
        }
        let mut seen = vec![false; k];
        for &c in &assign {
            if c >= k {
                return Err(Error::Partition(format!(
                    "class index {c} out of range 0..{k}"
                )));
            }
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Partition(format!("class {missing} is empty")));
        }
        Ok(Partition { k, assign })
    }

    /// Builds from explicit classes of vertex ids; classes must be disjoint
    /// and cover `0..order`.
    pub fn from_classes(classes: &[Vec<VertexId>], order: usize) -> Result<Self> {
        let k = classes.len();
        let mut assign = vec![usize::MAX; order];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Partition(format!("class {c} is empty")));
            }
            for &v in class {
                if v >= order {
                    return Err(Error::Partition(format!("vertex {v} out of range")));
                }
                if assign[v] != usize::MAX {
                    return Err(Error::Partition(format!(
                        "vertex {v} appears in classes {} and {c}",
                        assign[v]
                    )));
                }
                assign[v] = c;
            }
        }
        if let Some(v) = assign.iter().position(|&c| c == usize::MAX) {
            return Err(Error::UncoveredVertex(format!("index {v}")));
        }
        Partition::from_assignment(assign, k)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.assign.len()
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.assign[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    /// Classes as vertex-id lists, each sorted, in class-index order.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.assign.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Relabels classes into restricted-growth order.
    pub fn canonicalize(&self) -> Partition {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        let mut assign = Vec::with_capacity(self.assign.len());
        for &c in &self.assign {
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            assign.push(map[c]);
        }
        Partition { k: self.k, assign }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0;
        for &c in &self.assign {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }

    /// Splits the first class of size >= 2 off into a new class, yielding a
    /// (k+1)-class refinement. `None` when every class is a singleton.
    pub fn refine_once(&self) -> Option<Partition> {
        let classes = self.classes();
        let big = classes.iter().position(|c| c.len() >= 2)?;
        let mut assign = self.assign.clone();
        let moved = *classes[big].last().unwrap();
        assign[moved] = self.k;
        Some(Partition {
            k: self.k + 1,
            assign,
        })
    }
}

/// File shape for partitions: classes listed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionClasses {
    pub classes: Vec<Vec<String>>,
}

impl PartitionClasses {
    pub fn from_partition(p: &Partition, g: &Graph) -> Self {
        let classes = p
            .classes()
            .into_iter()
            .map(|class| class.into_iter().map(|v| g.label(v).to_string()).collect())
            .collect();
        PartitionClasses { classes }
    }

    /// Binds labels to vertex ids of `g`. Unknown labels and uncovered
    /// vertices are rejected by name.
    pub fn bind(&self, g: &Graph) -> Result<Partition> {
        let mut classes: Vec<Vec<VertexId>> = Vec::with_capacity(self.classes.len());
        for class in &self.classes {
            let mut ids = Vec::with_capacity(class.len());
            for label in class {
                let v = g
                    .vertex_by_label(label)
                    .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
                ids.push(v);
            }
            classes.push(ids);
        }
        let mut covered = vec![false; g.order()];
        for class in &classes {
            for &v in class {
                if covered[v] {
                    return Err(Error::Partition(format!(
                        "vertex `{}` listed twice",
                        g.label(v)
                    )));
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::UncoveredVertex(g.label(v).to_string()));
        }
        Partition::from_classes(&classes, g.order())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Representation of `v` with respect to the partition: the vector of
/// minimum distances from `v` to each class. Errors when some class is
/// unreachable from `v` (disconnected input).
pub fn representation(dist: &DistanceMatrix, p: &Partition, v: VertexId) -> Result<Vec<u32>> {
    let mut rep = vec![u32::MAX; p.k()];
    let row = dist.row(v);
    for (u, &c) in p.assignment().iter().enumerate() {
        let d = row[u];
        if DistanceMatrix::raw_is_finite(d) && d < rep[c] {
            rep[c] = d;
        }
    }
    if let Some(c) = rep.iter().position(|&d| d == u32::MAX) {
        return Err(Error::Partition(format!(
            "class {c} is unreachable from vertex {v}; graph must be connected"
        )));
    }
    Ok(rep)
}

/// Per-vertex representation vectors, in vertex index order.
#[derive(Debug, Clone)]
pub struct RepresentationTable {
    pub rows: Vec<Vec<u32>>,
}

impl RepresentationTable {
    pub fn compute(dist: &DistanceMatrix, p: &Partition) -> Result<Self> {
        let rows = (0..p.order())
            .map(|v| representation(dist, p, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepresentationTable { rows })
    }

    /// Dump format: one line per vertex, `label: (a,b,c)`, label-sorted.
    pub fn dump(&self, g: &Graph) -> String {
        let mut out = String::new();
        for v in g.vertices_by_label() {
            let entries: Vec<String> = self.rows[v].iter().map(u32::to_string).collect();
            out.push_str(&format!("{}: ({})\n", g.label(v), entries.join(",")));
        }
        out
    }
}

/// Outcome of the resolving check. On failure carries the lexicographically
/// least violating pair by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResolveVerdict {
    Resolving,
    Violation { u: String, v: String },
}

impl ResolveVerdict {
    pub fn is_resolving(&self) -> bool {
        matches!(self, ResolveVerdict::Resolving)
    }
}

/// A partition resolves the graph when all representation vectors are
/// pairwise distinct.
pub fn is_resolving(g: &Graph, dist: &DistanceMatrix, p: &Partition) -> Result<ResolveVerdict> {
    let table = RepresentationTable::compute(dist, p)?;
    let mut groups: std::collections::BTreeMap<&[u32], Vec<VertexId>> = Default::default();
    for (v, row) in table.rows.iter().enumerate() {
        groups.entry(row.as_slice()).or_default().push(v);
    }
    let mut best: Option<(String, String)> = None;
    for members in groups.values() {
        if members.len() < 2 {
            continue;
        }
        let mut labels: Vec<&str> = members.iter().map(|&v| g.label(v)).collect();
        labels.sort();
        let cand = (labels[0].to_string(), labels[1].to_string());
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    Ok(match best {
        None => ResolveVerdict::Resolving,
        Some((u, v)) => ResolveVerdict::Violation { u, v },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::all_pairs_distances;
    use crate::graph::{build, FamilySpec};

    fn built(text: &str) -> Graph {
        build(&FamilySpec::parse(text).unwrap()).unwrap()
    }

    fn classes_by_label(g: &Graph, classes: &[&[&str]]) -> Partition {
        let pc = PartitionClasses {
            classes: classes
                .iter()
                .map(|c| c.iter().map(|s| s.to_string()).collect())
                .collect(),
        };
        pc.bind(g).unwrap()
    }

    /// The explicit 4-class partition given for corona(complete:3, wheel:4).
    pub(crate) fn k3w4_reference_partition(g: &Graph) -> Partition {
        classes_by_label(
            g,
            &[
                &["u2", "u3", "v2.0", "v3.0", "v2.1", "v2.2", "v3.1", "v3.2"],
                &["u1", "v1.0", "v1.1", "v1.2", "v3.3"],
                &["v1.3", "v2.3"],
                &["v1.4", "v2.4", "v3.4"],
            ],
        )
    }

    #[test]
    fn representation_examples_k3w4() {
        let g = built("corona:complete:3,wheel:4");
        let m = all_pairs_distances(&g);
        let p = k3w4_reference_partition(&g);
        let u1 = g.vertex_by_label("u1").unwrap();
        assert_eq!(representation(&m, &p, u1).unwrap(), vec![1, 0, 1, 1]);
        let v33 = g.vertex_by_label("v3.3").unwrap();
        assert_eq!(representation(&m, &p, v33).unwrap(), vec![1, 0, 3, 1]);
        // Entry at the vertex's own class is always zero.
        for v in 0..g.order() {
            let rep = representation(&m, &p, v).unwrap();
            assert_eq!(rep[p.class_of(v)], 0);
        }
        assert!(is_resolving(&g, &m, &p).unwrap().is_resolving());
    }

    #[test]
    fn discrete_partition_resolves_single_class_does_not() {
        let g = built("cycle:5");
        let m = all_pairs_distances(&g);
        let discrete = Partition::from_assignment((0..5).collect(), 5).unwrap();
        assert!(is_resolving(&g, &m, &discrete).unwrap().is_resolving());
        let single = Partition::from_assignment(vec![0; 5], 1).unwrap();
        match is_resolving(&g, &m, &single).unwrap() {
            ResolveVerdict::Violation { u, v } => {
                assert_eq!((u.as_str(), v.as_str()), ("v1", "v2"));
            }
            ResolveVerdict::Resolving => panic!("single class cannot resolve"),
        }
    }

    #[test]
    fn canonical_form_round_trip() {
        let p = Partition::from_assignment(vec![2, 0, 2, 1], 3).unwrap();
        assert!(!p.is_canonical());
        let c = p.canonicalize();
        assert!(c.is_canonical());
        assert_eq!(c.assignment(), &[0, 1, 0, 2]);
        // Same classes, relabelled.
        assert_eq!(
            p.classes().iter().map(Vec::len).sum::<usize>(),
            c.classes().iter().map(Vec::len).sum::<usize>()
        );
    }

    #[test]
    fn binding_rejects_bad_files() {
        let g = built("path:3");
        let missing = PartitionClasses {
            classes: vec![vec!["v1".into()], vec!["v2".into()]],
        };
        assert!(matches!(missing.bind(&g), Err(Error::UncoveredVertex(_))));
        let unknown = PartitionClasses {
            classes: vec![
                vec!["v1".into(), "bogus".into()],
                vec!["v2".into(), "v3".into()],
            ],
        };
        assert!(matches!(unknown.bind(&g), Err(Error::UnknownLabel(_))));
        let dup = PartitionClasses {
            classes: vec![
                vec!["v1".into(), "v2".into()],
                vec!["v2".into(), "v3".into()],
            ],
        };
        assert!(dup.bind(&g).is_err());
    }

    #[test]
    fn partition_json_round_trip() {
        let g = built("corona:complete:3,wheel:4");
        let p = k3w4_reference_partition(&g);
        let pc = PartitionClasses::from_partition(&p, &g);
        let text = pc.to_json();
        let back = PartitionClasses::parse_json(&text)
            .unwrap()
            .bind(&g)
            .unwrap();
        assert_eq!(back.canonicalize(), p.canonicalize());
    }

    #[test]
    fn representation_errors_on_disconnected() {
        let g = crate::io::parse_edge_list("a b\nc d").unwrap();
        let m = all_pairs_distances(&g);
        let p = classes_by_label(&g, &[&["a", "b"], &["c", "d"]]);
        assert!(representation(&m, &p, 0).is_err());
    }
}
