//! Simple undirected graphs with dense indices and stable text labels,
//! plus the graph families used throughout the crate.
//!
//! The corona product `G ⊙ H` takes one copy of `H` per vertex of `G` and
//! joins every vertex of copy `i` to the `i`-th vertex of `G`. Labels follow
//! a fixed convention so that partitions and reports can refer to vertices
//! by name: centers are `u1..un`, copy vertices `v<i>.<j>` where `j` is the
//! local index inside `H` (a wheel hub is `v<i>.0`, its rim `v<i>.1..`).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index.
pub type VertexId = usize;

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<VertexId>>,
    index: BTreeMap<String, VertexId>,
}

impl Graph {
    /// Builds a graph from labels and an edge list of index pairs.
    /// Rejects self-loops, duplicate edges, and duplicate labels.
    pub fn from_edges(labels: Vec<String>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::FamilyParameter("order >= 1".into()));
        }
        let n = labels.len();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.split_whitespace().count() != 1 {
                return Err(Error::Partition(format!("label `{l}` contains whitespace")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Partition(format!("duplicate label `{l}`")));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Partition(format!("self-loop at `{}`", labels[u])));
            }
            if u >= n || v >= n {
                return Err(Error::Partition(format!("edge index {u}-{v} out of range")));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::Partition(format!(
                    "parallel edge `{}`-`{}`",
                    labels[u], labels[v]
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            labels,
            adjacency,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertex ids sorted by label text; used wherever ties are broken by label.
    pub fn vertices_by_label(&self) -> Vec<VertexId> {
        self.index.values().copied().collect()
    }
}

/// Description of a graph family instance, including nested corona products.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    EdgeListFile(String),
}

impl FamilySpec {
    /// Parses the CLI mini-language: `complete:3`, `wheel:4`,
    /// `corona:complete:3,wheel:4`, `file:graph.txt`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cursor = text;
        let spec = Self::parse_one(&mut cursor, text)?;
        if !cursor.is_empty() {
            return Err(Error::FamilySpecParse {
                spec: text.to_string(),
                reason: format!("trailing input `{cursor}`"),
            });
        }
        Ok(spec)
    }

    fn parse_one(cursor: &mut &str, whole: &str) -> Result<Self> {
        let err = |reason: String| Error::FamilySpecParse {
            spec: whole.to_string(),
            reason,
        };
        let head_len = cursor
            .find([':', ','])
            .ok_or_else(|| err("expected `name:args`".into()))?;
        let (head, rest) = cursor.split_at(head_len);
        if !rest.starts_with(':') {
            return Err(err(format!("`{head}` is missing its `:` parameter")));
        }
        *cursor = &rest[1..];
        match head {
            "complete" | "path" | "cycle" | "wheel" => {
                let num_len = cursor
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(cursor.len());
                let n: usize = cursor[..num_len]
                    .parse()
                    .map_err(|_| err(format!("`{head}` needs a numeric parameter")))?;
                *cursor = &cursor[num_len..];
                Ok(match head {
                    "complete" => FamilySpec::Complete(n),
                    "path" => FamilySpec::Path(n),
                    "cycle" => FamilySpec::Cycle(n),
                    _ => FamilySpec::Wheel(n),
                })
            }
            "corona" => {
                let inner = Self::parse_one(cursor, whole)?;
                if !cursor.starts_with(',') {
                    return Err(err("corona needs two comma-separated operands".into()));
                }
                *cursor = &cursor[1..];
                let outer = Self::parse_one(cursor, whole)?;
                Ok(FamilySpec::Corona(Box::new(inner), Box::new(outer)))
            }
            "file" => {
                let path_len = cursor.find(',').unwrap_or(cursor.len());
                let path = &cursor[..path_len];
                if path.is_empty() {
                    return Err(err("file spec needs a path".into()));
                }
                *cursor = &cursor[path_len..];
                Ok(FamilySpec::EdgeListFile(path.to_string()))
            }
            other => Err(err(format!("unknown family `{other}`"))),
        }
    }

    /// Notes on degenerate parameter choices, carried into reports.
    pub fn degeneracy_notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        self.collect_notes(&mut notes);
        notes
    }

    fn collect_notes(&self, notes: &mut Vec<String>) {
        match self {
            FamilySpec::Wheel(3) => notes.push(
                "wheel:3 is isomorphic to complete:4; its rim structure collapses and all four wheel vertices of a corona copy become pairwise twins".to_string(),
            ),
            FamilySpec::Corona(g, h) => {
                g.collect_notes(notes);
                h.collect_notes(notes);
            }
            _ => {}
        }
    }

    /// `(n, m)` when the spec is exactly `corona(complete:n, wheel:m)`.
    pub fn as_complete_wheel_corona(&self) -> Option<(usize, usize)> {
        if let FamilySpec::Corona(inner, outer) = self {
            if let (FamilySpec::Complete(n), FamilySpec::Wheel(m)) = (&**inner, &**outer) {
                return Some((*n, *m));
            }
        }
        None
    }

    /// Block symmetry usable by the solver: present when the spec is a corona
    /// whose inner graph is complete (copies are then interchangeable).
    pub fn family_tag(&self) -> Option<FamilyTag> {
        if let FamilySpec::Corona(inner, outer) = self {
            if let FamilySpec::Complete(n) = **inner {
                let copy = build(outer).ok()?;
                return Some(FamilyTag {
                    centers: n,
                    copy_order: copy.order(),
                });
            }
        }
        None
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Wheel(m) => write!(f, "wheel:{m}"),
            FamilySpec::Corona(g, h) => write!(f, "corona:{g},{h}"),
            FamilySpec::EdgeListFile(p) => write!(f, "file:{p}"),
        }
    }
}

/// Block structure of `corona(complete:n, H)`, used for symmetry breaking:
/// any permutation of the `n` blocks is a graph automorphism.
///
/// Only valid for graphs built by [`corona`] with a complete inner graph,
/// whose vertex layout is centers first, then the copies contiguously.
/// Obtain it through [`FamilySpec::family_tag`]; a tag that misdescribes
/// the layout would make the symmetry prune unsound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyTag {
    pub centers: usize,
    pub copy_order: usize,
}

/// Builds the graph described by `spec`.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Complete(n) => {
            require(*n >= 1, "complete requires n >= 1")?;
            let labels = number_labels(1, *n);
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(labels, &edges)
        }
        FamilySpec::Path(n) => {
            require(*n >= 1, "path requires n >= 1")?;
            let labels = number_labels(1, *n);
            let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(labels, &edges)
        }
        FamilySpec::Cycle(n) => {
            require(*n >= 3, "cycle requires n >= 3")?;
            let labels = number_labels(1, *n);
            let mut edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
            edges.push((*n - 1, 0));
            Graph::from_edges(labels, &edges)
        }
        FamilySpec::Wheel(m) => {
            require(*m >= 3, "wheel requires m >= 3")?;
            // Hub is v0 at index 0; rim v1..vm forms a cycle.
            let labels = number_labels(0, *m + 1);
            let mut edges = Vec::new();
            for r in 1..=*m {
                edges.push((0, r));
                let next = if r == *m { 1 } else { r + 1 };
                edges.push((r, next));
            }
            Graph::from_edges(labels, &edges)
        }
        FamilySpec::Corona(g, h) => {
            let g = build(g)?;
            let h = build(h)?;
            corona(&g, &h)
        }
        FamilySpec::EdgeListFile(path) => {
            let text = std::fs::read_to_string(path)?;
            crate::io::parse_edge_list(&text)
        }
    }
}

fn require(cond: bool, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::FamilyParameter(constraint.to_string()))
    }
}

fn number_labels(from: usize, count: usize) -> Vec<String> {
    (from..from + count).map(|i| format!("v{i}")).collect()
}

/// Corona product `g ⊙ h`: one copy of `h` per vertex of `g`, each copy
/// joined completely to its host vertex.
///
/// Centers keep 1-based labels `u1..un`. Copy vertex labels reuse `h`'s
/// numeric local indices when all of `h`'s labels look like `v<k>` (so a
/// wheel hub stays `.0`); otherwise locals are 1-based positions.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order();
    let hn = h.order();
    let locals = local_indices(h);

    let mut labels = Vec::with_capacity(n * (1 + hn));
    for i in 1..=n {
        labels.push(format!("u{i}"));
    }
    for i in 1..=n {
        for local in &locals {
            labels.push(format!("v{i}.{local}"));
        }
    }

    let copy_base = |i: usize| n + i * hn;
    let mut edges = g.edges();
    for i in 0..n {
        let base = copy_base(i);
        for (u, v) in h.edges() {
            edges.push((base + u, base + v));
        }
        for t in 0..hn {
            edges.push((i, base + t));
        }
    }
    Graph::from_edges(labels, &edges)
}

fn local_indices(h: &Graph) -> Vec<String> {
    let numeric: Option<Vec<&str>> = h
        .labels()
        .iter()
        .map(|l| {
            l.strip_prefix('v')
                .filter(|rest| rest.chars().all(|c| c.is_ascii_digit()))
        })
        .collect();
    match numeric {
        Some(nums) => nums.into_iter().map(str::to_string).collect(),
        None => (1..=h.order()).map(|i| i.to_string()).collect(),
    }
}
