//! Vertex-equivalence structures: strong/weak equivalent pairs, distance
//! histograms (same-level vertices), and the diagnostics derived from them.
//!
//! Two vertices are strong equivalent (twins) when they have equal distance
//! to every third vertex; any resolving partition must separate such a pair.
//! Weak equivalence relates two vertices through a witness vertex `c`. The
//! published condition cancels to `d(u,c) = d(v,c)` (the literal mode, which
//! is satisfied by almost any pair); the geodesic mode additionally requires
//! every third vertex to lie on shortest paths through `c` from both ends.
//! Both modes are implemented; reports carry both.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dist::DistanceMatrix;
use crate::graph::{Graph, VertexId};
use crate::partition::{Partition, RepresentationTable};

/// Mode for the weak-equivalence witness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeakMode {
    Literal,
    Geodesic,
}

/// `d(u,w) = d(v,w)` for every third vertex `w`.
pub fn are_strong_equivalent(dist: &DistanceMatrix, u: VertexId, v: VertexId) -> bool {
    debug_assert_ne!(u, v);
    let ru = dist.row(u);
    let rv = dist.row(v);
    (0..dist.order()).all(|w| w == u || w == v || ru[w] == rv[w])
}

/// Searches for a weak-equivalence witness, returning the least vertex id
/// (ids follow label order for built families) that qualifies.
pub fn are_weak_equivalent(
    dist: &DistanceMatrix,
    u: VertexId,
    v: VertexId,
    mode: WeakMode,
) -> Option<VertexId> {
    debug_assert_ne!(u, v);
    let n = dist.order();
    let ru = dist.row(u);
    let rv = dist.row(v);
    (0..n).find(|&c| {
        if c == u || c == v || ru[c] != rv[c] {
            return false;
        }
        match mode {
            WeakMode::Literal => true,
            WeakMode::Geodesic => {
                let rc = dist.row(c);
                (0..n)
                    .all(|s| s == u || s == v || (ru[s] == ru[c] + rc[s] && rv[s] == rv[c] + rc[s]))
            }
        }
    })
}

/// Distance histogram of one vertex: how many other vertices sit at each
/// distance. Sums to `order - 1` on connected graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelProfile {
    pub histogram: BTreeMap<u32, usize>,
}

pub fn level_profile(dist: &DistanceMatrix, u: VertexId) -> LevelProfile {
    let mut histogram = BTreeMap::new();
    for (w, &d) in dist.row(u).iter().enumerate() {
        if w != u && DistanceMatrix::raw_is_finite(d) {
            *histogram.entry(d).or_insert(0) += 1;
        }
    }
    LevelProfile { histogram }
}

/// Same-level vertices have identical distance histograms.
pub fn are_same_level(dist: &DistanceMatrix, u: VertexId, v: VertexId) -> bool {
    level_profile(dist, u) == level_profile(dist, v)
}

/// Result of grouping pairwise strong-equivalent vertices. The relation as
/// defined excludes the pair itself from the quantifier, so transitivity is
/// re-checked rather than assumed; a failing triple demotes the output to
/// bare pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrongGroups {
    /// Maximal groups (size >= 2) of pairwise strong-equivalent vertices.
    pub groups: Vec<Vec<VertexId>>,
    /// Set when pairwise testing found a non-transitive triple; `groups`
    /// then lists each pair separately.
    pub non_transitive_triple: Option<(VertexId, VertexId, VertexId)>,
}

pub fn strong_equivalence_groups(dist: &DistanceMatrix) -> StrongGroups {
    let n = dist.order();
    let mut pair = vec![false; n * n];
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if are_strong_equivalent(dist, u, v) {
                pair[u * n + v] = true;
                pair[v * n + u] = true;
                pairs.push((u, v));
            }
        }
    }

    // Greedy grouping, then verify every in-group pair.
    let mut group_of = vec![usize::MAX; n];
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    for &(u, v) in &pairs {
        match (group_of[u], group_of[v]) {
            (usize::MAX, usize::MAX) => {
                group_of[u] = groups.len();
                group_of[v] = groups.len();
                groups.push(vec![u, v]);
            }
            (gu, usize::MAX) => {
                group_of[v] = gu;
                groups[gu].push(v);
            }
            (usize::MAX, gv) => {
                group_of[u] = gv;
                groups[gv].push(u);
            }
            (gu, gv) if gu != gv => {
                // Merge; verification below will catch any inconsistency.
                let moved = std::mem::take(&mut groups[gv]);
                for &w in &moved {
                    group_of[w] = gu;
                }
                groups[gu].extend(moved);
            }
            _ => {}
        }
    }
    groups.retain(|g| g.len() >= 2);
    for g in &mut groups {
        g.sort_unstable();
    }
    groups.sort();

    for g in &groups {
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if !pair[g[i] * n + g[j]] {
                    let third = g
                        .iter()
                        .copied()
                        .find(|&w| {
                            w != g[i] && w != g[j] && pair[g[i] * n + w] && pair[g[j] * n + w]
                        })
                        .unwrap_or(g[0]);
                    return StrongGroups {
                        groups: pairs.iter().map(|&(a, b)| vec![a, b]).collect(),
                        non_transitive_triple: Some((g[i], third, g[j])),
                    };
                }
            }
        }
    }
    StrongGroups {
        groups,
        non_transitive_triple: None,
    }
}

/// All strong-equivalent pairs `(u, v)` with `u < v`: every resolving
/// partition must place each pair in distinct classes, and the solver prunes
/// on them.
pub fn separation_constraints(dist: &DistanceMatrix) -> Vec<(VertexId, VertexId)> {
    let n = dist.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if are_strong_equivalent(dist, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Largest pairwise strong-equivalent set; a lower bound on the partition
/// dimension. Falls back to 2 when only bare pairs are trustworthy.
pub fn twin_clique_size(dist: &DistanceMatrix) -> usize {
    let sg = strong_equivalence_groups(dist);
    sg.groups.iter().map(Vec::len).max().unwrap_or(1)
}

/// Neighborhoods agree outside the pair itself. For adjacent strong twins
/// the unrestricted neighborhood equality cannot hold (each contains the
/// other), so the symmetric-difference form is the checkable statement.
pub fn neighborhood_check(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let strip = |x: VertexId| -> Vec<VertexId> {
        g.neighbors(x)
            .iter()
            .copied()
            .filter(|&w| w != u && w != v)
            .collect()
    };
    strip(u) == strip(v)
}

/// One ambiguity warning: a same-level pair sharing a class, with the
/// classes whose minimum distances to both vertices coincide.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SameLevelWarning {
    pub u: String,
    pub v: String,
    pub class: usize,
    pub coinciding_classes: Vec<usize>,
}

/// Diagnostic only: a warning does not prove the partition non-resolving,
/// and quiet output does not prove it resolving. It does hold that every
/// representation collision between same-level vertices in one class is
/// accompanied by a warning (all classes coincide for such a pair).
pub fn same_level_diagnostic(
    g: &Graph,
    dist: &DistanceMatrix,
    p: &Partition,
) -> crate::error::Result<Vec<SameLevelWarning>> {
    let table = RepresentationTable::compute(dist, p)?;
    let profiles: Vec<LevelProfile> = (0..g.order()).map(|v| level_profile(dist, v)).collect();
    let mut warnings = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if p.class_of(u) != p.class_of(v) || profiles[u] != profiles[v] {
                continue;
            }
            let coinciding: Vec<usize> = (0..p.k())
                .filter(|&c| table.rows[u][c] == table.rows[v][c])
                .collect();
            if !coinciding.is_empty() {
                let (a, b) = if g.label(u) <= g.label(v) {
                    (u, v)
                } else {
                    (v, u)
                };
                warnings.push(SameLevelWarning {
                    u: g.label(a).to_string(),
                    v: g.label(b).to_string(),
                    class: p.class_of(u),
                    coinciding_classes: coinciding,
                });
            }
        }
    }
    Ok(warnings)
}

/// Notes contrasting two published distance counts for `K_n ⊙ W_{n+1}`
/// against the values the total-count identity forces. Attached to analysis
/// reports for that family so both numbers travel together.
pub fn corona_family_notes(n: usize, m: usize) -> Vec<String> {
    let mut notes = Vec::new();
    if m == n + 1 && n >= 2 {
        notes.push(format!(
            "published center distance-1 count 2n = {} fails the sum-to-order-1 check; computed count is n+m = {}",
            2 * n,
            n + m
        ));
        notes.push(format!(
            "published hub distance-3 count (n-1)(n-2) = {} fails the sum-to-order-1 check; computed count is (n-1)(m+1) = {}",
            (n - 1) * (n - 2),
            (n - 1) * (m + 1)
        ));
    }
    notes
}

/// One weak-equivalence record for the analysis report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeakPair {
    pub u: String,
    pub v: String,
    pub literal_witness: Option<String>,
    pub geodesic_witness: Option<String>,
}

/// Structure-analysis report: equivalence pairs, same-level classes, and
/// per-vertex level profiles, all keyed by label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub strong_groups: Vec<Vec<String>>,
    pub non_transitive_triple: Option<Vec<String>>,
    pub strong_pairs: Vec<(String, String)>,
    pub weak_pairs: Vec<WeakPair>,
    pub same_level_classes: Vec<Vec<String>>,
    pub level_profiles: BTreeMap<String, BTreeMap<u32, usize>>,
    pub notes: Vec<String>,
}

pub fn analyze(g: &Graph, dist: &DistanceMatrix, notes: Vec<String>) -> AnalysisReport {
    let n = g.order();
    let label = |v: VertexId| g.label(v).to_string();
    let sorted_pair = |u: VertexId, v: VertexId| {
        let (a, b) = (label(u), label(v));
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };

    let sg = strong_equivalence_groups(dist);
    let mut strong_groups: Vec<Vec<String>> = sg
        .groups
        .iter()
        .map(|g_| {
            let mut ls: Vec<String> = g_.iter().map(|&v| label(v)).collect();
            ls.sort();
            ls
        })
        .collect();
    strong_groups.sort();

    let mut strong_pairs: Vec<(String, String)> = separation_constraints(dist)
        .into_iter()
        .map(|(u, v)| sorted_pair(u, v))
        .collect();
    strong_pairs.sort();

    let mut weak_pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let literal = are_weak_equivalent(dist, u, v, WeakMode::Literal);
            let geodesic = are_weak_equivalent(dist, u, v, WeakMode::Geodesic);
            if literal.is_some() || geodesic.is_some() {
                let (a, b) = sorted_pair(u, v);
                weak_pairs.push(WeakPair {
                    u: a,
                    v: b,
                    literal_witness: literal.map(label),
                    geodesic_witness: geodesic.map(label),
                });
            }
        }
    }
    weak_pairs.sort_by(|x, y| (&x.u, &x.v).cmp(&(&y.u, &y.v)));

    let mut by_profile: BTreeMap<Vec<(u32, usize)>, Vec<String>> = BTreeMap::new();
    let mut level_profiles = BTreeMap::new();
    for v in 0..n {
        let prof = level_profile(dist, v);
        let key: Vec<(u32, usize)> = prof.histogram.iter().map(|(&d, &c)| (d, c)).collect();
        by_profile.entry(key).or_default().push(label(v));
        level_profiles.insert(label(v), prof.histogram);
    }
    let mut same_level_classes: Vec<Vec<String>> = by_profile
        .into_values()
        .map(|mut ls| {
            ls.sort();
            ls
        })
        .collect();
    same_level_classes.sort();

    AnalysisReport {
        strong_groups,
        non_transitive_triple: sg
            .non_transitive_triple
            .map(|(a, b, c)| vec![label(a), label(b), label(c)]),
        strong_pairs,
        weak_pairs,
        same_level_classes,
        level_profiles,
        notes,
    }
}
