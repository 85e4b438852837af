//! Report models shared by the CLI and the test suites.
//!
//! Reports are byte-stable for fixed inputs and options: field order is
//! fixed, maps are ordered, and nothing wall-clock-dependent is serialized
//! unless stats are explicitly requested. Thread count is deliberately not
//! part of the configuration (or its hash) because it cannot change any
//! reported value.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::construct::{Construction, Interpretation};
use crate::graph::{FamilySpec, Graph};
use crate::partition::{PartitionClasses, ResolveVerdict};
use crate::solver::{PdOutcome, PdResult, SolveStats, SymmetryMode};

pub const TOOL_NAME: &str = "pdlab";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo {
            name: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
        }
    }
}

/// FNV-1a over the canonical JSON text of a config value.
pub fn config_hash<T: Serialize>(config: &T) -> String {
    let text = serde_json::to_string(config).expect("config serializes");
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub family: Option<String>,
    pub order: usize,
    pub size: usize,
}

impl GraphInfo {
    pub fn new(g: &Graph, spec: Option<&FamilySpec>) -> Self {
        GraphInfo {
            family: spec.map(|s| s.to_string()),
            order: g.order(),
            size: g.size(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PdConfig {
    pub input: String,
    pub k: Option<usize>,
    pub budget_nodes: Option<u64>,
    pub budget_seconds: Option<f64>,
    pub prune_twins: bool,
    pub symmetry: SymmetryMode,
}

/// Report for `pd` and `pd --k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PdReport {
    pub tool: ToolInfo,
    pub command: String,
    pub config: PdConfig,
    pub config_hash: String,
    pub graph: GraphInfo,
    pub lower_bounds: BTreeMap<String, usize>,
    pub combined_lower: usize,
    pub upper_bound: usize,
    pub status: String,
    pub pd: Option<usize>,
    pub undecided_at_k: Option<usize>,
    pub witness: Option<PartitionClasses>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<SolveStats>,
}

impl PdReport {
    pub fn from_result(
        config: PdConfig,
        graph: GraphInfo,
        result: &PdResult,
        g: &Graph,
        notes: Vec<String>,
        with_stats: bool,
    ) -> Self {
        let hash = config_hash(&config);
        let (status, pd, undecided_at_k, witness) = match &result.outcome {
            PdOutcome::Decided { pd, witness } => (
                "decided".to_string(),
                Some(*pd),
                None,
                Some(PartitionClasses::from_partition(witness, g)),
            ),
            PdOutcome::Undecided { at_k, .. } => ("undecided".to_string(), None, Some(*at_k), None),
        };
        PdReport {
            tool: ToolInfo::current(),
            command: "pd".to_string(),
            config,
            config_hash: hash,
            graph,
            lower_bounds: result
                .lower_bounds
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            combined_lower: result.combined_lower,
            upper_bound: result.upper_bound,
            status,
            pd,
            undecided_at_k,
            witness,
            notes,
            stats: with_stats.then_some(result.stats),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "graph: {} (order {}, size {})\n",
            self.graph.family.as_deref().unwrap_or("<file>"),
            self.graph.order,
            self.graph.size
        ));
        let lbs: Vec<String> = self
            .lower_bounds
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&format!(
            "bounds: {} <= pd <= {} ({})\n",
            self.combined_lower,
            self.upper_bound,
            lbs.join(", ")
        ));
        match self.status.as_str() {
            "decided" => out.push_str(&format!("pd = {}\n", self.pd.unwrap())),
            "exists" => out.push_str(&format!(
                "a resolving partition with {} classes exists\n",
                self.config.k.unwrap_or_default()
            )),
            "absent" => out.push_str(&format!(
                "no resolving partition with {} classes exists\n",
                self.config.k.unwrap_or_default()
            )),
            _ => out.push_str(&format!(
                "undecided at k = {} (budget exhausted)\n",
                self.undecided_at_k.unwrap_or_default()
            )),
        }
        if let Some(w) = &self.witness {
            for (i, class) in w.classes.iter().enumerate() {
                out.push_str(&format!("class {}: {}\n", i + 1, class.join(" ")));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        if let Some(s) = &self.stats {
            out.push_str(&format!(
                "stats: nodes={} leaves={} twin_prunes={} symmetry_prunes={} wall_ms={}\n",
                s.nodes, s.leaves, s.twin_prunes, s.symmetry_prunes, s.wall_ms
            ));
        }
        out
    }
}

/// Report for `check`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub tool: ToolInfo,
    pub command: String,
    pub graph: GraphInfo,
    pub k: usize,
    pub verdict: ResolveVerdict,
    pub representations: Option<BTreeMap<String, Vec<u32>>>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.verdict {
            ResolveVerdict::Resolving => {
                out.push_str(&format!("resolving: {} classes\n", self.k));
            }
            ResolveVerdict::Violation { u, v } => {
                out.push_str(&format!(
                    "not resolving: `{u}` and `{v}` have equal representations\n"
                ));
            }
        }
        if let Some(reps) = &self.representations {
            for (label, rep) in reps {
                let entries: Vec<String> = rep.iter().map(u32::to_string).collect();
                out.push_str(&format!("{label}: ({})\n", entries.join(",")));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

/// Report for `bounds`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub tool: ToolInfo,
    pub command: String,
    pub graph: GraphInfo,
    pub lower_bounds: BTreeMap<String, usize>,
    pub combined_lower: usize,
    pub chartrand_upper: usize,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, v) in &self.lower_bounds {
            out.push_str(&format!("lower[{name}] = {v}\n"));
        }
        out.push_str(&format!("combined lower = {}\n", self.combined_lower));
        out.push_str(&format!("chartrand upper = {}\n", self.chartrand_upper));
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

/// Report for `construct`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructReport {
    pub tool: ToolInfo,
    pub command: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub graph: GraphInfo,
    pub interpretation: Interpretation,
    pub classes: PartitionClasses,
    pub verdict: ResolveVerdict,
    pub notes: Vec<String>,
}

impl ConstructReport {
    pub fn from_construction(c: &Construction) -> Self {
        ConstructReport {
            tool: ToolInfo::current(),
            command: "construct".to_string(),
            family: c.family.as_str().to_string(),
            n: c.n,
            m: c.m,
            graph: GraphInfo::new(&c.graph, Some(&c.graph_spec)),
            interpretation: c.interpretation.clone(),
            classes: c.classes.clone(),
            verdict: c.verdict.clone(),
            notes: c.notes.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "construction {} at n={} -> {} ({} classes)\n",
            self.family,
            self.n,
            self.graph.family.as_deref().unwrap_or("?"),
            self.classes.classes.len()
        ));
        out.push_str(&format!("interpretation: {}\n", self.interpretation.id));
        for r in &self.interpretation.repairs {
            out.push_str(&format!("repair: {r}\n"));
        }
        for (i, class) in self.classes.classes.iter().enumerate() {
            out.push_str(&format!("class {}: {}\n", i + 1, class.join(" ")));
        }
        match &self.verdict {
            ResolveVerdict::Resolving => out.push_str("verdict: resolving\n"),
            ResolveVerdict::Violation { u, v } => {
                out.push_str(&format!("verdict: not resolving (`{u}` vs `{v}`)\n"))
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable_and_config_sensitive() {
        let a = PdConfig {
            input: "corona:complete:3,wheel:4".into(),
            k: None,
            budget_nodes: None,
            budget_seconds: None,
            prune_twins: true,
            symmetry: SymmetryMode::Family,
        };
        let b = PdConfig {
            prune_twins: false,
            ..a.clone()
        };
        assert_eq!(config_hash(&a), config_hash(&a));
        assert_ne!(config_hash(&a), config_hash(&b));
    }

    #[test]
    fn auxiliary_reports_round_trip() {
        use crate::construct::{build_construction, ConstructionFamily, ConstructionSpec};
        let bounds = BoundsReport {
            tool: ToolInfo::current(),
            command: "bounds".into(),
            graph: GraphInfo {
                family: Some("path:4".into()),
                order: 4,
                size: 3,
            },
            lower_bounds: [("trivial".to_string(), 2)].into_iter().collect(),
            combined_lower: 2,
            chartrand_upper: 2,
            notes: vec![],
        };
        let text = to_json_string(&bounds);
        let back: BoundsReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, bounds);

        let check = CheckReport {
            tool: ToolInfo::current(),
            command: "check".into(),
            graph: bounds.graph.clone(),
            k: 2,
            verdict: crate::partition::ResolveVerdict::Violation {
                u: "a".into(),
                v: "b".into(),
            },
            representations: None,
            notes: vec![],
        };
        let text = to_json_string(&check);
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, check);

        let c = build_construction(&ConstructionSpec {
            family: ConstructionFamily::SpecialK3W4,
            n: 3,
            interpretation: None,
        })
        .unwrap();
        let report = ConstructReport::from_construction(&c);
        let text = to_json_string(&report);
        let back: ConstructReport = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json_string(&back), text);
    }

    #[test]
    fn pd_report_round_trips() {
        use crate::graph::{build, FamilySpec};
        use crate::solver::{partition_dimension, SolveOpts};
        let spec = FamilySpec::parse("path:5").unwrap();
        let g = build(&spec).unwrap();
        let result = partition_dimension(&g, &SolveOpts::default(), None).unwrap();
        let config = PdConfig {
            input: spec.to_string(),
            k: None,
            budget_nodes: None,
            budget_seconds: None,
            prune_twins: true,
            symmetry: SymmetryMode::Family,
        };
        let report = PdReport::from_result(
            config,
            GraphInfo::new(&g, Some(&spec)),
            &result,
            &g,
            vec![],
            false,
        );
        let text = to_json_string(&report);
        let back: PdReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(to_json_string(&back), text);
    }
}
