//! Bounded stages of a cumulative hierarchy over a seed structure.
//!
//! Stage 0 is the seed: opaque atoms with a membership relation. Stage
//! `α + 1` adjoins one new node for every nonempty subset of stage `α` that no
//! existing node already represents (has exactly that subset as its
//! members), with edges only into the new nodes. Graph convention as in
//! [`crate::apg`]: a node's children are its members.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::apg::{is_sigma_node, pattern_report, regularity_failure, solve, Apg, PatternReport};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 5_000;
pub const DEFAULT_STAGES: usize = 3;

/// Named seed presets.
pub fn preset(name: &str) -> Option<Apg> {
    let text = match name {
        "wf" => "node e:\n",
        "quine" => "node a: a\nnode e:\n",
        "unfounded-pair" => "node u: u e\nnode e:\n",
        _ => return None,
    };
    Some(Apg::parse_text(text).expect("presets are well-formed"))
}

pub const PRESETS: [&str; 3] = ["wf", "quine", "unfounded-pair"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionStatus {
    Pass,
    Fail,
    /// Holds for every finite structure or every structure of atoms.
    ByConstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub id: &'static str,
    pub status: ConditionStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedReport {
    pub conditions: Vec<Condition>,
}

impl SeedReport {
    pub fn passed(&self) -> bool {
        self.conditions
            .iter()
            .all(|c| c.status != ConditionStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&Condition> {
        self.conditions
            .iter()
            .filter(|c| c.status == ConditionStatus::Fail)
            .collect()
    }
}

/// Checks the seed conditions. Extensions being sets is automatic for finite
/// seeds, and atoms never meet each other's transitive closures; the empty
/// set and extensionality are checked directly.
pub fn check_seed(seed: &Apg) -> SeedReport {
    let mut conditions = vec![
        Condition {
            id: "extensions-are-sets",
            status: ConditionStatus::ByConstruction,
            detail: "every member collection of a finite structure is a set".into(),
        },
        Condition {
            id: "atoms-disjoint-from-closures",
            status: ConditionStatus::ByConstruction,
            detail: "stage-0 nodes are opaque atoms".into(),
        },
    ];
    let empty: Vec<&str> = seed
        .nodes()
        .filter(|&v| seed.children(v).is_empty())
        .map(|v| seed.name(v))
        .collect();
    conditions.push(Condition {
        id: "empty-set",
        status: if empty.is_empty() {
            ConditionStatus::Fail
        } else {
            ConditionStatus::Pass
        },
        detail: if empty.is_empty() {
            "no node without members".into()
        } else {
            format!("empty node {}", empty[0])
        },
    });
    let mut seen: Vec<(&[usize], usize)> = Vec::new();
    let mut clash = None;
    for v in seed.nodes() {
        if let Some(&(_, u)) = seen.iter().find(|(m, _)| *m == seed.children(v)) {
            clash = Some((u, v));
            break;
        }
        seen.push((seed.children(v), v));
    }
    conditions.push(Condition {
        id: "extensionality",
        status: if clash.is_some() {
            ConditionStatus::Fail
        } else {
            ConditionStatus::Pass
        },
        detail: match clash {
            Some((u, v)) => format!(
                "{} and {} have the same members",
                seed.name(u),
                seed.name(v)
            ),
            None => "distinct nodes have distinct members".into(),
        },
    });
    SeedReport { conditions }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub member: usize,
    pub set: usize,
    pub stage: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelNode {
    pub label: String,
    pub stage: usize,
}

/// Stages `0..=stages` of the construction, stored once with stage tags on
/// nodes and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    nodes: Vec<ModelNode>,
    edges: Vec<Edge>,
    stages: usize,
}

impl Model {
    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn nodes(&self) -> &[ModelNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of nodes in stage `alpha` (nodes are stored stage by stage).
    pub fn stage_size(&self, alpha: usize) -> usize {
        self.nodes.iter().filter(|n| n.stage <= alpha).count()
    }

    /// Adds an edge without any checks, for exercising the structural
    /// checks on damaged models.
    pub fn insert_edge_unchecked(&mut self, edge: Edge) {
        self.edges.push(edge);
    }

    fn edges_at(&self, alpha: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.stage <= alpha)
    }

    /// Members of each stage-`alpha` node under the stage-`alpha` relation.
    fn members_at(&self, alpha: usize) -> Vec<BTreeSet<usize>> {
        let mut members = vec![BTreeSet::new(); self.stage_size(alpha)];
        for e in self.edges_at(alpha) {
            if e.set < members.len() {
                members[e.set].insert(e.member);
            }
        }
        members
    }

    /// `(M_alpha, E_alpha)` as a graph.
    pub fn truncation(&self, alpha: usize) -> Apg {
        let members = self.members_at(alpha);
        let mut g = Apg::new();
        for n in &self.nodes[..members.len()] {
            g.add_node(n.label.clone()).expect("labels are unique");
        }
        for (v, ms) in members.into_iter().enumerate() {
            g.set_children(v, ms.into_iter().filter(|&m| m < g.len()).collect());
        }
        g
    }

    /// Graph text of the last stage followed by `# stage <id> <k>` lines.
    pub fn to_text(&self) -> String {
        let mut out = self.truncation(self.stages).to_text();
        for n in &self.nodes {
            let _ = writeln!(out, "# stage {} {}", n.label, n.stage);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let g = self.truncation(self.stages).to_json();
        json!({
            "nodes": g.nodes,
            "edges": g.edges,
            "point": g.point,
            "stages": self.nodes.iter().map(|n| json!({"id": n.label, "stage": n.stage})).collect::<Vec<_>>(),
        })
    }
}

fn subset_label(labels: &[String], members: &[usize]) -> String {
    let parts: Vec<&str> = members.iter().map(|&m| labels[m].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Builds stages `0..=stages`. New nodes are labelled by their member
/// labels in creation order, and adjoined in increasing bitmask order of
/// the subsets they stand for.
pub fn build(seed: &Apg, stages: usize, cap: usize) -> Result<Model> {
    let report = check_seed(seed);
    if !report.passed() {
        let reasons: Vec<String> = report
            .failures()
            .iter()
            .map(|c| format!("{} ({})", c.id, c.detail))
            .collect();
        return Err(Error::SeedRejected(reasons.join("; ")));
    }
    if seed.len() > cap {
        return Err(Error::CapExceeded {
            stage: 0,
            projected: seed.len().to_string(),
            cap,
        });
    }
    let mut nodes: Vec<ModelNode> = seed
        .nodes()
        .map(|v| ModelNode {
            label: seed.name(v).to_string(),
            stage: 0,
        })
        .collect();
    let mut edges: Vec<Edge> = seed
        .nodes()
        .flat_map(|v| {
            seed.children(v).iter().map(move |&m| Edge {
                member: m,
                set: v,
                stage: 0,
            })
        })
        .collect();
    let mut members: Vec<Vec<usize>> = seed.nodes().map(|v| seed.children(v).to_vec()).collect();

    for alpha in 0..stages {
        let size = nodes.len();
        let represented: HashSet<&[usize]> = members
            .iter()
            .filter(|m| !m.is_empty())
            .map(Vec::as_slice)
            .collect();
        let subsets = (size < 63).then(|| (1u64 << size) - 1);
        let projected =
            subsets.and_then(|s| (size as u64).checked_add(s - represented.len() as u64));
        match projected {
            Some(p) if p <= cap as u64 => {}
            other => {
                return Err(Error::CapExceeded {
                    stage: alpha + 1,
                    projected: other.map_or_else(|| format!("about 2^{size}"), |p| p.to_string()),
                    cap,
                })
            }
        }
        let labels: Vec<String> = nodes.iter().map(|n| n.label.clone()).collect();
        let mut fresh: Vec<Vec<usize>> = Vec::new();
        for mask in 1..=subsets.expect("checked above") {
            let subset: Vec<usize> = (0..size).filter(|&i| mask >> i & 1 == 1).collect();
            if !represented.contains(subset.as_slice()) {
                fresh.push(subset);
            }
        }
        for subset in fresh {
            let id = nodes.len();
            nodes.push(ModelNode {
                label: subset_label(&labels, &subset),
                stage: alpha + 1,
            });
            edges.extend(subset.iter().map(|&m| Edge {
                member: m,
                set: id,
                stage: alpha + 1,
            }));
            members.push(subset);
        }
    }
    Ok(Model {
        nodes,
        edges,
        stages,
    })
}

/// Every stage-`β` edge into a stage-`α` node (`α < β`) is already a stage-`α`
/// edge.
pub fn check_end_extension(m: &Model) -> bool {
    for beta in 1..=m.stages {
        let old_nodes = |alpha: usize| m.stage_size(alpha);
        let later: HashSet<(usize, usize)> = m.edges_at(beta).map(|e| (e.member, e.set)).collect();
        for alpha in 0..beta {
            let bound = old_nodes(alpha);
            let restricted: HashSet<(usize, usize)> =
                later.iter().copied().filter(|&(_, s)| s < bound).collect();
            let earlier: HashSet<(usize, usize)> =
                m.edges_at(alpha).map(|e| (e.member, e.set)).collect();
            if restricted != earlier {
                return false;
            }
        }
    }
    true
}

/// At every stage, distinct nodes have distinct members.
pub fn check_extensionality(m: &Model) -> bool {
    (0..=m.stages).all(|alpha| {
        let members = m.members_at(alpha);
        let distinct: HashSet<&BTreeSet<usize>> = members.iter().collect();
        distinct.len() == members.len()
    })
}

/// Every subset of stage `alpha` is represented at stage `alpha + 1`: the
/// empty one by an empty node, the others by distinct member sets. Counting
/// the distinct nonempty member sets inside stage `alpha` avoids listing
/// `2^|M_alpha|` subsets.
pub fn check_thickness(m: &Model, alpha: usize) -> Result<bool> {
    if alpha + 1 > m.stages {
        return Err(Error::StageOutOfRange {
            alpha,
            stages: m.stages,
        });
    }
    let bound = m.stage_size(alpha);
    let members = m.members_at(alpha + 1);
    let has_empty = members.iter().any(BTreeSet::is_empty);
    let inside: HashSet<&BTreeSet<usize>> = members
        .iter()
        .filter(|s| !s.is_empty() && s.iter().all(|&x| x < bound))
        .collect();
    let needed = if bound >= 64 {
        return Ok(false);
    } else {
        (1u64 << bound) - 1
    };
    Ok(has_empty && inside.len() as u64 == needed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionStatement {
    pub statement: String,
    pub first_stage: bool,
    pub last_stage: bool,
    pub agree: bool,
}

/// Truth values of σ and relativized-Regularity statements at stage 1 and at
/// the last built stage. This compares two finite truncations and says
/// nothing about the full class-sized structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionReport {
    pub first_stage: usize,
    pub last_stage: usize,
    pub statements: Vec<ReflectionStatement>,
    /// For each even index with a σ-node at the last stage, whether stage 1
    /// already has a σ-node at some even index not above it.
    pub even_levels_descend: Vec<(usize, bool)>,
    pub scope: &'static str,
}

impl ReflectionReport {
    pub fn statement(&self, name: &str) -> Option<&ReflectionStatement> {
        self.statements.iter().find(|s| s.statement == name)
    }
}

struct StageFacts {
    winning: Vec<bool>,
    second: Vec<Option<usize>>,
    graph: Apg,
    max_even: Option<usize>,
}

impl StageFacts {
    fn new(graph: Apg) -> Self {
        let outcomes = solve(&graph);
        let second: Vec<Option<usize>> = outcomes
            .iter()
            .map(|o| o.w().filter(|w| w % 2 == 0))
            .collect();
        let max_even = second.iter().flatten().copied().max();
        StageFacts {
            winning: outcomes.iter().map(|o| !o.is_draw()).collect(),
            second,
            graph,
            max_even,
        }
    }

    fn sigma_where(&self, keep: impl Fn(usize) -> bool) -> bool {
        self.graph
            .nodes()
            .any(|v| keep(v) && is_sigma_node(&self.graph, v))
    }

    fn sigma_second(&self) -> bool {
        self.sigma_where(|v| self.second[v].is_some())
    }

    fn sigma_second_upto(&self, w: usize) -> bool {
        self.sigma_where(|v| self.second[v].is_some_and(|x| x <= w))
    }

    fn sigma_second_exactly(&self, w: usize) -> bool {
        self.sigma_where(|v| self.second[v] == Some(w))
    }

    fn regularity_in_winning(&self) -> bool {
        regularity_failure(&self.graph, &self.winning).is_none()
    }
}

pub fn check_reflection(m: &Model) -> Result<ReflectionReport> {
    if m.stages < 1 {
        return Err(Error::StageOutOfRange {
            alpha: 0,
            stages: m.stages,
        });
    }
    let first = StageFacts::new(m.truncation(1));
    let last = StageFacts::new(m.truncation(m.stages));
    let mut statements = Vec::new();
    let mut push = |statement: String, a: bool, b: bool| {
        statements.push(ReflectionStatement {
            statement,
            first_stage: a,
            last_stage: b,
            agree: a == b,
        })
    };
    push(
        "sigma(W_II)".into(),
        first.sigma_second(),
        last.sigma_second(),
    );
    let top = first.max_even.max(last.max_even).unwrap_or(0);
    for w in (0..=top).step_by(2) {
        push(
            format!("sigma(W_{w})"),
            first.sigma_second_upto(w),
            last.sigma_second_upto(w),
        );
    }
    push(
        "regularity(W)".into(),
        first.regularity_in_winning(),
        last.regularity_in_winning(),
    );
    for w in (0..=top).step_by(2) {
        push(
            format!("sigma(S_{w})"),
            first.sigma_second_exactly(w),
            last.sigma_second_exactly(w),
        );
    }
    let even_levels_descend = (0..=top)
        .step_by(2)
        .filter(|&w| last.sigma_second_exactly(w))
        .map(|w| {
            let found = (0..=w).step_by(2).any(|d| first.sigma_second_exactly(d));
            (w, found)
        })
        .collect();
    Ok(ReflectionReport {
        first_stage: 1,
        last_stage: m.stages,
        statements,
        even_levels_descend,
        scope: "finite truncation check: stage 1 against the last built stage",
    })
}

/// Pattern report of the last built stage.
pub fn classify_model(m: &Model) -> PatternReport {
    pattern_report(&m.truncation(m.stages))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed(text: &str) -> Apg {
        Apg::parse_text(text).unwrap()
    }

    #[test]
    fn seed_conditions() {
        assert!(check_seed(&preset("quine").unwrap()).passed());
        let two_empty = check_seed(&seed("node a:\nnode b:\n"));
        assert_eq!(two_empty.failures()[0].id, "extensionality");
        let no_empty = check_seed(&seed("node a: a\n"));
        assert_eq!(no_empty.failures()[0].id, "empty-set");
        assert!(matches!(
            build(&seed("node a:\nnode b:\n"), 1, 100),
            Err(Error::SeedRejected(_))
        ));
    }

    #[test]
    fn quine_seed_first_stage() {
        let m = build(&preset("quine").unwrap(), 1, DEFAULT_CAP).unwrap();
        assert_eq!(m.len(), 4);
        let labels: Vec<&str> = m.nodes().iter().map(|n| n.label.as_str()).collect();
        assert_eq!(labels, vec!["a", "e", "{e}", "{a,e}"]);
        assert!(check_thickness(&m, 0).unwrap());
        assert!(matches!(
            check_thickness(&m, 1),
            Err(Error::StageOutOfRange {
                alpha: 1,
                stages: 1
            })
        ));
    }

    #[test]
    fn zero_stages_is_the_seed() {
        let s = preset("unfounded-pair").unwrap();
        let m = build(&s, 0, DEFAULT_CAP).unwrap();
        assert_eq!(m.truncation(0), s);
        assert!(check_end_extension(&m));
        assert!(check_extensionality(&m));
    }

    #[test]
    fn lone_empty_seed() {
        let m = build(&preset("wf").unwrap(), 2, DEFAULT_CAP).unwrap();
        assert_eq!(m.stage_size(1), 2);
        // {e} is represented by the stage-1 node; {n1} and {e,n1} are new
        assert_eq!(m.stage_size(2), 4);
    }

    #[test]
    fn cap_names_the_stage() {
        let err = build(&preset("quine").unwrap(), 3, DEFAULT_CAP).unwrap_err();
        match err {
            Error::CapExceeded {
                stage,
                projected,
                cap,
            } => {
                assert_eq!(stage, 3);
                assert_eq!(projected, (16 + 65_535 - 15).to_string());
                assert_eq!(cap, DEFAULT_CAP);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn structural_checks_hold_on_presets() {
        for name in PRESETS {
            let m = build(&preset(name).unwrap(), 2, DEFAULT_CAP).unwrap();
            assert!(check_end_extension(&m), "{name}");
            assert!(check_extensionality(&m), "{name}");
            for alpha in 0..2 {
                assert!(check_thickness(&m, alpha).unwrap(), "{name} at {alpha}");
            }
        }
    }

    #[test]
    fn corrupted_model_is_not_an_end_extension() {
        let mut m = build(&preset("quine").unwrap(), 2, DEFAULT_CAP).unwrap();
        let new_node = m.stage_size(1);
        m.insert_edge_unchecked(Edge {
            member: new_node,
            set: 0,
            stage: 2,
        });
        assert!(!check_end_extension(&m));
    }

    #[test]
    fn classification_is_stable_across_stages() {
        for name in PRESETS {
            let m = build(&preset(name).unwrap(), 2, DEFAULT_CAP).unwrap();
            for k in 1..=2 {
                let before = solve(&m.truncation(k - 1));
                let after = solve(&m.truncation(k));
                assert_eq!(before[..], after[..before.len()], "{name} stage {k}");
            }
        }
    }

    #[test]
    fn monotone_growth_without_re_representation() {
        let m = build(&preset("quine").unwrap(), 2, DEFAULT_CAP).unwrap();
        let g = m.truncation(2);
        let mut seen = HashSet::new();
        for v in g.nodes() {
            if !g.children(v).is_empty() {
                assert!(seen.insert(g.children(v).to_vec()), "{}", g.name(v));
            }
        }
        assert!(m.stage_size(0) < m.stage_size(1));
        assert!(m.stage_size(1) < m.stage_size(2));
    }

    #[test]
    fn reflection_on_quine_seed() {
        let m = build(&preset("quine").unwrap(), 2, DEFAULT_CAP).unwrap();
        let r = check_reflection(&m).unwrap();
        let s = r.statement("sigma(W_II)").unwrap();
        assert!(!s.first_stage && !s.last_stage);
    }

    #[test]
    fn reflection_on_unfounded_pair() {
        let m = build(&preset("unfounded-pair").unwrap(), 2, DEFAULT_CAP).unwrap();
        let r = check_reflection(&m).unwrap();
        let s = r.statement("sigma(W_II)").unwrap();
        // {u} has u as its only member, and u ∈ u
        assert!(s.first_stage && s.last_stage);
        assert!(r.even_levels_descend.iter().all(|&(_, found)| found));
    }

    #[test]
    fn reflection_on_wellfounded_seed() {
        let m = build(&preset("wf").unwrap(), 3, DEFAULT_CAP).unwrap();
        let r = check_reflection(&m).unwrap();
        let s = r.statement("regularity(W)").unwrap();
        assert!(s.first_stage && s.last_stage);
        assert!(r.statements.iter().all(|s| s.agree));
    }

    #[test]
    fn model_patterns() {
        let pattern = |name: &str| {
            let m = build(&preset(name).unwrap(), 2, DEFAULT_CAP).unwrap();
            classify_model(&m)
        };
        assert_eq!(pattern("wf").pattern, "ALL=W=HW=WF");
        assert!(!pattern("quine").all_eq_winning());
        let pair = pattern("unfounded-pair");
        assert_eq!(pair.pattern, "ALL=W=HW!=WF");
        assert!(pair.spectrum.iter().any(|nu| nu % 2 == 0));
    }

    #[test]
    fn exports() {
        let m = build(&preset("quine").unwrap(), 1, DEFAULT_CAP).unwrap();
        let text = m.to_text();
        assert!(text.contains("node {a,e}: a e\n"));
        assert!(text.contains("# stage {e} 1\n"));
        let g = Apg::parse_text(&text).unwrap();
        assert_eq!(g, m.truncation(1));
        assert_eq!(m.to_json()["stages"][3]["stage"], 1);
    }
}
