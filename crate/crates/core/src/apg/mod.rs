//! Finite pointed graphs read as possibly non-well-founded sets.
//!
//! An edge `x -> y` says `y ∈ x`. A node with no children is an empty set; a
//! node with a self-loop is a member of itself.
//!
//! Text format, one statement per line (`#` starts a comment line):
//!
//! ```text
//! node u: u e
//! node e:
//! node x: u
//! point x
//! ```
//!
//! Ids are tokens without whitespace or `:`. Children may be declared later in
//! the file but must be declared somewhere.

mod bisim;
mod report;
mod sigma;
mod solve;

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hf::HFSet;

pub use bisim::{bisim_quotient, Quotient};
pub use report::{pattern_report, PatternReport, Regularity, SpectrumShape};
pub use sigma::{
    is_sigma_node, regularity_failure, sigma, sigma_witness, sigma_witness_with_bound,
    SIGMA_WITNESS_BOUND,
};
pub use solve::{
    hw_nodes, hw_nodes_with, is_wellfounded, optimal_move, solve, wellfounded_nodes, Outcome,
    OutcomeKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: node `{id}` declared twice")]
    DuplicateNode { line: usize, id: String },
    #[error("line {line}: unknown node `{id}`")]
    UnknownNode { line: usize, id: String },
    #[error("invalid node id `{0}`")]
    InvalidId(String),
    #[error("no node named `{0}`")]
    NoSuchNode(String),
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// Finite directed graph with an optional distinguished node.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Apg {
    names: Vec<String>,
    children: Vec<Vec<usize>>,
    point: Option<usize>,
    index: HashMap<String, usize>,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && !id.contains([':', '#']) && !id.chars().any(char::is_whitespace)
}

impl Apg {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on nodes `0..children.len()` named `{prefix}{i}`. Child lists
    /// are sorted and deduplicated.
    pub fn from_adjacency(prefix: &str, children: Vec<Vec<usize>>) -> Self {
        let mut g = Apg::new();
        for i in 0..children.len() {
            g.add_node(format!("{prefix}{i}"))
                .expect("generated names are unique");
        }
        for (i, c) in children.into_iter().enumerate() {
            g.set_children(i, c);
        }
        g
    }

    pub fn add_node(&mut self, name: impl Into<String>) -> Result<usize, GraphError> {
        let name = name.into();
        if !valid_id(&name) {
            return Err(GraphError::InvalidId(name));
        }
        if self.index.contains_key(&name) {
            return Err(GraphError::DuplicateNode { line: 0, id: name });
        }
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.children.push(Vec::new());
        Ok(id)
    }

    pub fn set_children(&mut self, node: usize, mut children: Vec<usize>) {
        assert!(
            children.iter().all(|&c| c < self.names.len()),
            "child out of range"
        );
        children.sort_unstable();
        children.dedup();
        self.children[node] = children;
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        let list = &mut self.children[from];
        if let Err(at) = list.binary_search(&to) {
            list.insert(at, to);
        }
    }

    pub fn set_point(&mut self, point: Option<usize>) {
        self.point = point;
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(Vec::len).sum()
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn name(&self, node: usize) -> &str {
        &self.names[node]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.id(name)
            .ok_or_else(|| GraphError::NoSuchNode(name.to_string()))
    }

    pub fn point(&self) -> Option<usize> {
        self.point
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    /// `predecessors()[y]` lists every `x` with `y ∈ x`.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut preds = vec![Vec::new(); self.len()];
        for (x, cs) in self.children.iter().enumerate() {
            for &y in cs {
                preds[y].push(x);
            }
        }
        preds
    }

    /// Graph of `tc({x})`, pointed at `x`. Nodes follow ascending code
    /// order; sets of rank at most 4 are named by their code.
    pub fn from_hfset(x: &HFSet) -> Self {
        let mut members: Vec<HFSet> = x.tc().into_iter().collect();
        members.push(x.clone());
        let position: HashMap<&HFSet, usize> =
            members.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut g = Apg::new();
        for (i, s) in members.iter().enumerate() {
            let name = match s.rank() {
                r if r <= 4 => s.code().expect("small rank has a code").to_string(),
                _ => format!("s{i}"),
            };
            g.add_node(name).expect("distinct sets get distinct names");
        }
        for (i, s) in members.iter().enumerate() {
            let cs = s.elements().iter().map(|e| position[e]).collect();
            g.set_children(i, cs);
        }
        g.point = Some(members.len() - 1);
        g
    }

    /// Unfolds a node as a hereditarily finite set, if it is well-founded.
    pub fn decorate(&self, node: usize) -> Option<HFSet> {
        let wf = wellfounded_nodes(self);
        if !wf[node] {
            return None;
        }
        let mut memo: HashMap<usize, HFSet> = HashMap::new();
        fn go(g: &Apg, v: usize, memo: &mut HashMap<usize, HFSet>) -> HFSet {
            if let Some(s) = memo.get(&v) {
                return s.clone();
            }
            let s = HFSet::from_elements(
                g.children(v)
                    .iter()
                    .map(|&c| go(g, c, memo))
                    .collect::<Vec<_>>(),
            );
            memo.insert(v, s.clone());
            s
        }
        Some(go(self, node, &mut memo))
    }

    /// Subgraph on the given nodes (kept in their current order), dropping
    /// edges that leave the set.
    pub fn induced(&self, keep: &[usize]) -> Apg {
        let position: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Apg::new();
        for &v in keep {
            g.add_node(self.names[v].clone())
                .expect("names stay unique");
        }
        for (i, &v) in keep.iter().enumerate() {
            let cs = self.children[v]
                .iter()
                .filter_map(|c| position.get(c).copied())
                .collect();
            g.set_children(i, cs);
        }
        g.point = self.point.and_then(|p| position.get(&p).copied());
        g
    }

    pub fn parse_text(text: &str) -> Result<Apg, GraphError> {
        let mut decls: Vec<(usize, String, Vec<String>)> = Vec::new();
        let mut point: Option<(usize, String)> = None;
        let mut g = Apg::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let stmt = raw.split_once('#').map_or(raw, |(s, _)| s).trim();
            if stmt.is_empty() {
                continue;
            }
            let (keyword, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
            match keyword {
                "node" => {
                    let (id, kids) = rest.split_once(':').ok_or_else(|| GraphError::Syntax {
                        line,
                        reason: "expected `node <id>: <child> ...`".into(),
                    })?;
                    let id = id.trim();
                    if !valid_id(id) {
                        return Err(GraphError::Syntax {
                            line,
                            reason: format!("invalid node id `{id}`"),
                        });
                    }
                    g.add_node(id).map_err(|_| GraphError::DuplicateNode {
                        line,
                        id: id.to_string(),
                    })?;
                    let kids = kids.split_whitespace().map(str::to_string).collect();
                    decls.push((line, id.to_string(), kids));
                }
                "point" => {
                    let id = rest.trim();
                    if point.is_some() {
                        return Err(GraphError::Syntax {
                            line,
                            reason: "point given twice".into(),
                        });
                    }
                    if !valid_id(id) {
                        return Err(GraphError::Syntax {
                            line,
                            reason: format!("invalid point id `{id}`"),
                        });
                    }
                    point = Some((line, id.to_string()));
                }
                other => {
                    return Err(GraphError::Syntax {
                        line,
                        reason: format!("unknown statement `{other}`"),
                    })
                }
            }
        }
        for (line, id, kids) in decls {
            let node = g.index[&id];
            let mut cs = Vec::with_capacity(kids.len());
            for k in kids {
                let c = g.id(&k).ok_or(GraphError::UnknownNode { line, id: k })?;
                cs.push(c);
            }
            g.set_children(node, cs);
        }
        if let Some((line, id)) = point {
            let p = g.id(&id).ok_or(GraphError::UnknownNode { line, id })?;
            g.point = Some(p);
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.nodes() {
            let _ = write!(out, "node {}:", self.names[v]);
            for &c in &self.children[v] {
                let _ = write!(out, " {}", self.names[c]);
            }
            out.push('\n');
        }
        if let Some(p) = self.point {
            let _ = writeln!(out, "point {}", self.names[p]);
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            nodes: self.names.clone(),
            edges: self
                .nodes()
                .flat_map(|v| {
                    self.children[v]
                        .iter()
                        .map(move |&c| (self.names[v].clone(), self.names[c].clone()))
                })
                .collect(),
            point: self.point.map(|p| self.names[p].clone()),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Apg, GraphError> {
        let mut g = Apg::new();
        let mut seen = HashSet::new();
        for id in &json.nodes {
            if !seen.insert(id) {
                return Err(GraphError::DuplicateNode {
                    line: 0,
                    id: id.clone(),
                });
            }
            g.add_node(id.clone())?;
        }
        for (from, to) in &json.edges {
            let f = g.require(from)?;
            let t = g.require(to)?;
            g.add_edge(f, t);
        }
        if let Some(p) = &json.point {
            g.point = Some(g.require(p)?);
        }
        Ok(g)
    }

    pub fn parse_json(text: &str) -> Result<Apg, GraphError> {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Apg::from_json(&json)
    }

    /// Reads JSON when the text starts with `{`, the line format otherwise.
    pub fn parse(text: &str) -> Result<Apg, GraphError> {
        if text.trim_start().starts_with('{') {
            Apg::parse_json(text)
        } else {
            Apg::parse_text(text)
        }
    }
}

/// JSON form: `{"nodes": [...], "edges": [[from, to], ...], "point": id|null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(default)]
    pub point: Option<String>,
}


#[cfg(test)]
mod proptests {
    use proptest::prelude::*;

    use super::*;

    /// Random graphs on up to `max` nodes with arbitrary edges.
    fn arb_graph(max: usize) -> impl Strategy<Value = Apg> {
        (1..=max).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(any::<bool>(), n), n).prop_map(
                move |rows| {
                    let children = rows
                        .iter()
                        .map(|row| (0..n).filter(|&j| row[j]).collect())
                        .collect();
                    Apg::from_adjacency("n", children)
                },
            )
        })
    }

    fn arb_graph_and_mask(max: usize) -> impl Strategy<Value = (Apg, u64)> {
        (arb_graph(max), any::<u64>())
    }

    proptest! {
        #[test]
        fn outcomes_satisfy_the_local_rules(g in arb_graph(8)) {
            let o = solve(&g);
            for v in g.nodes() {
                let kids: Vec<Outcome> = g.children(v).iter().map(|&c| o[c]).collect();
                let least_second = kids.iter().filter_map(|k| match k {
                    Outcome::WinII(w) => Some(*w),
                    _ => None,
                }).min();
                match o[v] {
                    Outcome::WinI(w) => prop_assert_eq!(Some(w - 1), least_second),
                    Outcome::WinII(w) => {
                        prop_assert!(kids.iter().all(|k| matches!(k, Outcome::WinI(_))));
                        let top = kids.iter().filter_map(|k| k.w()).max();
                        prop_assert_eq!(w, top.map_or(0, |t| t + 1));
                    }
                    Outcome::Draw => {
                        prop_assert!(least_second.is_none());
                        prop_assert!(kids.iter().any(|k| k.is_draw()));
                    }
                }
            }
        }

        #[test]
        fn quotient_preserves_outcomes(g in arb_graph(8)) {
            let q = bisim_quotient(&g);
            let before = solve(&g);
            let after = solve(&q.graph);
            for v in g.nodes() {
                prop_assert_eq!(before[v], after[q.map[v]]);
            }
            prop_assert_eq!(bisim_quotient(&q.graph).graph.len(), q.graph.len());
        }

        #[test]
        fn no_sink_means_all_draw(g in arb_graph(8)) {
            if g.nodes().all(|v| !g.children(v).is_empty()) {
                prop_assert!(solve(&g).iter().all(|o| o.is_draw()));
            }
        }

        #[test]
        fn subsets_of_winning_nodes_win((g, mask) in arb_graph_and_mask(8)) {
            let o = solve(&g);
            let pick = |keep: &dyn Fn(Outcome) -> bool| -> Vec<usize> {
                g.nodes().filter(|&v| keep(o[v]) && mask >> v & 1 == 1).collect()
            };
            let mut h = g.clone();
            let fresh = h.add_node("fresh").unwrap();
            h.set_children(fresh, pick(&|x: Outcome| !x.is_draw()));
            prop_assert!(!solve(&h)[fresh].is_draw());
            h.set_children(fresh, pick(&|x: Outcome| matches!(x, Outcome::WinI(_))));
            prop_assert!(matches!(solve(&h)[fresh], Outcome::WinII(_)));
        }

        #[test]
        fn text_and_json_round_trip(g in arb_graph(6)) {
            prop_assert_eq!(Apg::parse_text(&g.to_text()).unwrap(), g.clone());
            prop_assert_eq!(Apg::from_json(&g.to_json()).unwrap(), g);
        }
    }
}
