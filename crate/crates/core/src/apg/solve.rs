use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::Apg;
use crate::error::{Error, Result};
use crate::game::{Classification, Player};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OutcomeKind {
    #[serde(rename = "WIN_I")]
    WinI,
    #[serde(rename = "WIN_II")]
    WinII,
    #[serde(rename = "DRAW")]
    Draw,
}

/// Game value of a graph node. Draws carry no index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    WinI(usize),
    WinII(usize),
    Draw,
}

impl Outcome {
    pub fn kind(self) -> OutcomeKind {
        match self {
            Outcome::WinI(_) => OutcomeKind::WinI,
            Outcome::WinII(_) => OutcomeKind::WinII,
            Outcome::Draw => OutcomeKind::Draw,
        }
    }

    pub fn w(self) -> Option<usize> {
        match self {
            Outcome::WinI(w) | Outcome::WinII(w) => Some(w),
            Outcome::Draw => None,
        }
    }

    pub fn is_draw(self) -> bool {
        self == Outcome::Draw
    }

    pub fn classification(self) -> Option<Classification> {
        self.w().map(Classification::from_index)
    }
}

impl From<Classification> for Outcome {
    fn from(c: Classification) -> Self {
        match c.winner {
            Player::I => Outcome::WinI(c.w),
            Player::II => Outcome::WinII(c.w),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::WinI(w) => write!(f, "WIN_I w={w}"),
            Outcome::WinII(w) => write!(f, "WIN_II w={w}"),
            Outcome::Draw => f.write_str("DRAW"),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Outcome", 2)?;
        st.serialize_field("kind", &self.kind())?;
        st.serialize_field("w", &self.w())?;
        st.end()
    }
}

/// Retrograde analysis from the childless nodes.
///
/// Resolutions are processed in FIFO order, which visits them by
/// nondecreasing index: the first second-player win seen among a node's
/// children gives the least index, and the last first-player win to arrive
/// gives the largest. Anything never reached is a draw.
pub fn solve(g: &Apg) -> Vec<Outcome> {
    let preds = g.predecessors();
    let mut pending: Vec<usize> = g.nodes().map(|v| g.children(v).len()).collect();
    let mut outcome: Vec<Option<Outcome>> = vec![None; g.len()];
    let mut queue = VecDeque::new();
    for v in g.nodes() {
        if pending[v] == 0 {
            outcome[v] = Some(Outcome::WinII(0));
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        let resolved = outcome[v].expect("queued nodes are resolved");
        for &p in &preds[v] {
            if outcome[p].is_some() {
                continue;
            }
            match resolved {
                Outcome::WinII(w) => {
                    outcome[p] = Some(Outcome::WinI(w + 1));
                    queue.push_back(p);
                }
                Outcome::WinI(w) => {
                    pending[p] -= 1;
                    if pending[p] == 0 {
                        outcome[p] = Some(Outcome::WinII(w + 1));
                        queue.push_back(p);
                    }
                }
                Outcome::Draw => unreachable!(),
            }
        }
    }
    outcome
        .into_iter()
        .map(|o| o.unwrap_or(Outcome::Draw))
        .collect()
}

/// Nodes from which no cycle is reachable.
pub fn wellfounded_nodes(g: &Apg) -> Vec<bool> {
    let preds = g.predecessors();
    let mut pending: Vec<usize> = g.nodes().map(|v| g.children(v).len()).collect();
    let mut wf = vec![false; g.len()];
    let mut stack: Vec<usize> = g.nodes().filter(|&v| pending[v] == 0).collect();
    for &v in &stack {
        wf[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &p in &preds[v] {
            pending[p] -= 1;
            if pending[p] == 0 {
                wf[p] = true;
                stack.push(p);
            }
        }
    }
    wf
}

pub fn is_wellfounded(g: &Apg, node: usize) -> bool {
    wellfounded_nodes(g)[node]
}

/// Hereditarily winning nodes: no draw reachable, the node itself included.
pub fn hw_nodes(g: &Apg) -> Vec<bool> {
    hw_nodes_with(g, &solve(g))
}

pub fn hw_nodes_with(g: &Apg, outcomes: &[Outcome]) -> Vec<bool> {
    let preds = g.predecessors();
    let mut tainted: Vec<bool> = outcomes.iter().map(|o| o.is_draw()).collect();
    let mut stack: Vec<usize> = g.nodes().filter(|&v| tainted[v]).collect();
    while let Some(v) = stack.pop() {
        for &p in &preds[v] {
            if !tainted[p] {
                tainted[p] = true;
                stack.push(p);
            }
        }
    }
    tainted.into_iter().map(|t| !t).collect()
}

/// Engine move from `node`: the quickest win when winning, a draw-keeping
/// move when drawn, the longest resistance when losing. Ties go to the
/// smallest node index.
pub fn optimal_move(g: &Apg, outcomes: &[Outcome], node: usize) -> Result<usize> {
    let children = g.children(node);
    if children.is_empty() {
        return Err(Error::MoverHasLost);
    }
    let pick = match outcomes[node] {
        Outcome::WinI(_) => children
            .iter()
            .filter_map(|&c| match outcomes[c] {
                Outcome::WinII(w) => Some((w, c)),
                _ => None,
            })
            .min(),
        Outcome::Draw => children
            .iter()
            .find(|&&c| outcomes[c].is_draw())
            .map(|&c| (0, c)),
        Outcome::WinII(_) => children
            .iter()
            .filter_map(|&c| outcomes[c].w().map(|w| (w, c)))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1))),
    };
    Ok(pick.expect("outcomes are consistent with the graph").1)
}
