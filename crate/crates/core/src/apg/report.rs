use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{hw_nodes_with, regularity_failure, sigma, solve, wellfounded_nodes, Apg, Outcome};

/// Shape of the set of indices `ν` whose level has a node without ∈-minimal
/// elements, judged within the indices the graph realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum SpectrumShape {
    Empty,
    /// Exactly the odd indices above 1.
    OddAboveOne,
    /// The indices above 1 that are odd or at least `from` (even).
    OddOrFrom {
        from: usize,
    },
    Other,
}

/// Whether Regularity holds with quantifiers restricted to each class, and a
/// counterexample node when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub all: Option<String>,
    pub winning: Option<String>,
    pub hereditarily_winning: Option<String>,
}

impl Regularity {
    pub fn holds_in_all(&self) -> bool {
        self.all.is_none()
    }
    pub fn holds_in_winning(&self) -> bool {
        self.winning.is_none()
    }
    pub fn holds_in_hereditarily_winning(&self) -> bool {
        self.hereditarily_winning.is_none()
    }
}

/// Inclusions `ALL ⊇ W ⊇ HW ⊇ WF` inside one finite graph, with the
/// σ-spectrum. Describes the graph only; nothing here speaks for the class
/// of all sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    pub all: usize,
    pub winning: usize,
    pub hereditarily_winning: usize,
    pub well_founded: usize,
    pub pattern: String,
    pub regularity: Regularity,
    pub max_index: Option<usize>,
    pub spectrum: Vec<usize>,
    pub spectrum_witnesses: Vec<String>,
    pub spectrum_shape: SpectrumShape,
}

impl PatternReport {
    pub fn all_eq_winning(&self) -> bool {
        self.all == self.winning
    }
    pub fn winning_eq_hw(&self) -> bool {
        self.winning == self.hereditarily_winning
    }
    pub fn hw_eq_wellfounded(&self) -> bool {
        self.hereditarily_winning == self.well_founded
    }
}

impl fmt::Display for PatternReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pattern: {}", self.pattern)?;
        writeln!(
            f,
            "sizes: ALL={} W={} HW={} WF={}",
            self.all, self.winning, self.hereditarily_winning, self.well_founded
        )?;
        let show = |o: &Option<String>| match o {
            None => "holds".to_string(),
            Some(x) => format!("fails at {x}"),
        };
        writeln!(f, "regularity in ALL: {}", show(&self.regularity.all))?;
        writeln!(f, "regularity in W: {}", show(&self.regularity.winning))?;
        writeln!(
            f,
            "regularity in HW: {}",
            show(&self.regularity.hereditarily_winning)
        )?;
        let spectrum: Vec<String> = self
            .spectrum
            .iter()
            .zip(&self.spectrum_witnesses)
            .map(|(nu, x)| format!("{nu} (at {x})"))
            .collect();
        writeln!(f, "sigma spectrum: {{{}}}", spectrum.join(", "))?;
        write!(f, "spectrum shape: {:?}", self.spectrum_shape)
    }
}

fn classify_spectrum(spectrum: &BTreeSet<usize>, max_index: Option<usize>) -> SpectrumShape {
    if spectrum.is_empty() {
        return SpectrumShape::Empty;
    }
    let top = max_index.unwrap_or(0);
    let odd: BTreeSet<usize> = (2..=top).filter(|nu| nu % 2 == 1).collect();
    if *spectrum == odd {
        return SpectrumShape::OddAboveOne;
    }
    for from in (2..=top).step_by(2) {
        let shape: BTreeSet<usize> = (2..=top).filter(|&nu| nu % 2 == 1 || nu >= from).collect();
        if *spectrum == shape {
            return SpectrumShape::OddOrFrom { from };
        }
    }
    SpectrumShape::Other
}

pub fn pattern_report(g: &Apg) -> PatternReport {
    let outcomes = solve(g);
    let winning: Vec<bool> = outcomes.iter().map(|o| !o.is_draw()).collect();
    let hw = hw_nodes_with(g, &outcomes);
    let wf = wellfounded_nodes(g);
    let count = |v: &[bool]| v.iter().filter(|&&b| b).count();
    let (n_all, n_w, n_hw, n_wf) = (g.len(), count(&winning), count(&hw), count(&wf));
    let rel = |a: usize, b: usize| if a == b { "=" } else { "!=" };
    let pattern = format!(
        "ALL{}W{}HW{}WF",
        rel(n_all, n_w),
        rel(n_w, n_hw),
        rel(n_hw, n_wf)
    );
    let name = |v: Option<usize>| v.map(|v| g.name(v).to_string());
    let regularity = Regularity {
        all: name(regularity_failure(g, &vec![true; g.len()])),
        winning: name(regularity_failure(g, &winning)),
        hereditarily_winning: name(regularity_failure(g, &hw)),
    };
    let max_index = outcomes.iter().filter_map(|o| o.w()).max();
    let mut spectrum = BTreeSet::new();
    let mut witnesses = Vec::new();
    for nu in 0..=max_index.unwrap_or(0) {
        let level = g
            .nodes()
            .filter(|&v| outcomes[v].w() == Some(nu) && outcomes[v] != Outcome::Draw);
        if let Some(x) = sigma(g, level) {
            spectrum.insert(nu);
            witnesses.push(g.name(x).to_string());
        }
    }
    PatternReport {
        all: n_all,
        winning: n_w,
        hereditarily_winning: n_hw,
        well_founded: n_wf,
        pattern,
        regularity,
        max_index,
        spectrum_shape: classify_spectrum(&spectrum, max_index),
        spectrum: spectrum.into_iter().collect(),
        spectrum_witnesses: witnesses,
    }
}
