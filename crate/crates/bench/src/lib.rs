//! Shared inputs for the criterion benches.

use setgame_core::model::{build, preset};
use setgame_core::Apg;

/// Named graphs of a few thousand nodes at most: model truncations and a
/// ladder of Quine-atom copies that collapses under bisimulation.
pub fn graphs() -> Vec<(&'static str, Apg)> {
    let quine = build(&preset("quine").expect("preset"), 2, 5_000).expect("fits the cap");
    let pair = build(&preset("unfounded-pair").expect("preset"), 2, 5_000).expect("fits the cap");
    let n = 2_000;
    let ladder = Apg::from_adjacency("q", (0..n).map(|i| vec![(i + 1) % n, i]).collect());
    vec![
        ("quine-stage-2", quine.truncation(2)),
        ("unfounded-pair-stage-2", pair.truncation(2)),
        ("cycle-2000", ladder),
    ]
}
