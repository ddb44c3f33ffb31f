//! Outcome and winning index of the membership game on hereditarily finite
//! sets.
//!
//! Players alternately pick an element of the previous pick, starting inside
//! the given set; whoever picks the empty set wins. Every well-founded
//! position is decided. The winning index `w` is the least `ν` with the set in
//! `S_ν`: the empty set has index 0, a set with a second-player-winning
//! element has index one more than the least such element index, and any
//! other set has index one more than its largest element index.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hf::{bits_of, small_level_size, HFSet, SetCode, MAX_ENUMERATE_RANK};

/// Default bound on [`witness`] indices.
pub const WITNESS_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    I,
    II,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::I => Player::II,
            Player::II => Player::I,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::I => "I",
            Player::II => "II",
        })
    }
}

/// Winner and winning index of a decided position. The winner is `I` exactly
/// when `w` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub winner: Player,
    pub w: usize,
}

impl Classification {
    pub const EMPTY: Classification = Classification {
        winner: Player::II,
        w: 0,
    };

    pub fn from_index(w: usize) -> Self {
        let winner = if w % 2 == 1 { Player::I } else { Player::II };
        Classification { winner, w }
    }

    /// Combines the classifications of a set's elements.
    pub fn of_elements<I: IntoIterator<Item = Classification>>(elements: I) -> Self {
        let mut least_second = None::<usize>;
        let mut largest = None::<usize>;
        for c in elements {
            if c.winner == Player::II {
                least_second = Some(least_second.map_or(c.w, |m| m.min(c.w)));
            }
            largest = Some(largest.map_or(c.w, |m| m.max(c.w)));
        }
        match (least_second, largest) {
            (Some(w), _) => Classification::from_index(w + 1),
            (None, Some(w)) => Classification::from_index(w + 1),
            (None, None) => Classification::EMPTY,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "winner={} w={}", self.winner, self.w)
    }
}

/// Memoizing classifier. Structural sets are keyed by value, codes by their
/// (always `u64`-sized) element codes.
#[derive(Default)]
pub struct Classifier {
    sets: HashMap<HFSet, Classification>,
    codes: HashMap<u64, Classification>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classify(&mut self, x: &HFSet) -> Classification {
        if let Some(&c) = self.sets.get(x) {
            return c;
        }
        let elements: Vec<Classification> = x.elements().iter().map(|e| self.classify(e)).collect();
        let c = Classification::of_elements(elements);
        self.sets.insert(x.clone(), c);
        c
    }

    pub fn classify_code(&mut self, x: &SetCode) -> Classification {
        let elements: Vec<Classification> = x
            .element_indices()
            .map(|e| self.classify_small(e))
            .collect();
        Classification::of_elements(elements)
    }

    fn classify_small(&mut self, code: u64) -> Classification {
        if let Some(&c) = self.codes.get(&code) {
            return c;
        }
        let elements: Vec<Classification> = bits_of(code).map(|e| self.classify_small(e)).collect();
        let c = Classification::of_elements(elements);
        self.codes.insert(code, c);
        c
    }
}

pub fn classify(x: &HFSet) -> Classification {
    Classifier::new().classify(x)
}

pub fn classify_code(x: &SetCode) -> Classification {
    Classifier::new().classify_code(x)
}

/// Classification of every set in `V_m`, indexed by code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTable {
    pub m: usize,
    pub classes: Vec<Classification>,
}

impl LevelTable {
    pub fn get(&self, code: usize) -> Option<Classification> {
        self.classes.get(code).copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

const TABLE_HEADER: &str = "setgame-level-table";

impl LevelTable {
    /// Writes the plain cache format: a header line `setgame-level-table m`
    /// followed by one `w` per line in code order.
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{TABLE_HEADER} {}", self.m)?;
        for c in &self.classes {
            writeln!(out, "{}", c.w)?;
        }
        Ok(())
    }

    /// Reads a table written by [`LevelTable::write_to`]. Returns `None` for
    /// anything malformed or of the wrong length.
    pub fn read_from<R: BufRead>(input: R) -> Option<LevelTable> {
        let mut lines = input.lines();
        let header = lines.next()?.ok()?;
        let m: usize = header.strip_prefix(TABLE_HEADER)?.trim().parse().ok()?;
        if m > MAX_ENUMERATE_RANK {
            return None;
        }
        let classes = lines
            .map(|l| l.ok()?.trim().parse().ok().map(Classification::from_index))
            .collect::<Option<Vec<_>>>()?;
        (classes.len() == small_level_size(m)).then_some(LevelTable { m, classes })
    }

    /// The first `|V_m|` entries, for `m` at most the table's own rank.
    pub fn restrict(&self, m: usize) -> Option<LevelTable> {
        (m <= self.m).then(|| LevelTable {
            m,
            classes: self.classes[..small_level_size(m)].to_vec(),
        })
    }
}

/// Classifies all of `V_m` (`m <= 5`) in code order. Elements have smaller
/// codes than their sets, so one forward pass suffices.
pub fn classify_level(m: usize) -> Result<LevelTable> {
    if m > MAX_ENUMERATE_RANK {
        return Err(Error::EnumerationInfeasible {
            m,
            cap: MAX_ENUMERATE_RANK,
        });
    }
    let size = small_level_size(m);
    let mut classes: Vec<Classification> = Vec::with_capacity(size);
    for code in 0..size as u64 {
        let c = Classification::of_elements(bits_of(code).map(|e| classes[e as usize]));
        classes.push(c);
    }
    Ok(LevelTable { m, classes })
}

/// `z_n` with index exactly `n`: `z_0 = ∅`, `z_{2k+1} = {z_{2k}}`,
/// `z_{2k} = {z_{2j+1} : j < k}`.
pub fn witness(n: usize) -> Result<HFSet> {
    witness_with_bound(n, WITNESS_BOUND)
}

pub fn witness_with_bound(n: usize, bound: usize) -> Result<HFSet> {
    if n > bound {
        return Err(Error::WitnessBound { n, bound });
    }
    let mut chain: Vec<HFSet> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let z = if i == 0 {
            HFSet::empty()
        } else if i % 2 == 1 {
            HFSet::singleton(chain[i - 1].clone())
        } else {
            HFSet::from_elements((0..i / 2).map(|j| chain[2 * j + 1].clone()))
        };
        chain.push(z);
    }
    Ok(chain.pop().expect("chain has n + 1 entries"))
}

/// Engine move from `x`, whose mover is about to pick an element.
///
/// From a winning position it picks an element that keeps the shortest win;
/// from a losing one it picks the element with the largest index, which
/// delays the loss longest. Ties go to the smallest code.
pub fn optimal_move(x: &HFSet) -> Result<HFSet> {
    optimal_move_with(&mut Classifier::new(), x)
}

pub fn optimal_move_with(classifier: &mut Classifier, x: &HFSet) -> Result<HFSet> {
    if x.is_empty() {
        return Err(Error::MoverHasLost);
    }
    let mut best: Option<(&HFSet, Classification)> = None;
    let winning = classifier.classify(x).winner == Player::I;
    for e in x.elements() {
        let c = classifier.classify(e);
        let better = match best {
            None => !winning || c.winner == Player::II,
            Some((_, b)) if winning => c.winner == Player::II && c.w < b.w,
            Some((_, b)) => c.w > b.w,
        };
        if better {
            best = Some((e, c));
        }
    }
    Ok(best.expect("nonempty position has a move").0.clone())
}


#[cfg(test)]
mod proptests {
    use proptest::prelude::*;

    use super::*;
    use crate::hf::proptests::arb_hfset;

    proptest! {
        #[test]
        fn index_bounded_by_rank(x in arb_hfset(7)) {
            prop_assert!(classify(&x).w <= x.rank());
        }

        #[test]
        fn winner_follows_parity(x in arb_hfset(7)) {
            let c = classify(&x);
            prop_assert_eq!(c.winner == Player::I, c.w % 2 == 1);
        }

        #[test]
        fn definitional_coherence(x in arb_hfset(6)) {
            let c = classify(&x);
            let elems: Vec<Classification> = x.elements().iter().map(classify).collect();
            let second: Vec<usize> = elems.iter().filter(|e| e.winner == Player::II).map(|e| e.w).collect();
            if let Some(&least) = second.iter().min() {
                prop_assert_eq!(c, Classification { winner: Player::I, w: least + 1 });
            } else if let Some(top) = elems.iter().map(|e| e.w).max() {
                // every element is odd, and the index is one above the largest
                prop_assert!(elems.iter().all(|e| e.w % 2 == 1));
                prop_assert_eq!(c, Classification { winner: Player::II, w: top + 1 });
            } else {
                prop_assert_eq!(c, Classification::EMPTY);
            }
        }

        #[test]
        fn depends_only_on_the_set(x in arb_hfset(5)) {
            let rebuilt = HFSet::from_elements(x.elements().iter().rev().cloned().chain(x.elements().iter().cloned()));
            prop_assert_eq!(classify(&rebuilt), classify(&x));
            prop_assert_eq!(classify_code(&x.code().unwrap()), classify(&x));
        }
    }
}
