use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use super::code::{SetCode, MAX_ENUMERATE_RANK};
use crate::error::{Error, Result};

/// A hereditarily finite set stored as a shared acyclic structure.
///
/// Elements are kept sorted in Ackermann order (the order of their codes),
/// so equal sets have identical element lists. Clones share structure, which
/// keeps sets with deep but narrow transitive closures cheap even when their
/// codes are far too large to write down.
#[derive(Clone)]
pub struct HFSet(Arc<Node>);

struct Node {
    elements: Vec<HFSet>,
    rank: usize,
    hash: u64,
}

impl HFSet {
    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    pub fn singleton(element: HFSet) -> Self {
        Self::from_sorted(vec![element])
    }

    pub fn from_elements<I: IntoIterator<Item = HFSet>>(elements: I) -> Self {
        let mut elements: Vec<HFSet> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        Self::from_sorted(elements)
    }

    fn from_sorted(elements: Vec<HFSet>) -> Self {
        let rank = elements.last().map_or(0, |e| e.rank() + 1);
        let mut hasher = DefaultHasher::new();
        rank.hash(&mut hasher);
        for e in &elements {
            e.0.hash.hash(&mut hasher);
        }
        HFSet(Arc::new(Node {
            elements,
            rank,
            hash: hasher.finish(),
        }))
    }

    /// Elements in ascending code order.
    pub fn elements(&self) -> &[HFSet] {
        &self.0.elements
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn contains(&self, element: &HFSet) -> bool {
        self.0.elements.binary_search(element).is_ok()
    }

    /// Adjoins one element.
    pub fn with(&self, element: HFSet) -> HFSet {
        let mut elements = self.0.elements.clone();
        if let Err(at) = elements.binary_search(&element) {
            elements.insert(at, element);
        }
        Self::from_sorted(elements)
    }

    /// Ackermann code. Only sets of rank at most 5 have codes that fit in
    /// memory (`< 2^65536`).
    pub fn code(&self) -> Result<SetCode> {
        if self.rank() > MAX_ENUMERATE_RANK {
            return Err(Error::CodeNotRepresentable { rank: self.rank() });
        }
        let mut memo = HashMap::new();
        let mut value = BigUint::zero();
        for e in self.elements() {
            value.set_bit(small_code(e, &mut memo), true);
        }
        Ok(SetCode::new(value))
    }

    /// Transitive closure as a set of sets.
    pub fn tc(&self) -> BTreeSet<HFSet> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<HFSet> = self.elements().to_vec();
        while let Some(s) = stack.pop() {
            if !seen.contains(&s) {
                stack.extend(s.elements().iter().cloned());
                seen.insert(s);
            }
        }
        seen
    }

    /// Canonical brace text: elements in ascending code order, no spaces.
    pub fn to_braces(&self) -> String {
        let mut out = String::new();
        self.write_braces(&mut out);
        out
    }

    fn write_braces(&self, out: &mut String) {
        out.push('{');
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            e.write_braces(out);
        }
        out.push('}');
    }

    pub(crate) fn ptr_id(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }
}

// Elements of a rank <= 5 set have rank <= 4 and codes below 2^16.
fn small_code(set: &HFSet, memo: &mut HashMap<usize, u64>) -> u64 {
    if let Some(&c) = memo.get(&set.ptr_id()) {
        return c;
    }
    let c = set
        .elements()
        .iter()
        .fold(0u64, |acc, e| acc | (1u64 << small_code(e, memo)));
    memo.insert(set.ptr_id(), c);
    c
}

/// Compares by Ackermann code without building codes: the larger set is the
/// one owning the largest element of the symmetric difference.
fn ackermann_cmp(a: &HFSet, b: &HFSet) -> Ordering {
    if Arc::ptr_eq(&a.0, &b.0) {
        return Ordering::Equal;
    }
    // V_m is an initial code segment, so rank decides first.
    match a.rank().cmp(&b.rank()) {
        Ordering::Equal => {}
        other => return other,
    }
    let mut xs = a.elements().iter().rev();
    let mut ys = b.elements().iter().rev();
    loop {
        match (xs.next(), ys.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => match ackermann_cmp(x, y) {
                Ordering::Equal => continue,
                other => return other,
            },
        }
    }
}

impl PartialEq for HFSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash && ackermann_cmp(self, other) == Ordering::Equal)
    }
}

impl Eq for HFSet {}

impl PartialOrd for HFSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HFSet {
    fn cmp(&self, other: &Self) -> Ordering {
        ackermann_cmp(self, other)
    }
}

impl Hash for HFSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl fmt::Display for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_braces())
    }
}

impl fmt::Debug for HFSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HFSet({})", self.to_braces())
    }
}

impl From<&SetCode> for HFSet {
    fn from(code: &SetCode) -> Self {
        code.to_hfset()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(c: u64) -> HFSet {
        SetCode::from(c).to_hfset()
    }

    #[test]
    fn ordering_matches_codes() {
        let sets: Vec<HFSet> = (0..4096).map(code).collect();
        for (i, a) in sets.iter().enumerate().step_by(7) {
            for (j, b) in sets.iter().enumerate().step_by(5) {
                assert_eq!(a.cmp(b), i.cmp(&j), "{i} vs {j}");
            }
        }
    }

    #[test]
    fn extensional_equality() {
        let e = HFSet::empty();
        let a = HFSet::from_elements([e.clone(), HFSet::singleton(e.clone())]);
        let b = HFSet::from_elements([HFSet::singleton(HFSet::empty()), e.clone(), e]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert_eq!(a.code().unwrap(), SetCode::from(3));
    }

    #[test]
    fn codes_roundtrip() {
        for c in 0..65_536u64 {
            assert_eq!(code(c).code().unwrap(), SetCode::from(c));
        }
    }

    #[test]
    fn braces_examples() {
        assert_eq!(HFSet::empty().to_braces(), "{}");
        assert_eq!(code(3).to_braces(), "{{},{{}}}");
        assert_eq!(code(2).to_braces(), "{{{}}}");
    }

    #[test]
    fn rank_six_sets_have_no_code() {
        let mut s = HFSet::empty();
        for _ in 0..6 {
            s = HFSet::singleton(s);
        }
        assert_eq!(s.rank(), 6);
        assert!(matches!(
            s.code(),
            Err(Error::CodeNotRepresentable { rank: 6 })
        ));
    }

    #[test]
    fn tc_matches_code_tc() {
        for c in [0u64, 1, 3, 4, 17, 300, 65_535] {
            let via_set: BTreeSet<SetCode> =
                code(c).tc().iter().map(|s| s.code().unwrap()).collect();
            assert_eq!(via_set, SetCode::from(c).tc());
        }
    }
}
