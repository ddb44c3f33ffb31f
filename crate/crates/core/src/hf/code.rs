use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::HFSet;
use crate::error::{Error, Result};

/// Largest rank whose level size is representable: `|V_7| = 2^(2^65536)`.
pub const MAX_COUNT_RANK: usize = 6;

/// Largest rank whose levels can be enumerated code by code.
pub const MAX_ENUMERATE_RANK: usize = 5;

/// Ackermann code of a hereditarily finite set.
///
/// Bit `i` of the value is set iff the set coded by `i` is an element. Every
/// element of a set has a strictly smaller code than the set itself, and
/// `V_m` is exactly the code interval `[0, |V_m|)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetCode(BigUint);

impl SetCode {
    pub fn empty() -> Self {
        SetCode(BigUint::zero())
    }

    pub fn new(value: BigUint) -> Self {
        SetCode(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    /// fit in a `u64`: a `BigUint` has fewer than `2^64` bits.
    /// fit in a `u64` because a `BigUint` has fewer than `2^64` bits.
    pub fn element_indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.0
            .iter_u64_digits()
            .enumerate()
            .flat_map(|(word, mut digit)| {
                std::iter::from_fn(move || {
                    if digit == 0 {
                        return None;
                    }
                    let bit = digit.trailing_zeros() as u64;
                    digit &= digit - 1;
                    Some(word as u64 * 64 + bit)
                })
            })
    }

    /// Elements in increasing code order.
    pub fn elements(&self) -> Vec<SetCode> {
        self.element_indices().map(SetCode::from).collect()
    }

    pub fn contains(&self, element: &SetCode) -> bool {
        match element.to_u64() {
            Some(bit) => self.0.bit(bit),
            None => false,
        }
    }

    pub fn len(&self) -> u64 {
        self.0.count_ones()
    }

    /// Code of the set whose elements are `elements`; order and duplicates
    /// are irrelevant.
    ///
    /// An element code wider than 64 bits would need a shift past any
    /// addressable width, so it is reported as not representable.
    pub fn encode<'a, I>(elements: I) -> Result<SetCode>
    where
        I: IntoIterator<Item = &'a SetCode>,
    {
        let mut value = BigUint::zero();
        for element in elements {
            let bit = element.to_u64().ok_or(Error::CodeNotRepresentable {
                rank: element.rank() + 1,
            })?;
            value.set_bit(bit, true);
        }
        Ok(SetCode(value))
    }

    /// von Neumann rank: `r(∅) = 0`, otherwise one more than the largest
    /// element rank.
    pub fn rank(&self) -> usize {
        let mut memo = HashMap::new();
        self.element_indices()
            .map(|e| small_rank(e, &mut memo) + 1)
            .max()
            .unwrap_or(0)
    }

    /// Transitive closure: the least set containing the elements and closed
    /// under taking elements.
    pub fn tc(&self) -> BTreeSet<SetCode> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<u64> = self.element_indices().collect();
        while let Some(code) = stack.pop() {
            if seen.insert(code) {
                stack.extend(bits_of(code));
            }
        }
        seen.into_iter().map(SetCode::from).collect()
    }

    pub fn to_hfset(&self) -> HFSet {
        let mut memo = HashMap::new();
        HFSet::from_elements(
            self.element_indices()
                .map(|e| small_to_hfset(e, &mut memo))
                .collect::<Vec<_>>(),
        )
    }

    pub fn to_braces(&self) -> String {
        self.to_hfset().to_braces()
    }
}

pub(crate) fn bits_of(code: u64) -> impl Iterator<Item = u64> {
    let mut rest = code;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let bit = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        Some(bit)
    })
}

fn small_rank(code: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if let Some(&r) = memo.get(&code) {
        return r;
    }
    let r = bits_of(code)
        .map(|e| small_rank(e, memo) + 1)
        .max()
        .unwrap_or(0);
    memo.insert(code, r);
    r
}

fn small_to_hfset(code: u64, memo: &mut HashMap<u64, HFSet>) -> HFSet {
    if let Some(s) = memo.get(&code) {
        return s.clone();
    }
    let s = HFSet::from_elements(
        bits_of(code)
            .map(|e| small_to_hfset(e, memo))
            .collect::<Vec<_>>(),
    );
    memo.insert(code, s.clone());
    s
}

impl From<u64> for SetCode {
    fn from(value: u64) -> Self {
        SetCode(BigUint::from(value))
    }
}

impl From<BigUint> for SetCode {
    fn from(value: BigUint) -> Self {
        SetCode(value)
    }
}

/// Decimal digits only.
impl FromStr for SetCode {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.trim().parse::<BigUint>().map(SetCode)
    }
}

impl fmt::Display for SetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for SetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetCode({})", self.0)
    }
}

/// `|V_m|` with the default count cap.
pub fn level_size(m: usize) -> Result<BigUint> {
    level_size_with_cap(m, MAX_COUNT_RANK)
}

/// `|V_0| = 0`, `|V_{m+1}| = 2^|V_m|`. Ranks above `cap`, or above 6 where
/// the value stops being representable, are errors.
pub fn level_size_with_cap(m: usize, cap: usize) -> Result<BigUint> {
    let cap = cap.min(MAX_COUNT_RANK);
    if m > cap {
        return Err(Error::LevelNotRepresentable { m, cap });
    }
    let mut size = BigUint::zero();
    for _ in 0..m {
        let exponent = size.to_u64().expect("bounded by the cap");
        size = BigUint::one() << exponent;
    }
    Ok(size)
}

/// `|V_m|` for enumerable ranks.
pub(crate) fn small_level_size(m: usize) -> usize {
    const SIZES: [usize; MAX_ENUMERATE_RANK + 1] = [0, 1, 2, 4, 16, 65_536];
    SIZES[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes(values: &[u64]) -> Vec<SetCode> {
        values.iter().map(|&v| SetCode::from(v)).collect()
    }

    #[test]
    fn elements_are_bit_positions() {
        assert_eq!(SetCode::from(0).elements(), codes(&[]));
        assert_eq!(SetCode::from(3).elements(), codes(&[0, 1]));
        assert_eq!(SetCode::from(5).elements(), codes(&[0, 2]));
        let wide = SetCode::new((BigUint::one() << 200u32) + 2u32);
        assert_eq!(wide.elements(), codes(&[1, 200]));
    }

    #[test]
    fn encode_ignores_order_and_duplicates() {
        assert_eq!(SetCode::encode(&codes(&[])).unwrap(), SetCode::from(0));
        assert_eq!(SetCode::encode(&codes(&[0])).unwrap(), SetCode::from(1));
        assert_eq!(SetCode::encode(&codes(&[1, 0])).unwrap(), SetCode::from(3));
        assert_eq!(
            SetCode::encode(&codes(&[2, 0, 2])).unwrap(),
            SetCode::from(5)
        );
    }

    #[test]
    fn encode_rejects_elements_past_u64() {
        let huge = SetCode::new(BigUint::one() << 70u32);
        assert!(matches!(
            SetCode::encode([&huge]),
            Err(Error::CodeNotRepresentable { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SetCode::from(0).rank(), 0);
        assert_eq!(SetCode::from(1).rank(), 1);
        assert_eq!(SetCode::from(3).rank(), 2);
        assert_eq!(SetCode::from(2).rank(), 2);
        assert_eq!(SetCode::from(16).rank(), 4);
    }

    #[test]
    fn tc_examples() {
        assert!(SetCode::from(0).tc().is_empty());
        assert_eq!(SetCode::from(1).tc(), codes(&[0]).into_iter().collect());
        assert_eq!(SetCode::from(3).tc(), codes(&[0, 1]).into_iter().collect());
        // {{{∅}}} reaches {∅} and ∅
        assert_eq!(
            SetCode::from(4).tc(),
            codes(&[0, 1, 2]).into_iter().collect()
        );
    }

    #[test]
    fn level_sizes() {
        assert_eq!(level_size(0).unwrap(), BigUint::zero());
        assert_eq!(level_size(4).unwrap(), BigUint::from(16u32));
        assert_eq!(level_size(5).unwrap(), BigUint::from(65_536u32));
        for m in 0..=MAX_ENUMERATE_RANK {
            assert_eq!(level_size(m).unwrap(), BigUint::from(small_level_size(m)));
        }
    }

    #[test]
    fn level_six_has_19729_digits() {
        // floor(65536 * log10 2) + 1, computed independently in floating point
        let expected = (65_536f64 * std::f64::consts::LOG10_2).floor() as usize + 1;
        assert_eq!(expected, 19_729);
        let size = level_size(6).unwrap();
        assert_eq!(size.to_str_radix(10).len(), expected);
        assert_eq!(size, BigUint::one() << 65_536u32);
    }

    #[test]
    fn level_cap_is_a_hard_error() {
        assert!(matches!(
            level_size(7),
            Err(Error::LevelNotRepresentable { m: 7, cap: 6 })
        ));
        assert!(matches!(
            level_size_with_cap(6, 5),
            Err(Error::LevelNotRepresentable { m: 6, cap: 5 })
        ));
        // raising the cap cannot make |V_7| representable
        assert!(level_size_with_cap(7, 100).is_err());
    }

    #[test]
    fn roundtrip_and_order_over_small_levels() {
        for c in 0..small_level_size(5) as u64 {
            let code = SetCode::from(c);
            assert_eq!(SetCode::encode(&code.elements()).unwrap(), code);
            let rank = code.rank();
            for m in 0..=MAX_ENUMERATE_RANK {
                assert_eq!(
                    rank < m,
                    (c as usize) < small_level_size(m),
                    "code {c}, m {m}"
                );
            }
            for member in code.tc() {
                assert!(member.rank() < rank);
            }
        }
    }

    #[test]
    fn parses_decimal() {
        assert_eq!("11".parse::<SetCode>().unwrap(), SetCode::from(11));
        assert!("-1".parse::<SetCode>().is_err());
        assert!("x".parse::<SetCode>().is_err());
    }
}
