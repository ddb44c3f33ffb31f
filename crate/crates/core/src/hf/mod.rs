//! Hereditarily finite sets: Ackermann codes, shared structural sets, and
//! brace notation.

mod code;
mod parse;
mod set;

pub(crate) use code::{bits_of, small_level_size};
pub use code::{level_size, level_size_with_cap, SetCode, MAX_COUNT_RANK, MAX_ENUMERATE_RANK};
pub use parse::{parse_braces, ParseError};
pub use set::HFSet;

#[cfg(test)]
pub(crate) mod proptests {
    use proptest::prelude::*;

    use super::*;

    /// Random sets of rank at most `depth`, sharing nothing.
    pub(crate) fn arb_hfset(depth: u32) -> impl Strategy<Value = HFSet> {
        let leaf = Just(HFSet::empty());
        leaf.prop_recursive(depth, 256, 6, |inner| {
            prop::collection::vec(inner, 0..6).prop_map(HFSet::from_elements)
        })
    }

    proptest! {
        #[test]
        fn braces_roundtrip(set in arb_hfset(6)) {
            let text = set.to_braces();
            let back = parse_braces(&text).unwrap();
            prop_assert_eq!(&back, &set);
            prop_assert_eq!(back.to_braces(), text);
        }

        #[test]
        fn tc_members_have_smaller_rank(set in arb_hfset(6)) {
            for member in set.tc() {
                prop_assert!(member.rank() < set.rank());
            }
        }

        #[test]
        fn order_agrees_with_codes(a in arb_hfset(4), b in arb_hfset(4)) {
            let (ca, cb) = (a.code().unwrap(), b.code().unwrap());
            prop_assert_eq!(a.cmp(&b), ca.cmp(&cb));
            prop_assert_eq!(a == b, ca == cb);
        }
    }
}
