//! Exact sizes of the winning-index levels `S_{m,ν} = V_m ∩ S_ν`.
//!
//! Two independent routes: brute-force classification of every code in
//! `V_m` (`m <= 5`), and the level-to-level closed-form recurrence on counts
//! alone (`m <= 6`). Everything is exact; ratios are big rationals.

use std::io::Write;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::game::{classify_level, LevelTable};
use crate::hf::{level_size, MAX_COUNT_RANK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Formula,
}

/// `counts[ν] = |S_{m,ν}|`; indices past the end count zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub m: usize,
    pub counts: Vec<BigUint>,
    pub method: Method,
}

impl CensusTable {
    pub fn count(&self, nu: usize) -> BigUint {
        self.counts.get(nu).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Same counts, regardless of how they were obtained.
    pub fn same_counts(&self, other: &CensusTable) -> bool {
        self.m == other.m && self.counts == other.counts
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "method": self.method,
            "counts": self.counts.iter().enumerate().map(|(nu, c)| json!({
                "nu": nu,
                "count": c.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn census_brute(m: usize) -> Result<CensusTable> {
    Ok(census_of_level(&classify_level(m)?))
}

/// Histogram of an already classified level.
pub fn census_of_level(table: &LevelTable) -> CensusTable {
    let mut counts: Vec<BigUint> = Vec::new();
    for c in &table.classes {
        if counts.len() <= c.w {
            counts.resize(c.w + 1, BigUint::zero());
        }
        counts[c.w] += 1u32;
    }
    CensusTable {
        m: table.m,
        counts,
        method: Method::Brute,
    }
}

/// `|S_{m+1,ν}|` from the counts at level `m` and `|V_m|`:
///
/// ```text
/// |S_{m+1,0}|    = 1
/// |S_{m+1,2k+1}| = 2^(|V_m| - Σ_{j<k} |S_{m,2j}|) - 2^(|V_m| - Σ_{j<=k} |S_{m,2j}|)
/// |S_{m+1,2k+2}| = 2^(Σ_{j<=k} |S_{m,2j+1}|)       - 2^(Σ_{j<k} |S_{m,2j+1}|)
/// ```
///
/// `prev[ν]` is `|S_{m,ν}|`, missing entries count zero. The recurrence only
/// describes the level when `ν < m + 1`; callers building tables respect
/// that, but evaluating it elsewhere is allowed.
pub fn recurrence_count(prev: &[BigUint], prev_level: &BigUint, nu: usize) -> BigUint {
    let at = |i: usize| -> u64 {
        prev.get(i)
            .map(|c| c.to_u64().expect("counts below level 6 fit in u64"))
            .unwrap_or(0)
    };
    let pow2 = |e: u64| BigUint::one() << e;
    if nu == 0 {
        return BigUint::one();
    }
    let k = (nu - 1) / 2;
    if nu % 2 == 1 {
        let level = prev_level
            .to_u64()
            .expect("|V_m| below level 6 fits in u64");
        let below: u64 = (0..k).map(|j| at(2 * j)).sum();
        let upto = below + at(2 * k);
        pow2(level - below) - pow2(level - upto)
    } else {
        let below: u64 = (0..k).map(|j| at(2 * j + 1)).sum();
        let upto = below + at(2 * k + 1);
        pow2(upto) - pow2(below)
    }
}

/// Counts for `1 <= m <= 6` by iterating the recurrence from `V_0 = ∅`.
pub fn census_formula(m: usize) -> Result<CensusTable> {
    if !(1..=MAX_COUNT_RANK).contains(&m) {
        return Err(Error::RankOutOfRange {
            m,
            min: 1,
            max: MAX_COUNT_RANK,
        });
    }
    let mut counts: Vec<BigUint> = Vec::new();
    for level in 0..m {
        let size = level_size(level)?;
        counts = (0..=level)
            .map(|nu| recurrence_count(&counts, &size, nu))
            .collect();
    }
    Ok(CensusTable {
        m,
        counts,
        method: Method::Formula,
    })
}

/// Limit of `|S_{m,ν}| / |V_m|` as `m` grows: one half for indices 1 and 3,
/// zero otherwise.
pub fn limit_ratio(nu: usize) -> BigRational {
    if nu == 1 || nu == 3 {
        BigRational::new(1.into(), 2.into())
    } else {
        BigRational::zero()
    }
}

/// Exact `|S_{m,ν}| / |V_m|` with distances `|ratio - limit|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioTable {
    pub m: usize,
    pub ratios: Vec<BigRational>,
    pub distances: Vec<BigRational>,
}

impl RatioTable {
    pub fn ratio(&self, nu: usize) -> BigRational {
        self.ratios
            .get(nu)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total(&self) -> BigRational {
        self.ratios
            .iter()
            .cloned()
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "ratios": self.ratios.iter().zip(&self.distances).enumerate().map(|(nu, (r, d))| json!({
                "nu": nu,
                "ratio_num": r.numer().to_string(),
                "ratio_den": r.denom().to_string(),
                "limit": limit_ratio(nu).to_string(),
                "distance_num": d.numer().to_string(),
                "distance_den": d.denom().to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn ratios(table: &CensusTable) -> Result<RatioTable> {
    if table.m == 0 {
        return Err(Error::RankOutOfRange {
            m: 0,
            min: 1,
            max: MAX_COUNT_RANK,
        });
    }
    let size = BigRational::from_integer(level_size(table.m)?.into());
    let ratios: Vec<BigRational> = table
        .counts
        .iter()
        .map(|c| BigRational::from_integer(c.clone().into()) / &size)
        .collect();
    let distances = ratios
        .iter()
        .enumerate()
        .map(|(nu, r)| (r - limit_ratio(nu)).abs())
        .collect();
    Ok(RatioTable {
        m: table.m,
        ratios,
        distances,
    })
}

/// Exact rational text, writing a power-of-two denominator wider than 64
/// bits as `2^k`.
pub fn dyadic_string(r: &BigRational) -> String {
    let den = r.denom().magnitude();
    let bits = den.bits();
    if bits > 65 && den.trailing_zeros() == Some(bits - 1) {
        format!("{}/2^{}", r.numer(), bits - 1)
    } else {
        r.to_string()
    }
}

pub fn prob_table(m: usize) -> Result<RatioTable> {
    ratios(&census_formula(m)?)
}

/// Writes `m,nu,count,ratio_num,ratio_den` rows, one per index, with header.
pub fn write_csv<W: Write>(tables: &[CensusTable], out: W) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["m", "nu", "count", "ratio_num", "ratio_den"])?;
    for table in tables {
        let ratio_table = ratios(table).map_err(|e| {
            csv::Error::from(std::io::Error::new(
                std::io::ErrorKind::InvalidInput,
                e.to_string(),
            ))
        })?;
        for (nu, count) in table.counts.iter().enumerate() {
            let r = ratio_table.ratio(nu);
            writer.write_record([
                table.m.to_string(),
                nu.to_string(),
                count.to_string(),
                r.numer().to_string(),
                r.denom().to_string(),
            ])?;
        }
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    fn rational(n: u64, d: u64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn brute_examples() {
        assert_eq!(census_brute(1).unwrap().counts, counts(&[1]));
        assert_eq!(census_brute(3).unwrap().counts, counts(&[1, 2, 1]));
        assert_eq!(census_brute(4).unwrap().counts, counts(&[1, 8, 3, 4]));
        assert!(census_brute(0).unwrap().counts.is_empty());
        assert!(census_brute(6).is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(census_formula(4).unwrap().counts, counts(&[1, 8, 3, 4]));
        assert_eq!(
            census_formula(5).unwrap().counts,
            counts(&[1, 32_768, 255, 28_672, 3_840])
        );
        let six = census_formula(6).unwrap();
        let one = BigUint::one();
        assert_eq!(six.count(1), (&one << 65_536u32) - (&one << 65_535u32));
        assert_eq!(six.count(2), (&one << 32_768u32) - 1u32);
        assert_eq!(six.total(), level_size(6).unwrap());
    }

    #[test]
    fn formula_range_is_enforced() {
        assert!(matches!(
            census_formula(0),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            census_formula(7),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn methods_agree() {
        for m in 1..=5 {
            let brute = census_brute(m).unwrap();
            let formula = census_formula(m).unwrap();
            assert!(brute.same_counts(&formula), "m = {m}");
            assert_eq!(brute.total(), level_size(m).unwrap());
        }
    }

    #[test]
    fn formula_counts_partition_the_level() {
        for m in 1..=6 {
            assert_eq!(
                census_formula(m).unwrap().total(),
                level_size(m).unwrap(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn recurrence_vanishes_outside_its_range() {
        for m in 1..=5 {
            let table = census_formula(m).unwrap();
            let size = level_size(m).unwrap();
            for nu in m + 1..m + 4 {
                assert!(recurrence_count(&table.counts, &size, nu).is_zero());
            }
        }
    }

    #[test]
    fn ratio_examples() {
        let five = prob_table(5).unwrap();
        assert_eq!(five.ratio(1), rational(1, 2));
        assert_eq!(five.ratio(3), rational(7, 16));
        assert_eq!(five.total(), BigRational::one());

        let six = prob_table(6).unwrap();
        let rest = (0..6)
            .filter(|nu| *nu != 1 && *nu != 3)
            .map(|nu| six.ratio(nu))
            .fold(BigRational::zero(), |a, b| a + b);
        let bound = BigRational::new(1.into(), (BigUint::one() << 255u32).into());
        assert!(rest < bound);
        assert_eq!(six.distances[1], BigRational::zero());
    }

    #[test]
    fn csv_layout() {
        let mut out = Vec::new();
        write_csv(&[census_formula(3).unwrap()], &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "m,nu,count,ratio_num,ratio_den\n3,0,1,1,4\n3,1,2,1,2\n3,2,1,1,4\n"
        );
    }

    #[test]
    fn dyadic_text() {
        assert_eq!(dyadic_string(&rational(7, 16)), "7/16");
        let tiny = BigRational::new(1.into(), (BigUint::one() << 256u32).into());
        assert_eq!(dyadic_string(&tiny), "1/2^256");
        assert_eq!(dyadic_string(&rational(1, 3)), "1/3");
        assert_eq!(dyadic_string(&rational(1, 1)), "1");
        assert_eq!(dyadic_string(&BigRational::zero()), "0");
    }

    #[test]
    fn ratios_need_a_nonempty_level() {
        assert!(ratios(&census_brute(0).unwrap()).is_err());
    }
}
