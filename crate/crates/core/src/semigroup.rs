//! Explicit numerical semigroups and from-scratch computations on them.
//!
//! Everything here works directly from membership and is deliberately
//! unoptimized: these are the reference answers the incremental algorithms in
//! [`crate::seeds`] and [`crate::baselines`] are checked against.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitvec::BitVec;
use crate::error::{Error, Result};
use crate::seeds::SeedNode;

/// A numerical semigroup given by its gaps, with membership materialized over
/// `[0, c + 2m)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FullSemigroup {
    gaps: Vec<u32>,
    member: Vec<bool>,
    /// Non-gaps `λ_0 < λ_1 < … < λ_k = c`.
    small: Vec<u32>,
    conductor: u32,
    multiplicity: u32,
}

impl FullSemigroup {
    /// The semigroup of all non-negative integers. Its conductor is 1.
    pub fn trivial() -> Self {
        Self::from_gaps([]).expect("the empty gap set is closed")
    }

    pub fn ordinary(multiplicity: u32) -> Self {
        assert!(multiplicity >= 1);
        Self::from_gaps(1..multiplicity).expect("ordinary semigroups are closed")
    }

    pub fn from_gaps(gaps: impl IntoIterator<Item = u32>) -> Result<Self> {
        let gaps: BTreeSet<u32> = gaps.into_iter().collect();
        if gaps.contains(&0) {
            return Err(Error::InvalidGaps("0 always belongs to a semigroup".into()));
        }
        let conductor = gaps.last().map_or(1, |&f| f + 1);
        let is_member = |z: u32| !gaps.contains(&z);

        // The smallest violating pair, scanning a ≤ b.
        for a in 1..conductor {
            if !is_member(a) {
                continue;
            }
            for b in a..conductor - a {
                if is_member(b) && !is_member(a + b) {
                    return Err(Error::ClosureViolation { a, b });
                }
            }
        }

        let multiplicity = (1..).find(|&z| is_member(z)).unwrap();
        let window = (conductor + 2 * multiplicity) as usize;
        let member = (0..window as u32).map(is_member).collect();
        let mut small: Vec<u32> = (0..conductor).filter(|&z| is_member(z)).collect();
        small.push(conductor);

        Ok(FullSemigroup {
            gaps: gaps.into_iter().collect(),
            member,
            small,
            conductor,
            multiplicity,
        })
    }

    /// Builds a semigroup from its non-zero elements up to the conductor, the
    /// largest listed value being the conductor (`{5, 8}` is `{0,5,8,9,…}`).
    pub fn from_elements_to_conductor(elements: &[u32]) -> Result<Self> {
        let Some(&conductor) = elements.iter().max() else {
            return Err(Error::InvalidGaps("no elements given".into()));
        };
        if elements.contains(&0) {
            return Err(Error::InvalidGaps("list the non-zero elements only".into()));
        }
        let listed: BTreeSet<u32> = elements.iter().copied().collect();
        Self::from_gaps((1..conductor).filter(|z| !listed.contains(z)))
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Number of non-gaps below the conductor, so that `λ_k = c`.
    pub fn k(&self) -> u32 {
        self.conductor - self.genus()
    }

    /// `λ_i`, the `i`-th smallest element.
    pub fn lambda(&self, i: usize) -> u32 {
        match self.small.get(i) {
            Some(&v) => v,
            None => self.conductor + (i - (self.small.len() - 1)) as u32,
        }
    }

    pub fn is_ordinary(&self) -> bool {
        self.conductor == self.multiplicity
    }

    pub fn contains(&self, z: u32) -> bool {
        z >= self.conductor || self.member[z as usize]
    }

    /// Whether `x` is a non-zero element that is not a sum of two non-zero
    /// elements.
    pub fn is_generator(&self, x: u32) -> bool {
        x > 0 && self.contains(x) && !(1..=x / 2).any(|a| self.contains(a) && self.contains(x - a))
    }

    /// All minimal generators, ascending. They are all below `c + m`.
    pub fn generators(&self) -> Vec<u32> {
        (1..self.conductor + self.multiplicity)
            .filter(|&x| self.is_generator(x))
            .collect()
    }

    /// The semigroup with one more gap. `sigma` must be a generator.
    pub fn remove(&self, sigma: u32) -> Result<Self> {
        Self::from_gaps(self.gaps.iter().copied().chain([sigma]))
    }

    /// Whether `x` is a generator of `Λ_i`, the semigroup obtained by removing
    /// `λ_1, …, λ_i`.
    fn is_generator_without_first(&self, i: usize, x: u32) -> bool {
        let floor = self.lambda(i + 1);
        let in_sub = |z: u32| z >= floor && self.contains(z);
        in_sub(x) && !(floor..=x / 2).any(|a| in_sub(a) && in_sub(x - a))
    }

    /// The table of seeds computed from its definition: entry `(i, j)` is set
    /// when `c + j + λ_i` is a generator of `Λ_i`.
    pub fn seeds_table_bruteforce(&self) -> SeedsTable {
        let c = self.conductor;
        let rows = (0..self.k() as usize)
            .map(|i| {
                let (lo, hi) = (self.lambda(i), self.lambda(i + 1));
                (0..hi - lo)
                    .map(|j| self.is_generator_without_first(i, c + j + lo))
                    .collect()
            })
            .collect();
        SeedsTable { rows }
    }

    pub fn to_json(&self) -> SemigroupJson {
        SemigroupJson {
            gaps: self.gaps.clone(),
            conductor: self.conductor,
            genus: self.genus(),
            multiplicity: self.multiplicity,
            generators: self.generators(),
            seeds_table: self
                .seeds_table_bruteforce()
                .rows
                .iter()
                .map(|r| r.iter().map(|&b| b as u8).collect())
                .collect(),
        }
    }
}

impl fmt::Debug for FullSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FullSemigroup")
            .field("gaps", &self.gaps)
            .field("conductor", &self.conductor)
            .field("multiplicity", &self.multiplicity)
            .finish()
    }
}

/// Figure-1 style: the non-zero elements up to and including the conductor.
impl fmt::Display for FullSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.small[1..].iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub gaps: Vec<u32>,
    pub conductor: u32,
    pub genus: u32,
    pub multiplicity: u32,
    pub generators: Vec<u32>,
    pub seeds_table: Vec<Vec<u8>>,
}

/// Row `i` flags which of `c, c+1, …, c + λ_{i+1} - λ_i - 1` are order-`i`
/// seeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedsTable {
    rows: Vec<Vec<bool>>,
}

impl SeedsTable {
    pub fn from_rows(rows: Vec<Vec<bool>>) -> Self {
        SeedsTable { rows }
    }

    /// Parses rows written as `0`/`1` strings.
    pub fn from_row_strs(rows: &[&str]) -> Self {
        SeedsTable {
            rows: rows.iter().map(|r| r.chars().map(|ch| ch == '1').collect()).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn total_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn concatenated(&self) -> Vec<bool> {
        self.rows.concat()
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Display for SeedsTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_strings() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// The gap and seed strings of `semigroup`, computed from scratch.
pub fn encode_node(semigroup: &FullSemigroup) -> Result<SeedNode> {
    let c = semigroup.conductor();
    let capacity = BitVec::<2>::MAX_CAPACITY;
    if c as usize > capacity {
        return Err(Error::CapacityExceeded {
            conductor: c,
            available: capacity,
        });
    }
    let mut gaps = BitVec::zeros(capacity);
    for &gap in semigroup.gaps() {
        gaps.set(gap as usize - 1);
    }
    let mut seeds = BitVec::zeros(capacity);
    for (i, bit) in semigroup
        .seeds_table_bruteforce()
        .concatenated()
        .into_iter()
        .enumerate()
    {
        if bit {
            seeds.set(i);
        }
    }
    Ok(SeedNode::from_raw(
        c,
        semigroup.genus(),
        semigroup.multiplicity(),
        gaps,
        seeds,
    ))
}

/// Reads the semigroup back from the gap string.
pub fn decode_node(node: &SeedNode) -> Result<FullSemigroup> {
    let c = node.conductor() as usize;
    let gaps = node.gap_bits();
    if gaps.test(c - 1) {
        return Err(Error::MalformedNode(format!("gap bit {} must be 0", c - 1)));
    }
    if gaps.popcount() != node.genus() {
        return Err(Error::MalformedNode(format!(
            "gap string has {} ones, genus is {}",
            gaps.popcount(),
            node.genus()
        )));
    }
    let semigroup = FullSemigroup::from_gaps(gaps.iter_ones().map(|l| l as u32 + 1))
        .map_err(|e| Error::MalformedNode(e.to_string()))?;
    if semigroup.conductor() != node.conductor() || semigroup.multiplicity() != node.multiplicity() {
        return Err(Error::MalformedNode(format!(
            "gaps give conductor {} and multiplicity {}, node says {} and {}",
            semigroup.conductor(),
            semigroup.multiplicity(),
            node.conductor(),
            node.multiplicity()
        )));
    }
    Ok(semigroup)
}

/// Cuts the seed string at `λ_0, λ_1, …, λ_k` (read off the gap string).
pub fn split_table(node: &SeedNode) -> Result<SeedsTable> {
    let c = node.conductor() as usize;
    let gaps = node.gap_bits();
    if gaps.test(c - 1) || gaps.popcount() != node.genus() {
        return Err(Error::MalformedNode("inconsistent gap string".into()));
    }
    let mut bounds = vec![0usize];
    bounds.extend((0..c - 1).filter(|&l| !gaps.test(l)).map(|l| l + 1));
    bounds.push(c);
    let seeds = node.seed_bits();
    let rows = bounds
        .windows(2)
        .map(|w| (w[0]..w[1]).map(|l| seeds.test(l)).collect())
        .collect();
    Ok(SeedsTable { rows })
}

/// Decomposition numbers `d(x) = #{y ∈ Λ : x - y ∈ Λ, 2y ≤ x}` for
/// `x < x_max`, straight from the definition.
pub fn decomposition_numbers_bruteforce(semigroup: &FullSemigroup, x_max: u32) -> Vec<u32> {
    (0..x_max)
        .map(|x| {
            (0..=x / 2)
                .filter(|&y| semigroup.contains(y) && semigroup.contains(x - y))
                .count() as u32
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> FullSemigroup {
        FullSemigroup::from_gaps([1, 2, 3, 4, 6, 7]).unwrap()
    }

    fn example2() -> FullSemigroup {
        FullSemigroup::from_gaps([1, 2, 3, 4, 5, 6, 7, 9, 12, 13]).unwrap()
    }

    #[test]
    fn derived_fields() {
        let s = example1();
        assert_eq!((s.conductor(), s.genus(), s.multiplicity(), s.k()), (8, 6, 5, 2));
        assert_eq!((0..5).map(|i| s.lambda(i)).collect::<Vec<_>>(), [0, 5, 8, 9, 10]);
        let s = example2();
        assert_eq!((s.conductor(), s.genus(), s.multiplicity(), s.k()), (14, 10, 8, 4));
        assert_eq!(s.lambda(4), 14);
        assert_eq!(s.to_string(), "{8,10,11,14}");
    }

    #[test]
    fn trivial_conventions() {
        let t = FullSemigroup::trivial();
        assert_eq!((t.conductor(), t.genus(), t.multiplicity(), t.k()), (1, 0, 1, 1));
        assert_eq!(t.generators(), [1]);
        assert_eq!(t.seeds_table_bruteforce().row_strings(), ["1"]);
    }

    #[test]
    fn closure_violation_reports_witness() {
        match FullSemigroup::from_gaps([1, 4]) {
            Err(Error::ClosureViolation { a: 2, b: 2 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(FullSemigroup::from_gaps([1, 3]).is_ok());
        assert!(matches!(FullSemigroup::from_gaps([0, 1]), Err(Error::InvalidGaps(_))));
    }

    #[test]
    fn generators_by_sum_test() {
        assert_eq!(example1().generators(), [5, 8, 9, 11, 12]);
        assert!(!example1().is_generator(10));
        assert_eq!(FullSemigroup::ordinary(5).generators(), [5, 6, 7, 8, 9]);
    }

    #[test]
    fn golden_seed_tables() {
        assert_eq!(example1().seeds_table_bruteforce().row_strings(), ["11011", "111"]);
        assert_eq!(
            example2().seeds_table_bruteforce().row_strings(),
            ["11010000", "01", "1", "111"]
        );
        assert_eq!(
            FullSemigroup::ordinary(5).seeds_table_bruteforce().row_strings(),
            ["11111"]
        );
    }

    #[test]
    fn encode_examples() {
        let n = encode_node(&example1()).unwrap();
        assert_eq!(
            (n.gap_string(), n.seed_string()),
            ("11110110".into(), "11011111".into())
        );
        let n = encode_node(&example2()).unwrap();
        assert_eq!(n.gap_string(), "11111110100110");
        assert_eq!(n.seed_string(), "11010000011111");
        let n = encode_node(&FullSemigroup::from_gaps([1, 2, 4]).unwrap()).unwrap();
        assert_eq!((n.gap_string(), n.seed_string()), ("11010".into(), "10111".into()));
    }

    #[test]
    fn decode_and_split() {
        let n = SeedNode::from_strings("10", "11", 2).unwrap();
        assert_eq!(decode_node(&n).unwrap().gaps(), [1]);
        let n = SeedNode::from_strings("11110110", "11011111", 5).unwrap();
        assert_eq!(decode_node(&n).unwrap(), example1());
        assert_eq!(split_table(&n).unwrap().row_strings(), ["11011", "111"]);
        let n = SeedNode::from_strings("11010", "10111", 3).unwrap();
        assert_eq!(split_table(&n).unwrap().row_strings(), ["101", "11"]);
        assert_eq!(split_table(&SeedNode::root()).unwrap().row_strings(), ["1"]);
    }

    #[test]
    fn decode_rejects_set_frobenius_bit() {
        let n = SeedNode::from_raw(
            2,
            2,
            1,
            BitVec::from_bit_str("11", 8).unwrap(),
            BitVec::from_bit_str("11", 8).unwrap(),
        );
        assert!(matches!(decode_node(&n), Err(Error::MalformedNode(_))));
        assert!(matches!(split_table(&n), Err(Error::MalformedNode(_))));
    }

    #[test]
    fn from_elements() {
        let s = FullSemigroup::from_elements_to_conductor(&[5, 8]).unwrap();
        assert_eq!(s, example1());
        assert_eq!(
            FullSemigroup::from_elements_to_conductor(&[1]).unwrap(),
            FullSemigroup::trivial()
        );
    }

    #[test]
    fn decomposition_numbers() {
        assert_eq!(decomposition_numbers_bruteforce(&FullSemigroup::trivial(), 5)[4], 3);
        let s = FullSemigroup::from_gaps([1, 2]).unwrap();
        assert_eq!(decomposition_numbers_bruteforce(&s, 9)[8], 3);
        let s = FullSemigroup::ordinary(4);
        assert_eq!(decomposition_numbers_bruteforce(&s, 3)[2], 0);
        let s = FullSemigroup::ordinary(3);
        let d = decomposition_numbers_bruteforce(&s, 7);
        assert_eq!((d[3], d[6]), (1, 2));
    }

    #[test]
    fn json_schema() {
        let v = serde_json::to_value(example1().to_json()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "gaps": [1, 2, 3, 4, 6, 7],
                "conductor": 8,
                "genus": 6,
                "multiplicity": 5,
                "generators": [5, 8, 9, 11, 12],
                "seeds_table": [[1, 1, 0, 1, 1], [1, 1, 1]],
            })
        );
    }
}
