//! Tree nodes as gap/seed bit strings, and the descending step that derives a
//! child's strings from its parent's.
//!
//! For a semigroup with conductor `c`, bit `ℓ < c` of the gap string is set
//! when `ℓ + 1` is a gap, and the seed string is the row-by-row concatenation
//! of the table of seeds. Removing the order-zero seed `c + s` yields a child
//! whose strings are
//!
//! ```text
//! c' = c + s + 1
//! G' = G | bit(c' - 2)
//! S' = (raked(S, s) shifted down by s + 1) | ones(c' - 3, c')
//! ```
//!
//! where `raked(S, s) = S & (G ↑ 1) & (G ↑ 2) & … & (G ↑ s)` clears the old
//! seeds that cannot be recycled. Raking for consecutive siblings is
//! incremental, so all children of a node cost `O(m)` word operations.

use std::fmt;

use crate::bitvec::BitVec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedNode {
    conductor: u32,
    genus: u32,
    multiplicity: u32,
    gaps: BitVec,
    seeds: BitVec,
}

impl SeedNode {
    /// The trivial semigroup: gap string `0`, seed string `1`.
    pub fn root() -> Self {
        Self::root_with_capacity(BitVec::<2>::MAX_CAPACITY)
    }

    pub fn root_with_capacity(capacity: usize) -> Self {
        SeedNode {
            conductor: 1,
            genus: 0,
            multiplicity: 1,
            gaps: BitVec::zeros(capacity),
            seeds: BitVec::zeros(capacity).with_bit(0),
        }
    }

    /// Assembles a node without checking it against its semigroup.
    pub fn from_raw(conductor: u32, genus: u32, multiplicity: u32, gaps: BitVec, seeds: BitVec) -> Self {
        SeedNode {
            conductor,
            genus,
            multiplicity,
            gaps,
            seeds,
        }
    }

    /// Parses a node from its rendered strings. The conductor is the string
    /// length and the genus the number of ones in the gap string.
    pub fn from_strings(gaps: &str, seeds: &str, multiplicity: u32) -> Result<Self> {
        let capacity = BitVec::<2>::MAX_CAPACITY;
        if gaps.len() != seeds.len() || gaps.is_empty() {
            return Err(Error::MalformedNode(format!(
                "strings of lengths {} and {}",
                gaps.len(),
                seeds.len()
            )));
        }
        let parse = |s: &str| {
            BitVec::from_bit_str(s, capacity).ok_or_else(|| Error::MalformedNode(format!("not a bit string: {s:?}")))
        };
        let (g, s) = (parse(gaps)?, parse(seeds)?);
        let node = SeedNode {
            conductor: gaps.len() as u32,
            genus: g.popcount(),
            multiplicity,
            gaps: g,
            seeds: s,
        };
        node.check_invariants()?;
        Ok(node)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Number of non-gaps below the conductor.
    pub fn k(&self) -> u32 {
        self.conductor - self.genus
    }

    pub fn gap_bits(&self) -> &BitVec {
        &self.gaps
    }

    pub fn seed_bits(&self) -> &BitVec {
        &self.seeds
    }

    pub fn capacity(&self) -> usize {
        self.gaps.capacity()
    }

    pub fn gap_string(&self) -> String {
        self.gaps.render(self.conductor as usize)
    }

    pub fn seed_string(&self) -> String {
        self.seeds.render(self.conductor as usize)
    }

    pub fn is_ordinary(&self) -> bool {
        self.multiplicity == self.conductor
    }

    /// Number of children, i.e. of order-zero seeds.
    #[inline]
    pub fn child_count(&self) -> u32 {
        self.seeds.popcount_below(self.multiplicity as usize)
    }

    /// Gaps of the semigroup, ascending.
    pub fn gap_values(&self) -> Vec<u32> {
        self.gaps.iter_ones().map(|l| l as u32 + 1).collect()
    }

    /// The same node stored with a different bit capacity.
    pub fn resized(&self, capacity: usize) -> Result<Self> {
        let fail = || Error::CapacityExceeded {
            conductor: self.conductor,
            available: capacity,
        };
        Ok(SeedNode {
            gaps: self.gaps.resized(capacity).ok_or_else(fail)?,
            seeds: self.seeds.resized(capacity).ok_or_else(fail)?,
            ..*self
        })
    }

    /// Checks the structural invariants every well-formed node satisfies.
    pub fn check_invariants(&self) -> Result<()> {
        let c = self.conductor as usize;
        let bad = |msg: String| Err(Error::MalformedNode(msg));
        if c == 0 || c > self.capacity() {
            return bad(format!("conductor {c} outside capacity {}", self.capacity()));
        }
        if self.multiplicity == 0 || self.multiplicity > self.conductor {
            return bad(format!("multiplicity {} with conductor {c}", self.multiplicity));
        }
        if self.gaps.popcount_below(c) != self.genus {
            return bad(format!(
                "gap string has {} ones, genus {}",
                self.gaps.popcount(),
                self.genus
            ));
        }
        if self.gaps.test(c - 1) {
            return bad("gap bit c-1 is set".into());
        }
        if self.gaps.highest_set().is_some_and(|h| h >= c) || self.seeds.highest_set().is_some_and(|h| h >= c) {
            return bad("bits set at or beyond the conductor".into());
        }
        if c >= 3 && !(c - 3..c).all(|l| self.seeds.test(l)) {
            return bad("last three seed bits must be set".into());
        }
        Ok(())
    }

    /// Child obtained by removing `c + offset`, starting from a fresh raking
    /// state.
    pub fn descend(&self, offset: u32) -> Result<SeedNode> {
        let mut state = DescentState::new(self);
        self.descend_with(offset, &mut state)
    }

    /// Child obtained by removing `c + offset`, continuing the raking already
    /// done in `state` for smaller siblings.
    #[inline]
    pub fn descend_with(&self, offset: u32, state: &mut DescentState) -> Result<SeedNode> {
        if offset >= self.multiplicity || !self.seeds.test(offset as usize) {
            return Err(Error::NotASeed {
                offset,
                multiplicity: self.multiplicity,
            });
        }
        state.rake_to(offset);

        let capacity = self.capacity();
        let child_c = self.conductor + offset + 1;
        let top = child_c as usize;
        assert!(top <= capacity, "child conductor {child_c} exceeds capacity {capacity}");

        let child_m = if offset == 0 && self.is_ordinary() {
            child_c
        } else {
            self.multiplicity
        };
        let gaps = self.gaps.with_bit(top - 2);
        let seeds = state.raked.shift_down(offset as usize + 1) | BitVec::ones(top as i64 - 3, top, capacity);
        Ok(SeedNode {
            conductor: child_c,
            genus: self.genus + 1,
            multiplicity: child_m,
            gaps,
            seeds,
        })
    }

    /// Children in increasing offset, sharing one raking state.
    pub fn children(&self) -> Children<'_> {
        Children {
            node: self,
            state: DescentState::new(self),
            next: 0,
        }
    }
}

/// Two lines: the gap string over the seed string, each `c` characters.
impl fmt::Display for SeedNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self.gap_string(), self.seed_string())
    }
}

impl fmt::Debug for SeedNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeedNode")
            .field("c", &self.conductor)
            .field("g", &self.genus)
            .field("m", &self.multiplicity)
            .field("G", &self.gap_string())
            .field("S", &self.seed_string())
            .finish()
    }
}

/// Raking progress for the children of one node.
#[derive(Clone, Copy, Debug)]
pub struct DescentState {
    rake: BitVec,
    raked: BitVec,
    last: u32,
}

impl DescentState {
    pub fn new(node: &SeedNode) -> Self {
        DescentState {
            rake: node.gaps,
            raked: node.seeds,
            last: 0,
        }
    }

    /// Continues raking up to `offset` passes in total.
    #[inline]
    pub fn rake_to(&mut self, offset: u32) {
        assert!(
            offset >= self.last,
            "raking cannot go back from {} to {offset}",
            self.last
        );
        for _ in self.last..offset {
            self.rake = self.rake.shift_up(1);
            self.raked &= self.rake;
        }
        self.last = offset;
    }

    pub fn passes(&self) -> u32 {
        self.last
    }

    pub fn rake(&self) -> &BitVec {
        &self.rake
    }

    pub fn raked(&self) -> &BitVec {
        &self.raked
    }
}

pub struct Children<'a> {
    node: &'a SeedNode,
    state: DescentState,
    next: u32,
}

impl Iterator for Children<'_> {
    type Item = (u32, SeedNode);

    fn next(&mut self) -> Option<Self::Item> {
        let m = self.node.multiplicity;
        while self.next < m && !self.node.seeds.test(self.next as usize) {
            self.next += 1;
        }
        if self.next == m {
            return None;
        }
        let offset = self.next;
        self.next += 1;
        let child = self
            .node
            .descend_with(offset, &mut self.state)
            .expect("offset is a set seed bit below the multiplicity");
        Some((offset, child))
    }
}
