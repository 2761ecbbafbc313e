use crate::semigroup::FullSemigroup;

use super::TreeNode;

/// A semigroup held as its Apéry set with respect to the multiplicity:
/// `apery[r]` is the smallest element congruent to `r` modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyNode {
    m: u32,
    apery: Vec<u32>,
    c: u32,
    g: u32,
}

impl AperyNode {
    pub fn ordinary(m: u32) -> Self {
        let apery = (0..m).map(|r| if r == 0 { 0 } else { m + r }).collect();
        AperyNode {
            m,
            apery,
            c: m,
            g: m - 1,
        }
    }

    pub fn from_semigroup(s: &FullSemigroup) -> Self {
        let m = s.multiplicity();
        let apery = (0..m)
            .map(|r| (0..).map(|t| r + t * m).find(|&z| s.contains(z)).unwrap())
            .collect();
        AperyNode {
            m,
            apery,
            c: s.conductor(),
            g: s.genus(),
        }
    }

    pub fn apery_set(&self) -> &[u32] {
        &self.apery
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn conductor(&self) -> u32 {
        self.c
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..self.c).filter(|&z| !self.contains(z)).collect()
    }

    pub fn contains(&self, z: u32) -> bool {
        z >= self.apery[(z % self.m) as usize]
    }

    fn is_ordinary(&self) -> bool {
        self.c == self.m
    }

    /// Whether `x ≥ c` is a generator.
    pub fn is_generator(&self, x: u32) -> bool {
        let m = self.m;
        let r = x % m;
        if r == 0 {
            return x == m;
        }
        if self.apery[r as usize] != x {
            // x - m is an element.
            return false;
        }
        // Up to a multiple of m, x must not be a sum of two other non-zero
        // Apéry elements; equivalently x - A[r'] is never a non-zero element.
        !(1..m).any(|rr| {
            let a = self.apery[rr as usize];
            rr != r && a < x && self.contains(x - a)
        })
    }

    /// Generators at least the conductor, ascending.
    pub fn generators_from_conductor(&self) -> impl Iterator<Item = u32> + '_ {
        (self.c..self.c + self.m).filter(move |&x| self.is_generator(x))
    }

    /// Child removing the generator `x ≥ c`.
    pub fn remove(&self, x: u32) -> Self {
        if x == self.m {
            debug_assert!(self.is_ordinary());
            return AperyNode::ordinary(self.m + 1);
        }
        let mut apery = self.apery.clone();
        apery[(x % self.m) as usize] = x + self.m;
        AperyNode {
            m: self.m,
            apery,
            c: x + 1,
            g: self.g + 1,
        }
    }
}

impl TreeNode for AperyNode {
    fn root() -> Self {
        AperyNode {
            m: 1,
            apery: vec![0],
            c: 1,
            g: 0,
        }
    }

    fn genus(&self) -> u32 {
        self.g
    }

    fn children(&self) -> Vec<Self> {
        self.generators_from_conductor().map(|x| self.remove(x)).collect()
    }

    fn child_count(&self) -> u64 {
        self.generators_from_conductor().count() as u64
    }
}
