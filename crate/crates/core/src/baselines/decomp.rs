use crate::semigroup::FullSemigroup;

use super::TreeNode;

/// Membership over `[0, c + 2m)` and decomposition numbers
/// `d(x) = #{y ∈ Λ : x - y ∈ Λ, 2y ≤ x}` for `x ∈ [c, c + 2m)`.
///
/// A member `x ≥ c` is a generator exactly when `d(x) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompNode {
    c: u32,
    m: u32,
    g: u32,
    member: Vec<bool>,
    d: Vec<u32>,
}

fn decompositions(member: &[bool], x: u32) -> u32 {
    (0..=x / 2)
        .filter(|&y| member[y as usize] && member[(x - y) as usize])
        .count() as u32
}

impl DecompNode {
    pub fn from_semigroup(s: &FullSemigroup) -> Self {
        let (c, m) = (s.conductor(), s.multiplicity());
        let member: Vec<bool> = (0..c + 2 * m).map(|z| s.contains(z)).collect();
        let d = (c..c + 2 * m).map(|x| decompositions(&member, x)).collect();
        DecompNode {
            c,
            m,
            g: s.genus(),
            member,
            d,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.c
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..self.c).filter(|&z| !self.member[z as usize]).collect()
    }

    /// `d(x)` for `x` in the tracked window `[c, c + 2m)`.
    pub fn decomposition_number(&self, x: u32) -> u32 {
        assert!(x >= self.c && x < self.c + 2 * self.m);
        self.d[(x - self.c) as usize]
    }

    fn generators_from_conductor(&self) -> impl Iterator<Item = u32> + '_ {
        (self.c..self.c + self.m).filter(move |&x| self.d[(x - self.c) as usize] == 1)
    }

    /// Child removing the generator `x ≥ c`.
    pub fn remove(&self, x: u32) -> Self {
        let (c, m) = (self.c, self.m);
        let end = c + 2 * m;

        // Removing x kills exactly one decomposition of every x' ≥ x with
        // x' - x an element: the pair {x, x' - x}.
        let mut d = self.d.clone();
        for xp in x..end {
            if self.member[(xp - x) as usize] {
                d[(xp - c) as usize] -= 1;
            }
        }

        let child_c = x + 1;
        let child_m = if c == m && x == m { m + 1 } else { m };
        let child_end = child_c + 2 * child_m;

        let mut member = self.member.clone();
        member[x as usize] = false;
        member.resize(child_end as usize, true);

        let mut child_d = Vec::with_capacity(2 * child_m as usize);
        for xp in child_c..child_end {
            child_d.push(if xp < end {
                d[(xp - c) as usize]
            } else {
                decompositions(&member, xp)
            });
        }

        DecompNode {
            c: child_c,
            m: child_m,
            g: self.g + 1,
            member,
            d: child_d,
        }
    }
}

impl TreeNode for DecompNode {
    fn root() -> Self {
        DecompNode::from_semigroup(&FullSemigroup::trivial())
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
