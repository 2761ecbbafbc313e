use crate::semigroup::FullSemigroup;

use super::TreeNode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entry {
    Gap,
    Generator,
    Other,
}

/// Conductor, multiplicity and a classification of every `i` in `[1, c+m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTrackNode {
    c: u32,
    m: u32,
    g: u32,
    /// `entries[i]` for `i < c + m`; index 0 is unused.
    entries: Vec<Entry>,
}

impl GenTrackNode {
    pub fn from_semigroup(s: &FullSemigroup) -> Self {
        let (c, m) = (s.conductor(), s.multiplicity());
        let entries = (0..c + m)
            .map(|i| {
                if i == 0 {
                    Entry::Other
                } else if !s.contains(i) {
                    Entry::Gap
                } else if s.is_generator(i) {
                    Entry::Generator
                } else {
                    Entry::Other
                }
            })
            .collect();
        GenTrackNode {
            c,
            m,
            g: s.genus(),
            entries,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.c
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..self.c)
            .filter(|&i| self.entries[i as usize] == Entry::Gap)
            .collect()
    }

    /// Classification of `i`, for `1 ≤ i < c + m`.
    pub fn entry(&self, i: u32) -> Entry {
        assert!(i >= 1 && i < self.c + self.m);
        self.entries[i as usize]
    }

    pub fn len(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn generators_from_conductor(&self) -> impl Iterator<Item = u32> + '_ {
        (self.c..self.c + self.m).filter(move |&i| self.entries[i as usize] == Entry::Generator)
    }

    /// Child removing the generator `sigma ≥ c`.
    pub fn remove(&self, sigma: u32) -> Self {
        let (c, m) = (self.c, self.m);
        let mut entries = self.entries.clone();
        entries[sigma as usize] = Entry::Gap;

        if c == m && sigma == m {
            // Ordinary of multiplicity m + 1: the two new entries are 2m and
            // 2m + 1, both generators.
            entries.extend([Entry::Generator, Entry::Generator]);
            return GenTrackNode {
                c: m + 1,
                m: m + 1,
                g: self.g + 1,
                entries,
            };
        }

        // New indices c+m ..= sigma+m. All but the last are m plus a
        // surviving element.
        entries.resize((sigma + m) as usize, Entry::Other);
        let last = sigma + m;
        let is_member = |z: u32| entries[z as usize] != Entry::Gap;
        let decomposable = (m..=last / 2).any(|a| is_member(a) && is_member(last - a));
        entries.push(if decomposable { Entry::Other } else { Entry::Generator });

        GenTrackNode {
            c: sigma + 1,
            m,
            g: self.g + 1,
            entries,
        }
    }
}

impl TreeNode for GenTrackNode {
    fn root() -> Self {
        GenTrackNode {
            c: 1,
            m: 1,
            g: 0,
            entries: vec![Entry::Other, Entry::Generator],
        }
    }

    fn genus(&self) -> u32 {
        self.g
    }

    fn children(&self) -> Vec<Self> {
        self.generators_from_conductor().map(|s| self.remove(s)).collect()
    }

    fn child_count(&self) -> u64 {
        self.generators_from_conductor().count() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Entry::*;

    #[test]
    fn ordinary_three() {
        let n = GenTrackNode::from_semigroup(&FullSemigroup::ordinary(3));
        assert_eq!(&n.entries[1..], [Gap, Gap, Generator, Generator, Generator]);
        assert_eq!(n.children().len(), 3);
    }

    #[test]
    fn removing_the_multiplicity_of_an_ordinary_node() {
        let n = GenTrackNode::from_semigroup(&FullSemigroup::ordinary(3));
        let child = n.remove(3);
        assert_eq!(child, GenTrackNode::from_semigroup(&FullSemigroup::ordinary(4)));
        assert_eq!(child.entry(3), Gap);
        assert_eq!((child.entry(6), child.entry(7)), (Generator, Generator));
    }

    #[test]
    fn removing_a_larger_generator() {
        let n = GenTrackNode::from_semigroup(&FullSemigroup::ordinary(3));
        let child = n.remove(4);
        let expected = GenTrackNode::from_semigroup(&FullSemigroup::from_gaps([1, 2, 4]).unwrap());
        assert_eq!(child, expected);
        assert_eq!(child.len(), 7);
    }

    #[test]
    fn example_one_has_four_children() {
        let s = FullSemigroup::from_gaps([1, 2, 3, 4, 6, 7]).unwrap();
        assert_eq!(GenTrackNode::from_semigroup(&s).children().len(), 4);
    }
}
