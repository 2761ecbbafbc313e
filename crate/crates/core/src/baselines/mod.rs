//! Three established ways of walking the semigroup tree, used to cross-check
//! the seeds explorer and as benchmark references.
//!
//! * [`AperyNode`]: the Apéry set with respect to the multiplicity.
//! * [`GenTrackNode`]: a gap / generator / other-element array over `[1, c+m)`.
//! * [`DecompNode`]: decomposition numbers over a sliding window.

mod apery;
mod decomp;
mod gentrack;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use crate::semigroup::decomposition_numbers_bruteforce;
pub use apery::AperyNode;
pub use decomp::DecompNode;
pub use gentrack::{Entry, GenTrackNode};

use crate::error::{Error, Result};
use crate::explorer::{capacity_for, CountResult};

/// A node of the semigroup tree under some representation.
pub trait TreeNode: Sized {
    fn root() -> Self;

    fn genus(&self) -> u32;

    /// Children in increasing order of the removed generator.
    fn children(&self) -> Vec<Self>;

    /// Number of children, without building them.
    fn child_count(&self) -> u64 {
        self.children().len() as u64
    }
}

/// Depth-first count of the genus-`genus` nodes below the root.
pub fn count_tree<N: TreeNode>(genus: u32) -> CountResult {
    let began = Instant::now();
    let (mut count, mut visited) = (0u64, 1u64);
    let mut stack = vec![N::root()];
    while let Some(node) = stack.pop() {
        let g = node.genus();
        if g == genus {
            count += 1;
        } else if g + 1 == genus {
            let n = node.child_count();
            count += n;
            visited += n;
        } else {
            let kids = node.children();
            visited += kids.len() as u64;
            stack.extend(kids.into_iter().rev());
        }
    }
    CountResult {
        genus,
        count,
        nodes_visited: visited,
        elapsed: began.elapsed(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Baseline {
    Apery,
    GenTrack,
    Decomp,
}

impl Baseline {
    pub const ALL: [Baseline; 3] = [Baseline::Apery, Baseline::GenTrack, Baseline::Decomp];

    pub fn name(self) -> &'static str {
        match self {
            Baseline::Apery => "apery",
            Baseline::GenTrack => "gentrack",
            Baseline::Decomp => "decomp",
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Baseline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Baseline::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

pub fn baseline_count(alg: Baseline, genus: u32) -> Result<CountResult> {
    // Same genus limit as the seeds explorer, so all algorithms accept the
    // same requests.
    capacity_for(genus)?;
    Ok(match alg {
        Baseline::Apery => count_tree::<AperyNode>(genus),
        Baseline::GenTrack => count_tree::<GenTrackNode>(genus),
        Baseline::Decomp => count_tree::<DecompNode>(genus),
    })
}
