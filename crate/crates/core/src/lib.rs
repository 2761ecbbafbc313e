//! Counting and enumerating numerical semigroups of a given genus.
//!
//! Semigroups of genus `g` are the nodes at depth `g` of a tree rooted at the
//! trivial semigroup, where a child removes one generator at least as large
//! as the parent's conductor. The main explorer ([`explorer`]) walks that tree
//! carrying two bit strings per node, the gaps and the seeds, and derives each
//! child's strings from its parent's with a few word operations
//! ([`seeds::SeedNode::descend`]).
//!
//! [`semigroup`] holds explicit semigroups and from-scratch reference
//! computations, [`baselines`] three independent tree walkers used for
//! cross-checking, and [`bench`] a timing harness over all of them.

pub mod baselines;
pub mod bench;
pub mod bitvec;
pub mod error;
pub mod explorer;
pub mod seeds;
pub mod semigroup;

pub use bitvec::BitVec;
pub use error::{Error, Result};
pub use explorer::{count_dfs, count_parallel, count_recursive, enumerate, sequence, CountResult};
pub use seeds::{DescentState, SeedNode};
pub use semigroup::{decode_node, encode_node, split_table, FullSemigroup, SeedsTable};
